use alloc::string::String;

/// Errors raised by the operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("the family of feasible sets is empty")]
    EmptyFamily,
    #[error("mask {mask:#x} does not fit a ground set of {n} elements")]
    MaskOutOfRange { mask: u32, n: usize },
    #[error("index {index} is out of range for size {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("ground set of {n} elements exceeds the supported bound {bound}")]
    GroundSetTooLarge { n: usize, bound: usize },
    #[error("a move needs two distinct elements, got {0} twice")]
    SameElement(usize),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),
    #[error("subspaces live in symplectic spaces of different dimension")]
    SpaceMismatch,
    #[error("rows do not span a Lagrangian subspace: {0}")]
    NotLagrangian(String),
    #[error("ribbon graph is not connected")]
    Disconnected,
    #[error("invalid ribbon graph: {0}")]
    InvalidRibbon(String),
    #[error("both neighbouring half-edges belong to ribbon {0}")]
    SameEdge(usize),
    #[error("the selected end of chord {a} is not next to an end of chord {b}")]
    NotAdjacent { a: usize, b: usize },
    #[error("set system is not a binary delta-matroid")]
    NotBinary,
    #[error("degree {degree} is above the enumeration limit {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("flavor {0} is not valid for this operation")]
    WrongFlavor(&'static str),
    #[error("a move left the {flavor} basis in degree {degree}")]
    OutsideFlavor { flavor: &'static str, degree: usize },
    #[error("four-term relations of degree {degree} do not span a coideal")]
    CoidealViolation { degree: usize },
    #[error("functional has no value on a required class")]
    MissingValue,
    #[error("functional is not multiplicative")]
    NotMultiplicative,
}

pub type Result<T> = core::result::Result<T, Error>;
