//! Linear algebra over the two-element field.
//!
//! Rows are machine words; elimination is word-parallel XOR. Matrices have at
//! most 64 columns. Vectors of the symplectic space `V_E` of an `n`-element
//! ground set (`n <= 32`) are words whose low `n` bits are the coordinates on
//! `e_0..e_{n-1}` and whose next `n` bits are the coordinates on
//! `e*_0..e*_{n-1}`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::setsystem::SetSystem;

/// Dense bit matrix, row-major; bit `j` of `bits[i]` is the entry `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixF2 {
    rows: usize,
    cols: usize,
    bits: Vec<u64>,
}

impl MatrixF2 {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(cols <= 64, "at most 64 columns");
        Self {
            rows,
            cols,
            bits: alloc::vec![0; rows],
        }
    }

    /// Builds a matrix from row words, rejecting bits beyond `cols`.
    pub fn from_rows(cols: usize, rows: &[u64]) -> Result<Self> {
        if cols > 64 {
            return Err(Error::DimensionMismatch(format!(
                "{cols} columns exceed 64"
            )));
        }
        if cols < 64 {
            if let Some(r) = rows.iter().position(|&w| w >> cols != 0) {
                return Err(Error::DimensionMismatch(format!(
                    "row {r} has bits beyond column {cols}"
                )));
            }
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            bits: rows.to_vec(),
        })
    }

    /// Square matrix from nested 0/1 entries.
    pub fn from_entries(entries: &[&[u8]]) -> Result<Self> {
        let n = entries.len();
        let mut rows = Vec::with_capacity(n);
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            rows.push(
                row.iter()
                    .enumerate()
                    .fold(0u64, |w, (j, &b)| w | u64::from(b & 1) << j),
            );
        }
        Self::from_rows(n, &rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> u64 {
        self.bits[i]
    }

    pub fn row_words(&self) -> &[u64] {
        &self.bits
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.bits[i] |= 1 << j;
        } else {
            self.bits[i] &= !(1 << j);
        }
    }

    pub fn toggle(&mut self, i: usize, j: usize) {
        self.bits[i] ^= 1 << j;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Rank over F2.
    pub fn rank(&self) -> usize {
        rank_of_rows(self.bits.clone())
    }

    /// Principal submatrix on the rows and columns selected by `subset`,
    /// re-indexed contiguously.
    pub fn principal_submatrix(&self, subset: u64) -> MatrixF2 {
        let idx: Vec<usize> = (0..self.rows).filter(|&i| subset >> i & 1 == 1).collect();
        let rows = idx
            .iter()
            .map(|&i| compress(self.bits[i], subset))
            .collect();
        MatrixF2 {
            rows: idx.len(),
            cols: idx.len(),
            bits: rows,
        }
    }
}

/// Packs the bits of `word` selected by `mask` into the low bits.
fn compress(word: u64, mask: u64) -> u64 {
    let mut out = 0;
    let mut k = 0;
    let mut rest = mask;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        out |= (word >> j & 1) << k;
        k += 1;
    }
    out
}

/// Rank of a list of row words.
pub fn rank_of_rows(mut rows: Vec<u64>) -> usize {
    let mut rank = 0;
    for i in 0..rows.len() {
        let pivot_row = rows[i];
        if pivot_row == 0 {
            continue;
        }
        rank += 1;
        let low = pivot_row & pivot_row.wrapping_neg();
        for r in rows.iter_mut().skip(i + 1) {
            if *r & low != 0 {
                *r ^= pivot_row;
            }
        }
    }
    rank
}

pub fn rank_f2(m: &MatrixF2) -> usize {
    m.rank()
}

/// Whether the principal submatrix `A[U]` is nondegenerate. The empty
/// submatrix counts as nondegenerate.
pub fn principal_nondegenerate(a: &MatrixF2, subset: u64) -> Result<bool> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if a.rows < 64 && subset >> a.rows != 0 {
        return Err(Error::MaskOutOfRange {
            mask: subset as u32,
            n: a.rows,
        });
    }
    Ok(principal_nondegenerate_unchecked(a, subset))
}

pub(crate) fn principal_nondegenerate_unchecked(a: &MatrixF2, subset: u64) -> bool {
    let mut rows: Vec<u64> = Vec::with_capacity(subset.count_ones() as usize);
    let mut rest = subset;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        rows.push(a.bits[i] & subset);
    }
    rank_of_rows(rows) == subset.count_ones() as usize
}

/// The symplectic space `V_E` of dimension `2n` with `(e_i, e*_i) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymplecticSpace {
    n: usize,
}

impl SymplecticSpace {
    pub fn new(n: usize) -> Result<Self> {
        if n > 32 {
            return Err(Error::GroundSetTooLarge { n, bound: 32 });
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// The basis vector `e_i`.
    pub fn e(&self, i: usize) -> u64 {
        1 << i
    }

    /// The basis vector `e*_i`.
    pub fn e_star(&self, i: usize) -> u64 {
        1 << (self.n + i)
    }

    fn low_mask(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    /// The symplectic pairing of two vectors.
    pub fn pairing(&self, u: u64, v: u64) -> bool {
        let lo = self.low_mask();
        let (ux, uy) = (u & lo, u >> self.n);
        let (vx, vy) = (v & lo, v >> self.n);
        ((ux & vy) ^ (uy & vx)).count_ones() & 1 == 1
    }
}

/// Which symplectic basis change to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymplecticMove {
    /// `a* ↦ a* + b`, `b* ↦ b* + a`.
    T1,
    /// `a ↦ a + b`, `b* ↦ a* + b*`.
    T2,
}

/// An `n`-dimensional isotropic subspace of `V_E`, stored as its reduced
/// row-echelon basis so that equal subspaces have equal representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lagrangian {
    space: SymplecticSpace,
    basis: Vec<u64>,
}

/// Reduced row-echelon form with pivots on increasing bit positions; zero
/// rows are dropped.
fn reduce(mut rows: Vec<u64>, width: usize) -> Vec<u64> {
    let mut r = 0;
    for col in 0..width {
        let bit = 1u64 << col;
        let Some(p) = (r..rows.len()).find(|&i| rows[i] & bit != 0) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && *row & bit != 0 {
                *row ^= pivot;
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

impl Lagrangian {
    /// Validates that `rows` span an isotropic subspace of dimension `n`.
    pub fn new(space: SymplecticSpace, rows: &[u64]) -> Result<Self> {
        let width = space.dim();
        if width < 64 && rows.iter().any(|&w| w >> width != 0) {
            return Err(Error::NotLagrangian(format!(
                "vector outside a space of dimension {width}"
            )));
        }
        let basis = reduce(rows.to_vec(), width);
        if basis.len() != space.n {
            return Err(Error::NotLagrangian(format!(
                "dimension {} instead of {}",
                basis.len(),
                space.n
            )));
        }
        for (i, &u) in basis.iter().enumerate() {
            for &v in &basis[i + 1..] {
                if space.pairing(u, v) {
                    return Err(Error::NotLagrangian(
                        "basis vectors pair nontrivially".into(),
                    ));
                }
            }
        }
        Ok(Self { space, basis })
    }

    pub fn space(&self) -> SymplecticSpace {
        self.space
    }

    /// Reduced echelon basis.
    pub fn basis(&self) -> &[u64] {
        &self.basis
    }
}

/// `L_{E'}`: spanned by `e_i` for `i ∈ E'` and `e*_j` for `j ∉ E'`.
pub fn coordinate_lagrangian(space: SymplecticSpace, subset: u32) -> Result<Lagrangian> {
    if space.n < 32 && subset >> space.n != 0 {
        return Err(Error::MaskOutOfRange {
            mask: subset,
            n: space.n,
        });
    }
    let rows: Vec<u64> = (0..space.n)
        .map(|i| {
            if subset >> i & 1 == 1 {
                space.e(i)
            } else {
                space.e_star(i)
            }
        })
        .collect();
    Lagrangian::new(space, &rows)
}

/// The graph of a symmetric form: spanned by `e_i + Σ_j A_ij e*_j`.
pub fn graph_lagrangian(a: &MatrixF2) -> Result<Lagrangian> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let space = SymplecticSpace::new(a.rows())?;
    let rows: Vec<u64> = (0..a.rows())
        .map(|i| space.e(i) | a.row(i) << space.n)
        .collect();
    Lagrangian::new(space, &rows)
}

/// `dim(L1 ∩ L2) = 2n - rank[L1; L2]`.
pub fn intersection_dim(l1: &Lagrangian, l2: &Lagrangian) -> Result<usize> {
    if l1.space != l2.space {
        return Err(Error::SpaceMismatch);
    }
    let mut rows = l1.basis.clone();
    rows.extend_from_slice(&l2.basis);
    Ok(rows.len() - rank_of_rows(rows))
}

/// Feasible sets are the `U` whose coordinate Lagrangian is transverse to `L`.
pub fn lagrangian_delta_matroid(l: &Lagrangian) -> Result<SetSystem> {
    let n = l.space.n;
    if n > crate::setsystem::MAX_ELEMENTS {
        return Err(Error::GroundSetTooLarge {
            n,
            bound: crate::setsystem::MAX_ELEMENTS,
        });
    }
    let mut phi = Vec::new();
    for u in 0..1u32 << n {
        let coord = coordinate_lagrangian(l.space, u)?;
        if intersection_dim(l, &coord)? == 0 {
            phi.push(u);
        }
    }
    SetSystem::new(n, phi)
}

/// Image of a single vector under the basis substitution of a move.
pub fn move_vector(
    space: SymplecticSpace,
    kind: SymplecticMove,
    a: usize,
    b: usize,
    v: u64,
) -> u64 {
    let mut out = v;
    match kind {
        SymplecticMove::T1 => {
            if v & space.e_star(a) != 0 {
                out ^= space.e(b);
            }
            if v & space.e_star(b) != 0 {
                out ^= space.e(a);
            }
        }
        SymplecticMove::T2 => {
            if v & space.e(a) != 0 {
                out ^= space.e(b);
            }
            if v & space.e_star(b) != 0 {
                out ^= space.e_star(a);
            }
        }
    }
    out
}

/// Image of `L` under the move's basis substitution, re-reduced.
pub fn apply_move(l: &Lagrangian, kind: SymplecticMove, a: usize, b: usize) -> Result<Lagrangian> {
    let n = l.space.n;
    if a == b {
        return Err(Error::SameElement(a));
    }
    if a >= n || b >= n {
        return Err(Error::IndexOutOfRange { index: a.max(b), n });
    }
    let rows: Vec<u64> = l
        .basis
        .iter()
        .map(|&v| move_vector(l.space, kind, a, b, v))
        .collect();
    Lagrangian::new(l.space, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(entries: &[&[u8]]) -> MatrixF2 {
        MatrixF2::from_entries(entries).unwrap()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_f2(&m(&[&[0]])), 0);
        assert_eq!(rank_f2(&m(&[&[0, 1], &[1, 0]])), 2);
        assert_eq!(rank_f2(&m(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]])), 2);
        assert_eq!(
            rank_f2(&MatrixF2::from_rows(3, &[0b011, 0b110, 0b101]).unwrap()),
            2
        );
    }

    #[test]
    fn principal_minors() {
        assert!(principal_nondegenerate(&m(&[&[1]]), 1).unwrap());
        assert!(!principal_nondegenerate(&m(&[&[1, 1], &[1, 1]]), 3).unwrap());
        assert!(principal_nondegenerate(&m(&[&[0, 1], &[1, 0]]), 0).unwrap());
        assert_eq!(
            principal_nondegenerate(&m(&[&[0, 1], &[0, 0]]), 1),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn submatrix_extraction() {
        let a = m(&[&[1, 0, 1], &[0, 0, 1], &[1, 1, 0]]);
        let sub = a.principal_submatrix(0b101);
        assert_eq!(sub, m(&[&[1, 1], &[1, 0]]));
    }

    #[test]
    fn coordinate_subspaces() {
        let s1 = SymplecticSpace::new(1).unwrap();
        assert_eq!(
            coordinate_lagrangian(s1, 0).unwrap().basis(),
            &[s1.e_star(0)]
        );
        let s2 = SymplecticSpace::new(2).unwrap();
        let l = coordinate_lagrangian(s2, 0b01).unwrap();
        assert_eq!(l.basis(), &[s2.e(0), s2.e_star(1)]);
        for u in 0..4 {
            assert!(coordinate_lagrangian(s2, u).is_ok());
        }
    }

    #[test]
    fn graph_subspaces() {
        let s1 = SymplecticSpace::new(1).unwrap();
        assert_eq!(
            graph_lagrangian(&m(&[&[1]])).unwrap().basis(),
            &[s1.e(0) | s1.e_star(0)]
        );
        let s2 = SymplecticSpace::new(2).unwrap();
        let l = graph_lagrangian(&m(&[&[0, 1], &[1, 0]])).unwrap();
        let expected =
            Lagrangian::new(s2, &[s2.e(0) | s2.e_star(1), s2.e(1) | s2.e_star(0)]).unwrap();
        assert_eq!(l, expected);
        let zero = graph_lagrangian(&MatrixF2::zero(3, 3)).unwrap();
        assert_eq!(
            zero,
            coordinate_lagrangian(SymplecticSpace::new(3).unwrap(), 0b111).unwrap()
        );
    }

    #[test]
    fn rejects_non_lagrangians() {
        let s2 = SymplecticSpace::new(2).unwrap();
        assert!(Lagrangian::new(s2, &[s2.e(0), s2.e_star(0)]).is_err());
        assert!(Lagrangian::new(s2, &[s2.e(0)]).is_err());
        assert!(Lagrangian::new(s2, &[s2.e(0), s2.e(0)]).is_err());
    }

    #[test]
    fn intersections() {
        let s1 = SymplecticSpace::new(1).unwrap();
        let l = graph_lagrangian(&m(&[&[1]])).unwrap();
        assert_eq!(intersection_dim(&l, &l).unwrap(), 1);
        let star = coordinate_lagrangian(s1, 0).unwrap();
        assert_eq!(intersection_dim(&l, &star).unwrap(), 0);
        let e0 = coordinate_lagrangian(s1, 1).unwrap();
        assert_eq!(intersection_dim(&e0, &e0).unwrap(), 1);
        let other = coordinate_lagrangian(SymplecticSpace::new(2).unwrap(), 0).unwrap();
        assert_eq!(intersection_dim(&l, &other), Err(Error::SpaceMismatch));
    }

    #[test]
    fn transversality_matroids() {
        let dm = |e: &[&[u8]]| lagrangian_delta_matroid(&graph_lagrangian(&m(e)).unwrap()).unwrap();
        assert_eq!(dm(&[&[1]]).feasible(), &[0, 1]);
        assert_eq!(dm(&[&[0]]).feasible(), &[0]);
        assert_eq!(dm(&[&[0, 1], &[1, 0]]).feasible(), &[0, 3]);
    }

    #[test]
    fn second_move_on_a_graph() {
        let s2 = SymplecticSpace::new(2).unwrap();
        let l = graph_lagrangian(&m(&[&[0, 1], &[1, 0]])).unwrap();
        let moved = apply_move(&l, SymplecticMove::T2, 0, 1).unwrap();
        let expected = Lagrangian::new(
            s2,
            &[
                s2.e(0) | s2.e(1) | s2.e_star(0) | s2.e_star(1),
                s2.e(1) | s2.e_star(0),
            ],
        )
        .unwrap();
        assert_eq!(moved, expected);
        assert_eq!(
            lagrangian_delta_matroid(&moved).unwrap().feasible(),
            &[0, 3]
        );
        assert_eq!(
            apply_move(&l, SymplecticMove::T2, 1, 1),
            Err(Error::SameElement(1))
        );
    }

    #[test]
    fn moves_are_involutions() {
        let l = graph_lagrangian(&m(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])).unwrap();
        for kind in [SymplecticMove::T1, SymplecticMove::T2] {
            for (a, b) in [(0, 1), (2, 0), (1, 2)] {
                let twice = apply_move(&apply_move(&l, kind, a, b).unwrap(), kind, a, b).unwrap();
                assert_eq!(twice, l);
            }
        }
    }

    #[test]
    fn pairing_is_alternating() {
        let s = SymplecticSpace::new(3).unwrap();
        for v in 0..64u64 {
            assert!(!s.pairing(v, v));
        }
        assert!(s.pairing(s.e(1), s.e_star(1)));
        assert!(!s.pairing(s.e(1), s.e_star(2)));
    }
}
