//! Set systems, binary delta-matroids and the two Vassiliev moves.
//!
//! The crate is `no_std` (it needs `alloc`) and purely computational: every
//! value is immutable once built and every operation is a function of its
//! arguments. Text formats and the command-line front end live in the
//! `deltamat` crate.
//!
//! Ground-set elements are 0-indexed bit positions; a subset is a `u32` mask
//! with bit `i` set iff element `i` belongs to it.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod catalog;
pub mod error;
pub mod f2;
pub mod graph;
pub mod hopf;
pub mod invariants;
pub mod moves;
pub mod qlinalg;
pub mod ribbon;
pub mod setsystem;

pub use error::{Error, Result};
pub use setsystem::{CanonicalCode, ElementRole, SetSystem};

/// Exact rational numbers used by every linear-algebra computation.
pub type Rational = num_rational::BigRational;
