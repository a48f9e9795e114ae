//! Exact linear algebra over the rationals.
//!
//! Dense Gauss-Jordan elimination on [`Rational`] rows. The matrices met in
//! this crate have a few hundred columns at most and small integer entries.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::Rational;

/// Reduced row-echelon form of a row space.
#[derive(Debug, Clone, PartialEq)]
pub struct Rref {
    cols: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Rref {
    /// Row-reduces `rows`, each of length `cols`.
    pub fn new(rows: Vec<Vec<Rational>>, cols: usize) -> Self {
        let mut rows: Vec<Vec<Rational>> = rows
            .into_iter()
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
        for r in &rows {
            assert_eq!(r.len(), cols, "row length mismatch");
        }
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows.len() {
                break;
            }
            let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = rows[rank][col].recip();
            for x in rows[rank].iter_mut().skip(col) {
                *x *= &inv;
            }
            let pivot_row = core::mem::take(&mut rows[rank]);
            for (i, row) in rows.iter_mut().enumerate() {
                if i == rank || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row).skip(col) {
                    if !y.is_zero() {
                        *x -= &factor * y;
                    }
                }
            }
            rows[rank] = pivot_row;
            pivots.push(col);
            rank += 1;
        }
        rows.truncate(rank);
        Self { cols, rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns without a pivot, in increasing order. They index the
    /// coordinates of the quotient space `Q^cols / rowspace`.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut free = Vec::with_capacity(self.cols - self.rank());
        let mut pivots = self.pivots.iter().peekable();
        for c in 0..self.cols {
            if pivots.peek() == Some(&&c) {
                pivots.next();
            } else {
                free.push(c);
            }
        }
        free
    }

    /// `v` minus the unique combination of rows that clears every pivot column.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].clone();
            for (x, y) in out.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        out
    }

    /// Whether `v` lies in the row space.
    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Coordinates of the class of `v` in the quotient by the row space.
    pub fn quotient_coords(&self, v: &[Rational]) -> Vec<Rational> {
        let reduced = self.reduce(v);
        self.free_columns()
            .into_iter()
            .map(|c| reduced[c].clone())
            .collect()
    }
}

pub fn rank(rows: Vec<Vec<Rational>>, cols: usize) -> usize {
    Rref::new(rows, cols).rank()
}

/// Solution set `particular + span(kernel)` of a linear system.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineSolution {
    pub particular: Vec<Rational>,
    pub kernel: Vec<Vec<Rational>>,
}

/// Solves `A x = b` for `A` given by rows with `unknowns` columns; `None`
/// when inconsistent.
pub fn solve_affine(
    a: &[Vec<Rational>],
    b: &[Rational],
    unknowns: usize,
) -> Option<AffineSolution> {
    assert_eq!(a.len(), b.len());
    let augmented: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let rref = Rref::new(augmented, unknowns + 1);
    if rref.pivots.last() == Some(&unknowns) {
        return None;
    }
    let mut particular = vec![Rational::zero(); unknowns];
    for (row, &p) in rref.rows.iter().zip(&rref.pivots) {
        particular[p] = row[unknowns].clone();
    }
    let free: Vec<usize> = rref
        .free_columns()
        .into_iter()
        .filter(|&c| c < unknowns)
        .collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); unknowns];
            v[f] = Rational::one();
            for (row, &p) in rref.rows.iter().zip(&rref.pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect();
    Some(AffineSolution { particular, kernel })
}
