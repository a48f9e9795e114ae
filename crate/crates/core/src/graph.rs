//! Framed graphs, their nondegeneracy delta-matroids, the graph-level handle
//! slide, and recognition of binary delta-matroids.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::f2::{principal_nondegenerate_unchecked, MatrixF2};
use crate::setsystem::{SetSystem, MAX_ELEMENTS};

/// A graph with a 0/1 framing stored on the diagonal of its symmetric
/// adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FramedGraph {
    adj: MatrixF2,
}

impl FramedGraph {
    pub fn new(adj: MatrixF2) -> Result<Self> {
        if !adj.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if adj.rows() > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                n: adj.rows(),
                bound: MAX_ELEMENTS,
            });
        }
        Ok(Self { adj })
    }

    /// `n` isolated vertices with framing 0.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: MatrixF2::zero(n, n),
        }
    }

    /// Decodes the upper triangle (diagonal included) from the bits of
    /// `code`, row by row. Used to sweep over all framed graphs on `n`
    /// vertices, of which there are `2^(n(n+1)/2)`.
    pub fn from_upper_triangle(n: usize, code: u64) -> Self {
        let mut adj = MatrixF2::zero(n, n);
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                if code >> k & 1 == 1 {
                    adj.set(i, j, true);
                    adj.set(j, i, true);
                }
                k += 1;
            }
        }
        Self { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.rows()
    }

    pub fn adjacency(&self) -> &MatrixF2 {
        &self.adj
    }

    pub fn framing(&self, v: usize) -> bool {
        self.adj.get(v, v)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    pub fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        self.adj.set(u, v, on);
        self.adj.set(v, u, on);
    }

    /// Feasible sets are the vertex subsets with a nondegenerate induced
    /// adjacency matrix; `∅` is always feasible.
    pub fn nondeg_delta_matroid(&self) -> SetSystem {
        let n = self.n();
        let phi: Vec<u32> = (0..1u32 << n)
            .filter(|&u| principal_nondegenerate_unchecked(&self.adj, u64::from(u)))
            .collect();
        SetSystem::from_sorted(n, phi)
    }

    /// Slides `a` over `b`: row and column `b` are added to row and column
    /// `a`. Off the diagonal this toggles `ac` iff `bc` is an edge and toggles
    /// `ab` iff `b` is framed; the framing of `a` toggles iff `b` is framed.
    pub fn slide(&self, a: usize, b: usize) -> Result<Self> {
        let n = self.n();
        if a == b {
            return Err(Error::SameElement(a));
        }
        if a >= n || b >= n {
            return Err(Error::IndexOutOfRange { index: a.max(b), n });
        }
        let mut rows: Vec<u64> = self.adj.row_words().to_vec();
        rows[a] ^= rows[b];
        for row in rows.iter_mut() {
            *row ^= (*row >> b & 1) << a;
        }
        Ok(Self {
            adj: MatrixF2::from_rows(n, &rows)?,
        })
    }
}

/// Evidence that a set system is binary: twisting the system by `twist_set`
/// gives the nondegeneracy delta-matroid of `graph`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryWitness {
    pub twist_set: u32,
    pub graph: FramedGraph,
}

/// Recognizes binary delta-matroids by twisting by the least feasible set.
pub fn recognize_binary(s: &SetSystem) -> Option<BinaryWitness> {
    recognize_binary_from(s, s.feasible()[0])
}

/// Recognizer with an explicit feasible twisting set `phi0`.
///
/// After twisting, the candidate matrix is forced by the singletons and pairs:
/// `a_ee = [{e} ∈ T]` and `a_ef = [{e,f} ∈ T] + a_ee a_ff`. The candidate is
/// accepted iff its nondegeneracy delta-matroid is exactly `T`.
pub fn recognize_binary_from(s: &SetSystem, phi0: u32) -> Option<BinaryWitness> {
    if !s.contains(phi0) {
        return None;
    }
    let t = s.twist_unchecked(phi0);
    let n = t.n();
    let member = t.membership();
    let mut rows = alloc::vec![0u64; n];
    for (e, row) in rows.iter_mut().enumerate() {
        if member.contains(1 << e) {
            *row |= 1 << e;
        }
    }
    for e in 0..n {
        for f in e + 1..n {
            let diag = (rows[e] >> e) & (rows[f] >> f) & 1;
            let bit = u64::from(member.contains(1 << e | 1 << f)) ^ diag;
            rows[e] |= bit << f;
            rows[f] |= bit << e;
        }
    }
    let graph = FramedGraph {
        adj: MatrixF2::from_rows(n, &rows).ok()?,
    };
    (graph.nondeg_delta_matroid() == t).then_some(BinaryWitness {
        twist_set: phi0,
        graph,
    })
}

pub fn is_binary(s: &SetSystem) -> bool {
    recognize_binary(s).is_some()
}
