//! Set systems `(E; Φ)` over a ground set `E = {0, .., n-1}`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest supported ground set. Membership bitmaps have `2^n` bits.
pub const MAX_ELEMENTS: usize = 16;

/// Default largest ground set for which canonical forms are computed.
pub const DEFAULT_CANON_BOUND: usize = 8;

/// A proper set system: `n` elements and a nonempty family of feasible sets.
///
/// The family is kept sorted and duplicate free, so structural equality is
/// equality of labelled set systems.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetSystem {
    n: usize,
    phi: Vec<u32>,
}

/// Role of a ground-set element with respect to the feasible sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementRole {
    /// In no feasible set.
    Loop,
    /// In every feasible set.
    Coloop,
    Ordinary,
}

/// A failure of the symmetric exchange axiom: no `e'` makes
/// `phi1 Δ {element, e'}` feasible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExchangeViolation {
    pub phi1: u32,
    pub phi2: u32,
    pub element: usize,
}

/// Isomorphism-invariant key: the least sorted family over all relabelings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    n: usize,
    code: Vec<u32>,
}

/// Dense membership table over all `2^n` subsets.
pub struct Membership {
    words: Vec<u64>,
}

impl Membership {
    #[inline]
    pub fn contains(&self, mask: u32) -> bool {
        let m = mask as usize;
        self.words[m >> 6] >> (m & 63) & 1 == 1
    }
}

#[inline]
fn remove_bit(mask: u32, e: usize) -> u32 {
    let low = mask & ((1u32 << e) - 1);
    let high = (mask >> (e + 1)) << e;
    low | high
}

impl SetSystem {
    /// Builds a set system, sorting and deduplicating the family.
    pub fn new(n: usize, subsets: impl IntoIterator<Item = u32>) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                n,
                bound: MAX_ELEMENTS,
            });
        }
        let mut phi: Vec<u32> = subsets.into_iter().collect();
        if phi.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let limit = 1u64 << n;
        if let Some(&mask) = phi.iter().find(|&&m| u64::from(m) >= limit) {
            return Err(Error::MaskOutOfRange { mask, n });
        }
        phi.sort_unstable();
        phi.dedup();
        Ok(Self { n, phi })
    }

    /// Internal constructor for families already known to be valid and sorted.
    pub(crate) fn from_sorted(n: usize, phi: Vec<u32>) -> Self {
        debug_assert!(!phi.is_empty());
        debug_assert!(phi.windows(2).all(|w| w[0] < w[1]));
        Self { n, phi }
    }

    fn from_unsorted(n: usize, mut phi: Vec<u32>) -> Result<Self> {
        if phi.is_empty() {
            return Err(Error::EmptyFamily);
        }
        phi.sort_unstable();
        phi.dedup();
        Ok(Self { n, phi })
    }

    /// The unit `(∅; {∅})`.
    pub fn unit() -> Self {
        Self { n: 0, phi: vec![0] }
    }

    /// Builds a system from a membership bitmap over `2^n` subsets.
    pub fn from_family_bits(n: usize, bits: &[u64]) -> Result<Self> {
        let phi = (0..1u32 << n)
            .filter(|&m| bits[(m >> 6) as usize] >> (m & 63) & 1 == 1)
            .collect();
        Self::from_unsorted(n, phi)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Feasible sets in increasing mask order.
    pub fn feasible(&self) -> &[u32] {
        &self.phi
    }

    pub fn len(&self) -> usize {
        self.phi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phi.is_empty()
    }

    pub fn full_mask(&self) -> u32 {
        ((1u64 << self.n) - 1) as u32
    }

    pub fn contains(&self, mask: u32) -> bool {
        self.phi.binary_search(&mask).is_ok()
    }

    pub fn contains_empty(&self) -> bool {
        self.phi[0] == 0
    }

    pub fn contains_full(&self) -> bool {
        *self.phi.last().unwrap() == self.full_mask()
    }

    pub fn membership(&self) -> Membership {
        let mut words = vec![0u64; (1usize << self.n).div_ceil(64)];
        for &m in &self.phi {
            words[(m >> 6) as usize] |= 1 << (m & 63);
        }
        Membership { words }
    }

    fn check_mask(&self, mask: u32) -> Result<()> {
        if u64::from(mask) >> self.n != 0 {
            return Err(Error::MaskOutOfRange { mask, n: self.n });
        }
        Ok(())
    }

    fn check_index(&self, e: usize) -> Result<()> {
        if e >= self.n {
            return Err(Error::IndexOutOfRange {
                index: e,
                n: self.n,
            });
        }
        Ok(())
    }

    /// First violation of the symmetric exchange axiom, scanning `phi1`, then
    /// `phi2`, then `element` in increasing order.
    ///
    /// The exchange partner may equal the element itself, in which case the
    /// step is the single-element change `phi1 Δ {e}`.
    pub fn exchange_violation(&self) -> Option<ExchangeViolation> {
        let member = self.membership();
        for &phi1 in &self.phi {
            for &phi2 in &self.phi {
                let diff = phi1 ^ phi2;
                let mut rest = diff;
                while rest != 0 {
                    let e = rest.trailing_zeros();
                    rest &= rest - 1;
                    let bit = 1u32 << e;
                    let mut partners = diff;
                    let mut found = false;
                    while partners != 0 {
                        let f = partners.trailing_zeros();
                        partners &= partners - 1;
                        // {e, e'} collapses to {e} when e' = e
                        if member.contains(phi1 ^ (bit | 1 << f)) {
                            found = true;
                            break;
                        }
                    }
                    if !found {
                        return Some(ExchangeViolation {
                            phi1,
                            phi2,
                            element: e as usize,
                        });
                    }
                }
            }
        }
        None
    }

    /// Symmetric exchange axiom.
    pub fn is_delta_matroid(&self) -> bool {
        self.exchange_violation().is_none()
    }

    /// All feasible sets have cardinalities of one parity.
    pub fn is_even(&self) -> bool {
        let parity = self.phi[0].count_ones() & 1;
        self.phi.iter().all(|m| m.count_ones() & 1 == parity)
    }

    /// `(E; {φ Δ A})`.
    pub fn twist(&self, a: u32) -> Result<Self> {
        self.check_mask(a)?;
        Ok(self.twist_unchecked(a))
    }

    pub(crate) fn twist_unchecked(&self, a: u32) -> Self {
        let mut phi: Vec<u32> = self.phi.iter().map(|m| m ^ a).collect();
        phi.sort_unstable();
        Self { n: self.n, phi }
    }

    pub fn element_role(&self, e: usize) -> Result<ElementRole> {
        self.check_index(e)?;
        let bit = 1u32 << e;
        let inside = self.phi.iter().filter(|&&m| m & bit != 0).count();
        Ok(if inside == self.phi.len() {
            ElementRole::Coloop
        } else if inside == 0 {
            ElementRole::Loop
        } else {
            ElementRole::Ordinary
        })
    }

    /// `D \ e`; falls through to contraction when `e` is a coloop.
    /// Elements above `e` are renumbered down by one.
    pub fn delete(&self, e: usize) -> Result<Self> {
        match self.element_role(e)? {
            ElementRole::Coloop => Ok(self.contract_raw(e)),
            _ => Ok(self.delete_raw(e)),
        }
    }

    /// `D / e`; falls through to deletion when `e` is a loop.
    pub fn contract(&self, e: usize) -> Result<Self> {
        match self.element_role(e)? {
            ElementRole::Loop => Ok(self.delete_raw(e)),
            _ => Ok(self.contract_raw(e)),
        }
    }

    fn delete_raw(&self, e: usize) -> Self {
        let bit = 1u32 << e;
        // removing an absent bit is monotone, so the order survives
        let phi = self
            .phi
            .iter()
            .filter(|&&m| m & bit == 0)
            .map(|&m| remove_bit(m, e))
            .collect();
        Self::from_sorted(self.n - 1, phi)
    }

    fn contract_raw(&self, e: usize) -> Self {
        let bit = 1u32 << e;
        let phi = self
            .phi
            .iter()
            .filter(|&&m| m & bit != 0)
            .map(|&m| remove_bit(m, e))
            .collect();
        Self::from_sorted(self.n - 1, phi)
    }

    /// Restriction `D_{E'}`: delete every element outside `keep`.
    /// The kept elements retain their relative order.
    pub fn restrict(&self, keep: u32) -> Result<Self> {
        self.check_mask(keep)?;
        let mut out = self.clone();
        for e in (0..self.n).rev() {
            if keep >> e & 1 == 0 {
                out = out.delete(e)?;
            }
        }
        Ok(out)
    }

    /// Direct sum; the elements of `other` follow those of `self`.
    pub fn product(&self, other: &SetSystem) -> Result<Self> {
        let n = self.n + other.n;
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                n,
                bound: MAX_ELEMENTS,
            });
        }
        let mut phi = Vec::with_capacity(self.phi.len() * other.phi.len());
        for &b in &other.phi {
            for &a in &self.phi {
                phi.push(a | b << self.n);
            }
        }
        // outer loop over the high part keeps the list sorted
        Ok(Self::from_sorted(n, phi))
    }

    /// Relabels element `i` as `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::IndexOutOfRange {
                index: perm.len(),
                n: self.n,
            });
        }
        let mut seen = 0u32;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::IndexOutOfRange {
                    index: p,
                    n: self.n,
                });
            }
            seen |= 1 << p;
        }
        let phi = self.phi.iter().map(|&m| permute_mask(m, perm)).collect();
        Self::from_unsorted(self.n, phi)
    }

    /// Canonical code with the default ground-set bound.
    pub fn canonical_form(&self) -> Result<CanonicalCode> {
        self.canonical_form_bounded(DEFAULT_CANON_BOUND)
    }

    /// Least sorted family over all `n!` relabelings.
    pub fn canonical_form_bounded(&self, bound: usize) -> Result<CanonicalCode> {
        if self.n > bound {
            return Err(Error::GroundSetTooLarge { n: self.n, bound });
        }
        Ok(CanonicalCode {
            n: self.n,
            code: least_relabeling(self.n, &self.phi),
        })
    }

    pub fn is_isomorphic(&self, other: &SetSystem) -> Result<bool> {
        if self.n != other.n || self.phi.len() != other.phi.len() {
            return Ok(false);
        }
        Ok(self.canonical_form()? == other.canonical_form()?)
    }
}

fn permute_mask(mask: u32, perm: &[usize]) -> u32 {
    let mut out = 0;
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= 1 << perm[i];
    }
    out
}

/// Heap's algorithm over all permutations, keeping the lexicographically
/// least sorted image. Comparison stops at the first differing mask.
fn least_relabeling(n: usize, phi: &[u32]) -> Vec<u32> {
    let mut best = phi.to_vec();
    if n <= 1 {
        return best;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut counters = vec![0usize; n];
    let mut image = vec![0u32; phi.len()];
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            for (slot, &m) in image.iter_mut().zip(phi) {
                *slot = permute_mask(m, &perm);
            }
            image.sort_unstable();
            if image < best {
                best.copy_from_slice(&image);
            }
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    best
}

impl CanonicalCode {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn code(&self) -> &[u32] {
        &self.code
    }

    /// The canonical representative as a labelled set system.
    pub fn to_set_system(&self) -> SetSystem {
        SetSystem::from_sorted(self.n, self.code.clone())
    }
}

impl fmt::Debug for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetSystem(n={}; {})", self.n, self)
    }
}

/// Mathematical rendering with 1-based labels, e.g. `{∅, {1}, {1,2}}`.
impl fmt::Display for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, &m) in self.phi.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            if m == 0 {
                f.write_str("∅")?;
                continue;
            }
            f.write_str("{")?;
            let mut first = true;
            for e in 0..self.n {
                if m >> e & 1 == 1 {
                    if !first {
                        f.write_str(",")?;
                    }
                    write!(f, "{}", e + 1)?;
                    first = false;
                }
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}
