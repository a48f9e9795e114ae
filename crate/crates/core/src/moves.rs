//! The two Vassiliev moves on set systems and the four-term combination.
//!
//! Moves are defined on every set system. Whether the input must be binary is
//! the caller's choice through [`BinaryCheck`].

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::is_binary;
use crate::setsystem::SetSystem;

/// Whether an operation insists on binary input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BinaryCheck {
    #[default]
    Enforce,
    Skip,
}

impl BinaryCheck {
    pub(crate) fn check(self, s: &SetSystem) -> Result<()> {
        if self == BinaryCheck::Enforce && !is_binary(s) {
            return Err(Error::NotBinary);
        }
        Ok(())
    }
}

fn check_pair(s: &SetSystem, a: usize, b: usize) -> Result<()> {
    if a == b {
        return Err(Error::SameElement(a));
    }
    let n = s.n();
    if a >= n || b >= n {
        return Err(Error::IndexOutOfRange { index: a.max(b), n });
    }
    Ok(())
}

/// Second move, sliding `a` over `b`: toggles `φ ∪ {a}` for every
/// `φ ⊆ E \ {a, b}` with `φ ∪ {b}` feasible.
pub fn slide(s: &SetSystem, a: usize, b: usize) -> Result<SetSystem> {
    check_pair(s, a, b)?;
    let (abit, bbit) = (1u32 << a, 1u32 << b);
    let member = s.membership();
    let mut toggled: Vec<u32> = s
        .feasible()
        .iter()
        .filter(|&&m| m & (abit | bbit) == bbit)
        .map(|&m| m ^ bbit ^ abit)
        .collect();
    if toggled.is_empty() {
        return Ok(s.clone());
    }
    toggled.sort_unstable();
    let mut phi: Vec<u32> = s
        .feasible()
        .iter()
        .copied()
        .filter(|m| toggled.binary_search(m).is_err())
        .collect();
    phi.extend(toggled.into_iter().filter(|&m| !member.contains(m)));
    phi.sort_unstable();
    // the trigger sets φ ∪ {b} never contain a and are never removed
    assert!(!phi.is_empty(), "slide emptied a family");
    Ok(SetSystem::from_sorted(s.n(), phi))
}

/// First move, exchanging ends of `a` and `b`: twist by `{b}`, slide `a` over
/// `b`, twist back.
pub fn exchange(s: &SetSystem, a: usize, b: usize) -> Result<SetSystem> {
    check_pair(s, a, b)?;
    let bbit = 1u32 << b;
    let slid = slide(&s.twist_unchecked(bbit), a, b)?;
    Ok(slid.twist_unchecked(bbit))
}

/// `D − D'_ab − D̃_ab + D̃'_ab` as four signed terms, always in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourTermCombination {
    pub terms: [(i8, SetSystem); 4],
}

impl FourTermCombination {
    pub const SIGNS: [i8; 4] = [1, -1, -1, 1];

    pub fn original(&self) -> &SetSystem {
        &self.terms[0].1
    }

    pub fn exchanged(&self) -> &SetSystem {
        &self.terms[1].1
    }

    pub fn slid(&self) -> &SetSystem {
        &self.terms[2].1
    }

    pub fn slid_exchanged(&self) -> &SetSystem {
        &self.terms[3].1
    }
}

pub fn four_term(
    s: &SetSystem,
    a: usize,
    b: usize,
    check: BinaryCheck,
) -> Result<FourTermCombination> {
    check_pair(s, a, b)?;
    check.check(s)?;
    let exchanged = exchange(s, a, b)?;
    let slid = slide(s, a, b)?;
    let both = exchange(&slid, a, b)?;
    Ok(FourTermCombination {
        terms: [(1, s.clone()), (-1, exchanged), (-1, slid), (1, both)],
    })
}
