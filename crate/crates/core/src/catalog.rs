//! The named set systems on one and two elements.
//!
//! Names follow the `s<i><j>` convention: `i` is the ground-set size. The
//! 1-based labels `1, 2` are the bit positions `0, 1`.

use alloc::vec::Vec;

use crate::setsystem::SetSystem;

const ENTRIES: &[(&str, usize, &[u32])] = &[
    ("s11", 1, &[0b0]),
    ("s12", 1, &[0b0, 0b1]),
    ("s13", 1, &[0b1]),
    ("s11^2", 2, &[0b00]),
    ("s12^2", 2, &[0b00, 0b01, 0b10, 0b11]),
    ("s13^2", 2, &[0b11]),
    ("s11s12", 2, &[0b00, 0b01]),
    ("s11s13", 2, &[0b01]),
    ("s12s13", 2, &[0b01, 0b11]),
    ("s21", 2, &[0b00, 0b11]),
    ("s22", 2, &[0b00, 0b01, 0b11]),
    ("s23", 2, &[0b00, 0b01, 0b10]),
    ("s24", 2, &[0b01, 0b10]),
    ("s25", 2, &[0b01, 0b10, 0b11]),
];

/// All fourteen named systems in listing order.
pub fn named_catalog() -> Vec<(&'static str, SetSystem)> {
    ENTRIES
        .iter()
        .map(|&(name, n, phi)| {
            (
                name,
                SetSystem::new(n, phi.iter().copied()).expect("catalog entry"),
            )
        })
        .collect()
}

pub fn lookup(name: &str) -> Option<SetSystem> {
    ENTRIES
        .iter()
        .find(|(k, _, _)| *k == name)
        .map(|&(_, n, phi)| SetSystem::new(n, phi.iter().copied()).expect("catalog entry"))
}
