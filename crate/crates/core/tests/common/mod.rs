#![allow(dead_code)]

use msdual::enumerate::{enumerate_semilattices, semilattices_of_size};
use msdual::{Mask, Semilattice};

pub const ZERO: usize = 0;
pub const A: usize = 1;
pub const B: usize = 2;
pub const C: usize = 3;
pub const D: usize = 4;
pub const E: usize = 5;
pub const ONE: usize = 6;

// point indices of X(L) in canonical order
pub const P4: usize = 0;
pub const P1: usize = 1;
pub const P2: usize = 2;
pub const P3: usize = 3;

pub fn m(xs: &[usize]) -> Mask {
    Mask::from_indices(xs.iter().copied())
}

pub fn upto(n: usize) -> Vec<Semilattice> {
    enumerate_semilattices(n)
}

pub fn sized(n: usize) -> Vec<Semilattice> {
    semilattices_of_size(n)
}

/// Subsets of `0..n` as plain vectors of booleans, independent of `Mask`.
pub fn subsets(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u32..1 << n).map(move |b| (0..n).map(|i| b >> i & 1 == 1).collect())
}

pub fn to_mask(v: &[bool]) -> Mask {
    Mask::from_indices(v.iter().enumerate().filter(|(_, &x)| x).map(|(i, _)| i))
}
