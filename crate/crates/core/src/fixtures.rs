//! Small named structures used by tests, benches and the CLI.

use crate::algebra::Semilattice;

/// Indices of `0, a, b, c, d, e, 1` in [`lattice_l`].
pub const L_ELEMENTS: [usize; 7] = [0, 1, 2, 3, 4, 5, 6];

/// The 7-element non-distributive lattice with `0 < a, b, c`, `a, b, c < e`,
/// `c < d` and `e, d < 1`.
pub fn lattice_l() -> Semilattice {
    let covers = [(0, 1), (0, 2), (0, 3), (1, 5), (2, 5), (3, 5), (3, 4), (5, 6), (4, 6)];
    Semilattice::from_covers(7, &covers, 6)
        .expect("L is a lattice")
        .with_labels(["0", "a", "b", "c", "d", "e", "1"].map(String::from).to_vec())
}

/// The chain `0 < 1 < .. < n-1`.
pub fn chain(n: usize) -> Semilattice {
    let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Semilattice::from_covers(n, &covers, n - 1).expect("chains are lattices")
}

/// The diamond `0 < a_1 .. a_k < 1` with `k` atoms (`M_k`).
pub fn diamond(k: usize) -> Semilattice {
    let top = k + 1;
    let covers: Vec<_> = (1..=k).flat_map(|i| [(0, i), (i, top)]).collect();
    Semilattice::from_covers(k + 2, &covers, top).expect("diamonds are lattices")
}

/// The Boolean lattice on `k` atoms.
pub fn boolean(k: usize) -> Semilattice {
    let n = 1usize << k;
    let table = (0..n).map(|a| (0..n).map(|b| a & b).collect()).collect();
    Semilattice::new(table, n - 1).expect("powersets are lattices")
}
