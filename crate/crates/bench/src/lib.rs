//! Benchmark inputs.

use msdual::fixtures::{boolean, chain, diamond, lattice_l};
use msdual::{MonotoneSemilattice, Semilattice};

/// Named semilattices of increasing size.
pub fn inputs() -> Vec<(&'static str, Semilattice)> {
    vec![
        ("chain5", chain(5)),
        ("L", lattice_l()),
        ("M3", diamond(3)),
        ("B3", boolean(3)),
        ("chain8", chain(8)),
    ]
}

/// `L` with `x ↦ x ∧ d`.
pub fn l_meet_d() -> MonotoneSemilattice {
    let l = lattice_l();
    let d = l.index_of("d").expect("d");
    let op = l.elements().map(|x| l.meet(x, d)).collect();
    MonotoneSemilattice::new(l, op).expect("meets with a fixed element are monotone")
}
