//! Isomorphism-free enumeration of small semilattices and exhaustive
//! enumeration of maps between them.
//!
//! A finite meet-semilattice with top is a finite lattice, so we enumerate
//! lattice orders. Each order is labeled naturally (bottom `0`, top `n-1`,
//! `x < y` only if `x < y` as integers) and reduced to a canonical code: the
//! least strict-order bitstring over all natural relabelings of the middle
//! elements.

use std::collections::BTreeSet;

use crate::algebra::{Homomorphism, Semilattice};

/// Largest size accepted by [`semilattices_of_size`].
pub const MAX_ENUMERATION: usize = 8;

/// One representative per isomorphism class of semilattices with exactly `n`
/// elements, in canonical-code order.
///
/// # Panics
/// If `n` is 0 or exceeds [`MAX_ENUMERATION`].
pub fn semilattices_of_size(n: usize) -> Vec<Semilattice> {
    assert!((1..=MAX_ENUMERATION).contains(&n), "enumeration supports 1..=8 elements, got {n}");
    if n <= 2 {
        return vec![crate::fixtures::chain(n)];
    }
    let mid: Vec<usize> = (1..n - 1).collect();
    let pairs: Vec<(usize, usize)> = mid
        .iter()
        .flat_map(|&i| mid.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
        .collect();
    let perms = permutations(&mid);
    let mut codes = BTreeSet::new();
    for rel in 0u64..1 << pairs.len() {
        let less = |i: usize, j: usize| {
            if i == j {
                return false;
            }
            if i == 0 || j == n - 1 {
                return true;
            }
            if j == 0 || i == n - 1 || i > j {
                return false;
            }
            let k = pairs.iter().position(|&p| p == (i, j)).expect("pair");
            rel >> k & 1 == 1
        };
        let transitive = mid.iter().all(|&i| {
            mid.iter()
                .all(|&j| !less(i, j) || mid.iter().all(|&k| !less(j, k) || less(i, k)))
        });
        if !transitive || !has_meets(n, &less) {
            continue;
        }
        let code = perms
            .iter()
            .filter_map(|perm| {
                // perm maps old middle index -> new middle index
                let map = |x: usize| if x == 0 || x == n - 1 { x } else { perm[x - 1] };
                let mut code = 0u64;
                for &(i, j) in &pairs {
                    let (a, b) = (map(i), map(j));
                    if less(i, j) {
                        if a > b {
                            return None;
                        }
                        let bit = pairs.iter().position(|&p| p == (a, b)).expect("pair");
                        code |= 1 << bit;
                    }
                }
                Some(code)
            })
            .min()
            .expect("identity relabeling is natural");
        codes.insert(code);
    }
    codes
        .into_iter()
        .map(|code| {
            let mut rel: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, n - 1)).collect();
            rel.extend((1..n - 1).map(|i| (0, i)));
            rel.extend(
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| code >> k & 1 == 1)
                    .map(|(_, &p)| p),
            );
            Semilattice::from_covers(n, &rel, n - 1).expect("enumerated orders are lattices")
        })
        .collect()
}

/// All semilattices with `1..=n_max` elements, smallest first.
pub fn enumerate_semilattices(n_max: usize) -> Vec<Semilattice> {
    (1..=n_max).flat_map(semilattices_of_size).collect()
}

fn has_meets(n: usize, less: &impl Fn(usize, usize) -> bool) -> bool {
    let leq = |a: usize, b: usize| a == b || less(a, b);
    (0..n).all(|a| {
        (a + 1..n).all(|b| {
            let lower: Vec<usize> = (0..n).filter(|&c| leq(c, a) && leq(c, b)).collect();
            lower.iter().any(|&g| lower.iter().all(|&c| leq(c, g)))
        })
    })
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Every order-preserving map `a → b`, in lexicographic order of the value
/// vectors.
pub fn all_order_maps(a: &Semilattice, b: &Semilattice) -> Vec<Vec<usize>> {
    fn go(a: &Semilattice, b: &Semilattice, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let x = cur.len();
        if x == a.len() {
            out.push(cur.clone());
            return;
        }
        for v in b.elements() {
            let ok = (0..x).all(|y| {
                (!a.leq(y, x) || b.leq(cur[y], v)) && (!a.leq(x, y) || b.leq(v, cur[y]))
            });
            if ok {
                cur.push(v);
                go(a, b, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(a, b, &mut Vec::with_capacity(a.len()), &mut out);
    out
}

/// Every monotone operator on `a`.
pub fn all_monotone_ops(a: &Semilattice) -> Vec<Vec<usize>> {
    all_order_maps(a, a)
}

/// Every homomorphism `a → b`.
pub fn all_homomorphisms(a: &Semilattice, b: &Semilattice) -> Vec<Homomorphism> {
    all_order_maps(a, b)
        .into_iter()
        .filter_map(|m| Homomorphism::new(a.clone(), b.clone(), m).ok())
        .collect()
}
