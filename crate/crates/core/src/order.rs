//! Filters, irreducible filters, order-ideals and F-ideals.
//!
//! All subsets are [`Mask`]es over the element indices of a [`Semilattice`];
//! families come back in canonical order.

use thiserror::Error;

use crate::algebra::Semilattice;
use crate::bits::{canonicalize, Mask};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("{0:?} is not a filter")]
    NotAFilter(Mask),
    #[error("{0:?} is the whole carrier")]
    NotProper(Mask),
    #[error("{0:?} is not a downset")]
    NotADownset(Mask),
    #[error("{0:?} is neither an order-ideal nor an F-ideal")]
    NotAnIdeal(Mask),
    #[error("filter and ideal share {0:?}")]
    NotDisjoint(Mask),
    #[error("no irreducible filter separates {filter:?} from {ideal:?}")]
    NoSeparation { filter: Mask, ideal: Mask },
}

/// Upset, contains top, closed under `∧`.
pub fn is_filter(s: &Semilattice, set: Mask) -> bool {
    set.contains(s.top())
        && s.is_upset(set)
        && set.iter().all(|a| set.iter().all(|b| set.contains(s.meet(a, b))))
}

/// Nonempty directed downset.
pub fn is_order_ideal(s: &Semilattice, set: Mask) -> bool {
    !set.is_empty()
        && s.is_downset(set)
        && set
            .iter()
            .all(|a| set.iter().all(|b| s.up(a).intersect(s.up(b)).meets(set)))
}

/// `F(X)`: the least filter containing `x`.
pub fn generated_filter(s: &Semilattice, x: Mask) -> Mask {
    // close under ∧, then upward
    let mut closed = x.with(s.top());
    loop {
        let mut next = closed;
        for a in closed.iter() {
            for b in closed.iter() {
                next.insert(s.meet(a, b));
            }
        }
        if next == closed {
            break;
        }
        closed = next;
    }
    s.up_closure(closed)
}

/// `Fi(A)`. Every filter of a finite semilattice is principal, so this is
/// `{[a) : a ∈ A}`.
pub fn all_filters(s: &Semilattice) -> Vec<Mask> {
    let mut out: Vec<Mask> = s.elements().map(|a| generated_filter(s, Mask::singleton(a))).collect();
    canonicalize(&mut out);
    out
}

/// `Id(A)`: the principal downsets.
pub fn all_order_ideals(s: &Semilattice) -> Vec<Mask> {
    let mut out: Vec<Mask> = s.elements().map(|a| s.down(a)).collect();
    canonicalize(&mut out);
    out
}

/// Irreducibility straight from the definition: `f` is proper and is not the
/// intersection of two filters strictly above it.
pub fn is_irreducible(s: &Semilattice, f: Mask) -> bool {
    if f == s.carrier() || !is_filter(s, f) {
        return false;
    }
    let above: Vec<Mask> = all_filters(s)
        .into_iter()
        .filter(|&g| f.is_subset(g) && g != f)
        .collect();
    !above
        .iter()
        .any(|&g| above.iter().any(|&h| g.intersect(h) == f))
}

/// The quantified characterization: for all `a, b ∉ F` there are `c ∉ F` and
/// `f ∈ F` with `a ∧ f ≤ c` and `b ∧ f ≤ c`.
pub fn is_irreducible_char(s: &Semilattice, f: Mask) -> Result<bool, OrderError> {
    if !is_filter(s, f) {
        return Err(OrderError::NotAFilter(f));
    }
    let outside = f.complement(s.len());
    if outside.is_empty() {
        return Err(OrderError::NotProper(f));
    }
    Ok(outside.iter().all(|a| {
        outside.iter().all(|b| {
            f.iter().any(|x| {
                let common = s.up(s.meet(a, x)).intersect(s.up(s.meet(b, x)));
                common.meets(outside)
            })
        })
    }))
}

/// `X(A)`, canonically sorted.
pub fn irreducible_filters(s: &Semilattice) -> Vec<Mask> {
    all_filters(s).into_iter().filter(|&f| is_irreducible(s, f)).collect()
}

/// Whether `i` is an `f`-ideal. `i` must be a downset.
pub fn is_f_ideal(s: &Semilattice, f: Mask, i: Mask) -> Result<bool, OrderError> {
    if !is_filter(s, f) {
        return Err(OrderError::NotAFilter(f));
    }
    if !s.is_downset(i) {
        return Err(OrderError::NotADownset(i));
    }
    Ok(i.iter().all(|a| {
        i.iter().all(|b| {
            f.iter().any(|x| {
                let common = s.up(s.meet(a, x)).intersect(s.up(s.meet(b, x)));
                common.meets(i)
            })
        })
    }))
}

/// An irreducible filter containing `f` and missing `i`, for a filter `f`
/// and a nonempty order-ideal or `f`-ideal `i` disjoint from it. Ties go to
/// the least candidate in canonical order.
pub fn separate(s: &Semilattice, f: Mask, i: Mask) -> Result<Mask, OrderError> {
    if !is_filter(s, f) {
        return Err(OrderError::NotAFilter(f));
    }
    if f.meets(i) {
        return Err(OrderError::NotDisjoint(f.intersect(i)));
    }
    if i.is_empty() || !(is_order_ideal(s, i) || is_f_ideal(s, f, i)?) {
        return Err(OrderError::NotAnIdeal(i));
    }
    irreducible_filters(s)
        .into_iter()
        .find(|&p| f.is_subset(p) && !p.meets(i))
        .ok_or(OrderError::NoSeparation { filter: f, ideal: i })
}
