//! Finite meet-semilattices with a greatest element, monotone operators,
//! homomorphisms and congruences.
//!
//! Elements are dense indices `0..n`; labels are display metadata only and take
//! no part in equality.

use std::borrow::Cow;
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::bits::{Mask, MAX_UNIVERSE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("empty carrier")]
    Empty,
    #[error("carrier of {n} elements exceeds the supported maximum of 64")]
    TooLarge { n: usize },
    #[error("meet table row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("entry {value} at ({row}, {col}) is not an element index")]
    IndexOutOfRange { row: usize, col: usize, value: usize },
    #[error("top {top} is not an element index")]
    TopOutOfRange { top: usize },
    #[error("not idempotent: {a} ∧ {a} ≠ {a}")]
    NotIdempotent { a: usize },
    #[error("not commutative: {a} ∧ {b} ≠ {b} ∧ {a}")]
    NotCommutative { a: usize, b: usize },
    #[error("not associative: ({a} ∧ {b}) ∧ {c} ≠ {a} ∧ ({b} ∧ {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("bad unit: {a} ∧ top ≠ {a}")]
    BadUnit { a: usize },
    #[error("map has {len} entries, expected {n}")]
    MapLength { len: usize, n: usize },
    #[error("map value {value} at {at} is not an element of the target")]
    MapOutOfRange { at: usize, value: usize },
    #[error("not monotone: {a} ≤ {b} but m({a}) ≰ m({b})")]
    NotMonotone { a: usize, b: usize },
    #[error("not a homomorphism: top is not preserved")]
    TopNotPreserved,
    #[error("not a homomorphism: h({a} ∧ {b}) ≠ h({a}) ∧ h({b})")]
    MeetNotPreserved { a: usize, b: usize },
    #[error("not a monotone homomorphism: h(m {a}) ≠ n(h {a})")]
    OperatorNotPreserved { a: usize },
    #[error("homomorphisms are not composable")]
    NotComposable,
    #[error("not a congruence: {a} ~ {b} but {a} ∧ {c} ≁ {b} ∧ {c}")]
    NotACongruence { a: usize, b: usize, c: usize },
    #[error("not compatible with the operator: {a} ~ {b} but m({a}) ≁ m({b})")]
    NotOperatorCompatible { a: usize, b: usize },
    #[error("order relation has a cycle through {a} and {b}")]
    Cyclic { a: usize, b: usize },
    #[error("{a} and {b} have no meet")]
    NoMeet { a: usize, b: usize },
    #[error("{top} is not the greatest element")]
    TopNotGreatest { top: usize },
}

/// A finite meet-semilattice with greatest element, `⟨A, ∧, 1⟩`.
#[derive(Clone)]
pub struct Semilattice {
    n: usize,
    meet: Vec<usize>,
    top: usize,
    up: Vec<Mask>,
    down: Vec<Mask>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Semilattice {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.top == other.top && self.meet == other.meet
    }
}

impl Eq for Semilattice {}

impl Hash for Semilattice {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.top.hash(state);
        self.meet.hash(state);
    }
}

impl fmt::Debug for Semilattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Semilattice")
            .field("n", &self.n)
            .field("top", &self.top)
            .field("covers", &self.covers())
            .finish()
    }
}

impl Semilattice {
    /// Validate a meet table and top element.
    pub fn new(table: Vec<Vec<usize>>, top: usize) -> Result<Semilattice, AlgebraError> {
        let n = table.len();
        if n == 0 {
            return Err(AlgebraError::Empty);
        }
        if n > MAX_UNIVERSE {
            return Err(AlgebraError::TooLarge { n });
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != n {
                return Err(AlgebraError::NotSquare { row, len: r.len(), n });
            }
            if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(AlgebraError::IndexOutOfRange { row, col, value });
            }
        }
        if top >= n {
            return Err(AlgebraError::TopOutOfRange { top });
        }
        let m = |a: usize, b: usize| table[a][b];
        for a in 0..n {
            if m(a, a) != a {
                return Err(AlgebraError::NotIdempotent { a });
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if m(a, b) != m(b, a) {
                    return Err(AlgebraError::NotCommutative { a, b });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(AlgebraError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        for a in 0..n {
            if m(a, top) != a {
                return Err(AlgebraError::BadUnit { a });
            }
        }
        Ok(Self::from_valid_table(table.into_iter().flatten().collect(), n, top))
    }

    pub(crate) fn from_valid_table(meet: Vec<usize>, n: usize, top: usize) -> Semilattice {
        let mut up = vec![Mask::EMPTY; n];
        let mut down = vec![Mask::EMPTY; n];
        for a in 0..n {
            for b in 0..n {
                if meet[a * n + b] == a {
                    up[a].insert(b);
                    down[b].insert(a);
                }
            }
        }
        Semilattice { n, meet, top, up, down, labels: None }
    }

    /// Build from a Hasse diagram: `covers` lists pairs `(lower, upper)`.
    /// Every pair of elements must have a greatest lower bound.
    pub fn from_covers(
        n: usize,
        covers: &[(usize, usize)],
        top: usize,
    ) -> Result<Semilattice, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::Empty);
        }
        if n > MAX_UNIVERSE {
            return Err(AlgebraError::TooLarge { n });
        }
        if top >= n {
            return Err(AlgebraError::TopOutOfRange { top });
        }
        // down[b] = {a : a ≤ b}, reflexive-transitive closure of the covers
        let mut down: Vec<Mask> = (0..n).map(Mask::singleton).collect();
        for &(lo, hi) in covers {
            for (i, v) in [lo, hi].into_iter().enumerate() {
                if v >= n {
                    return Err(AlgebraError::IndexOutOfRange { row: i, col: 0, value: v });
                }
            }
            down[hi].insert(lo);
        }
        loop {
            let mut changed = false;
            for b in 0..n {
                let grown = down[b].iter().fold(down[b], |acc, a| acc.union(down[a]));
                if grown != down[b] {
                    down[b] = grown;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if down[a].contains(b) && down[b].contains(a) {
                    return Err(AlgebraError::Cyclic { a, b });
                }
            }
        }
        if down[top] != Mask::full(n) {
            return Err(AlgebraError::TopNotGreatest { top });
        }
        let mut table = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                let lower = down[a].intersect(down[b]);
                // the greatest lower bound is the lower bound above all others
                let glb = lower.iter().find(|&c| lower.is_subset(down[c]));
                table[a][b] = glb.ok_or(AlgebraError::NoMeet { a, b })?;
            }
        }
        Semilattice::new(table, top)
    }

    #[must_use]
    pub fn with_labels(mut self, labels: Vec<String>) -> Semilattice {
        assert_eq!(labels.len(), self.n, "one label per element");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> Cow<'_, str> {
        match &self.labels {
            Some(l) => Cow::Borrowed(&l[a]),
            None => Cow::Owned(a.to_string()),
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(l) => l.iter().position(|x| x == label),
            None => label.parse().ok().filter(|&i| i < self.n),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    #[inline]
    pub fn carrier(&self) -> Mask {
        Mask::full(self.n)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n + b]
    }

    /// `a ≤ b ⇔ a ∧ b = a`.
    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    /// `[a)`.
    #[inline]
    pub fn up(&self, a: usize) -> Mask {
        self.up[a]
    }

    /// `(a]`.
    #[inline]
    pub fn down(&self, a: usize) -> Mask {
        self.down[a]
    }

    pub fn meet_table(&self) -> Vec<Vec<usize>> {
        self.meet.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    /// Meet of a set of elements; `top` for the empty set.
    pub fn meet_of(&self, set: Mask) -> usize {
        set.iter().fold(self.top, |acc, a| self.meet(acc, a))
    }

    /// Least upper bound of `a` and `b`, when it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let upper = self.up[a].intersect(self.up[b]);
        upper.iter().find(|&c| upper.is_subset(self.up[c]))
    }

    /// Least element, when it exists.
    pub fn bottom(&self) -> Option<usize> {
        let full = self.carrier();
        self.elements().find(|&a| self.up[a] == full)
    }

    pub fn up_closure(&self, set: Mask) -> Mask {
        set.iter().fold(Mask::EMPTY, |acc, a| acc.union(self.up[a]))
    }

    pub fn down_closure(&self, set: Mask) -> Mask {
        set.iter().fold(Mask::EMPTY, |acc, a| acc.union(self.down[a]))
    }

    pub fn is_upset(&self, set: Mask) -> bool {
        self.up_closure(set) == set
    }

    pub fn is_downset(&self, set: Mask) -> bool {
        self.down_closure(set) == set
    }

    /// Hasse diagram as `(lower, upper)` pairs.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.up[a].without(a).iter() {
                let between = self.up[a].intersect(self.down[b]).without(a).without(b);
                if between.is_empty() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Preimage of a subset of `target` under an element map.
    pub(crate) fn preimage(map: &[usize], set: Mask) -> Mask {
        map.iter()
            .enumerate()
            .filter(|(_, &v)| set.contains(v))
            .map(|(i, _)| i)
            .collect()
    }

    fn check_map(&self, target: &Semilattice, map: &[usize]) -> Result<(), AlgebraError> {
        if map.len() != self.n {
            return Err(AlgebraError::MapLength { len: map.len(), n: self.n });
        }
        if let Some((at, &value)) = map.iter().enumerate().find(|(_, &v)| v >= target.n) {
            return Err(AlgebraError::MapOutOfRange { at, value });
        }
        Ok(())
    }

    /// First pair `a ≤ b` with `f(a) ≰ f(b)` for a map into `target`.
    pub fn order_violation(&self, target: &Semilattice, map: &[usize]) -> Option<(usize, usize)> {
        for a in self.elements() {
            for b in self.up[a].iter() {
                if !target.leq(map[a], map[b]) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Check that `map` is an order-preserving map into `target`.
    pub fn check_order_map(&self, target: &Semilattice, map: &[usize]) -> Result<(), AlgebraError> {
        self.check_map(target, map)?;
        match self.order_violation(target, map) {
            Some((a, b)) => Err(AlgebraError::NotMonotone { a, b }),
            None => Ok(()),
        }
    }
}

/// A semilattice together with a monotone unary operator `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonotoneSemilattice {
    base: Semilattice,
    op: Vec<usize>,
}

impl MonotoneSemilattice {
    pub fn new(base: Semilattice, op: Vec<usize>) -> Result<Self, AlgebraError> {
        base.check_order_map(&base, &op)?;
        Ok(MonotoneSemilattice { base, op })
    }

    /// `⟨A, id⟩`.
    pub fn identity(base: Semilattice) -> Self {
        let op = base.elements().collect();
        MonotoneSemilattice { base, op }
    }

    pub fn base(&self) -> &Semilattice {
        &self.base
    }

    #[inline]
    pub fn op(&self, a: usize) -> usize {
        self.op[a]
    }

    pub fn op_table(&self) -> &[usize] {
        &self.op
    }
}

/// A `∧`- and top-preserving map between semilattices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    source: Semilattice,
    target: Semilattice,
    map: Vec<usize>,
}

impl Homomorphism {
    pub fn new(source: Semilattice, target: Semilattice, map: Vec<usize>) -> Result<Self, AlgebraError> {
        source.check_map(&target, &map)?;
        if map[source.top()] != target.top() {
            return Err(AlgebraError::TopNotPreserved);
        }
        for a in source.elements() {
            for b in a + 1..source.len() {
                if map[source.meet(a, b)] != target.meet(map[a], map[b]) {
                    return Err(AlgebraError::MeetNotPreserved { a, b });
                }
            }
        }
        Ok(Homomorphism { source, target, map })
    }

    pub fn identity(s: &Semilattice) -> Self {
        Homomorphism { source: s.clone(), target: s.clone(), map: s.elements().collect() }
    }

    pub fn source(&self) -> &Semilattice {
        &self.source
    }

    pub fn target(&self) -> &Semilattice {
        &self.target
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// `h⁻¹[set]` for a subset of the target.
    pub fn preimage(&self, set: Mask) -> Mask {
        Semilattice::preimage(&self.map, set)
    }

    pub fn is_onto(&self) -> bool {
        self.map.iter().copied().collect::<Mask>() == self.target.carrier()
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Homomorphism) -> Result<Homomorphism, AlgebraError> {
        if self.target != next.source {
            return Err(AlgebraError::NotComposable);
        }
        Ok(Homomorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            map: self.map.iter().map(|&b| next.map[b]).collect(),
        })
    }

    /// Check `h(m a) = n(h a)` for all `a`.
    pub fn check_monotone(
        &self,
        source: &MonotoneSemilattice,
        target: &MonotoneSemilattice,
    ) -> Result<(), AlgebraError> {
        if source.base != self.source || target.base != self.target {
            return Err(AlgebraError::NotComposable);
        }
        match self
            .source
            .elements()
            .find(|&a| self.map[source.op(a)] != target.op(self.map[a]))
        {
            Some(a) => Err(AlgebraError::OperatorNotPreserved { a }),
            None => Ok(()),
        }
    }
}

/// A partition of the carrier compatible with `∧`.
///
/// Class ids are normalized so that classes are numbered in order of their
/// least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    classes: Vec<usize>,
}

impl Congruence {
    /// Normalize a class-id assignment without checking compatibility.
    pub(crate) fn partition(ids: &[usize]) -> Congruence {
        let mut seen: Vec<(usize, usize)> = Vec::new();
        let classes = ids
            .iter()
            .map(|&id| match seen.iter().find(|(old, _)| *old == id) {
                Some(&(_, new)) => new,
                None => {
                    let new = seen.len();
                    seen.push((id, new));
                    new
                }
            })
            .collect();
        Congruence { classes }
    }

    /// Validate a class-id assignment against `s`.
    pub fn new(s: &Semilattice, ids: &[usize]) -> Result<Congruence, AlgebraError> {
        if ids.len() != s.len() {
            return Err(AlgebraError::MapLength { len: ids.len(), n: s.len() });
        }
        let theta = Congruence::partition(ids);
        theta.check(s)?;
        Ok(theta)
    }

    /// Validate a list of blocks; elements not mentioned form singleton classes.
    pub fn from_blocks(s: &Semilattice, blocks: &[Mask]) -> Result<Congruence, AlgebraError> {
        let mut ids: Vec<usize> = s.elements().collect();
        for b in blocks {
            if let Some(first) = b.first() {
                for a in b.iter() {
                    if a >= s.len() {
                        return Err(AlgebraError::MapOutOfRange { at: a, value: a });
                    }
                    ids[a] = first;
                }
            }
        }
        Congruence::new(s, &ids)
    }

    pub fn identity(n: usize) -> Congruence {
        Congruence { classes: (0..n).collect() }
    }

    pub fn total(n: usize) -> Congruence {
        Congruence { classes: vec![0; n] }
    }

    /// Least congruence containing the given pairs.
    pub fn generated(s: &Semilattice, pairs: &[(usize, usize)]) -> Congruence {
        let n = s.len();
        let mut ids: Vec<usize> = (0..n).collect();
        fn merge(ids: &mut [usize], a: usize, b: usize) -> bool {
            let (ia, ib) = (ids[a], ids[b]);
            if ia == ib {
                return false;
            }
            for x in ids.iter_mut() {
                if *x == ib {
                    *x = ia;
                }
            }
            true
        }
        for &(a, b) in pairs {
            merge(&mut ids, a, b);
        }
        loop {
            let mut changed = false;
            for a in 0..n {
                for b in a + 1..n {
                    if ids[a] != ids[b] {
                        continue;
                    }
                    for c in 0..n {
                        changed |= merge(&mut ids, s.meet(a, c), s.meet(b, c));
                    }
                }
            }
            if !changed {
                break;
            }
        }
        Congruence::partition(&ids)
    }

    /// Least congruence of `⟨A, m⟩` containing the given pairs.
    pub fn generated_monotone(ms: &MonotoneSemilattice, pairs: &[(usize, usize)]) -> Congruence {
        let s = ms.base();
        let mut theta = Congruence::generated(s, pairs);
        loop {
            let mut extra: Vec<(usize, usize)> = theta.pairs().collect();
            let before = extra.len();
            for (a, b) in theta.pairs() {
                extra.push((ms.op(a), ms.op(b)));
            }
            let next = Congruence::generated(s, &extra);
            if next == theta && extra.len() >= before {
                return theta;
            }
            theta = next;
        }
    }

    fn check(&self, s: &Semilattice) -> Result<(), AlgebraError> {
        for a in s.elements() {
            for b in a + 1..s.len() {
                if self.classes[a] != self.classes[b] {
                    continue;
                }
                for c in s.elements() {
                    if self.classes[s.meet(a, c)] != self.classes[s.meet(b, c)] {
                        return Err(AlgebraError::NotACongruence { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    /// Check compatibility with the monotone operator.
    pub fn check_operator(&self, ms: &MonotoneSemilattice) -> Result<(), AlgebraError> {
        self.check(ms.base())?;
        for (a, b) in self.pairs() {
            if self.classes[ms.op(a)] != self.classes[ms.op(b)] {
                return Err(AlgebraError::NotOperatorCompatible { a, b });
            }
        }
        Ok(())
    }

    #[inline]
    pub fn class_of(&self, a: usize) -> usize {
        self.classes[a]
    }

    pub fn class_ids(&self) -> &[usize] {
        &self.classes
    }

    #[inline]
    pub fn related(&self, a: usize, b: usize) -> bool {
        self.classes[a] == self.classes[b]
    }

    pub fn class_count(&self) -> usize {
        self.classes.iter().max().map_or(0, |m| m + 1)
    }

    pub fn blocks(&self) -> Vec<Mask> {
        let mut out = vec![Mask::EMPTY; self.class_count()];
        for (a, &c) in self.classes.iter().enumerate() {
            out[c].insert(a);
        }
        out
    }

    /// Related pairs `(a, b)` with `a < b`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.classes.len();
        (0..n).flat_map(move |a| {
            (a + 1..n).filter(move |&b| self.classes[a] == self.classes[b]).map(move |b| (a, b))
        })
    }

    /// `self ⊆ other` as relations.
    pub fn is_finer(&self, other: &Congruence) -> bool {
        self.pairs().all(|(a, b)| other.related(a, b))
    }

    pub fn intersection(&self, other: &Congruence) -> Congruence {
        let ids: Vec<usize> = self
            .classes
            .iter()
            .zip(&other.classes)
            .map(|(&x, &y)| x * self.classes.len() + y)
            .collect();
        Congruence::partition(&ids)
    }
}

/// `A/θ` together with the natural homomorphism `q_θ`.
pub fn quotient(s: &Semilattice, theta: &Congruence) -> Result<(Semilattice, Homomorphism), AlgebraError> {
    if theta.classes.len() != s.len() {
        return Err(AlgebraError::MapLength { len: theta.classes.len(), n: s.len() });
    }
    theta.check(s)?;
    let k = theta.class_count();
    let reps: Vec<usize> = theta.blocks().iter().map(|b| b.first().expect("nonempty class")).collect();
    let table: Vec<Vec<usize>> = (0..k)
        .map(|x| (0..k).map(|y| theta.class_of(s.meet(reps[x], reps[y]))).collect())
        .collect();
    let q = Semilattice::new(table, theta.class_of(s.top()))?;
    let q = match s.labels() {
        Some(_) => {
            let labels = theta
                .blocks()
                .iter()
                .map(|b| {
                    let names: Vec<_> = b.iter().map(|a| s.label(a).into_owned()).collect();
                    format!("[{}]", names.join(","))
                })
                .collect();
            q.with_labels(labels)
        }
        None => q,
    };
    let hom = Homomorphism::new(s.clone(), q.clone(), theta.classes.clone())?;
    Ok((q, hom))
}

/// `⟨A/θ, m/θ⟩` for an operator-compatible congruence.
pub fn quotient_monotone(
    ms: &MonotoneSemilattice,
    theta: &Congruence,
) -> Result<(MonotoneSemilattice, Homomorphism), AlgebraError> {
    theta.check_operator(ms)?;
    let (q, hom) = quotient(ms.base(), theta)?;
    let mut op = vec![0; q.len()];
    for a in ms.base().elements() {
        op[theta.class_of(a)] = theta.class_of(ms.op(a));
    }
    Ok((MonotoneSemilattice::new(q, op)?, hom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn lattice_l_is_valid() {
        let l = fixtures::lattice_l();
        let [zero, a, b, c, d, e, one] = fixtures::L_ELEMENTS;
        assert_eq!(l.len(), 7);
        assert_eq!(l.meet(e, d), c);
        assert!(l.leq(c, e));
        assert!(!l.leq(a, d));
        assert_eq!(l.bottom(), Some(zero));
        for x in l.elements() {
            assert!(l.leq(x, one));
        }
        assert_eq!(l.join(a, b), Some(e));
        assert_eq!(l.join(c, e), Some(e));
    }

    #[test]
    fn trivial_semilattice() {
        let s = Semilattice::new(vec![vec![0]], 0).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.top(), 0);
    }

    #[test]
    fn non_commutative_table() {
        let err = Semilattice::new(vec![vec![0, 1], vec![0, 1]], 1).unwrap_err();
        assert_eq!(err, AlgebraError::NotCommutative { a: 0, b: 1 });
    }

    #[test]
    fn validation_errors_name_witnesses() {
        assert_eq!(
            Semilattice::new(vec![vec![1, 0], vec![0, 1]], 1).unwrap_err(),
            AlgebraError::NotIdempotent { a: 0 }
        );
        // idempotent, commutative, unit holds for top=2 but 0∧1=2 breaks associativity
        let t = vec![vec![0, 2, 0], vec![2, 1, 1], vec![0, 1, 2]];
        assert!(matches!(Semilattice::new(t, 2), Err(AlgebraError::NotAssociative { .. })));
        let t = vec![vec![0, 0], vec![0, 1]];
        assert_eq!(Semilattice::new(t, 0).unwrap_err(), AlgebraError::BadUnit { a: 1 });
        assert_eq!(Semilattice::new(vec![], 0).unwrap_err(), AlgebraError::Empty);
    }

    #[test]
    fn monotone_validation() {
        let l = fixtures::lattice_l();
        assert!(MonotoneSemilattice::new(l.clone(), l.elements().collect()).is_ok());
        assert!(MonotoneSemilattice::new(l.clone(), vec![l.top(); 7]).is_ok());
        let chain = fixtures::chain(2);
        assert_eq!(
            MonotoneSemilattice::new(chain, vec![1, 0]).unwrap_err(),
            AlgebraError::NotMonotone { a: 0, b: 1 }
        );
    }

    #[test]
    fn from_covers_rejects_missing_meets() {
        // two minimal elements under a top: no meet
        assert_eq!(
            Semilattice::from_covers(3, &[(0, 2), (1, 2)], 2).unwrap_err(),
            AlgebraError::NoMeet { a: 0, b: 1 }
        );
        assert!(matches!(
            Semilattice::from_covers(2, &[(0, 1), (1, 0)], 1),
            Err(AlgebraError::Cyclic { .. })
        ));
    }

    #[test]
    fn quotients() {
        let l = fixtures::lattice_l();
        let (q, h) = quotient(&l, &Congruence::identity(7)).unwrap();
        assert_eq!(q.len(), 7);
        assert!(h.is_onto());
        let (q, h) = quotient(&l, &Congruence::total(7)).unwrap();
        assert_eq!(q.len(), 1);
        assert!(h.is_onto());
    }

    #[test]
    fn congruence_rejects_incompatible_partition() {
        let l = fixtures::lattice_l();
        let [_, a, b, ..] = fixtures::L_ELEMENTS;
        // a ~ b forces a∧a ~ b∧a, i.e. a ~ 0
        let err = Congruence::from_blocks(&l, &[Mask::from_indices([a, b])]).unwrap_err();
        assert!(matches!(err, AlgebraError::NotACongruence { .. }));
        let theta = Congruence::generated(&l, &[(a, b)]);
        assert!(theta.related(a, 0) && theta.related(b, 0));
    }

    #[test]
    fn homomorphism_composition() {
        let l = fixtures::lattice_l();
        let id = Homomorphism::identity(&l);
        let theta = Congruence::generated(&l, &[(0, 1)]);
        let (_, q) = quotient(&l, &theta).unwrap();
        assert_eq!(id.then(&q).unwrap(), q);
        assert!(q.then(&id).is_err());
    }
}
