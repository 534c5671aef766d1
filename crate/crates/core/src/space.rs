//! S-spaces: finite spaces with a distinguished subbase `K`, the derived
//! families `S(X)`, `C_K(X)` and `Z(X)`, the axiom checker, and the dual
//! space of a semilattice.

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::Semilattice;
use crate::bits::{canonicalize, intersect_all, intersection_closure, union_closure, Mask, MAX_UNIVERSE};
use crate::order;
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("{n} points exceeds the supported maximum of 64")]
    TooLarge { n: usize },
    #[error("subbase member {0:?} is not a subset of the points")]
    OutOfRange(Mask),
    #[error("{0:?} is not a subbasic closed set")]
    YNotClosed(Mask),
    #[error("S(X) is not closed under intersection: {0:?} ∩ {1:?}")]
    NotIntersectionClosed(Mask, Mask),
    #[error("not an S-space: {0}")]
    NotAnSSpace(String),
    #[error("{0:?} is not a filter of the semilattice")]
    NotAFilter(Mask),
    #[error("{0:?} is not an order-ideal of the semilattice")]
    NotAnIdeal(Mask),
    #[error("{0:?} is not a subbasic saturated set")]
    NotSaturated(Mask),
}

/// Knobs for the exponential parts of the axiom checker.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    /// (S4) is exhausted when at most this many members of `S(X)` are
    /// candidates; above it, `samples` random subfamilies are tried.
    pub s4_cap: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { s4_cap: 12, samples: 4096, seed: 0 }
    }
}

#[derive(Debug, Clone, Default)]
struct Cache {
    s_sets: OnceLock<Vec<Mask>>,
    closed: OnceLock<Vec<Mask>>,
    saturated: OnceLock<Vec<Mask>>,
    base: OnceLock<Vec<Mask>>,
    below: OnceLock<Vec<Mask>>,
}

/// A finite space `⟨X, K⟩` with points `0..n`. Derived families are computed
/// on first use and cached.
#[derive(Debug, Clone)]
pub struct SSpace {
    n: usize,
    k: Vec<Mask>,
    cache: Cache,
}

impl PartialEq for SSpace {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k
    }
}

impl Eq for SSpace {}

impl SSpace {
    /// Close `generators` under finite unions and adjoin `∅`.
    pub fn new<I: IntoIterator<Item = Mask>>(n: usize, generators: I) -> Result<SSpace, SpaceError> {
        let gens = Self::validated(n, generators)?;
        Ok(Self::from_sorted(n, union_closure(&gens)))
    }

    /// Keep the subbase exactly as given (deduplicated). Used to build
    /// candidate spaces that may violate (S2).
    pub fn from_raw_subbase<I: IntoIterator<Item = Mask>>(n: usize, subbase: I) -> Result<SSpace, SpaceError> {
        let mut k = Self::validated(n, subbase)?;
        canonicalize(&mut k);
        Ok(Self::from_sorted(n, k))
    }

    fn validated<I: IntoIterator<Item = Mask>>(n: usize, it: I) -> Result<Vec<Mask>, SpaceError> {
        if n > MAX_UNIVERSE {
            return Err(SpaceError::TooLarge { n });
        }
        let full = Mask::full(n);
        let v: Vec<Mask> = it.into_iter().collect();
        match v.iter().find(|m| !m.is_subset(full)) {
            Some(&bad) => Err(SpaceError::OutOfRange(bad)),
            None => Ok(v),
        }
    }

    fn from_sorted(n: usize, k: Vec<Mask>) -> SSpace {
        SSpace { n, k, cache: Cache::default() }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn universe(&self) -> Mask {
        Mask::full(self.n)
    }

    /// `K`, canonically sorted.
    pub fn subbase(&self) -> &[Mask] {
        &self.k
    }

    /// `S(X) = {Uᶜ : U ∈ K}`.
    pub fn s_sets(&self) -> &[Mask] {
        self.cache.s_sets.get_or_init(|| {
            let mut v: Vec<Mask> = self.k.iter().map(|u| u.complement(self.n)).collect();
            canonicalize(&mut v);
            v
        })
    }

    /// `C_K(X)`: all intersections of members of `S(X)`, including `X`.
    pub fn closed_subbasic(&self) -> &[Mask] {
        self.cache
            .closed
            .get_or_init(|| intersection_closure(self.s_sets(), self.universe()))
    }

    /// `Z(X)`: intersections of nonempty dually directed subfamilies of `K`.
    ///
    /// A finite dually directed family has a least member, so `Z(X) = K`.
    /// For `|K| ≤ 16` the subfamilies are enumerated anyway and the result is
    /// built from the definition.
    pub fn saturated_subbasic(&self) -> &[Mask] {
        self.cache.saturated.get_or_init(|| {
            if self.k.len() > 16 {
                return self.k.clone();
            }
            let mut out = Vec::new();
            for sel in 1u32..1 << self.k.len() {
                let fam: Vec<Mask> = (0..self.k.len())
                    .filter(|i| sel >> i & 1 == 1)
                    .map(|i| self.k[i])
                    .collect();
                if is_dually_directed(&fam) {
                    out.push(intersect_all(fam, self.universe()));
                }
            }
            canonicalize(&mut out);
            out
        })
    }

    /// Basic opens: finite intersections of `K` (with `X` as the empty one).
    pub fn base(&self) -> &[Mask] {
        self.cache
            .base
            .get_or_init(|| intersection_closure(&self.k, self.universe()))
    }

    /// `cl({y})` for every point `y`, i.e. `{x : x ⊑ y}`.
    pub fn specialization(&self) -> &[Mask] {
        self.cache.below.get_or_init(|| {
            (0..self.n)
                .map(|y| {
                    (0..self.n)
                        .filter(|&x| self.k.iter().all(|u| !u.contains(x) || u.contains(y)))
                        .collect()
                })
                .collect()
        })
    }

    /// `x ⊑ y`: every open containing `x` contains `y`.
    pub fn spec_leq(&self, x: usize, y: usize) -> bool {
        self.specialization()[y].contains(x)
    }

    /// Topological closure, from the basic opens.
    pub fn closure(&self, set: Mask) -> Mask {
        let open = self
            .base()
            .iter()
            .filter(|b| !b.meets(set))
            .fold(Mask::EMPTY, |acc, &b| acc.union(b));
        open.complement(self.n)
    }

    /// Least member of `C_K(X)` containing `set`.
    pub fn subbasic_closure(&self, set: Mask) -> Mask {
        intersect_all(
            self.s_sets().iter().copied().filter(|s| set.is_subset(*s)),
            self.universe(),
        )
    }

    pub fn is_closed_subbasic(&self, set: Mask) -> bool {
        self.closed_subbasic().binary_search(&set).is_ok()
    }

    /// Saturated: an intersection of opens, i.e. an upset for `⊑`.
    pub fn is_saturated(&self, set: Mask) -> bool {
        set.iter()
            .all(|x| (0..self.n).all(|y| !self.spec_leq(x, y) || set.contains(y)))
    }

    /// Every subset of a finite space is compact.
    pub fn is_compact(&self, set: Mask) -> bool {
        set.is_subset(self.universe())
    }

    pub fn is_t0(&self) -> bool {
        self.t0_violation().is_none()
    }

    fn t0_violation(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|x| (x + 1..self.n).map(move |y| (x, y)))
            .find(|&(x, y)| self.k.iter().all(|u| u.contains(x) == u.contains(y)))
    }

    /// Whether `j ⊆ S(X)` is a `y`-family. Returns the first failing pair.
    pub fn y_family_violation(&self, y: Mask, j: &[Mask]) -> Result<Option<(Mask, Mask)>, SpaceError> {
        if !self.is_closed_subbasic(y) {
            return Err(SpaceError::YNotClosed(y));
        }
        let hs: Vec<Mask> = self.s_sets().iter().copied().filter(|h| y.is_subset(*h)).collect();
        for &a in j {
            for &b in j {
                let ok = hs.iter().any(|&h| {
                    let need = a.union(b).intersect(h);
                    j.iter().any(|&c| need.is_subset(c))
                });
                if !ok {
                    return Ok(Some((a, b)));
                }
            }
        }
        Ok(None)
    }

    pub fn is_y_family(&self, y: Mask, j: &[Mask]) -> Result<bool, SpaceError> {
        Ok(self.y_family_violation(y, j)?.is_none())
    }

    /// A witness `(H, C)` for every pair of a `y`-family.
    pub fn y_family_witness(&self, y: Mask, j: &[Mask]) -> Result<Option<YFamilyWitness>, SpaceError> {
        if !self.is_y_family(y, j)? {
            return Ok(None);
        }
        let mut witnesses = Vec::new();
        for &a in j {
            for &b in j {
                let w = self
                    .s_sets()
                    .iter()
                    .filter(|h| y.is_subset(**h))
                    .find_map(|&h| {
                        let need = a.union(b).intersect(h);
                        j.iter().find(|c| need.is_subset(**c)).map(|&c| (h, c))
                    })
                    .expect("checked above");
                witnesses.push(((a, b), w));
            }
        }
        Ok(Some(YFamilyWitness { y, family: j.to_vec(), witnesses }))
    }

    /// Run the axioms (S1)-(S4).
    pub fn check(&self, cfg: &CheckConfig) -> Report {
        let mut r = Report::new();
        let full = self.universe();
        r.expect_none("S1/T0", self.t0_violation());
        let cover = crate::bits::union_all(self.k.iter().copied());
        r.check("S1/covers", cover == full, || format!("uncovered {:?}", full.minus(cover)));
        r.check("S2/empty", self.k.binary_search(&Mask::EMPTY).is_ok(), || "∅ ∉ K".into());
        let union_gap = self.k.iter().find_map(|&u| {
            self.k
                .iter()
                .find(|&&v| self.k.binary_search(&u.union(v)).is_err())
                .map(|&v| (u, v))
        });
        r.expect_none("S2/unions", union_gap);
        r.check("S2/compact", self.k.iter().all(|&u| self.is_compact(u)), String::new);
        r.note("finite space");
        r.expect_none("S3", self.s3_violation());
        let (s4, exhaustive) = self.s4_violation(cfg);
        r.expect_none("S4", s4);
        if !exhaustive {
            r.note("partial: sampled above the cap");
        }
        r
    }

    pub fn is_s_space(&self, cfg: &CheckConfig) -> bool {
        self.check(cfg).passed()
    }

    fn s3_violation(&self) -> Option<(Mask, Mask, usize)> {
        for &u in &self.k {
            for &v in &self.k {
                let uv = u.intersect(v);
                for x in uv.iter() {
                    let ok = self.k.iter().filter(|w| !w.contains(x)).any(|&w| {
                        let bound = uv.union(w);
                        self.k.iter().any(|d| d.contains(x) && d.is_subset(bound))
                    });
                    if !ok {
                        return Some((u, v, x));
                    }
                }
            }
        }
        None
    }

    /// First `(Y, J)` breaking (S4), and whether the search was exhaustive.
    /// Only nonempty `J` are considered.
    fn s4_violation(&self, cfg: &CheckConfig) -> (Option<(Mask, Vec<Mask>)>, bool) {
        let mut exhaustive = true;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let s = self.s_sets();
        for &y in self.closed_subbasic() {
            let cand: Vec<Mask> = s.iter().copied().filter(|a| !y.is_subset(*a)).collect();
            let m = cand.len();
            if m == 0 {
                continue;
            }
            let hs: Vec<Mask> = s.iter().copied().filter(|h| y.is_subset(*h)).collect();
            // ok[i][j]: candidate indices c with (A_i ∪ A_j) ∩ H ⊆ A_c for some H
            let ok: Vec<Vec<u64>> = (0..m)
                .map(|i| {
                    (0..m)
                        .map(|j| {
                            let mut bits = 0u64;
                            for (c, &cm) in cand.iter().enumerate() {
                                if hs.iter().any(|&h| cand[i].union(cand[j]).intersect(h).is_subset(cm)) {
                                    bits |= 1 << c;
                                }
                            }
                            bits
                        })
                        .collect()
                })
                .collect();
            let test = |sel: u64| -> Option<(Mask, Vec<Mask>)> {
                let idx: Vec<usize> = (0..m).filter(|i| sel >> i & 1 == 1).collect();
                let family = idx.iter().all(|&i| idx.iter().all(|&j| ok[i][j] & sel != 0));
                if !family {
                    return None;
                }
                let outside = idx.iter().fold(y, |acc, &i| acc.minus(cand[i]));
                outside
                    .is_empty()
                    .then(|| (y, idx.iter().map(|&i| cand[i]).collect()))
            };
            if m <= cfg.s4_cap {
                for sel in 1u64..1 << m {
                    if let Some(w) = test(sel) {
                        return (Some(w), exhaustive);
                    }
                }
            } else {
                exhaustive = false;
                let all = if m >= 64 { u64::MAX } else { (1u64 << m) - 1 };
                for _ in 0..cfg.samples {
                    let sel = rng.gen::<u64>() & all;
                    if sel != 0 {
                        if let Some(w) = test(sel) {
                            return (Some(w), exhaustive);
                        }
                    }
                }
            }
        }
        (None, exhaustive)
    }
}

/// A `Y`-family together with the `(H, C)` chosen for each ordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YFamilyWitness {
    pub y: Mask,
    pub family: Vec<Mask>,
    pub witnesses: Vec<((Mask, Mask), (Mask, Mask))>,
}

impl YFamilyWitness {
    pub fn verify(&self, space: &SSpace) -> bool {
        let in_s = |m: &Mask| space.s_sets().contains(m);
        self.witnesses.iter().all(|&((a, b), (h, c))| {
            in_s(&h)
                && self.y.is_subset(h)
                && self.family.contains(&c)
                && a.intersect(h).is_subset(c)
                && b.intersect(h).is_subset(c)
        })
    }
}

/// Nonempty, and any two members contain a third member.
pub fn is_dually_directed(fam: &[Mask]) -> bool {
    !fam.is_empty()
        && fam
            .iter()
            .all(|&u| fam.iter().all(|&v| fam.iter().any(|w| w.is_subset(u.intersect(v)))))
}

/// Nonempty, and any two members lie inside a third member.
pub fn is_directed(fam: &[Mask]) -> bool {
    !fam.is_empty()
        && fam
            .iter()
            .all(|&u| fam.iter().all(|&v| fam.iter().any(|w| u.union(v).is_subset(*w))))
}

/// The dual S-space `⟨X(A), K_A⟩` of a semilattice, with `β` materialized.
#[derive(Debug, Clone)]
pub struct DualSpace {
    algebra: Semilattice,
    points: Vec<Mask>,
    beta: Vec<Mask>,
    space: SSpace,
}

/// Points are the irreducible filters in canonical order.
pub fn dual_space(s: &Semilattice) -> DualSpace {
    let points = order::irreducible_filters(s);
    let beta: Vec<Mask> = s
        .elements()
        .map(|a| (0..points.len()).filter(|&i| points[i].contains(a)).collect())
        .collect();
    let p = points.len();
    let space = SSpace::new(p, beta.iter().map(|b| b.complement(p)))
        .expect("irreducible filters of a 64-element semilattice fit");
    DualSpace { algebra: s.clone(), points, beta, space }
}

impl DualSpace {
    pub fn algebra(&self) -> &Semilattice {
        &self.algebra
    }

    pub fn space(&self) -> &SSpace {
        &self.space
    }

    /// Irreducible filters, indexed by point.
    pub fn points(&self) -> &[Mask] {
        &self.points
    }

    pub fn point(&self, i: usize) -> Mask {
        self.points[i]
    }

    pub fn point_index(&self, filter: Mask) -> Option<usize> {
        self.points.iter().position(|&p| p == filter)
    }

    /// `β(a) = {P : a ∈ P}`.
    #[inline]
    pub fn beta(&self, a: usize) -> Mask {
        self.beta[a]
    }

    pub fn beta_table(&self) -> &[Mask] {
        &self.beta
    }

    /// `φ(F) = {P : F ⊆ P}`.
    pub fn phi(&self, f: Mask) -> Result<Mask, SpaceError> {
        if !order::is_filter(&self.algebra, f) {
            return Err(SpaceError::NotAFilter(f));
        }
        Ok((0..self.points.len()).filter(|&i| f.is_subset(self.points[i])).collect())
    }

    /// `ψ(Y) = {a : Y ⊆ β(a)}`.
    pub fn psi(&self, y: Mask) -> Result<Mask, SpaceError> {
        if !self.space.is_closed_subbasic(y) {
            return Err(SpaceError::YNotClosed(y));
        }
        Ok(self.psi_unchecked(y))
    }

    pub(crate) fn psi_unchecked(&self, y: Mask) -> Mask {
        self.algebra.elements().filter(|&a| y.is_subset(self.beta[a])).collect()
    }

    /// `α(I) = ⋂{β(a)ᶜ : a ∈ I} = {P : P ∩ I = ∅}`.
    pub fn alpha(&self, i: Mask) -> Result<Mask, SpaceError> {
        if !order::is_order_ideal(&self.algebra, i) {
            return Err(SpaceError::NotAnIdeal(i));
        }
        Ok(self.alpha_unchecked(i))
    }

    pub(crate) fn alpha_unchecked(&self, i: Mask) -> Mask {
        (0..self.points.len()).filter(|&p| !self.points[p].meets(i)).collect()
    }

    /// `I_A(Z) = {a : β(a) ∩ Z = ∅}`.
    pub fn ideal_of(&self, z: Mask) -> Result<Mask, SpaceError> {
        if !self.space.saturated_subbasic().contains(&z) {
            return Err(SpaceError::NotSaturated(z));
        }
        Ok(self.ideal_of_unchecked(z))
    }

    pub(crate) fn ideal_of_unchecked(&self, z: Mask) -> Mask {
        self.algebra.elements().filter(|&a| !self.beta[a].meets(z)).collect()
    }

    /// Display name of a point: its filter's member labels.
    pub fn point_label(&self, i: usize) -> String {
        let names: Vec<_> = self.points[i].iter().map(|a| self.algebra.label(a).into_owned()).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// `⟨S(X), ∩, X⟩` with its elements in canonical order.
pub fn dual_semilattice(x: &SSpace) -> Result<(Semilattice, Vec<Mask>), SpaceError> {
    let elems = x.s_sets().to_vec();
    let idx = |m: Mask| elems.binary_search(&m).ok();
    let mut table = vec![vec![0; elems.len()]; elems.len()];
    for (i, &a) in elems.iter().enumerate() {
        for (j, &b) in elems.iter().enumerate() {
            table[i][j] = idx(a.intersect(b)).ok_or(SpaceError::NotIntersectionClosed(a, b))?;
        }
    }
    let top = idx(x.universe()).ok_or_else(|| SpaceError::NotAnSSpace("X ∉ S(X)".into()))?;
    let s = Semilattice::new(table, top).map_err(|e| SpaceError::NotAnSSpace(e.to_string()))?;
    Ok((s, elems))
}

/// `H_X : X → X(S(X))`, `x ↦ {A ∈ S(X) : x ∈ A}`.
#[derive(Debug, Clone)]
pub struct Hx {
    /// `map[x]` is a point index of `dual`.
    pub map: Vec<usize>,
    pub dual: DualSpace,
    /// Element `i` of the dual semilattice is `elements[i] ∈ S(X)`.
    pub elements: Vec<Mask>,
}

impl Hx {
    /// Image of a subset of `X`.
    pub fn image(&self, set: Mask) -> Mask {
        set.iter().map(|x| self.map[x]).collect()
    }

    /// Bijective, and carries `K` onto `K_{S(X)}`.
    pub fn verify(&self, x: &SSpace) -> Report {
        let mut r = Report::new();
        let img: Mask = self.map.iter().copied().collect();
        r.check(
            "H_X/bijective",
            self.map.len() == self.dual.space().len() && img == self.dual.space().universe(),
            || format!("{:?}", self.map),
        );
        let mut k: Vec<Mask> = x.subbase().iter().map(|&u| self.image(u)).collect();
        canonicalize(&mut k);
        r.check("H_X/subbase", k == self.dual.space().subbase(), || {
            format!("{k:?} vs {:?}", self.dual.space().subbase())
        });
        r
    }
}

pub fn h_x(x: &SSpace, cfg: &CheckConfig) -> Result<Hx, SpaceError> {
    let report = x.check(cfg);
    if let Some(f) = report.first_failure() {
        return Err(SpaceError::NotAnSSpace(f.name.clone()));
    }
    let (s, elements) = dual_semilattice(x)?;
    let dual = dual_space(&s);
    let map = (0..x.len())
        .map(|p| {
            let filter: Mask = (0..elements.len()).filter(|&i| elements[i].contains(p)).collect();
            dual.point_index(filter)
                .ok_or_else(|| SpaceError::NotAnSSpace(format!("H_X({p}) = {filter:?} is not irreducible")))
        })
        .collect::<Result<_, _>>()?;
    Ok(Hx { map, dual, elements })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{chain, lattice_l, L_ELEMENTS};

    // canonical point order of X(L) is P4, P1, P2, P3
    const P1: usize = 1;
    const P2: usize = 2;
    const P3: usize = 3;
    const P4: usize = 0;

    fn pts(xs: &[usize]) -> Mask {
        Mask::from_indices(xs.iter().copied())
    }

    #[test]
    fn beta_on_l() {
        let d = dual_space(&lattice_l());
        let [zero, a, b, c, dd, e, one] = L_ELEMENTS;
        assert_eq!(d.beta(zero), Mask::EMPTY);
        assert_eq!(d.beta(a), pts(&[P1]));
        assert_eq!(d.beta(b), pts(&[P2]));
        assert_eq!(d.beta(c), pts(&[P3]));
        assert_eq!(d.beta(dd), pts(&[P3, P4]));
        assert_eq!(d.beta(e), pts(&[P1, P2, P3]));
        assert_eq!(d.beta(one), pts(&[P1, P2, P3, P4]));
        assert_eq!(d.space().closed_subbasic().len(), 7);
        assert!(d.space().is_s_space(&CheckConfig::default()));
    }

    #[test]
    fn two_chain_dual() {
        let d = dual_space(&chain(2));
        assert_eq!(d.space().len(), 1);
        assert_eq!(d.space().subbase(), &[Mask::EMPTY, Mask::full(1)]);
    }

    #[test]
    fn t0_failure() {
        let x = SSpace::from_raw_subbase(2, [Mask::EMPTY, Mask::full(2)]).unwrap();
        let r = x.check(&CheckConfig::default());
        assert!(!r.get("S1/T0").unwrap().pass);
    }

    #[test]
    fn specialization_on_l() {
        let d = dual_space(&lattice_l());
        // P ⊑ Q iff Q ⊆ P; P4 ⊆ P3
        assert!(d.space().spec_leq(P3, P4));
        assert!(!d.space().spec_leq(P4, P3));
        for x in 0..4 {
            assert!(d.space().closure(Mask::singleton(x)).contains(x));
        }
    }

    #[test]
    fn phi_psi_on_l() {
        let l = lattice_l();
        let d = dual_space(&l);
        let e = L_ELEMENTS[5];
        assert_eq!(d.phi(l.up(e)).unwrap(), pts(&[P1, P2, P3]));
        assert_eq!(d.phi(l.up(l.top())).unwrap(), d.space().universe());
        for f in order::all_filters(&l) {
            assert_eq!(d.psi(d.phi(f).unwrap()).unwrap(), f);
        }
    }

    #[test]
    fn y_families() {
        let d = dual_space(&lattice_l());
        let x = d.space();
        for &y in x.closed_subbasic() {
            assert!(x.is_y_family(y, &[x.universe()]).unwrap());
        }
        let w = x.y_family_witness(Mask::EMPTY, &[x.universe()]).unwrap().unwrap();
        assert!(w.verify(x));
        assert_eq!(x.is_y_family(pts(&[P1, P2]), &[]), Err(SpaceError::YNotClosed(pts(&[P1, P2]))));
    }

    #[test]
    fn hx_on_l() {
        let d = dual_space(&lattice_l());
        let hx = h_x(d.space(), &CheckConfig::default()).unwrap();
        assert!(hx.verify(d.space()).passed());
    }
}
