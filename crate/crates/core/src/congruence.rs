//! One-to-one meet-relations, lower-Vietoris-type families and the
//! congruences they encode, the lattice `V(X)`, the monotone variants, and
//! the filter-family description of `Con(A)`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::algebra::{quotient, AlgebraError, Congruence, Homomorphism, MonotoneSemilattice, Semilattice};
use crate::bits::{canonicalize, union_all, Mask};
use crate::monotone::{build_r_m, dual_algebra, DualityError, MSSpace, MeetRelation, MonotoneDual, MultiRelation};
use crate::order::{all_filters, generated_filter};
use crate::report::Report;
use crate::space::{dual_semilattice, dual_space, CheckConfig, DualSpace, SSpace, SpaceError};

/// Above this many nonempty members of `C_K(X)`, [`vietoris_families`]
/// refuses to enumerate candidates.
pub const FAMILY_CANDIDATE_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("the meet-relation is not one-to-one")]
    NotOneToOne,
    #[error("not a lower-Vietoris-type family: {0}")]
    NotAVietorisFamily(String),
    #[error("family member {0:?} is empty")]
    EmptyMember(Mask),
    #[error("family member {0:?} is not a subbasic closed set")]
    NotClosed(Mask),
    #[error("R[Y] for member {member} is not M_F-increasing: {u:?}⁻ ⊆ {v:?}⁻")]
    NotMIncreasing { member: usize, u: Mask, v: Mask },
    #[error("{count} candidate members exceeds the cap of {cap}")]
    TooManyCandidates { count: usize, cap: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Duality(#[from] DualityError),
}

/// A family of nonempty subbasic closed sets of `space`, kept in canonical
/// order without repeats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VietorisFamily {
    space: SSpace,
    members: Vec<Mask>,
}

impl VietorisFamily {
    pub fn new(space: SSpace, mut members: Vec<Mask>) -> Result<VietorisFamily, CongruenceError> {
        canonicalize(&mut members);
        if let Some(&m) = members.iter().find(|m| m.is_empty()) {
            return Err(CongruenceError::EmptyMember(m));
        }
        if let Some(&m) = members.iter().find(|&&m| !space.is_closed_subbasic(m)) {
            return Err(CongruenceError::NotClosed(m));
        }
        if members.len() > 64 {
            return Err(SpaceError::TooLarge { n: members.len() }.into());
        }
        Ok(VietorisFamily { space, members })
    }

    pub fn space(&self) -> &SSpace {
        &self.space
    }

    pub fn members(&self) -> &[Mask] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, y: Mask) -> Option<usize> {
        self.members.binary_search(&y).ok()
    }

    /// `U⁻_F = {Y ∈ F : Y ∩ U ≠ ∅}`, over member indices.
    pub fn hit(&self, u: Mask) -> Mask {
        (0..self.members.len()).filter(|&i| self.members[i].meets(u)).collect()
    }

    /// `M_F = {U⁻_F : U ∈ K}`.
    pub fn m_f(&self) -> Vec<Mask> {
        let mut out: Vec<Mask> = self.space.subbase().iter().map(|&u| self.hit(u)).collect();
        canonicalize(&mut out);
        out
    }

    /// `⟨F, M_F⟩`.
    pub fn family_space(&self) -> SSpace {
        SSpace::from_raw_subbase(self.len(), self.m_f()).expect("hit sets are subsets of the family")
    }

    /// `H_a = (β(a)ᶜ)⁻_F`; `dual` must be the dual this family lives on.
    pub fn h_a(&self, dual: &DualSpace, a: usize) -> Mask {
        self.hit(dual.beta(a).complement(self.space.len()))
    }

    /// Members as point sets, named through `dual`.
    pub fn describe(&self, dual: &DualSpace) -> Vec<Vec<String>> {
        self.members
            .iter()
            .map(|m| m.iter().map(|p| dual.point_label(p)).collect())
            .collect()
    }
}

/// For each `x ∈ X₁` and `U ∈ S(X₁)` with `x ∉ U` there is `V ∈ S(X₂)` with
/// `U ⊆ □(V)` and `x ∉ □(V)`.
pub fn is_one_to_one(t: &MeetRelation) -> bool {
    let boxes: Vec<Mask> = t.target().s_sets().iter().map(|&v| t.box_unchecked(v)).collect();
    let s1 = t.source().s_sets();
    (0..t.source().len()).all(|x| {
        s1.iter()
            .filter(|u| !u.contains(x))
            .all(|&u| boxes.iter().any(|&b| u.is_subset(b) && !b.contains(x)))
    })
}

pub fn box_is_onto(t: &MeetRelation) -> bool {
    let boxes: BTreeSet<Mask> = t.target().s_sets().iter().map(|&v| t.box_unchecked(v)).collect();
    t.source().s_sets().iter().all(|u| boxes.contains(u))
}

/// `F_T = {T(x) : x ∈ X₁}`.
pub fn family_of_relation(t: &MeetRelation) -> Result<VietorisFamily, CongruenceError> {
    if !is_one_to_one(t) {
        return Err(CongruenceError::NotOneToOne);
    }
    VietorisFamily::new(t.target().clone(), t.images().to_vec())
}

/// The S-space axioms on `⟨F, M_F⟩`, plus the description of its subbasic
/// closed sets as `{Y ∈ F : Y ⊆ C}` for `C ∈ C_K(X)`.
pub fn check_vietoris_family(f: &VietorisFamily, cfg: &CheckConfig) -> Report {
    let mut r = Report::new();
    r.expect_none("members nonempty", f.members.iter().find(|m| m.is_empty()));
    r.expect_none(
        "members in C_K",
        f.members.iter().find(|&&m| !f.space.is_closed_subbasic(m)),
    );
    let fs = f.family_space();
    r.absorb("family", fs.check(cfg));
    let mut via: Vec<Mask> = f
        .space
        .closed_subbasic()
        .iter()
        .map(|&c| (0..f.len()).filter(|&i| f.members[i].is_subset(c)).collect())
        .collect();
    canonicalize(&mut via);
    r.check("closed sets via C_K", via == fs.closed_subbasic(), || {
        format!("{via:?} vs {:?}", fs.closed_subbasic())
    });
    r
}

pub fn is_vietoris_family(f: &VietorisFamily, cfg: &CheckConfig) -> bool {
    check_vietoris_family(f, cfg).passed()
}

/// `(Y, P) ∈ R_F ⇔ P ∈ Y`, from `⟨F, M_F⟩` to `X`.
pub fn relation_of_family(f: &VietorisFamily, cfg: &CheckConfig) -> Result<MeetRelation, CongruenceError> {
    if let Some(c) = check_vietoris_family(f, cfg).first_failure() {
        return Err(CongruenceError::NotAVietorisFamily(c.name.clone()));
    }
    Ok(MeetRelation::new(f.family_space(), f.space.clone(), f.members.clone())?)
}

/// `a θ_F b ⇔ H_a = H_b`.
pub fn theta_of_family(dual: &DualSpace, f: &VietorisFamily) -> Result<Congruence, CongruenceError> {
    let s = dual.algebra();
    let hs: Vec<Mask> = s.elements().map(|a| f.h_a(dual, a)).collect();
    let ids: Vec<usize> = hs.iter().map(|h| hs.iter().position(|g| g == h).expect("present")).collect();
    Ok(Congruence::new(s, &ids)?)
}

/// `R_{q_θ} ⊆ X(A/θ) × X(A)` and its family.
pub fn family_of_theta(
    dual: &DualSpace,
    theta: &Congruence,
) -> Result<(VietorisFamily, MeetRelation, Homomorphism), CongruenceError> {
    let (q, hom) = quotient(dual.algebra(), theta)?;
    let dq = dual_space(&q);
    let rq = MeetRelation::r_h(&hom, dual, &dq);
    Ok((family_of_relation(&rq)?, rq, hom))
}

fn by_class_ids(mut v: Vec<Congruence>) -> Vec<Congruence> {
    v.sort_by(|a, b| a.class_ids().cmp(b.class_ids()));
    v.dedup();
    v
}

/// Every set partition as a restricted growth string.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for c in 0..=max + 1 {
            cur.push(c);
            go(cur, max.max(c), n, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return vec![Vec::new()];
    }
    go(&mut vec![0], 0, n, &mut out);
    out
}

/// Partition brute force is used up to this size, generation beyond it.
pub const PARTITION_BRUTE_FORCE_MAX: usize = 10;

/// `Con(A)`, sorted by class ids.
pub fn all_congruences(s: &Semilattice) -> Vec<Congruence> {
    if s.len() > PARTITION_BRUTE_FORCE_MAX {
        return all_congruences_generated(s, |pairs| Congruence::generated(s, pairs));
    }
    by_class_ids(partitions(s.len()).iter().filter_map(|ids| Congruence::new(s, ids).ok()).collect())
}

/// `Con(⟨A, m⟩)`.
pub fn all_monotone_congruences(ms: &MonotoneSemilattice) -> Vec<Congruence> {
    let s = ms.base();
    if s.len() > PARTITION_BRUTE_FORCE_MAX {
        return all_congruences_generated(s, |pairs| Congruence::generated_monotone(ms, pairs));
    }
    by_class_ids(
        partitions(s.len())
            .iter()
            .filter_map(|ids| Congruence::new(s, ids).ok())
            .filter(|t| t.check_operator(ms).is_ok())
            .collect(),
    )
}

/// Closing the identity under "add one pair and regenerate".
pub fn all_congruences_generated<G>(s: &Semilattice, generate: G) -> Vec<Congruence>
where
    G: Fn(&[(usize, usize)]) -> Congruence,
{
    let mut seen = BTreeSet::new();
    let start = generate(&[]);
    let mut stack = vec![start.clone()];
    seen.insert(start);
    while let Some(t) = stack.pop() {
        let base: Vec<(usize, usize)> = t.pairs().collect();
        for a in s.elements() {
            for b in a + 1..s.len() {
                if t.related(a, b) {
                    continue;
                }
                let mut pairs = base.clone();
                pairs.push((a, b));
                let next = generate(&pairs);
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
    }
    by_class_ids(seen.into_iter().collect())
}

/// Every subfamily of the nonempty members of `C_K(X)` that passes
/// [`check_vietoris_family`], the empty family included.
pub fn vietoris_families(x: &SSpace, cfg: &CheckConfig) -> Result<Vec<VietorisFamily>, CongruenceError> {
    let cands: Vec<Mask> = x.closed_subbasic().iter().copied().filter(|m| !m.is_empty()).collect();
    if cands.len() > FAMILY_CANDIDATE_CAP {
        return Err(CongruenceError::TooManyCandidates { count: cands.len(), cap: FAMILY_CANDIDATE_CAP });
    }
    let mut out = Vec::new();
    for sel in 0u64..1 << cands.len() {
        let members = Mask::from_bits(sel).iter().map(|i| cands[i]).collect();
        let f = VietorisFamily::new(x.clone(), members)?;
        if is_vietoris_family(&f, cfg) {
            out.push(f);
        }
    }
    Ok(out)
}

/// `F₁ ≤ F₂ ⇔ ∀U, V ∈ K [U⁻_{F₂} = V⁻_{F₂} ⇒ U⁻_{F₁} = V⁻_{F₁}]`.
pub fn vietoris_leq(f1: &VietorisFamily, f2: &VietorisFamily) -> bool {
    let k = f1.space.subbase();
    k.iter().all(|&u| {
        k.iter()
            .all(|&v| f2.hit(u) != f2.hit(v) || f1.hit(u) == f1.hit(v))
    })
}

/// `θ_F` on `⟨S(X), ∩⟩`: `U ~ V ⇔ (Uᶜ)⁻ = (Vᶜ)⁻`. Indices follow
/// [`dual_semilattice`].
pub fn theta_on_s(f: &VietorisFamily, s_elements: &[Mask]) -> Vec<usize> {
    let n = f.space.len();
    let hs: Vec<Mask> = s_elements.iter().map(|u| f.hit(u.complement(n))).collect();
    hs.iter().map(|h| hs.iter().position(|g| g == h).expect("present")).collect()
}

/// `⟨V(X), ≤⟩` with the transport to `Con(S(X))`.
#[derive(Debug, Clone)]
pub struct VietorisLattice {
    pub families: Vec<VietorisFamily>,
    /// `leq[i]` has bit `j` iff `families[i] ≤ families[j]`.
    pub leq: Vec<Mask>,
    pub congruences: Vec<Congruence>,
    /// `theta[i]` indexes `congruences`.
    pub theta: Vec<Option<usize>>,
}

impl VietorisLattice {
    pub fn len(&self) -> usize {
        self.families.len()
    }

    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }

    fn least_upper(&self, i: usize, j: usize) -> Option<usize> {
        let ub: Vec<usize> = (0..self.len()).filter(|&k| self.leq[i].contains(k) && self.leq[j].contains(k)).collect();
        ub.iter().copied().find(|&k| ub.iter().all(|&u| self.leq[k].contains(u)))
    }

    fn greatest_lower(&self, i: usize, j: usize) -> Option<usize> {
        let lb: Vec<usize> = (0..self.len()).filter(|&k| self.leq[k].contains(i) && self.leq[k].contains(j)).collect();
        lb.iter().copied().find(|&k| lb.iter().all(|&l| self.leq[l].contains(k)))
    }

    /// Order axioms, lattice-ness, joins by transport, and the dual
    /// isomorphism onto the congruences.
    pub fn verify(&self) -> Report {
        let mut r = Report::new();
        let n = self.len();
        let pairs = || (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)));
        r.expect_none("reflexive", (0..n).find(|&i| !self.leq[i].contains(i)));
        r.expect_none(
            "antisymmetric",
            pairs().find(|&(i, j)| i != j && self.leq[i].contains(j) && self.leq[j].contains(i)),
        );
        r.expect_none(
            "transitive",
            pairs().find(|&(i, j)| {
                self.leq[i].contains(j) && !self.leq[j].is_subset(self.leq[i])
            }),
        );
        r.expect_none(
            "lattice",
            pairs().find(|&(i, j)| self.least_upper(i, j).is_none() || self.greatest_lower(i, j).is_none()),
        );
        let mut hit: Vec<Option<usize>> = self.theta.clone();
        hit.sort();
        hit.dedup();
        r.check(
            "θ_F bijective onto Con(S(X))",
            self.theta.iter().all(|t| t.is_some()) && hit.len() == n && n == self.congruences.len(),
            || format!("{} families, {} congruences, theta {:?}", n, self.congruences.len(), self.theta),
        );
        if !r.passed() {
            return r;
        }
        let th = |i: usize| &self.congruences[self.theta[i].expect("checked")];
        r.expect_none(
            "θ_F order-reversing",
            pairs().find(|&(i, j)| self.leq[i].contains(j) != th(j).is_finer(th(i))),
        );
        r.expect_none(
            "joins by transport",
            pairs().find(|&(i, j)| {
                let meet = th(i).intersection(th(j));
                let k = (0..n).find(|&k| *th(k) == meet);
                k != self.least_upper(i, j)
            }),
        );
        r
    }
}

fn lattice_from(
    families: Vec<VietorisFamily>,
    s_elements: &[Mask],
    congruences: Vec<Congruence>,
) -> VietorisLattice {
    let leq = families
        .iter()
        .map(|f1| (0..families.len()).filter(|&j| vietoris_leq(f1, &families[j])).collect())
        .collect();
    let theta = families
        .iter()
        .map(|f| {
            let c = Congruence::partition(&theta_on_s(f, s_elements));
            congruences.iter().position(|t| *t == c)
        })
        .collect();
    VietorisLattice { families, leq, congruences, theta }
}

pub fn vietoris_lattice(x: &SSpace, cfg: &CheckConfig) -> Result<VietorisLattice, CongruenceError> {
    let (s, elements) = dual_semilattice(x)?;
    let families = vietoris_families(x, cfg)?;
    Ok(lattice_from(families, &elements, all_congruences(&s)))
}

/// `V_m(X)`: the families that also pass [`monotone_family_check`], against
/// `Con(⟨S(X), m_R⟩)`.
pub fn vietoris_lattice_monotone(mss: &MSSpace, cfg: &CheckConfig) -> Result<VietorisLattice, CongruenceError> {
    let (alg, elements) = dual_algebra(mss)?;
    let families = vietoris_families(mss.space(), cfg)?
        .into_iter()
        .filter(|f| monotone_family_check(mss, f, cfg).passed())
        .collect();
    Ok(lattice_from(families, &elements, all_monotone_congruences(&alg)))
}

/// `R[Y] = ⋃{R(x) : x ∈ Y}`, over `Z(X)` indices.
fn r_of_set(mss: &MSSpace, y: Mask) -> Mask {
    union_all(y.iter().map(|x| mss.relation().image(x)))
}

/// The first `(member, U, V)` with `U ∈ R[Y] ∩ K`, `V ∈ K ∖ R[Y]` and
/// `U⁻ ⊆ V⁻`.
pub fn m_increasing_violation(mss: &MSSpace, f: &VietorisFamily) -> Option<(usize, Mask, Mask)> {
    let zs = mss.zs();
    let k = mss.space().subbase();
    f.members.iter().enumerate().find_map(|(i, &y)| {
        let h = r_of_set(mss, y);
        let in_h: Vec<Mask> = k.iter().copied().filter(|&u| mss.z_index(u).is_some_and(|z| h.contains(z))).collect();
        k.iter().find_map(|&v| {
            if in_h.contains(&v) {
                return None;
            }
            in_h.iter().find(|&&u| f.hit(u).is_subset(f.hit(v))).map(|&u| (i, u, v))
        })
    })
    .filter(|_| !zs.is_empty())
}

pub fn monotone_family_check(mss: &MSSpace, f: &VietorisFamily, cfg: &CheckConfig) -> Report {
    let mut r = check_vietoris_family(f, cfg);
    let v = m_increasing_violation(mss, f);
    r.check("R[Y] M_F-increasing", v.is_none(), || {
        let (member, u, v) = v.expect("failure has a witness");
        CongruenceError::NotMIncreasing { member, u, v }.to_string()
    });
    r
}

/// `(Y, Z) ∈ R ⇔ Z ∈ ⋂{L_{H_aᶜ} : β(a)ᶜ ∉ R_m[Y]}` on `⟨F, M_F⟩`.
pub fn induced_multirelation(md: &MonotoneDual, f: &VietorisFamily) -> Result<MSSpace, CongruenceError> {
    let fs = f.family_space();
    let all = Mask::full(f.len());
    let n = md.ms.space().len();
    let s = md.algebra.base();
    let fzs = fs.saturated_subbasic().to_vec();
    let all_z = Mask::full(fzs.len());
    let image = f
        .members
        .iter()
        .map(|&y| {
            let h = r_of_set(&md.ms, y);
            s.elements()
                .filter(|&a| {
                    let z = md.dual.beta(a).complement(n);
                    !md.ms.z_index(z).is_some_and(|k| h.contains(k))
                })
                .fold(all_z, |acc, a| {
                    let ha_c = all.minus(f.h_a(&md.dual, a));
                    acc.intersect((0..fzs.len()).filter(|&k| fzs[k].meets(ha_c)).collect())
                })
        })
        .collect();
    Ok(MSSpace::new_unchecked(fs, MultiRelation::new(image))?)
}

/// The induced multirelation is an mS-structure with
/// `m_R(H_aᶜ)ᶜ = H_{ma}`, and `R_F` is a one-to-one monotone meet-relation.
pub fn induced_multirelation_report(md: &MonotoneDual, f: &VietorisFamily, cfg: &CheckConfig) -> Report {
    let mut r = Report::new();
    let ind = match induced_multirelation(md, f) {
        Ok(m) => m,
        Err(e) => {
            r.check("induced R", false, || e.to_string());
            return r;
        }
    };
    r.absorb("induced", ind.check(cfg));
    let all = Mask::full(f.len());
    let s = md.algebra.base();
    r.expect_none(
        "m_R(H_aᶜ)ᶜ = H_{ma}",
        s.elements().find(|&a| {
            let hc = all.minus(f.h_a(&md.dual, a));
            all.minus(ind.m_r_unchecked(hc)) != f.h_a(&md.dual, md.algebra.op(a))
        }),
    );
    match MeetRelation::new(ind.space().clone(), f.space.clone(), f.members.clone()) {
        Ok(rf) => {
            r.check("R_F one-to-one", is_one_to_one(&rf), String::new);
            r.check("R_F monotone", rf.is_monotone_meet_relation(&ind, &md.ms), String::new);
        }
        Err(e) => {
            r.check("R_F", false, || e.to_string());
        }
    }
    r
}

/// For an onto monotone `h : ⟨A, m⟩ → ⟨B, n⟩` and `F = F_{R_h}`, the
/// multirelation `T` transported from `R_n` along `Q ↦ R_h(Q)` satisfies
/// `β(a)ᶜ ∈ R_m[R_h(P)] ⇔ H_a ∈ T(R_h(P))` and agrees with the induced one.
pub fn induced_homeomorphism_report(
    ma: &MonotoneSemilattice,
    mb: &MonotoneSemilattice,
    h: &Homomorphism,
    cfg: &CheckConfig,
) -> Report {
    let mut r = Report::new();
    let da = build_r_m(ma);
    let db = build_r_m(mb);
    let rh = MeetRelation::r_h(h, &da.dual, &db.dual);
    let f = match family_of_relation(&rh) {
        Ok(f) => f,
        Err(e) => {
            r.check("F_{R_h}", false, || e.to_string());
            return r;
        }
    };
    r.absorb("F_{R_h}", monotone_family_check(&da.ms, &f, cfg));
    // λ : X(B) → F
    let lambda: Vec<Option<usize>> = (0..db.dual.points().len()).map(|q| f.index_of(rh.image(q))).collect();
    r.check("λ bijective", lambda.iter().all(|l| l.is_some()) && f.len() == lambda.len(), || {
        format!("{lambda:?}")
    });
    if !r.passed() {
        return r;
    }
    let lam: Vec<usize> = lambda.into_iter().map(|l| l.expect("checked")).collect();
    let fs = f.family_space();
    let fzs = fs.saturated_subbasic().to_vec();
    let mut t = vec![Mask::EMPTY; f.len()];
    for (q, &y) in lam.iter().enumerate() {
        t[y] = (0..fzs.len())
            .filter(|&k| {
                let pre: Mask = (0..lam.len()).filter(|&q2| fzs[k].contains(lam[q2])).collect();
                db.ms.z_index(pre).is_some_and(|z| db.ms.relation().image(q).contains(z))
            })
            .collect();
    }
    let s = ma.base();
    let n = da.ms.space().len();
    r.expect_none(
        "β(a)ᶜ ∈ R_m[R_h(P)] ⇔ H_a ∈ T(R_h(P))",
        (0..lam.len()).flat_map(|q| s.elements().map(move |a| (q, a))).find(|&(q, a)| {
            let h_set = r_of_set(&da.ms, rh.image(q));
            let lhs = da.ms.z_index(da.dual.beta(a).complement(n)).is_some_and(|k| h_set.contains(k));
            let ha = f.h_a(&da.dual, a);
            let rhs = fs.saturated_subbasic().binary_search(&ha).is_ok_and(|k| t[lam[q]].contains(k));
            lhs != rhs
        }),
    );
    match induced_multirelation(&da, &f) {
        Ok(ind) => {
            r.check("T = induced R", ind.relation().images() == t.as_slice(), || {
                format!("{t:?} vs {:?}", ind.relation().images())
            });
        }
        Err(e) => {
            r.check("T = induced R", false, || e.to_string());
        }
    }
    r
}

/// `σ(θ)`: the `θ`-closed filters.
pub fn sigma_of(s: &Semilattice, theta: &Congruence) -> Vec<Mask> {
    all_filters(s)
        .into_iter()
        .filter(|&f| theta.pairs().all(|(x, y)| f.contains(x) == f.contains(y)))
        .collect()
}

/// `ρ(U) = {(x, y) : ∀F ∈ U, x ∈ F ⇔ y ∈ F}`.
pub fn rho_of(s: &Semilattice, family: &[Mask]) -> Congruence {
    let sig: Vec<Vec<bool>> = s.elements().map(|x| family.iter().map(|f| f.contains(x)).collect()).collect();
    let ids: Vec<usize> = sig.iter().map(|v| sig.iter().position(|w| w == v).expect("present")).collect();
    Congruence::partition(&ids)
}

/// `S_p(Fi(A))`: subfamilies containing `A` and closed under `∩`.
pub fn algebraic_subsets(s: &Semilattice) -> Vec<Vec<Mask>> {
    let fi = all_filters(s);
    let carrier = s.carrier();
    let rest: Vec<Mask> = fi.iter().copied().filter(|&f| f != carrier).collect();
    let mut out = Vec::new();
    for sel in 0u64..1 << rest.len() {
        let mut fam: Vec<Mask> = Mask::from_bits(sel).iter().map(|i| rest[i]).collect();
        fam.push(carrier);
        if fam.iter().all(|&a| fam.iter().all(|&b| fam.contains(&a.intersect(b)))) {
            canonicalize(&mut fam);
            out.push(fam);
        }
    }
    out
}

pub fn fajtlowicz_schmidt(s: &Semilattice) -> Report {
    let mut r = Report::new();
    let cons = all_congruences(s);
    let sp = algebraic_subsets(s);
    r.check("|Con| = |S_p(Fi)|", cons.len() == sp.len(), || format!("{} vs {}", cons.len(), sp.len()));
    let sigmas: Vec<Vec<Mask>> = cons.iter().map(|t| sigma_of(s, t)).collect();
    r.expect_none("σ(θ) ∈ S_p", sigmas.iter().find(|sg| !sp.contains(sg)));
    r.expect_none(
        "ρσ = id",
        cons.iter().zip(&sigmas).find(|(t, sg)| rho_of(s, sg) != **t).map(|(t, _)| t),
    );
    r.expect_none("σρ = id", sp.iter().find(|u| sigma_of(s, &rho_of(s, u)) != **u));
    r.expect_none(
        "σ order-reversing",
        (0..cons.len())
            .flat_map(|i| (0..cons.len()).map(move |j| (i, j)))
            .find(|&(i, j)| cons[i].is_finer(&cons[j]) != sigmas[j].iter().all(|f| sigmas[i].contains(f))),
    );
    r.expect_none(
        "S_p closed under directed joins",
        sp.iter().find(|u| {
            u.iter().any(|&f| {
                u.iter().any(|&g| f.is_subset(g) && !u.contains(&generated_filter(s, f.union(g))))
            })
        }),
    );
    r.check(
        "σ(identity) = Fi",
        sigma_of(s, &Congruence::identity(s.len())) == all_filters(s),
        String::new,
    );
    r.expect_none(
        "Ψ ⊆ σ(θ), F = ⋂ Ψ above F",
        cons.iter().zip(&sigmas).find(|(t, sg)| {
            let Ok((q, hom)) = quotient(s, t) else { return true };
            let dq = dual_space(&q);
            let psi: Vec<Mask> = dq.points().iter().map(|&p| hom.preimage(p)).collect();
            psi.iter().any(|p| !sg.contains(p))
                || sg.iter().filter(|&&f| f != s.carrier()).any(|&f| {
                    let above = psi.iter().copied().filter(|p| f.is_subset(*p));
                    crate::bits::intersect_all(above, s.carrier()) != f
                })
        })
        .map(|(t, _)| t),
    );
    r
}

/// The congruence correspondence for one algebra: three counts and both
/// round trips per congruence.
pub fn congruence_triangle(s: &Semilattice, cfg: &CheckConfig) -> Report {
    let mut r = Report::new();
    let dual = dual_space(s);
    let cons = all_congruences(s);
    let generated = all_congruences_generated(s, |p| Congruence::generated(s, p));
    r.check("partition = generated", cons == generated, || format!("{} vs {}", cons.len(), generated.len()));
    let mut fams = Vec::new();
    let mut invalid = None;
    let mut theta_back = None;
    let mut family_back = None;
    for t in &cons {
        match family_of_theta(&dual, t) {
            Ok((f, _, _)) => {
                if invalid.is_none() && !is_vietoris_family(&f, cfg) {
                    invalid = Some(t.clone());
                }
                match theta_of_family(&dual, &f) {
                    Ok(b) if b == *t => {
                        let again = family_of_theta(&dual, &b).map(|x| x.0);
                        if family_back.is_none() && again.as_ref() != Ok(&f) {
                            family_back = Some(t.clone());
                        }
                    }
                    _ => theta_back = theta_back.or_else(|| Some(t.clone())),
                }
                fams.push(f.members().to_vec());
            }
            Err(_) => invalid = invalid.or_else(|| Some(t.clone())),
        }
    }
    r.expect_none("F(θ) lower-Vietoris-type", invalid.map(|t| t.class_ids().to_vec()));
    r.expect_none("θ_{F(θ)} = θ", theta_back.map(|t| t.class_ids().to_vec()));
    r.expect_none("F(θ_F) = F", family_back.map(|t| t.class_ids().to_vec()));
    fams.sort();
    fams.dedup();
    r.check("|Con| = |families|", fams.len() == cons.len(), || format!("{} vs {}", cons.len(), fams.len()));
    let sp = algebraic_subsets(s).len();
    r.check("|Con| = |S_p(Fi)|", sp == cons.len(), || format!("{} vs {sp}", cons.len()));
    match vietoris_families(dual.space(), cfg) {
        Ok(all) => {
            let mut found: Vec<Vec<Mask>> = all.iter().map(|f| f.members().to_vec()).collect();
            found.sort();
            r.check("families = families of congruences", found == fams, || {
                format!("{} candidates pass, {} from congruences", found.len(), fams.len())
            });
        }
        Err(e) => {
            r.check("families = families of congruences", false, || e.to_string());
            r.note("candidate enumeration skipped");
        }
    }
    r
}

/// Monotone counterpart: partition, generation and monotone families agree.
pub fn monotone_congruence_triangle(ms: &MonotoneSemilattice, cfg: &CheckConfig) -> Report {
    let mut r = Report::new();
    let s = ms.base();
    let md = build_r_m(ms);
    let cons = all_monotone_congruences(ms);
    let generated = all_congruences_generated(s, |p| Congruence::generated_monotone(ms, p));
    r.check("partition = generated", cons == generated, || format!("{} vs {}", cons.len(), generated.len()));
    let mut fams = Vec::new();
    let mut bad = None;
    for t in &cons {
        match family_of_theta(&md.dual, t) {
            Ok((f, _, _)) => {
                if bad.is_none() && !monotone_family_check(&md.ms, &f, cfg).passed() {
                    bad = Some(t.class_ids().to_vec());
                }
                fams.push(f.members().to_vec());
            }
            Err(_) => bad = bad.or_else(|| Some(t.class_ids().to_vec())),
        }
    }
    r.expect_none("F(θ) monotone lower-Vietoris-type", bad);
    match vietoris_families(md.ms.space(), cfg) {
        Ok(all) => {
            let mut found: Vec<Vec<Mask>> = all
                .iter()
                .filter(|f| m_increasing_violation(&md.ms, f).is_none())
                .map(|f| f.members().to_vec())
                .collect();
            found.sort();
            fams.sort();
            r.check("monotone families = families of m-congruences", found == fams, || {
                format!("{} vs {}", found.len(), fams.len())
            });
        }
        Err(e) => {
            r.check("monotone families = families of m-congruences", false, || e.to_string());
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{chain, lattice_l, L_ELEMENTS};

    fn m(xs: &[usize]) -> Mask {
        Mask::from_indices(xs.iter().copied())
    }

    // point indices of X(L): P4 = 0, P1 = 1, P2 = 2, P3 = 3
    const P1: usize = 1;
    const P2: usize = 2;
    const P3: usize = 3;
    const P4: usize = 0;

    #[test]
    fn family_of_identity_on_l() {
        let l = lattice_l();
        let d = dual_space(&l);
        let rid = MeetRelation::r_h(&Homomorphism::identity(&l), &d, &d);
        assert!(is_one_to_one(&rid));
        let f = family_of_relation(&rid).unwrap();
        assert_eq!(f.members(), &[m(&[P1]), m(&[P2]), m(&[P3]), m(&[P3, P4])]);
        let [zero, a, _, _, d_, e, one] = L_ELEMENTS;
        let ids = |h: Mask| -> Vec<Mask> { h.iter().map(|i| f.members()[i]).collect() };
        assert_eq!(ids(f.h_a(&d, a)), vec![m(&[P2]), m(&[P3]), m(&[P3, P4])]);
        assert_eq!(ids(f.h_a(&d, d_)), vec![m(&[P1]), m(&[P2])]);
        assert_eq!(ids(f.h_a(&d, e)), vec![m(&[P3, P4])]);
        assert!(f.h_a(&d, one).is_empty());
        assert_eq!(f.h_a(&d, zero), Mask::full(4));
        let both = f.h_a(&d, a).intersect(f.h_a(&d, d_));
        assert_eq!(ids(both), vec![m(&[P2])]);
        assert!(!f.m_f().contains(&both));
        assert!(check_vietoris_family(&f, &CheckConfig::default()).passed());
    }

    #[test]
    fn families_reject_empty_members() {
        let d = dual_space(&chain(3));
        assert_eq!(
            VietorisFamily::new(d.space().clone(), vec![Mask::EMPTY]),
            Err(CongruenceError::EmptyMember(Mask::EMPTY))
        );
        let single = VietorisFamily::new(d.space().clone(), vec![d.space().universe()]).unwrap();
        assert!(is_vietoris_family(&single, &CheckConfig::default()));
        let rf = relation_of_family(&single, &CheckConfig::default()).unwrap();
        assert_eq!(rf.images(), &[d.space().universe()]);
    }

    #[test]
    fn theta_round_trips_on_l() {
        let l = lattice_l();
        let d = dual_space(&l);
        let (f, _, _) = family_of_theta(&d, &Congruence::identity(7)).unwrap();
        assert_eq!(f.len(), 4);
        let (f, _, _) = family_of_theta(&d, &Congruence::total(7)).unwrap();
        assert!(f.is_empty());
        assert_eq!(theta_of_family(&d, &f), Ok(Congruence::total(7)));
        assert!(congruence_triangle(&l, &CheckConfig::default()).passed());
    }

    #[test]
    fn chain_counts() {
        let c2 = chain(2);
        assert_eq!(all_congruences(&c2).len(), 2);
        assert_eq!(algebraic_subsets(&c2).len(), 2);
        assert!(fajtlowicz_schmidt(&c2).passed());
        assert!(fajtlowicz_schmidt(&lattice_l()).passed());
    }

    #[test]
    fn embedding_is_not_one_to_one() {
        let c2 = chain(2);
        let c3 = chain(3);
        let h = Homomorphism::new(c2.clone(), c3.clone(), vec![1, 2]).unwrap();
        let rh = MeetRelation::r_h(&h, &dual_space(&c2), &dual_space(&c3));
        assert!(!is_one_to_one(&rh));
        assert!(!box_is_onto(&rh));
    }
}
