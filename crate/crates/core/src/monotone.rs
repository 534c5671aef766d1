//! mS-spaces, the multirelation `R_m` of a monotone semilattice,
//! meet-relations with their `□` operator and `∗`-composition, and the
//! round trips of the duality.

use thiserror::Error;

use crate::algebra::{AlgebraError, Homomorphism, MonotoneSemilattice, Semilattice};
use crate::bits::{intersect_all, union_all, Mask};
use crate::maps::{MapExtension, OrderMap};
use crate::report::Report;
use crate::space::{dual_semilattice, dual_space, h_x, CheckConfig, DualSpace, SSpace, SpaceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    #[error("{0:?} is not in S(X)")]
    NotInSX(Mask),
    #[error("relations are not composable")]
    NotComposable,
    #[error("relation has {got} rows, space has {expected} points")]
    Shape { expected: usize, got: usize },
    #[error("not an mS-space: {0}")]
    NotAnMSSpace(String),
    #[error("not a bijection onto the target points")]
    NotABijection,
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `R ⊆ X × Z(X)`. `image[x]` indexes into `Z(X)` as returned by
/// [`SSpace::saturated_subbasic`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiRelation {
    image: Vec<Mask>,
}

impl MultiRelation {
    pub fn new(image: Vec<Mask>) -> MultiRelation {
        MultiRelation { image }
    }

    pub fn image(&self, x: usize) -> Mask {
        self.image[x]
    }

    pub fn images(&self) -> &[Mask] {
        &self.image
    }

    /// `(x, z)` pairs, `z` an index into `Z(X)`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.image
            .iter()
            .enumerate()
            .flat_map(|(x, m)| m.iter().map(move |z| (x, z)))
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.image.iter().all(|m| m.is_empty())
    }
}

/// `⟨X, K, R⟩`.
#[derive(Debug, Clone)]
pub struct MSSpace {
    space: SSpace,
    rel: MultiRelation,
}

impl MSSpace {
    /// Checked: the space axioms and both mS conditions must hold.
    pub fn new(space: SSpace, rel: MultiRelation, cfg: &CheckConfig) -> Result<MSSpace, DualityError> {
        let m = MSSpace::new_unchecked(space, rel)?;
        let report = m.check(cfg);
        match report.first_failure() {
            Some(f) => Err(DualityError::NotAnMSSpace(f.name.clone())),
            None => Ok(m),
        }
    }

    pub fn new_unchecked(space: SSpace, rel: MultiRelation) -> Result<MSSpace, DualityError> {
        if rel.image.len() != space.len() {
            return Err(DualityError::Shape { expected: space.len(), got: rel.image.len() });
        }
        Ok(MSSpace { space, rel })
    }

    pub fn space(&self) -> &SSpace {
        &self.space
    }

    pub fn relation(&self) -> &MultiRelation {
        &self.rel
    }

    /// `Z(X)`, the codomain of `R`.
    pub fn zs(&self) -> &[Mask] {
        self.space.saturated_subbasic()
    }

    pub fn z_index(&self, z: Mask) -> Option<usize> {
        self.zs().binary_search(&z).ok()
    }

    /// `R(x)` as sets of points.
    pub fn r(&self, x: usize) -> Vec<Mask> {
        self.rel.image(x).iter().map(|k| self.zs()[k]).collect()
    }

    /// `L_U = {Z ∈ Z(X) : Z ∩ U ≠ ∅}`, over `Z(X)` indices.
    pub fn l_u(&self, u: Mask) -> Mask {
        (0..self.zs().len()).filter(|&k| self.zs()[k].meets(u)).collect()
    }

    /// `m_R(U) = {x : R(x) ⊆ L_U}`.
    pub fn m_r(&self, u: Mask) -> Result<Mask, DualityError> {
        if self.space.s_sets().binary_search(&u).is_err() {
            return Err(DualityError::NotInSX(u));
        }
        Ok(self.m_r_unchecked(u))
    }

    pub(crate) fn m_r_unchecked(&self, u: Mask) -> Mask {
        let l = self.l_u(u);
        (0..self.space.len()).filter(|&x| self.rel.image(x).is_subset(l)).collect()
    }

    pub fn check(&self, cfg: &CheckConfig) -> Report {
        let mut r = Report::new();
        r.absorb("space", self.space.check(cfg));
        let s = self.space.s_sets();
        r.expect_none(
            "mS/(1) m_R(U) ∈ S(X)",
            s.iter().find(|&&u| s.binary_search(&self.m_r_unchecked(u)).is_err()),
        );
        let all_z = Mask::full(self.zs().len());
        r.expect_none(
            "mS/(2) R(x) = ⋂ L_U",
            (0..self.space.len()).find(|&x| {
                let bound = intersect_all(
                    s.iter().filter(|&&u| self.m_r_unchecked(u).contains(x)).map(|&u| self.l_u(u)),
                    all_z,
                );
                bound != self.rel.image(x)
            }),
        );
        r
    }
}

/// `⟨X(A), K_A, R_m⟩` together with the dual space it lives on.
#[derive(Debug, Clone)]
pub struct MonotoneDual {
    pub algebra: MonotoneSemilattice,
    pub dual: DualSpace,
    pub ms: MSSpace,
}

/// `(P, Z) ∈ R_m ⇔ m⁻¹[P] ∩ I_A(Z) = ∅`.
pub fn build_r_m(ms: &MonotoneSemilattice) -> MonotoneDual {
    let dual = dual_space(ms.base());
    let space = dual.space().clone();
    let zs = space.saturated_subbasic().to_vec();
    let ideals: Vec<Mask> = zs.iter().map(|&z| dual.ideal_of_unchecked(z)).collect();
    let image = dual
        .points()
        .iter()
        .map(|&p| {
            let pre = Semilattice::preimage(ms.op_table(), p);
            (0..zs.len()).filter(|&k| !pre.meets(ideals[k])).collect()
        })
        .collect();
    let ms_space = MSSpace { space, rel: MultiRelation::new(image) };
    MonotoneDual { algebra: ms.clone(), dual, ms: ms_space }
}

/// `T ⊆ X₁ × X₂`, stored as the images `T(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeetRelation {
    source: SSpace,
    target: SSpace,
    image: Vec<Mask>,
}

impl MeetRelation {
    /// Any relation of the right shape; use [`MeetRelation::is_meet_relation`]
    /// to test the conditions.
    pub fn new(source: SSpace, target: SSpace, image: Vec<Mask>) -> Result<MeetRelation, DualityError> {
        if image.len() != source.len() {
            return Err(DualityError::Shape { expected: source.len(), got: image.len() });
        }
        if image.iter().any(|m| !m.is_subset(target.universe())) {
            return Err(DualityError::Shape { expected: target.len(), got: 64 });
        }
        Ok(MeetRelation { source, target, image })
    }

    /// The identity arrow `⊒`: `x ↦ {y : y ⊑ x}`.
    pub fn identity(space: &SSpace) -> MeetRelation {
        MeetRelation {
            source: space.clone(),
            target: space.clone(),
            image: space.specialization().to_vec(),
        }
    }

    /// `(P, Q) ∈ R_h ⇔ h⁻¹[P] ⊆ Q`, from `X(B)` to `X(A)` for `h : A → B`.
    pub fn r_h(h: &Homomorphism, da: &DualSpace, db: &DualSpace) -> MeetRelation {
        let image = db
            .points()
            .iter()
            .map(|&p| {
                let pre = h.preimage(p);
                (0..da.points().len()).filter(|&q| pre.is_subset(da.point(q))).collect()
            })
            .collect();
        MeetRelation { source: db.space().clone(), target: da.space().clone(), image }
    }

    /// The pair `R_f ⊆ X₁ × X₂`, `T_f ⊆ X₂ × X₁` induced by a bijection
    /// `f : X₁ → X₂`: `R_f(x) = ⊒(f x)` and `T_f(y) = ⊒(f⁻¹ y)`.
    pub fn from_bijection(
        f: &[usize],
        x1: &SSpace,
        x2: &SSpace,
    ) -> Result<(MeetRelation, MeetRelation), DualityError> {
        let img: Mask = f.iter().copied().collect();
        if f.len() != x1.len() || x1.len() != x2.len() || img != x2.universe() {
            return Err(DualityError::NotABijection);
        }
        let mut inv = vec![0; f.len()];
        for (x, &y) in f.iter().enumerate() {
            inv[y] = x;
        }
        let r = f.iter().map(|&y| x2.specialization()[y]).collect();
        let t = inv.iter().map(|&x| x1.specialization()[x]).collect();
        Ok((
            MeetRelation { source: x1.clone(), target: x2.clone(), image: r },
            MeetRelation { source: x2.clone(), target: x1.clone(), image: t },
        ))
    }

    pub fn source(&self) -> &SSpace {
        &self.source
    }

    pub fn target(&self) -> &SSpace {
        &self.target
    }

    pub fn image(&self, x: usize) -> Mask {
        self.image[x]
    }

    pub fn images(&self) -> &[Mask] {
        &self.image
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.image
            .iter()
            .enumerate()
            .flat_map(|(x, m)| m.iter().map(move |y| (x, y)))
            .collect()
    }

    /// `□_T(U) = {x : T(x) ⊆ U}` for `U ∈ S(X₂)`.
    pub fn box_op(&self, u: Mask) -> Result<Mask, DualityError> {
        if self.target.s_sets().binary_search(&u).is_err() {
            return Err(DualityError::NotInSX(u));
        }
        Ok(self.box_unchecked(u))
    }

    pub(crate) fn box_unchecked(&self, u: Mask) -> Mask {
        (0..self.image.len()).filter(|&x| self.image[x].is_subset(u)).collect()
    }

    /// `T⁻¹[Y] = {x : T(x) ∩ Y ≠ ∅}`.
    pub fn inverse_image(&self, y: Mask) -> Mask {
        (0..self.image.len()).filter(|&x| self.image[x].meets(y)).collect()
    }

    pub fn meet_relation_report(&self) -> Report {
        let mut r = Report::new();
        let s1 = self.source.s_sets();
        r.expect_none(
            "meet-relation/□ lands in S(X₁)",
            self.target
                .s_sets()
                .iter()
                .find(|&&u| s1.binary_search(&self.box_unchecked(u)).is_err()),
        );
        r.expect_none(
            "meet-relation/T(x) ∈ C_K(X₂)",
            (0..self.image.len()).find(|&x| self.target.subbasic_closure(self.image[x]) != self.image[x]),
        );
        r
    }

    pub fn is_meet_relation(&self) -> bool {
        self.meet_relation_report().passed()
    }

    fn spaces_match(&self, m1: &MSSpace, m2: &MSSpace) -> bool {
        m1.space == self.source && m2.space == self.target
    }

    /// `m_{R₁} ∘ □_T = □_T ∘ m_{R₂}` on `S(X₂)`.
    pub fn monotone_by_diagram(&self, m1: &MSSpace, m2: &MSSpace) -> Result<bool, DualityError> {
        if !self.spaces_match(m1, m2) {
            return Err(DualityError::NotComposable);
        }
        Ok(self.target.s_sets().iter().all(|&u| {
            m1.m_r_unchecked(self.box_unchecked(u)) == self.box_unchecked(m2.m_r_unchecked(u))
        }))
    }

    /// `Uᶜ ∈ R₂[T(x)] ⇔ T⁻¹[Uᶜ] ∈ R₁(x)` for all `x` and `U ∈ S(X₂)`.
    pub fn monotone_pointwise(&self, m1: &MSSpace, m2: &MSSpace) -> Result<bool, DualityError> {
        if !self.spaces_match(m1, m2) {
            return Err(DualityError::NotComposable);
        }
        let n2 = self.target.len();
        Ok((0..self.image.len()).all(|x| {
            let reach = union_all(self.image[x].iter().map(|y| m2.rel.image(y)));
            self.target.s_sets().iter().all(|&u| {
                let lhs = m2.z_index(u.complement(n2)).is_some_and(|k| reach.contains(k));
                let pre = self.inverse_image(u.complement(n2));
                let rhs = m1.z_index(pre).is_some_and(|k| m1.rel.image(x).contains(k));
                lhs == rhs
            })
        }))
    }

    /// Meet-relation whose two monotonicity checks both hold. A disagreement
    /// between them is reported as a failed check.
    pub fn monotone_report(&self, m1: &MSSpace, m2: &MSSpace) -> Result<Report, DualityError> {
        let mut r = self.meet_relation_report();
        let d = self.monotone_by_diagram(m1, m2)?;
        let p = self.monotone_pointwise(m1, m2)?;
        r.check("monotone/diagram", d, || "m_R₁∘□ ≠ □∘m_R₂".into());
        r.check("monotone/diagram ⇔ pointwise", d == p, || format!("diagram {d}, pointwise {p}"));
        Ok(r)
    }

    pub fn is_monotone_meet_relation(&self, m1: &MSSpace, m2: &MSSpace) -> bool {
        self.monotone_report(m1, m2).is_ok_and(|r| r.passed())
    }

    fn composite(&self, other: &MeetRelation, x: usize) -> Mask {
        union_all(self.image[x].iter().map(|y| other.image[y]))
    }

    /// `(T ∗ R)(x) = {z : ∀U ∈ S(X₃), (T∘R)(x) ⊆ U ⇒ z ∈ U}`.
    pub fn star(&self, other: &MeetRelation) -> Result<MeetRelation, DualityError> {
        if self.target != other.source {
            return Err(DualityError::NotComposable);
        }
        let x3 = &other.target;
        let image = (0..self.image.len())
            .map(|x| {
                let c = self.composite(other, x);
                (0..x3.len())
                    .filter(|&z| x3.s_sets().iter().all(|u| !c.is_subset(*u) || u.contains(z)))
                    .collect()
            })
            .collect();
        Ok(MeetRelation { source: self.source.clone(), target: x3.clone(), image })
    }

    /// `∗` computed as the least member of `C_K(X₃)` above `T∘R`.
    pub fn star_closure(&self, other: &MeetRelation) -> Result<MeetRelation, DualityError> {
        if self.target != other.source {
            return Err(DualityError::NotComposable);
        }
        let x3 = &other.target;
        let image = (0..self.image.len())
            .map(|x| {
                let c = self.composite(other, x);
                intersect_all(
                    x3.closed_subbasic().iter().copied().filter(|y| c.is_subset(*y)),
                    x3.universe(),
                )
            })
            .collect();
        Ok(MeetRelation { source: self.source.clone(), target: x3.clone(), image })
    }
}

/// Algebra side: `β : ⟨A, m⟩ ≅ ⟨S(X(A)), m_{R_m}⟩`, the mS conditions on the
/// dual, `m_{R_m} = m^π` on `β[A]`, then the space-side round trip of the
/// dual.
pub fn duality_roundtrip_algebra(ms: &MonotoneSemilattice, cfg: &CheckConfig) -> Report {
    let mut r = Report::new();
    let md = build_r_m(ms);
    let s = ms.base();
    let d = &md.dual;
    r.absorb("R_m", md.ms.check(cfg));
    let mut img: Vec<Mask> = s.elements().map(|a| d.beta(a)).collect();
    img.sort();
    img.dedup();
    r.check("β/onto S(X(A))", img == d.space().s_sets(), || format!("{img:?}"));
    r.check("β/injective", img.len() == s.len(), || format!("{} of {}", img.len(), s.len()));
    r.expect_none(
        "β/meets",
        s.elements()
            .flat_map(|a| s.elements().map(move |b| (a, b)))
            .find(|&(a, b)| d.beta(s.meet(a, b)) != d.beta(a).intersect(d.beta(b))),
    );
    r.check("β/top", d.beta(s.top()) == d.space().universe(), || format!("{:?}", d.beta(s.top())));
    r.expect_none(
        "β∘m = m_R∘β",
        s.elements().find(|&a| md.ms.m_r_unchecked(d.beta(a)) != d.beta(ms.op(a))),
    );
    let f = OrderMap::new(s.clone(), s.clone(), ms.op_table().to_vec()).expect("operators are monotone");
    let ext = MapExtension::new(f);
    r.expect_none(
        "m_R = m^π on β[A]",
        s.elements().find(|&a| ext.pi(d.beta(a)).ok() != Some(md.ms.m_r_unchecked(d.beta(a)))),
    );
    r.absorb("space", duality_roundtrip_space(&md.ms, cfg));
    r
}

/// The monotone semilattice `⟨S(X), m_R⟩` with elements in canonical order.
pub fn dual_algebra(mss: &MSSpace) -> Result<(MonotoneSemilattice, Vec<Mask>), DualityError> {
    let (s, elements) = dual_semilattice(&mss.space)?;
    let op = elements
        .iter()
        .map(|&u| {
            let v = mss.m_r_unchecked(u);
            elements.binary_search(&v).map_err(|_| DualityError::NotInSX(v))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((MonotoneSemilattice::new(s, op)?, elements))
}

/// Space side: `H_X : X ≅ X(S(X))` carries `R` onto `R_{m_R}`, and the
/// relations induced by `H_X` compose to the specialization identities.
pub fn duality_roundtrip_space(mss: &MSSpace, cfg: &CheckConfig) -> Report {
    let mut r = Report::new();
    r.absorb("mS", mss.check(cfg));
    if !r.passed() {
        return r;
    }
    let (alg, _) = match dual_algebra(mss) {
        Ok(x) => x,
        Err(e) => {
            r.check("dual algebra", false, || e.to_string());
            return r;
        }
    };
    let hx = match h_x(&mss.space, cfg) {
        Ok(h) => h,
        Err(e) => {
            r.check("H_X", false, || e.to_string());
            return r;
        }
    };
    r.absorb("H_X", hx.verify(&mss.space));
    let md2 = build_r_m(&alg);
    let zs = mss.zs();
    r.expect_none(
        "R transported by H_X",
        (0..mss.space.len()).flat_map(|x| (0..zs.len()).map(move |k| (x, k))).find(|&(x, k)| {
            let h_z = hx.image(zs[k]);
            let lhs = mss.rel.image(x).contains(k);
            let rhs = md2.ms.z_index(h_z).is_some_and(|k2| md2.ms.rel.image(hx.map[x]).contains(k2));
            lhs != rhs
        }),
    );
    match MeetRelation::from_bijection(&hx.map, &mss.space, md2.ms.space()) {
        Ok((rf, tf)) => {
            let id1 = MeetRelation::identity(&mss.space);
            let id2 = MeetRelation::identity(md2.ms.space());
            r.check("R_H ∗ T_H = ⊒", rf.star(&tf).is_ok_and(|c| c == id1), String::new);
            r.check("T_H ∗ R_H = ⊒", tf.star(&rf).is_ok_and(|c| c == id2), String::new);
            r.check("R_H monotone", rf.is_monotone_meet_relation(mss, &md2.ms), String::new);
        }
        Err(e) => {
            r.check("H_X bijection", false, || e.to_string());
        }
    }
    r
}
