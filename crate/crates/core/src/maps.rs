//! σ- and π-extensions of order-preserving maps, each computed through every
//! available presentation, and the relations `R_f` and `G_f`.

use thiserror::Error;

use crate::algebra::{AlgebraError, Homomorphism, Semilattice};
use crate::bits::{intersect_all, union_all, Mask};
use crate::canonical::{build_extension, CanonicalExtension, ExtensionError};
use crate::report::Report;
use crate::space::is_directed;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("not order preserving: {a} ≤ {b} but f({a}) ≰ f({b})")]
    NotOrderPreserving { a: usize, b: usize },
    #[error("bad map: {0}")]
    Shape(AlgebraError),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
}

/// An order-preserving map between semilattices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderMap {
    source: Semilattice,
    target: Semilattice,
    map: Vec<usize>,
}

impl OrderMap {
    pub fn new(source: Semilattice, target: Semilattice, map: Vec<usize>) -> Result<OrderMap, MapError> {
        match source.check_order_map(&target, &map) {
            Ok(()) => Ok(OrderMap { source, target, map }),
            Err(AlgebraError::NotMonotone { a, b }) => Err(MapError::NotOrderPreserving { a, b }),
            Err(e) => Err(MapError::Shape(e)),
        }
    }

    pub fn identity(s: &Semilattice) -> OrderMap {
        OrderMap { source: s.clone(), target: s.clone(), map: s.elements().collect() }
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

    /// `f⁻¹[set]`.
    pub fn preimage(&self, set: Mask) -> Mask {
        Semilattice::preimage(&self.map, set)
    }
}

impl From<&Homomorphism> for OrderMap {
    fn from(h: &Homomorphism) -> OrderMap {
        OrderMap { source: h.source().clone(), target: h.target().clone(), map: h.map().to_vec() }
    }
}

/// `R_f ⊆ X(B) × Z(X(A))`; `image[P]` indexes into `saturated`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiRelation {
    pub saturated: Vec<Mask>,
    pub image: Vec<Mask>,
}

/// `G_f ⊆ X(B) × C_K(X(A))`; `image[P]` indexes into `closed`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaRelation {
    pub closed: Vec<Mask>,
    pub image: Vec<Mask>,
}

impl PiRelation {
    pub fn is_empty(&self) -> bool {
        self.image.iter().all(|m| m.is_empty())
    }
}

/// An order-preserving `f : A → B` together with both canonical extensions.
#[derive(Debug, Clone)]
pub struct MapExtension {
    f: OrderMap,
    ea: CanonicalExtension,
    eb: CanonicalExtension,
}

type Presentations = Vec<(&'static str, Mask)>;

impl MapExtension {
    pub fn new(f: OrderMap) -> MapExtension {
        let ea = build_extension(f.source());
        let eb = build_extension(f.target());
        MapExtension { f, ea, eb }
    }

    pub fn with_extensions(f: OrderMap, ea: CanonicalExtension, eb: CanonicalExtension) -> MapExtension {
        MapExtension { f, ea, eb }
    }

    pub fn map(&self) -> &OrderMap {
        &self.f
    }

    pub fn source_ext(&self) -> &CanonicalExtension {
        &self.ea
    }

    pub fn target_ext(&self) -> &CanonicalExtension {
        &self.eb
    }

    fn beta_a(&self, a: usize) -> Mask {
        self.ea.dual().beta(a)
    }

    fn beta_fb(&self, a: usize) -> Mask {
        self.eb.dual().beta(self.f.apply(a))
    }

    fn x_b(&self) -> Mask {
        self.eb.dual().space().universe()
    }

    fn src_elements(&self) -> impl Iterator<Item = usize> {
        self.f.source().elements()
    }

    /// `⋀_B{β_B(f p) : y ⊆ β_A(p)}`.
    fn sigma_closed(&self, y: Mask) -> Mask {
        intersect_all(
            self.src_elements().filter(|&p| y.is_subset(self.beta_a(p))).map(|p| self.beta_fb(p)),
            self.x_b(),
        )
    }

    /// `⋁_B{β_B(f p) : β_A(p) ⊆ y}`.
    fn pi_open(&self, y: Mask) -> Mask {
        self.eb.join(
            self.src_elements().filter(|&p| self.beta_a(p).is_subset(y)).map(|p| self.beta_fb(p)),
        )
    }

    /// `f^σ` from the lattice-theoretic formula over closed elements.
    pub fn sigma_lattice(&self, v: Mask) -> Result<Mask, MapError> {
        self.ea.require(v)?;
        let k = self.ea.closed_elements();
        Ok(self.eb.join(k.into_iter().filter(|x| x.is_subset(v)).map(|x| self.sigma_closed(x))))
    }

    /// `f^σ` from its values on `C_K(X(A))`.
    pub fn sigma_via_closed(&self, v: Mask) -> Result<Mask, MapError> {
        self.ea.require(v)?;
        let ck = self.ea.dual().space().closed_subbasic();
        let parts = ck.iter().filter(|y| y.is_subset(v)).map(|&y| self.sigma_closed(y));
        Ok(self.eb.lambda_unchecked(union_all(parts)))
    }

    /// `f^σ(V) = Λ(⋃{G_f⁻¹(Y) : Y ∈ C_K, Y ⊆ V})`.
    pub fn sigma_graph(&self, v: Mask) -> Result<Mask, MapError> {
        self.ea.require(v)?;
        let g = self.g_f();
        let mut acc = Mask::EMPTY;
        for (k, &y) in g.closed.iter().enumerate() {
            if y.is_subset(v) {
                let inv: Mask = (0..g.image.len()).filter(|&p| g.image[p].contains(k)).collect();
                acc = acc.union(inv);
            }
        }
        Ok(self.eb.lambda_unchecked(acc))
    }

    pub fn sigma(&self, v: Mask) -> Result<Mask, MapError> {
        self.sigma_via_closed(v)
    }

    pub fn sigma_all(&self, v: Mask) -> Result<Presentations, MapError> {
        Ok(vec![
            ("lattice", self.sigma_lattice(v)?),
            ("via closed", self.sigma_via_closed(v)?),
            ("graph", self.sigma_graph(v)?),
        ])
    }

    /// `f^π` from the lattice-theoretic formula over open elements.
    pub fn pi_lattice(&self, v: Mask) -> Result<Mask, MapError> {
        self.ea.require(v)?;
        let o = self.ea.open_elements();
        Ok(self.eb.meet(o.into_iter().filter(|y| v.is_subset(*y)).map(|y| self.pi_open(y))))
    }

    fn pi_from_opens<F: Fn(Mask) -> Mask>(&self, v: Mask, value_at: F) -> Result<Mask, MapError> {
        self.ea.require(v)?;
        let n = self.ea.dual().space().len();
        Ok(self.eb.meet(
            self.ea
                .saturated()
                .iter()
                .filter(|z| v.is_subset(z.complement(n)))
                .map(|&z| value_at(z)),
        ))
    }

    /// `f^π` from its values `⋁{β_B(f a) : β_A(a) ⊆ Zᶜ}` on opens.
    pub fn pi_via_open(&self, v: Mask) -> Result<Mask, MapError> {
        let n = self.ea.dual().space().len();
        self.pi_from_opens(v, |z| self.pi_open(z.complement(n)))
    }

    /// `f^π` from `f^π(Zᶜ) = {P : f⁻¹[P] ∩ I_A(Z) ≠ ∅}`.
    pub fn pi_ideal(&self, v: Mask) -> Result<Mask, MapError> {
        let pts = self.eb.dual().points();
        self.pi_from_opens(v, |z| {
            let ideal = self.ea.dual().ideal_of_unchecked(z);
            (0..pts.len()).filter(|&p| self.f.preimage(pts[p]).meets(ideal)).collect()
        })
    }

    /// `f^π(V) = {P : ∀Z ∈ R_f(P), Z ∩ V ≠ ∅}`.
    pub fn pi_relational(&self, v: Mask) -> Result<Mask, MapError> {
        self.ea.require(v)?;
        let r = self.r_f();
        Ok((0..r.image.len())
            .filter(|&p| r.image[p].iter().all(|k| r.saturated[k].meets(v)))
            .collect())
    }

    pub fn pi(&self, v: Mask) -> Result<Mask, MapError> {
        self.pi_relational(v)
    }

    pub fn pi_all(&self, v: Mask) -> Result<Presentations, MapError> {
        Ok(vec![
            ("lattice", self.pi_lattice(v)?),
            ("via open", self.pi_via_open(v)?),
            ("ideal", self.pi_ideal(v)?),
            ("relational", self.pi_relational(v)?),
        ])
    }

    /// `(P, Z) ∈ R_f ⇔ f⁻¹[P] ∩ I_A(Z) = ∅`.
    pub fn r_f(&self) -> PiRelation {
        let saturated = self.ea.saturated().to_vec();
        let ideals: Vec<Mask> = saturated.iter().map(|&z| self.ea.dual().ideal_of_unchecked(z)).collect();
        let image = self
            .eb
            .dual()
            .points()
            .iter()
            .map(|&p| {
                let pre = self.f.preimage(p);
                (0..saturated.len()).filter(|&k| !pre.meets(ideals[k])).collect()
            })
            .collect();
        PiRelation { saturated, image }
    }

    /// `(P, Y) ∈ G_f ⇔ ψ(Y) ⊆ f⁻¹[P]`.
    pub fn g_f(&self) -> SigmaRelation {
        let closed = self.ea.dual().space().closed_subbasic().to_vec();
        let psis: Vec<Mask> = closed.iter().map(|&y| self.ea.dual().psi_unchecked(y)).collect();
        let image = self
            .eb
            .dual()
            .points()
            .iter()
            .map(|&p| {
                let pre = self.f.preimage(p);
                (0..closed.len()).filter(|&k| psis[k].is_subset(pre)).collect()
            })
            .collect();
        SigmaRelation { closed, image }
    }

    /// Every law relating the presentations, checked over all of `E(X(A))`.
    pub fn check_laws(&self) -> Report {
        let mut r = Report::new();
        let e = self.ea.elements();
        let agree = |ps: Presentations| ps.iter().all(|&(_, m)| m == ps[0].1);
        r.expect_none(
            "sigma presentations agree",
            e.iter().find_map(|&v| self.sigma_all(v).ok().filter(|ps| !agree(ps.clone()))),
        );
        r.expect_none(
            "pi presentations agree",
            e.iter().find_map(|&v| self.pi_all(v).ok().filter(|ps| !agree(ps.clone()))),
        );
        let sig = |v| self.sigma(v).expect("member of E");
        let pi = |v| self.pi(v).expect("member of E");
        r.expect_none("sigma ≤ pi", e.iter().find(|&&v| !sig(v).is_subset(pi(v))));
        let k = self.ea.closed_elements();
        let o = self.ea.open_elements();
        r.expect_none(
            "sigma = pi on K ∪ O",
            k.iter().chain(&o).find(|&&v| sig(v) != pi(v)),
        );
        r.expect_none(
            "restricts to β∘f",
            self.src_elements().find(|&a| {
                let b = self.beta_a(a);
                sig(b) != self.beta_fb(a) || pi(b) != self.beta_fb(a)
            }),
        );
        let kb = self.eb.closed_elements();
        let ob = self.eb.open_elements();
        r.expect_none("sigma maps K to K", k.iter().find(|&&v| !kb.contains(&sig(v))));
        r.expect_none("pi maps O to O", o.iter().find(|&&v| !ob.contains(&pi(v))));
        r.expect_none(
            "β_B f[I_A(Z)] directed",
            self.ea.saturated().iter().find(|&&z| {
                let ideal = self.ea.dual().ideal_of_unchecked(z);
                let fam: Vec<Mask> = ideal.iter().map(|a| self.beta_fb(a)).collect();
                !is_directed(&fam)
            }),
        );
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{lattice_l, L_ELEMENTS};

    #[test]
    fn identity_extensions() {
        let l = lattice_l();
        let ext = MapExtension::new(OrderMap::identity(&l));
        for &v in ext.source_ext().elements() {
            assert_eq!(ext.sigma(v), Ok(v));
            assert_eq!(ext.pi(v), Ok(v));
        }
        assert!(ext.check_laws().passed());
    }

    #[test]
    fn identity_relations() {
        let l = lattice_l();
        let ext = MapExtension::new(OrderMap::identity(&l));
        let d = ext.source_ext().dual();
        let r = ext.r_f();
        for a in l.elements() {
            let z = d.beta(a).complement(d.space().len());
            let k = r.saturated.iter().position(|&s| s == z).unwrap();
            for (p, &pf) in d.points().iter().enumerate() {
                assert_eq!(r.image[p].contains(k), !pf.meets(l.down(a)));
            }
        }
        let g = ext.g_f();
        for (k, &y) in g.closed.iter().enumerate() {
            for (p, &pf) in d.points().iter().enumerate() {
                assert_eq!(g.image[p].contains(k), d.psi(y).unwrap().is_subset(pf));
            }
        }
    }

    #[test]
    fn constant_top_has_empty_r_f() {
        let l = lattice_l();
        let ext = MapExtension::new(OrderMap::new(l.clone(), l.clone(), vec![l.top(); 7]).unwrap());
        assert!(ext.r_f().is_empty());
    }

    #[test]
    fn rejects_non_members() {
        let l = lattice_l();
        let e = L_ELEMENTS[5];
        let ext = MapExtension::new(OrderMap::new(l.clone(), l.clone(), vec![e; 7]).unwrap());
        // {P4} is not in E(X(L))
        let p4 = Mask::singleton(0);
        assert_eq!(ext.sigma_lattice(p4), Err(MapError::Extension(ExtensionError::NotInExtension(p4))));
        let v = ext.source_ext().dual().beta(L_ELEMENTS[4]);
        let be = ext.target_ext().dual().beta(e);
        assert_eq!(ext.sigma(v), Ok(be));
        assert_eq!(ext.pi(v), Ok(be));
    }
}
