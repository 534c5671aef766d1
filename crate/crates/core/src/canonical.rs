//! The canonical extension `E(X(A))` as a closure system on the dual points,
//! its closed and open elements, the density and compactness verifiers, and
//! the comparison with the double-filter construction.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::Semilattice;
use crate::bits::{all_subsets, canonicalize, intersect_all, intersection_closure, union_all, Mask};
use crate::order;
use crate::report::Report;
use crate::space::{dual_space, is_directed, is_dually_directed, DualSpace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("{0:?} is not an upset of the irreducible filters")]
    NotAnUpset(Mask),
    #[error("{0:?} is not an element of the canonical extension")]
    NotInExtension(Mask),
    #[error("{count} filters exceeds the cap of {cap}")]
    TooManyFilters { count: usize, cap: usize },
}

/// Above this carrier size [`CanonicalExtension::verify_compact`] quantifies
/// over filters and ideals instead of all subsets.
pub const COMPACT_EXHAUSTIVE_MAX: usize = 8;

/// Default cap on `|Fi(A)|` for [`gouveia_priestley`].
pub const FI2_CAP: usize = 32;

#[derive(Debug, Clone)]
pub struct CanonicalExtension {
    dual: DualSpace,
    z: Vec<Mask>,
    elements: Vec<Mask>,
}

/// `E(X(A)) = {⋂{Uᶜ : U ∈ B} : B ⊆ Z(X(A))}`.
pub fn build_extension(s: &Semilattice) -> CanonicalExtension {
    CanonicalExtension::from_dual(dual_space(s))
}

impl CanonicalExtension {
    pub fn from_dual(dual: DualSpace) -> CanonicalExtension {
        let z = dual.space().saturated_subbasic().to_vec();
        let n = dual.space().len();
        let comps: Vec<Mask> = z.iter().map(|u| u.complement(n)).collect();
        let elements = intersection_closure(&comps, dual.space().universe());
        CanonicalExtension { dual, z, elements }
    }

    /// Replace the element family, e.g. to feed the verifiers a damaged
    /// closure system.
    pub fn with_elements(mut self, mut elements: Vec<Mask>) -> CanonicalExtension {
        canonicalize(&mut elements);
        self.elements = elements;
        self
    }

    pub fn dual(&self) -> &DualSpace {
        &self.dual
    }

    pub fn algebra(&self) -> &Semilattice {
        self.dual.algebra()
    }

    /// Members of `E`, canonically sorted.
    pub fn elements(&self) -> &[Mask] {
        &self.elements
    }

    /// `Z(X(A))`.
    pub fn saturated(&self) -> &[Mask] {
        &self.z
    }

    pub fn contains(&self, v: Mask) -> bool {
        self.elements.binary_search(&v).is_ok()
    }

    pub fn require(&self, v: Mask) -> Result<Mask, ExtensionError> {
        if self.contains(v) {
            Ok(v)
        } else {
            Err(ExtensionError::NotInExtension(v))
        }
    }

    fn universe(&self) -> Mask {
        self.dual.space().universe()
    }

    /// Upset of `⟨X(A), ⊆⟩`.
    pub fn is_upset(&self, y: Mask) -> bool {
        let pts = self.dual.points();
        y.iter().all(|p| {
            (0..pts.len()).all(|q| !pts[p].is_subset(pts[q]) || y.contains(q))
        })
    }

    /// `Λ(Y) = ⋂{Uᶜ : U ∈ Z, Y ⊆ Uᶜ}`.
    pub fn lambda(&self, y: Mask) -> Result<Mask, ExtensionError> {
        if !self.is_upset(y) {
            return Err(ExtensionError::NotAnUpset(y));
        }
        Ok(self.lambda_unchecked(y))
    }

    pub(crate) fn lambda_unchecked(&self, y: Mask) -> Mask {
        let n = self.dual.space().len();
        intersect_all(
            self.z.iter().map(|u| u.complement(n)).filter(|c| y.is_subset(*c)),
            self.universe(),
        )
    }

    /// Least member of `E` containing `set`, or `X(A)` if none is smaller.
    pub fn close(&self, set: Mask) -> Mask {
        intersect_all(
            self.elements.iter().copied().filter(|e| set.is_subset(*e)),
            self.universe(),
        )
    }

    /// Join in `E`.
    pub fn join<I: IntoIterator<Item = Mask>>(&self, family: I) -> Mask {
        self.close(union_all(family))
    }

    /// Meet in `E`; `X(A)` for the empty family.
    pub fn meet<I: IntoIterator<Item = Mask>>(&self, family: I) -> Mask {
        intersect_all(family, self.universe())
    }

    pub fn bottom(&self) -> Mask {
        self.join(std::iter::empty())
    }

    /// `K(A^σ) = {⋀β[F] : F ∈ Fi(A)}`.
    pub fn closed_elements(&self) -> Vec<Mask> {
        let mut out: Vec<Mask> = order::all_filters(self.algebra())
            .into_iter()
            .map(|f| self.meet(f.iter().map(|a| self.dual.beta(a))))
            .collect();
        canonicalize(&mut out);
        out
    }

    /// `O(A^σ) = {⋁β[I] : I ∈ Id(A)}`.
    pub fn open_elements(&self) -> Vec<Mask> {
        let mut out: Vec<Mask> = order::all_order_ideals(self.algebra())
            .into_iter()
            .map(|i| self.join(i.iter().map(|a| self.dual.beta(a))))
            .collect();
        canonicalize(&mut out);
        out
    }

    /// `K(A^σ) = C_K(X(A))` and `O(A^σ) = {Zᶜ : Z ∈ Z(X(A))}`.
    pub fn verify_closed_open(&self) -> Report {
        let mut r = Report::new();
        let k = self.closed_elements();
        let ck = self.dual.space().closed_subbasic();
        r.check("closed = C_K", k == ck, || format!("{k:?} vs {ck:?}"));
        let o = self.open_elements();
        let n = self.dual.space().len();
        let mut zc: Vec<Mask> = self.z.iter().map(|u| u.complement(n)).collect();
        canonicalize(&mut zc);
        r.check("open = Z complements", o == zc, || format!("{o:?} vs {zc:?}"));
        r
    }

    /// Every element is the meet of the opens above it and the join of the
    /// closeds below it; closed and open elements lie in `E`.
    pub fn verify_dense(&self) -> Report {
        let mut r = Report::new();
        let k = self.closed_elements();
        let o = self.open_elements();
        r.expect_none("dense/closed in E", k.iter().find(|&&x| !self.contains(x)));
        r.expect_none("dense/open in E", o.iter().find(|&&x| !self.contains(x)));
        r.expect_none(
            "dense/meet of opens",
            self.elements.iter().find(|&&x| {
                self.meet(o.iter().copied().filter(|y| x.is_subset(*y))) != x
            }),
        );
        r.expect_none(
            "dense/join of closeds",
            self.elements.iter().find(|&&x| {
                self.join(k.iter().copied().filter(|y| y.is_subset(x))) != x
            }),
        );
        r
    }

    /// For nonempty dually directed `D` and nonempty directed `U` with
    /// `⋀β[D] ≤ ⋁β[U]`, some `x ∈ D` lies below some `y ∈ U`.
    pub fn verify_compact(&self) -> Report {
        let s = self.algebra();
        let mut r = Report::new();
        let (downs, ups, exhaustive): (Vec<Mask>, Vec<Mask>, bool) = if s.len() <= COMPACT_EXHAUSTIVE_MAX {
            let fam = |m: Mask| -> Vec<Mask> { m.iter().map(|a| s.down(a)).collect() };
            let dd = all_subsets(s.len()).filter(|&m| is_dually_directed(&fam(m))).collect();
            let dir = all_subsets(s.len()).filter(|&m| is_directed(&fam(m))).collect();
            (dd, dir, true)
        } else {
            (order::all_filters(s), order::all_order_ideals(s), false)
        };
        let lower: Vec<(Mask, Mask)> = downs
            .iter()
            .map(|&d| (d, self.meet(d.iter().map(|a| self.dual.beta(a)))))
            .collect();
        let upper: Vec<(Mask, Mask)> = ups
            .iter()
            .map(|&u| (u, self.join(u.iter().map(|a| self.dual.beta(a)))))
            .collect();
        let bad = lower.iter().find_map(|&(d, md)| {
            upper.iter().find_map(|&(u, ju)| {
                let below = md.is_subset(ju);
                let witnessed = d.iter().any(|x| u.iter().any(|y| s.leq(x, y)));
                (below && !witnessed).then_some((d, u))
            })
        });
        r.expect_none("compact", bad);
        if !exhaustive {
            r.note("reduced to filters and ideals");
        }
        r
    }

    /// Cover relation of `⟨E, ⊆⟩` as index pairs into [`Self::elements`].
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let e = &self.elements;
        let mut out = Vec::new();
        for (i, &x) in e.iter().enumerate() {
            for (j, &y) in e.iter().enumerate() {
                if x != y && x.is_subset(y) {
                    let between = e.iter().any(|&z| z != x && z != y && x.is_subset(z) && z.is_subset(y));
                    if !between {
                        out.push((i, j));
                    }
                }
            }
        }
        out
    }
}

/// The double-filter construction and the maps `i`, `j` into `E(X(A))`.
#[derive(Debug, Clone, Serialize)]
pub struct GpComparison {
    /// `Fi(A)`, canonically sorted; the points of the construction.
    pub filters: Vec<Mask>,
    /// Number of filters of `⟨Fi(A), ∩, A⟩`.
    pub fi2_size: usize,
    /// `C`, as subsets of `filters` indices.
    pub c: Vec<Mask>,
    /// `i(c[k])`, as a set of dual points.
    pub i_image: Vec<Mask>,
    pub report: Report,
}

/// Build `Fi²(A)`, `e`, `C`, `i`, `j` and check they match `E(X(A))`.
pub fn gouveia_priestley(ce: &CanonicalExtension, cap: usize) -> Result<GpComparison, ExtensionError> {
    let s = ce.algebra();
    let dual = ce.dual();
    let fs = order::all_filters(s);
    if fs.len() > cap || fs.len() > 64 {
        return Err(ExtensionError::TooManyFilters { count: fs.len(), cap });
    }
    let nf = fs.len();
    let all = Mask::full(nf);
    let idx = |f: Mask| fs.binary_search(&f).expect("filter");

    // Fi²(A): filters of ⟨Fi(A), ∩, A⟩
    let table: Vec<Vec<usize>> = fs.iter().map(|&f| fs.iter().map(|&g| idx(f.intersect(g))).collect()).collect();
    let fi = Semilattice::new(table, idx(s.carrier())).expect("Fi(A) is a semilattice under ∩");
    let fi2 = order::all_filters(&fi);

    let e = |a: usize| -> Mask { (0..nf).filter(|&k| fs[k].contains(a)).collect() };
    let up_e = |i: Mask| -> Mask { (0..nf).filter(|&k| fs[k].meets(i)).collect() };
    let down_e = |f: Mask| -> Mask { (0..nf).filter(|&k| f.is_subset(fs[k])).collect() };
    let ideals = order::all_order_ideals(s);
    let gens: Vec<Mask> = ideals.iter().map(|&i| up_e(i)).collect();
    let c = intersection_closure(&gens, all);

    let points = dual.points();
    let i_map = |x: Mask| -> Mask { (0..points.len()).filter(|&p| x.contains(idx(points[p]))).collect() };
    let n = dual.space().len();
    let j_map = |y: Mask| -> Mask {
        intersect_all(
            ideals.iter().filter(|&&i| y.is_subset(dual.alpha_unchecked(i).complement(n))).map(|&i| up_e(i)),
            all,
        )
    };

    let mut r = Report::new();
    r.expect_none("e(a) ∈ Fi²", s.elements().find(|&a| !fi2.contains(&e(a))));
    r.expect_none("i∘e = β", s.elements().find(|&a| i_map(e(a)) != dual.beta(a)));
    r.expect_none(
        "i(∪e(I)) = α(I)ᶜ",
        ideals.iter().find(|&&i| i_map(up_e(i)) != dual.alpha_unchecked(i).complement(n)),
    );
    r.expect_none(
        "i(∩e(F)) = φ(F)",
        fs.iter().find(|&&f| Ok(i_map(down_e(f))) != dual.phi(f)),
    );
    let i_image: Vec<Mask> = c.iter().map(|&x| i_map(x)).collect();
    r.expect_none("i lands in E", i_image.iter().find(|&&y| !ce.contains(y)));
    r.expect_none("j∘i = id", c.iter().find(|&&x| j_map(i_map(x)) != x));
    r.expect_none("i∘j = id", ce.elements().iter().find(|&&y| i_map(j_map(y)) != y));
    r.expect_none(
        "i order iso",
        c.iter().find_map(|&x| {
            c.iter()
                .find(|&&y| x.is_subset(y) != i_map(x).is_subset(i_map(y)))
                .map(|&y| (x, y))
        }),
    );
    Ok(GpComparison { filters: fs, fi2_size: fi2.len(), c, i_image, report: r })
}
