//! The full property suite for one input, grouped by topic.

use crate::algebra::{Homomorphism, MonotoneSemilattice, Semilattice};
use crate::canonical::{build_extension, gouveia_priestley, ExtensionError, FI2_CAP};
use crate::congruence::{
    box_is_onto, congruence_triangle, fajtlowicz_schmidt, induced_homeomorphism_report, is_one_to_one,
    monotone_congruence_triangle, vietoris_lattice, vietoris_lattice_monotone,
};
use crate::enumerate::all_order_maps;
use crate::maps::{MapExtension, OrderMap};
use crate::monotone::{build_r_m, duality_roundtrip_algebra, MeetRelation};
use crate::order::{all_filters, all_order_ideals, irreducible_filters, is_irreducible, is_irreducible_char};
use crate::report::Report;
use crate::space::{dual_space, h_x, CheckConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Keep going after a failing suite.
    pub all: bool,
    pub cfg: CheckConfig,
    /// Upper bound on the number of endomaps fed to the extension laws.
    pub limit: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { all: false, cfg: CheckConfig::default(), limit: 4096 }
    }
}

/// Irreducibility by definition and by characterization agree, `β` is an
/// isomorphism onto `S(X(A))`, `H_X` round-trips, and `φ/ψ`, `α/I_A` are
/// mutually inverse and order-reversing.
pub fn duality_suite(s: &Semilattice, cfg: &CheckConfig) -> Report {
    let mut r = Report::new();
    let proper = all_filters(s).into_iter().filter(|&f| f != s.carrier());
    r.expect_none(
        "irreducible: definition = characterization",
        proper.clone().find(|&f| is_irreducible_char(s, f) != Ok(is_irreducible(s, f))),
    );
    let d = dual_space(s);
    r.check("X(A) = irreducible filters", d.points() == irreducible_filters(s).as_slice(), String::new);
    r.absorb("X(A)", d.space().check(cfg));
    let mut img: Vec<_> = s.elements().map(|a| d.beta(a)).collect();
    img.sort();
    img.dedup();
    r.check("β bijective onto S(X(A))", img.len() == s.len() && img == d.space().s_sets(), || {
        format!("{img:?}")
    });
    r.expect_none(
        "β preserves ∧",
        s.elements()
            .flat_map(|a| s.elements().map(move |b| (a, b)))
            .find(|&(a, b)| d.beta(s.meet(a, b)) != d.beta(a).intersect(d.beta(b))),
    );
    match h_x(d.space(), cfg) {
        Ok(hx) => r.absorb("H_X", hx.verify(d.space())),
        Err(e) => {
            r.check("H_X", false, || e.to_string());
        }
    }
    let filters = all_filters(s);
    let ck = d.space().closed_subbasic();
    r.expect_none(
        "ψ∘φ = id on Fi",
        filters.iter().find(|&&f| d.phi(f).and_then(|y| d.psi(y)) != Ok(f)),
    );
    r.expect_none(
        "φ∘ψ = id on C_K",
        ck.iter().find(|&&y| d.psi(y).and_then(|f| d.phi(f)) != Ok(y)),
    );
    r.check("|Fi| = |C_K|", filters.len() == ck.len(), || format!("{} vs {}", filters.len(), ck.len()));
    r.expect_none(
        "φ order-reversing",
        filters.iter().flat_map(|&f| filters.iter().map(move |&g| (f, g))).find(|&(f, g)| {
            f.is_subset(g) != d.phi(g).unwrap_or_default().is_subset(d.phi(f).unwrap_or_default())
        }),
    );
    let ideals = all_order_ideals(s);
    let zs = d.space().saturated_subbasic();
    r.expect_none(
        "α lands in Z",
        ideals.iter().find(|&&i| d.alpha(i).map_or(true, |z| zs.binary_search(&z).is_err())),
    );
    r.expect_none(
        "I_A∘α = id on Id",
        ideals.iter().find(|&&i| d.alpha(i).and_then(|z| d.ideal_of(z)) != Ok(i)),
    );
    r.expect_none(
        "α∘I_A = id on Z",
        zs.iter().find(|&&z| d.ideal_of(z).and_then(|i| d.alpha(i)) != Ok(z)),
    );
    r.check("|Id| = |Z|", ideals.len() == zs.len(), || format!("{} vs {}", ideals.len(), zs.len()));
    r.expect_none(
        "α order-reversing",
        ideals.iter().flat_map(|&i| ideals.iter().map(move |&j| (i, j))).find(|&(i, j)| {
            i.is_subset(j) != d.alpha(j).unwrap_or_default().is_subset(d.alpha(i).unwrap_or_default())
        }),
    );
    r
}

/// Closed/open elements, density, compactness and, when `|Fi(A)|` is within
/// the cap, the double-filter comparison.
pub fn canonical_suite(s: &Semilattice) -> Report {
    let mut r = Report::new();
    let ce = build_extension(s);
    r.absorb("closed/open", ce.verify_closed_open());
    r.absorb("dense", ce.verify_dense());
    r.absorb("compact", ce.verify_compact());
    r.check("E = C_K", ce.elements() == ce.dual().space().closed_subbasic(), String::new);
    match gouveia_priestley(&ce, FI2_CAP) {
        Ok(gp) => r.absorb("GP", gp.report),
        Err(ExtensionError::TooManyFilters { count, cap }) => {
            r.check("GP", true, String::new);
            r.note(format!("skipped: {count} filters above cap {cap}"));
        }
        Err(e) => {
            r.check("GP", false, || e.to_string());
        }
    }
    r
}

/// Extension laws for every order-preserving endomap, when there are at
/// most `limit` of them, and for the given maps.
pub fn maps_suite(s: &Semilattice, maps: &[(String, Homomorphism)], limit: usize) -> Report {
    let mut r = Report::new();
    let endo = all_order_maps(s, s);
    if endo.len() <= limit {
        let bad = endo.iter().find(|m| {
            let f = OrderMap::new(s.clone(), s.clone(), m.to_vec()).expect("enumerated maps are monotone");
            !MapExtension::new(f).check_laws().passed()
        });
        r.expect_none("extension laws, all endomaps", bad);
        r.note(format!("{} maps", endo.len()));
    } else {
        r.check("extension laws, all endomaps", true, String::new);
        r.note(format!("skipped: {} maps above limit {limit}", endo.len()));
    }
    for (name, h) in maps {
        r.absorb(&format!("map {name}"), MapExtension::new(OrderMap::from(h)).check_laws());
        let da = dual_space(h.source());
        let db = dual_space(h.target());
        let rh = MeetRelation::r_h(h, &da, &db);
        r.absorb(&format!("map {name}/R_h"), rh.meet_relation_report());
        r.expect_none(
            format!("map {name}/□ β_A = β_B h"),
            h.source().elements().find(|&a| rh.box_op(da.beta(a)) != Ok(db.beta(h.apply(a)))),
        );
        let (one, onto) = (is_one_to_one(&rh), box_is_onto(&rh));
        r.check(format!("map {name}/onto ⇔ one-to-one ⇔ □ onto"), h.is_onto() == one && one == onto, || {
            format!("onto {}, one-to-one {one}, □ onto {onto}", h.is_onto())
        });
    }
    r
}

pub fn monotone_suite(ms: &MonotoneSemilattice, maps: &[(String, Homomorphism)], cfg: &CheckConfig) -> Report {
    let mut r = Report::new();
    r.absorb("round trip", duality_roundtrip_algebra(ms, cfg));
    let md = build_r_m(ms);
    let id = MeetRelation::identity(md.ms.space());
    let rid = MeetRelation::r_h(&Homomorphism::identity(ms.base()), &md.dual, &md.dual);
    r.check("R_id ∗ ⊒ = R_id", rid.star(&id).is_ok_and(|t| t == rid), String::new);
    r.check("⊒ ∗ R_id = R_id", id.star(&rid).is_ok_and(|t| t == rid), String::new);
    r.check("⊒ monotone", id.is_monotone_meet_relation(&md.ms, &md.ms), String::new);
    for (name, h) in maps {
        if h.source() != ms.base() || h.target() != ms.base() {
            continue;
        }
        let rh = MeetRelation::r_h(h, &md.dual, &md.dual);
        let hm = h.check_monotone(ms, ms).is_ok();
        r.check(
            format!("map {name}/monotone ⇔ R_h monotone"),
            hm == rh.is_monotone_meet_relation(&md.ms, &md.ms),
            || format!("h monotone {hm}"),
        );
        if hm && h.is_onto() {
            r.absorb(&format!("map {name}/induced"), induced_homeomorphism_report(ms, ms, h, cfg));
        }
    }
    r
}

pub fn congruence_suite(s: &Semilattice, ms: Option<&MonotoneSemilattice>, cfg: &CheckConfig) -> Report {
    let mut r = Report::new();
    r.absorb("triangle", congruence_triangle(s, cfg));
    r.absorb("FS", fajtlowicz_schmidt(s));
    let d = dual_space(s);
    match vietoris_lattice(d.space(), cfg) {
        Ok(v) => r.absorb("V(X)", v.verify()),
        Err(e) => {
            r.check("V(X)", false, || e.to_string());
        }
    }
    if let Some(ms) = ms {
        r.absorb("monotone triangle", monotone_congruence_triangle(ms, cfg));
        let md = build_r_m(ms);
        match vietoris_lattice_monotone(&md.ms, cfg) {
            Ok(v) => r.absorb("V_m(X)", v.verify()),
            Err(e) => {
                r.check("V_m(X)", false, || e.to_string());
            }
        }
    }
    r
}

/// Every suite in a fixed order. Unless `opts.all`, stops after the first
/// suite containing a failure.
pub fn verify_all(
    s: &Semilattice,
    ms: Option<&MonotoneSemilattice>,
    maps: &[(String, Homomorphism)],
    opts: &VerifyOptions,
) -> Report {
    let mut out = Report::new();
    type Suite<'a> = (&'a str, Box<dyn Fn() -> Report + 'a>);
    let suites: [Suite; 5] = [
        ("duality", Box::new(|| duality_suite(s, &opts.cfg))),
        ("canonical", Box::new(|| canonical_suite(s))),
        ("maps", Box::new(|| maps_suite(s, maps, opts.limit))),
        (
            "monotone",
            Box::new(|| {
                let id = MonotoneSemilattice::identity(s.clone());
                monotone_suite(ms.unwrap_or(&id), maps, &opts.cfg)
            }),
        ),
        ("congruences", Box::new(|| congruence_suite(s, ms, &opts.cfg))),
    ];
    for (name, run) in suites.iter() {
        let rep = run();
        let failed = !rep.passed();
        out.absorb(name, rep);
        if failed && !opts.all {
            break;
        }
    }
    out
}
