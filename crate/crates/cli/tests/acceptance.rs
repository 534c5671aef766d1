//! Acceptance criteria AC1–AC7, one line each.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use msdual::canonical::{build_extension, gouveia_priestley, FI2_CAP};
use msdual::congruence::{
    algebraic_subsets, all_congruences, family_of_relation, family_of_theta, monotone_congruence_triangle,
    theta_of_family, vietoris_families, vietoris_lattice, vietoris_lattice_monotone,
};
use msdual::enumerate::{all_homomorphisms, all_monotone_ops, all_order_maps, enumerate_semilattices};
use msdual::fixtures::lattice_l;
use msdual::maps::MapExtension;
use msdual::monotone::{build_r_m, duality_roundtrip_algebra};
use msdual::verify::duality_suite;
use msdual::{
    dual_space, CheckConfig, Homomorphism, Mask, MeetRelation, MonotoneSemilattice, OrderMap, Report, Semilattice,
};
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn report_ok(what: &str, r: &Report) -> Result<(), String> {
    match r.first_failure() {
        None => Ok(()),
        Some(c) => Err(format!("{what}: {} ({})", c.name, c.witness.as_deref().unwrap_or(""))),
    }
}

fn within(t: Instant, budget: Duration) -> Result<(), String> {
    ensure(t.elapsed() < budget, || format!("took {:.2?}, budget {budget:?}", t.elapsed()))
}

fn monotone_algebras(n: usize) -> Vec<MonotoneSemilattice> {
    enumerate_semilattices(n)
        .into_iter()
        .flat_map(|s| {
            all_monotone_ops(&s).into_iter().map(move |op| MonotoneSemilattice::new(s.clone(), op).expect("monotone"))
        })
        .collect()
}

fn ac1() -> Outcome {
    let t = Instant::now();
    let l = lattice_l();
    let idx = |x: &str| l.index_of(x).expect("label");
    let set = |xs: &[&str]| -> Mask { xs.iter().map(|x| idx(x)).collect() };
    let d = dual_space(&l);
    let want = [
        ("P1", set(&["a", "e", "1"])),
        ("P2", set(&["b", "e", "1"])),
        ("P3", set(&["c", "e", "d", "1"])),
        ("P4", set(&["d", "1"])),
    ];
    ensure(d.points().len() == 4, || format!("{} points", d.points().len()))?;
    let p = |name: &str| -> usize {
        let f = want.iter().find(|w| w.0 == name).expect("named").1;
        d.point_index(f).expect("listed filter is a point")
    };
    for (name, f) in want {
        ensure(d.point_index(f).is_some(), || format!("{name} missing"))?;
    }
    let pts = |xs: &[&str]| -> Mask { xs.iter().map(|x| p(x)).collect() };
    let rid = MeetRelation::r_h(&Homomorphism::identity(&l), &d, &d);
    let f = family_of_relation(&rid).map_err(|e| e.to_string())?;
    let mut expect_f = vec![pts(&["P1"]), pts(&["P2"]), pts(&["P3"]), pts(&["P3", "P4"])];
    expect_f.sort();
    ensure(f.members() == expect_f.as_slice(), || format!("F = {:?}", f.members()))?;
    let fam = |ms: &[Mask]| -> Mask { ms.iter().map(|&m| f.index_of(m).expect("member")).collect() };
    let h = [
        ("0", fam(&expect_f)),
        ("a", fam(&[pts(&["P2"]), pts(&["P3"]), pts(&["P3", "P4"])])),
        ("b", fam(&[pts(&["P1"]), pts(&["P3"]), pts(&["P3", "P4"])])),
        ("c", fam(&[pts(&["P1"]), pts(&["P2"]), pts(&["P3", "P4"])])),
        ("d", fam(&[pts(&["P1"]), pts(&["P2"])])),
        ("e", fam(&[pts(&["P3", "P4"])])),
        ("1", Mask::EMPTY),
    ];
    for (a, want) in h {
        ensure(f.h_a(&d, idx(a)) == want, || format!("H_{a} = {:?}", f.h_a(&d, idx(a))))?;
    }
    let both = f.h_a(&d, idx("a")).intersect(f.h_a(&d, idx("d")));
    ensure(both == fam(&[pts(&["P2"])]), || format!("H_a ∩ H_d = {both:?}"))?;
    ensure(!f.m_f().contains(&both), || "H_a ∩ H_d ∈ M".into())?;
    within(t, Duration::from_secs(1))?;
    Ok(format!("X(L), F_R_id, H_0..H_1 exact in {:.2?}", t.elapsed()))
}

fn ac2() -> Outcome {
    let t = Instant::now();
    let all = enumerate_semilattices(5);
    let cfg = CheckConfig::default();
    all.par_iter().try_for_each(|s| report_ok(&format!("n={}", s.len()), &duality_suite(s, &cfg)))?;
    within(t, Duration::from_secs(60))?;
    Ok(format!("{} semilattices, n ≤ 5, in {:.2?}", all.len(), t.elapsed()))
}

fn ac3() -> Outcome {
    let t = Instant::now();
    let all = enumerate_semilattices(5);
    all.par_iter().try_for_each(|s| {
        let ce = build_extension(s);
        report_ok("dense", &ce.verify_dense())?;
        report_ok("compact", &ce.verify_compact())?;
        report_ok("closed/open", &ce.verify_closed_open())?;
        if s.len() <= 4 {
            let gp = gouveia_priestley(&ce, FI2_CAP).map_err(|e| e.to_string())?;
            report_ok("GP", &gp.report)?;
        }
        Ok::<(), String>(())
    })?;
    Ok(format!("{} semilattices, GP for n ≤ 4, in {:.2?}", all.len(), t.elapsed()))
}

fn ac4() -> Outcome {
    let t = Instant::now();
    let all = enumerate_semilattices(4);
    let pairs: Vec<(&Semilattice, &Semilattice)> = all.iter().flat_map(|a| all.iter().map(move |b| (a, b))).collect();
    let count: usize = pairs
        .par_iter()
        .map(|&(a, b)| {
            let maps = all_order_maps(a, b);
            for m in &maps {
                let f = OrderMap::new(a.clone(), b.clone(), m.clone()).map_err(|e| e.to_string())?;
                let ext = MapExtension::new(f);
                report_ok(&format!("{m:?}"), &ext.check_laws())?;
                let (da, db) = (ext.source_ext().dual(), ext.target_ext().dual());
                for x in a.elements() {
                    let want = Ok(db.beta(m[x]));
                    ensure(ext.sigma(da.beta(x)) == want && ext.pi(da.beta(x)) == want, || {
                        format!("{m:?} at {x}")
                    })?;
                }
            }
            Ok(maps.len())
        })
        .collect::<Result<Vec<_>, String>>()?
        .into_iter()
        .sum();
    within(t, Duration::from_secs(300))?;
    Ok(format!("{count} order-preserving maps, |A|,|B| ≤ 4, in {:.2?}", t.elapsed()))
}

fn ac5() -> Outcome {
    let t = Instant::now();
    let cfg = CheckConfig::default();
    let algebras = monotone_algebras(4);
    algebras.par_iter().try_for_each(|ms| {
        let md = build_r_m(ms);
        report_ok("mS", &md.ms.check(&cfg))?;
        for a in ms.base().elements() {
            ensure(md.ms.m_r(md.dual.beta(a)) == Ok(md.dual.beta(ms.op(a))), || format!("m_R β ≠ β m at {a}"))?;
        }
        report_ok("round trip", &duality_roundtrip_algebra(ms, &cfg))
    })?;
    // arrows: every homomorphism between semilattices with n ≤ 4
    let base = enumerate_semilattices(4);
    let duals: Vec<_> = base.iter().map(dual_space).collect();
    let mut arrows = 0usize;
    let mut triples = 0usize;
    for i in 0..base.len() {
        for j in 0..base.len() {
            for h in all_homomorphisms(&base[i], &base[j]) {
                let rh = MeetRelation::r_h(&h, &duals[i], &duals[j]);
                arrows += 1;
                let star = |a: &MeetRelation, b: &MeetRelation| a.star(b).map_err(|e| e.to_string());
                ensure(star(&rh, &MeetRelation::identity(duals[i].space()))? == rh, || "R ∗ ⊒ ≠ R".into())?;
                ensure(star(&MeetRelation::identity(duals[j].space()), &rh)? == rh, || "⊒ ∗ R ≠ R".into())?;
                for k in 0..base.len() {
                    for g in all_homomorphisms(&base[j], &base[k]) {
                        let rg = MeetRelation::r_h(&g, &duals[j], &duals[k]);
                        let gh = h.then(&g).map_err(|e| e.to_string())?;
                        let rgh = MeetRelation::r_h(&gh, &duals[i], &duals[k]);
                        ensure(star(&rg, &rh)? == rgh, || "R_gh ≠ R_g ∗ R_h".into())?;
                        // sampled triples: every third composable pair gets a third arrow
                        if (arrows + k).is_multiple_of(3) {
                            for l in 0..base.len() {
                                if let Some(f) = all_homomorphisms(&base[k], &base[l]).into_iter().next() {
                                    let rf = MeetRelation::r_h(&f, &duals[k], &duals[l]);
                                    let left = star(&star(&rf, &rg)?, &rh)?;
                                    let right = star(&rf, &star(&rg, &rh)?)?;
                                    ensure(left == right, || "∗ not associative".into())?;
                                    triples += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(format!(
        "{} monotone algebras, {arrows} arrows, {triples} triples, in {:.2?}",
        algebras.len(),
        t.elapsed()
    ))
}

fn ac6() -> Outcome {
    let t = Instant::now();
    let cfg = CheckConfig::default();
    let plain = enumerate_semilattices(5);
    plain.par_iter().try_for_each(|s| {
        let d = dual_space(s);
        let cons = all_congruences(s);
        let fams = vietoris_families(d.space(), &cfg).map_err(|e| e.to_string())?;
        let sp = algebraic_subsets(s).len();
        ensure(cons.len() == fams.len() && fams.len() == sp, || {
            format!("|Con| {} families {} S_p {sp}", cons.len(), fams.len())
        })?;
        for th in &cons {
            let (f, _, _) = family_of_theta(&d, th).map_err(|e| e.to_string())?;
            ensure(theta_of_family(&d, &f).as_ref() == Ok(th), || "θ → F → θ".into())?;
            ensure(fams.contains(&f), || "F(θ) not listed".into())?;
        }
        for f in &fams {
            let th = theta_of_family(&d, f).map_err(|e| e.to_string())?;
            let back = family_of_theta(&d, &th).map_err(|e| e.to_string())?.0;
            ensure(&back == f, || "F → θ → F".into())?;
        }
        let v = vietoris_lattice(d.space(), &cfg).map_err(|e| e.to_string())?;
        report_ok("V(X)", &v.verify())
    })?;
    let mono = monotone_algebras(4);
    mono.par_iter().try_for_each(|ms| {
        report_ok("monotone triangle", &monotone_congruence_triangle(ms, &cfg))?;
        let md = build_r_m(ms);
        let v = vietoris_lattice_monotone(&md.ms, &cfg).map_err(|e| e.to_string())?;
        report_ok("V_m(X)", &v.verify())
    })?;
    Ok(format!("{} plain (n ≤ 5), {} monotone (n ≤ 4), in {:.2?}", plain.len(), mono.len(), t.elapsed()))
}

fn ac7() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut fixtures: Vec<PathBuf> = std::fs::read_dir(&dir)
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    fixtures.sort();
    for seed in ["0", "42"] {
        for f in &fixtures {
            let run = || {
                Command::new(env!("CARGO_BIN_EXE_msdual"))
                    .args(["verify-all", &f.display().to_string(), "--seed", seed, "--all"])
                    .output()
                    .map_err(|e| e.to_string())
            };
            let (a, b) = (run()?, run()?);
            ensure(a.stdout == b.stdout && a.status == b.status, || format!("{} differs", f.display()))?;
            ensure(!a.stdout.is_empty(), || format!("{} printed nothing", f.display()))?;
        }
    }
    Ok(format!("{} fixtures × 2 seeds byte-identical", fixtures.len()))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("AC1", "worked example L", ac1),
        ("AC2", "duality round trips", ac2),
        ("AC3", "canonical extension", ac3),
        ("AC4", "extension laws", ac4),
        ("AC5", "monotone duality", ac5),
        ("AC6", "congruence triangle", ac6),
        ("AC7", "determinism", ac7),
    ];
    let mut failed = 0;
    for (id, name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] {id} {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {id} {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 7 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
