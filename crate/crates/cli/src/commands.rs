//! Command bodies. Each returns an [`Output`] plus any DOT diagrams; the
//! binary only does I/O.

use msdual::canonical::build_extension;
use msdual::congruence::{
    all_congruences, all_monotone_congruences, congruence_triangle, fajtlowicz_schmidt, family_of_theta,
    monotone_congruence_triangle, vietoris_lattice, vietoris_lattice_monotone, VietorisLattice,
};
use msdual::dot::{dual_dot, extension_dot, family_dot, semilattice_dot, specialization_dot};
use msdual::enumerate::semilattices_of_size;
use msdual::maps::MapExtension;
use msdual::monotone::build_r_m;
use msdual::verify::{canonical_suite, duality_suite, verify_all, VerifyOptions};
use msdual::{dual_space, CheckConfig, Congruence, DualSpace, Mask, OrderMap, Report, Semilattice};
use serde::Serialize;
use serde_json::{json, Value};

use crate::doc::{canonical, DocError, Document, Loaded};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    ParseError,
    Invalid,
    Counterexample,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::ParseError => 1,
            Status::Invalid => 2,
            Status::Counterexample => 3,
        }
    }
}

/// The report printed for every command.
#[derive(Debug, Clone, Serialize)]
pub struct Output {
    pub command: String,
    pub status: Status,
    pub payload: Value,
    pub checks: Report,
}

impl Output {
    fn from_checks(command: &str, payload: Value, checks: Report) -> Output {
        let status = if checks.passed() { Status::Ok } else { Status::Counterexample };
        Output { command: command.into(), status, payload, checks }
    }

    pub fn doc_error(command: &str, e: &DocError) -> Output {
        match e {
            DocError::Parse(p) => Output {
                command: command.into(),
                status: Status::ParseError,
                payload: json!({ "error": p.to_string() }),
                checks: Report::new(),
            },
            DocError::Invalid(v) => {
                let mut checks = Report::new();
                checks.check(v.what.clone(), false, || v.witness.clone());
                Output { command: command.into(), status: Status::Invalid, payload: json!({}), checks }
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    pub limit: usize,
    pub all: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: 0, limit: 4096, all: false }
    }
}

impl Options {
    fn cfg(&self) -> CheckConfig {
        CheckConfig { seed: self.seed, ..CheckConfig::default() }
    }

    fn verify(&self) -> VerifyOptions {
        VerifyOptions { all: self.all, cfg: self.cfg(), limit: self.limit }
    }
}

pub struct Run {
    pub output: Output,
    pub dot: Vec<String>,
}

fn labels_of(s: &Semilattice, m: Mask) -> Vec<String> {
    m.iter().map(|a| s.label(a).into_owned()).collect()
}

fn point_names(d: &DualSpace) -> Vec<String> {
    (0..d.points().len()).map(|p| format!("P{p}")).collect()
}

fn named(names: &[String], m: Mask) -> Vec<&str> {
    m.iter().map(|i| names[i].as_str()).collect()
}

fn named_all<'a>(names: &'a [String], ms: &[Mask]) -> Vec<Vec<&'a str>> {
    ms.iter().map(|&m| named(names, m)).collect()
}

pub fn validate(l: &Loaded) -> Run {
    let s = &l.semilattice;
    let mut checks = Report::new();
    checks.check("semilattice", true, String::new);
    if l.monotone.is_some() {
        checks.check("monotone", true, String::new);
    }
    for (name, _) in &l.maps {
        checks.check(format!("map {name}"), true, String::new);
    }
    let payload = json!({
        "size": s.len(),
        "top": s.label(s.top()),
        "bottom": s.bottom().map(|b| s.label(b).into_owned()),
        "covers": s.covers().iter().map(|&(a, b)| [s.label(a), s.label(b)]).collect::<Vec<_>>(),
        "meet": s.meet_table().iter().map(|r| r.iter().map(|&x| s.label(x)).collect::<Vec<_>>()).collect::<Vec<_>>(),
    });
    Run { output: Output::from_checks("validate", payload, checks), dot: vec![semilattice_dot(s)] }
}

pub fn dual(l: &Loaded, opts: &Options) -> Run {
    let s = &l.semilattice;
    let d = dual_space(s);
    let x = d.space();
    let names = point_names(&d);
    let points: Vec<Value> = d
        .points()
        .iter()
        .enumerate()
        .map(|(p, &f)| json!({ "name": names[p], "filter": labels_of(s, f) }))
        .collect();
    let beta: Vec<Value> =
        s.elements().map(|a| json!({ "element": s.label(a), "beta": named(&names, d.beta(a)) })).collect();
    let spec: Vec<[&str; 2]> = (0..x.len())
        .flat_map(|p| (0..x.len()).map(move |q| (p, q)))
        .filter(|&(p, q)| p != q && x.spec_leq(p, q))
        .map(|(p, q)| [names[p].as_str(), names[q].as_str()])
        .collect();
    let payload = json!({
        "points": points,
        "subbase": named_all(&names, x.subbase()),
        "s_sets": named_all(&names, x.s_sets()),
        "closed_subbasic": named_all(&names, x.closed_subbasic()),
        "saturated_subbasic": named_all(&names, x.saturated_subbasic()),
        "beta": beta,
        "specialization": spec,
    });
    let checks = duality_suite(s, &opts.cfg());
    Run {
        output: Output::from_checks("dual", payload, checks),
        dot: vec![dual_dot(&d), specialization_dot(x, &names)],
    }
}

pub fn canext(l: &Loaded) -> Run {
    let ce = build_extension(&l.semilattice);
    let names = point_names(ce.dual());
    let e = ce.elements();
    let pos = |m: &Mask| e.binary_search(m).expect("member of E");
    let payload = json!({
        "elements": named_all(&names, e),
        "covers": ce.covers(),
        "bottom": pos(&ce.bottom()),
        "closed": ce.closed_elements().iter().map(pos).collect::<Vec<_>>(),
        "open": ce.open_elements().iter().map(pos).collect::<Vec<_>>(),
    });
    let checks = canonical_suite(&l.semilattice);
    Run { output: Output::from_checks("canext", payload, checks), dot: vec![extension_dot(&ce)] }
}

/// Doc maps first, then the operator as `m`.
fn order_maps(l: &Loaded) -> Vec<(String, OrderMap)> {
    let mut out: Vec<(String, OrderMap)> = l.maps.iter().map(|(n, h)| (n.clone(), OrderMap::from(h))).collect();
    if let Some(ms) = &l.monotone {
        let s = ms.base().clone();
        out.push(("m".into(), OrderMap::new(s.clone(), s, ms.op_table().to_vec()).expect("operators are monotone")));
    }
    out
}

pub fn extend(l: &Loaded, only: Option<&str>) -> Result<Run, DocError> {
    let maps: Vec<(String, OrderMap)> =
        order_maps(l).into_iter().filter(|(n, _)| only.is_none_or(|o| o == n)).collect();
    if maps.is_empty() {
        let what = match only {
            Some(o) => format!("no map named {o:?}"),
            None => "no maps".into(),
        };
        return Err(crate::doc::ValidationError { what, witness: "give `maps` or `monotone`".into() }.into());
    }
    let mut checks = Report::new();
    let mut out = Vec::new();
    for (name, f) in maps {
        let ext = MapExtension::new(f);
        let names = point_names(ext.source_ext().dual());
        let tnames = point_names(ext.target_ext().dual());
        let rows: Vec<Value> = ext
            .source_ext()
            .elements()
            .iter()
            .map(|&v| {
                json!({
                    "v": named(&names, v),
                    "sigma": named(&tnames, ext.sigma(v).expect("member of E")),
                    "pi": named(&tnames, ext.pi(v).expect("member of E")),
                })
            })
            .collect();
        out.push(json!({ "name": name, "table": rows }));
        checks.absorb(&format!("map {name}"), ext.check_laws());
    }
    Ok(Run { output: Output::from_checks("extend", json!({ "maps": out }), checks), dot: Vec::new() })
}

fn congruence_json(l: &Loaded, d: &DualSpace, names: &[String], t: &Congruence) -> Value {
    let s = &l.semilattice;
    let family = family_of_theta(d, t).map(|(f, _, _)| named_all(names, f.members()).into_iter().map(|v| v.join(",")).collect::<Vec<_>>());
    json!({
        "blocks": t.blocks().iter().map(|&b| labels_of(s, b)).collect::<Vec<_>>(),
        "family": family.ok(),
    })
}

pub fn congruences(l: &Loaded, opts: &Options) -> Run {
    let s = &l.semilattice;
    let d = dual_space(s);
    let names = point_names(&d);
    let cons = all_congruences(s);
    let mut payload = json!({
        "count": cons.len(),
        "congruences": cons.iter().map(|t| congruence_json(l, &d, &names, t)).collect::<Vec<_>>(),
    });
    let mut checks = Report::new();
    checks.absorb("triangle", congruence_triangle(s, &opts.cfg()));
    checks.absorb("FS", fajtlowicz_schmidt(s));
    let mut dot = Vec::new();
    for t in &cons {
        if let Ok((f, _, _)) = family_of_theta(&d, t) {
            dot.push(family_dot(&f, &names));
        }
    }
    if let Some(ms) = &l.monotone {
        let mc = all_monotone_congruences(ms);
        payload["monotone"] = json!({
            "count": mc.len(),
            "congruences": mc.iter().map(|t| congruence_json(l, &d, &names, t)).collect::<Vec<_>>(),
        });
        checks.absorb("monotone triangle", monotone_congruence_triangle(ms, &opts.cfg()));
    }
    Run { output: Output::from_checks("congruences", payload, checks), dot }
}

fn lattice_json(v: &VietorisLattice, names: &[String]) -> Value {
    let n = v.len();
    let lt = |i: usize, j: usize| i != j && v.leq[i].contains(j);
    let covers: Vec<[usize; 2]> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| lt(i, j) && !(0..n).any(|k| lt(i, k) && lt(k, j)))
        .map(|(i, j)| [i, j])
        .collect();
    json!({
        "families": v.families.iter().map(|f| named_all(names, f.members())).collect::<Vec<_>>(),
        "covers": covers,
        "theta": v.theta,
    })
}

pub fn vietoris(l: &Loaded, opts: &Options) -> Run {
    let s = &l.semilattice;
    let d = dual_space(s);
    let names = point_names(&d);
    let mut checks = Report::new();
    let mut payload = json!({});
    let mut dot = Vec::new();
    match vietoris_lattice(d.space(), &opts.cfg()) {
        Ok(v) => {
            payload["plain"] = lattice_json(&v, &names);
            checks.absorb("V(X)", v.verify());
            dot.extend(v.families.iter().map(|f| family_dot(f, &names)));
        }
        Err(e) => {
            checks.check("V(X)", false, || e.to_string());
        }
    }
    if let Some(ms) = &l.monotone {
        let md = build_r_m(ms);
        match vietoris_lattice_monotone(&md.ms, &opts.cfg()) {
            Ok(v) => {
                payload["monotone"] = lattice_json(&v, &names);
                checks.absorb("V_m(X)", v.verify());
            }
            Err(e) => {
                checks.check("V_m(X)", false, || e.to_string());
            }
        }
    }
    Run { output: Output::from_checks("vietoris", payload, checks), dot }
}

pub fn verify(l: &Loaded, opts: &Options) -> Run {
    let rep = verify_all(&l.semilattice, l.monotone.as_ref(), &l.maps, &opts.verify());
    let failed = rep.checks().iter().filter(|c| !c.pass).count();
    let payload = json!({ "total": rep.len(), "failed": failed });
    let s = &l.semilattice;
    Run {
        output: Output::from_checks("verify-all", payload, rep),
        dot: vec![semilattice_dot(s), dual_dot(&dual_space(s))],
    }
}

pub fn enumerate(n: usize, check: bool, opts: &Options) -> Run {
    let all = semilattices_of_size(n);
    let docs: Vec<Document> = all.iter().map(|s| canonical(s, None, &[])).collect();
    let mut checks = Report::new();
    if check {
        for (i, s) in all.iter().enumerate() {
            let rep = verify_all(s, None, &[], &opts.verify());
            let first = rep.first_failure().map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()));
            checks.check(format!("#{i} verify-all"), first.is_none(), || first.unwrap_or_default());
            checks.note(format!("{} checks", rep.len()));
        }
    }
    let payload = json!({ "n": n, "count": all.len(), "semilattices": docs });
    Run { output: Output::from_checks("enumerate", payload, checks), dot: all.iter().map(semilattice_dot).collect() }
}
