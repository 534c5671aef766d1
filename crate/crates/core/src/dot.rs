//! Graphviz output for orders and families.

use std::fmt::Write;

use crate::algebra::Semilattice;
use crate::bits::Mask;
use crate::canonical::CanonicalExtension;
use crate::congruence::VietorisFamily;
use crate::space::{DualSpace, SSpace};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Covering pairs `(lo, hi)` of a preorder given by `leq`, skipping
/// equivalent points.
fn hasse(n: usize, leq: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let lt = |a: usize, b: usize| leq(a, b) && !leq(b, a);
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                out.push((a, b));
            }
        }
    }
    out
}

fn digraph(name: &str, labels: &[String], edges: &[(usize, usize)]) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    for (i, l) in labels.iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(l)).unwrap();
    }
    for (a, b) in edges {
        writeln!(out, "  n{a} -> n{b} [arrowhead=none];").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn semilattice_dot(s: &Semilattice) -> String {
    let labels: Vec<String> = s.elements().map(|a| s.label(a).into_owned()).collect();
    digraph("A", &labels, &s.covers())
}

/// The specialization order `⊑`, drawn with `x` below `y` when `x ⊑ y`.
pub fn specialization_dot(space: &SSpace, labels: &[String]) -> String {
    digraph("specialization", labels, &hasse(space.len(), |x, y| space.spec_leq(x, y)))
}

/// Points of a dual space, ordered by `⊆` of filters, with the `β`
/// membership listed on each node.
pub fn dual_dot(d: &DualSpace) -> String {
    let s = d.algebra();
    let labels: Vec<String> = (0..d.points().len())
        .map(|p| {
            let beta: Vec<String> = s
                .elements()
                .filter(|&a| d.beta(a).contains(p))
                .map(|a| s.label(a).into_owned())
                .collect();
            format!("P{p} {}\nβ∋ {}", d.point_label(p), beta.join(" "))
        })
        .collect();
    let pts = d.points();
    digraph("dual", &labels, &hasse(pts.len(), |p, q| pts[p].is_subset(pts[q])))
}

fn set_label(m: Mask, names: &[String]) -> String {
    let parts: Vec<&str> = m.iter().map(|i| names[i].as_str()).collect();
    format!("{{{}}}", parts.join(","))
}

/// `E(X(A))` ordered by inclusion.
pub fn extension_dot(ce: &CanonicalExtension) -> String {
    let d = ce.dual();
    let names: Vec<String> = (0..d.points().len()).map(|p| format!("P{p}")).collect();
    let e = ce.elements();
    let labels: Vec<String> = e.iter().map(|&m| set_label(m, &names)).collect();
    digraph("extension", &labels, &hasse(e.len(), |i, j| e[i].is_subset(e[j])))
}

/// Members of a family ordered by inclusion.
pub fn family_dot(f: &VietorisFamily, point_names: &[String]) -> String {
    let ms = f.members();
    let labels: Vec<String> = ms.iter().map(|&m| set_label(m, point_names)).collect();
    digraph("family", &labels, &hasse(ms.len(), |i, j| ms[i].is_subset(ms[j])))
}
