mod common;

use common::*;
use msdual::enumerate::{all_homomorphisms, all_monotone_ops};
use msdual::fixtures::{chain, lattice_l};
use msdual::monotone::{build_r_m, dual_algebra, duality_roundtrip_algebra, duality_roundtrip_space};
use msdual::space::h_x;
use msdual::{dual_space, CheckConfig, DualityError, Homomorphism, MeetRelation, MonotoneSemilattice, Semilattice};
use proptest::prelude::*;

fn cfg() -> CheckConfig {
    CheckConfig::default()
}

fn monotone_algebras(n: usize) -> Vec<MonotoneSemilattice> {
    upto(n)
        .into_iter()
        .flat_map(|s| {
            all_monotone_ops(&s).into_iter().map(move |op| MonotoneSemilattice::new(s.clone(), op).unwrap())
        })
        .collect()
}

#[test]
fn round_trip_for_every_small_monotone_algebra() {
    for ms in monotone_algebras(4) {
        let rep = duality_roundtrip_algebra(&ms, &cfg());
        assert!(rep.passed(), "{:?}: {rep}", ms.op_table());
    }
}

#[test]
fn m_r_agrees_with_m_on_betas() {
    for ms in monotone_algebras(4) {
        let md = build_r_m(&ms);
        for a in ms.base().elements() {
            // R_m(P) holds Z exactly when the preimage misses the ideal of Z
            for (p, &pt) in md.dual.points().iter().enumerate() {
                let pre: Vec<usize> = ms.base().elements().filter(|&b| pt.contains(ms.op(b))).collect();
                for (k, &z) in md.ms.zs().iter().enumerate() {
                    let ideal = md.dual.ideal_of(z).unwrap();
                    assert_eq!(md.ms.relation().image(p).contains(k), pre.iter().all(|&b| !ideal.contains(b)));
                }
            }
            assert_eq!(md.ms.m_r(md.dual.beta(a)), Ok(md.dual.beta(ms.op(a))));
        }
        let (alg, elements) = dual_algebra(&md.ms).unwrap();
        assert_eq!(alg.base().len(), ms.base().len());
        for (i, &u) in elements.iter().enumerate() {
            assert_eq!(elements[alg.op(i)], md.ms.m_r(u).unwrap());
        }
    }
}

#[test]
fn meet_with_d_on_l() {
    let l = lattice_l();
    let op: Vec<usize> = l.elements().map(|x| l.meet(x, D)).collect();
    let ms = MonotoneSemilattice::new(l, op).unwrap();
    let md = build_r_m(&ms);
    assert_eq!(md.ms.m_r(md.dual.beta(E)), Ok(md.dual.beta(C)));
    assert_eq!(md.ms.m_r(m(&[P1, P2])), Err(DualityError::NotInSX(m(&[P1, P2]))));
    assert!(duality_roundtrip_algebra(&ms, &cfg()).passed());
}

#[test]
fn identity_arrow_is_neutral() {
    for a in upto(4) {
        for b in upto(4) {
            for h in all_homomorphisms(&a, &b) {
                let (da, db) = (dual_space(&a), dual_space(&b));
                let rh = MeetRelation::r_h(&h, &da, &db);
                assert!(rh.is_meet_relation());
                let ida = MeetRelation::identity(da.space());
                let idb = MeetRelation::identity(db.space());
                assert_eq!(idb.star(&rh).unwrap(), rh);
                assert_eq!(rh.star(&ida).unwrap(), rh);
            }
        }
    }
}

fn homs_chain(n: usize) -> Vec<(Homomorphism, Homomorphism)> {
    let algebras = upto(n);
    let mut out = Vec::new();
    for a in &algebras {
        for b in &algebras {
            for c in &algebras {
                for h in all_homomorphisms(a, b) {
                    for g in all_homomorphisms(b, c) {
                        out.push((h.clone(), g));
                    }
                }
            }
        }
    }
    out
}

#[test]
fn r_of_a_composite_is_the_star_of_the_factors() {
    for (h, g) in homs_chain(3) {
        let (da, db, dc) = (dual_space(h.source()), dual_space(h.target()), dual_space(g.target()));
        let rh = MeetRelation::r_h(&h, &da, &db);
        let rg = MeetRelation::r_h(&g, &db, &dc);
        let rgh = MeetRelation::r_h(&h.then(&g).unwrap(), &da, &dc);
        let star = rg.star(&rh).unwrap();
        assert_eq!(star, rgh);
        assert_eq!(rg.star_closure(&rh).unwrap(), star);
        for a in h.source().elements() {
            let u = da.beta(a);
            assert_eq!(star.box_op(u), rg.box_op(rh.box_op(u).unwrap()));
        }
    }
}

#[test]
fn star_is_associative() {
    let algebras = upto(3);
    for a in &algebras {
        for b in &algebras {
            for c in &algebras {
                for d in &algebras {
                    for h1 in all_homomorphisms(a, b) {
                        for h2 in all_homomorphisms(b, c) {
                            for h3 in all_homomorphisms(c, d) {
                                let (xa, xb, xc, xd) = (dual_space(a), dual_space(b), dual_space(c), dual_space(d));
                                let r1 = MeetRelation::r_h(&h1, &xa, &xb);
                                let r2 = MeetRelation::r_h(&h2, &xb, &xc);
                                let r3 = MeetRelation::r_h(&h3, &xc, &xd);
                                let left = r3.star(&r2).unwrap().star(&r1).unwrap();
                                let right = r3.star(&r2.star(&r1).unwrap()).unwrap();
                                assert_eq!(left, right);
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn monotone_homomorphisms_match_monotone_relations() {
    let algebras = monotone_algebras(3);
    for ma in &algebras {
        for mb in &algebras {
            let (xa, xb) = (build_r_m(ma), build_r_m(mb));
            for h in all_homomorphisms(ma.base(), mb.base()) {
                let rh = MeetRelation::r_h(&h, &xa.dual, &xb.dual);
                let diagram = rh.monotone_by_diagram(&xb.ms, &xa.ms).unwrap();
                let pointwise = rh.monotone_pointwise(&xb.ms, &xa.ms).unwrap();
                assert_eq!(diagram, pointwise);
                assert_eq!(h.check_monotone(ma, mb).is_ok(), diagram);
            }
        }
    }
}

#[test]
fn h_x_relations_compose_to_identities() {
    for ms in monotone_algebras(3) {
        let md = build_r_m(&ms);
        let rep = duality_roundtrip_space(&md.ms, &cfg());
        assert!(rep.passed(), "{rep}");
        let x = md.ms.space();
        let hx = h_x(x, &cfg()).unwrap();
        let (r, t) = MeetRelation::from_bijection(&hx.map, x, hx.dual.space()).unwrap();
        assert_eq!(r.star(&t).unwrap(), MeetRelation::identity(x));
        assert_eq!(t.star(&r).unwrap(), MeetRelation::identity(hx.dual.space()));
    }
    let x = dual_space(&chain(3));
    assert_eq!(
        MeetRelation::from_bijection(&[0, 0], x.space(), x.space()).map(|_| ()),
        Err(DualityError::NotABijection)
    );
}

#[test]
fn shape_errors() {
    let (d2, d3) = (dual_space(&chain(2)), dual_space(&chain(3)));
    let i2 = MeetRelation::identity(d2.space());
    let i3 = MeetRelation::identity(d3.space());
    assert_eq!(i2.star(&i3), Err(DualityError::NotComposable));
    let x = dual_space(&chain(3));
    let sp = x.space().clone();
    assert_eq!(
        MeetRelation::new(sp.clone(), sp, vec![]),
        Err(DualityError::Shape { expected: 2, got: 0 })
    );
}

fn any_monotone() -> impl Strategy<Value = MonotoneSemilattice> {
    (0usize..5, any::<u64>()).prop_map(|(i, seed)| {
        let s: Semilattice = sized(5)[i].clone();
        let ops = all_monotone_ops(&s);
        MonotoneSemilattice::new(s, ops[(seed % ops.len() as u64) as usize].clone()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn dual_round_trip(ms in any_monotone()) {
        let rep = duality_roundtrip_algebra(&ms, &CheckConfig::default());
        prop_assert!(rep.passed(), "{}", rep);
    }

    #[test]
    fn r_m_is_an_ms_space(ms in any_monotone()) {
        let md = build_r_m(&ms);
        prop_assert!(md.ms.check(&CheckConfig::default()).passed());
    }
}
