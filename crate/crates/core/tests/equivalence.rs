mod common;

use rbl2::categorify::{
    rbcoh_paths, rbcohm_paths, roundtrip_hom, roundtrip_st, verify_rb_naturality, verify_rbcoh,
    verify_rbcohm, RbLie2View,
};
use rbl2::scalar::one;
use rbl2::search::mutate;
use rbl2::structure::Structure;
use rbl2::tensor::{self, unit};
use rbl2::two_term::{
    rb2_residual, rb3_residual, rblh3_residual, verify_rb_2term, verify_rb_hom, verify_rb_triple,
    RbLInfinityHom, TwoTermRbLInfinity,
};
use rbl2::Condition;

fn flags_hold(g: &TwoTermRbLInfinity) -> bool {
    g.linf.l2_00.skew_defects().is_empty()
        && g.linf.l3.alternation_defects().is_empty()
        && g.rb.r2.skew_defects().is_empty()
}

#[test]
fn roundtrip_is_identity_on_instances() {
    for (name, g) in common::rb_two_terms() {
        assert!(roundtrip_st(&g).unwrap().is_empty(), "{name}");
    }
}

#[test]
fn roundtrip_is_identity_on_homs() {
    for (name, h) in common::rb_homs() {
        assert!(roundtrip_hom(&h).unwrap().is_empty(), "{name}");
    }
}

fn rb_mutants() -> Vec<(String, TwoTermRbLInfinity)> {
    let mut out = Vec::new();
    for (name, g) in common::rb_two_terms() {
        let s = Structure::RbTwoTerm(g.clone());
        for site in common::mutation_sites(&s) {
            if let Structure::RbTwoTerm(m) = mutate(&s, &site, &one()).unwrap() {
                out.push((format!("{name}:{site}"), m));
            }
        }
        out.push((name.to_string(), g));
    }
    out
}

fn hom_mutants() -> Vec<(String, RbLInfinityHom)> {
    let mut out = Vec::new();
    for (name, h) in common::rb_homs() {
        let s = Structure::RbHom(h.clone());
        for site in common::mutation_sites(&s) {
            if let Structure::RbHom(m) = mutate(&s, &site, &one()).unwrap() {
                out.push((format!("{name}:{site}"), m));
            }
        }
        out.push((name.to_string(), h));
    }
    out
}

/// Mutants on a diagonal of `l2_00`, `l3` or `r2` leave the skew or
/// alternating type; they are compared separately below.
#[test]
fn coherence_agrees_with_condition_3() {
    let cases: Vec<_> = rb_mutants()
        .into_iter()
        .filter(|(_, g)| flags_hold(g))
        .collect();
    assert!(cases.len() > 400);
    for (name, g) in cases {
        let view = RbLie2View::new(&g);
        let coh = verify_rbcoh(&view).unwrap();
        let triple = verify_rb_triple(&g).unwrap();
        assert_eq!(
            coh.sites(Condition::RbCoh),
            triple.sites(Condition::Rb3),
            "{name}"
        );
        if verify_rb_2term(&g).unwrap().is_empty() {
            assert!(coh.sites(Condition::RbCohNode).is_empty(), "{name}");
        }
        let n = g.dim0();
        for (i, j, k) in rbl2::par::triples(n) {
            let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
            let paths = rbcoh_paths(&view, &x, &y, &z);
            let diff = tensor::sub(&paths.left.arrow, &paths.right.arrow);
            assert_eq!(diff, rb3_residual(&g, &x, &y, &z), "{name} ({i},{j},{k})");
        }
    }
}

#[test]
fn type_breaking_mutants_are_rejected() {
    let flags = [Condition::L2Skew, Condition::L3Alt, Condition::R2Skew];
    let mut seen = 0;
    for (name, g) in rb_mutants().into_iter().filter(|(_, g)| !flags_hold(g)) {
        let report = verify_rb_2term(&g).unwrap();
        assert!(
            flags.iter().any(|c| report.conditions().contains(c)),
            "{name}"
        );
        verify_rbcoh(&RbLie2View::new(&g)).unwrap();
        seen += 1;
    }
    assert!(seen > 0);
}

#[test]
fn naturality_agrees_with_condition_2() {
    for (name, g) in rb_mutants() {
        let nat = verify_rb_naturality(&RbLie2View::new(&g)).unwrap();
        let triple = verify_rb_triple(&g).unwrap();
        assert_eq!(
            nat.sites(Condition::Naturality),
            triple.sites(Condition::Rb2),
            "{name}"
        );
        for a in 0..g.dim1() {
            for i in 0..g.dim0() {
                assert!(
                    triple.sites(Condition::Rb2).contains(&vec![a, i])
                        != tensor::is_zero(&rb2_residual(
                            &g,
                            &unit(g.dim1(), a),
                            &unit(g.dim0(), i)
                        )),
                    "{name}"
                );
            }
        }
    }
}

#[test]
fn hom_coherence_agrees_with_rblh3() {
    let cases = hom_mutants();
    assert!(cases.len() > 500);
    for (name, h) in cases {
        let cohm = verify_rbcohm(&h).unwrap();
        let hom = verify_rb_hom(&h).unwrap();
        assert_eq!(
            cohm.sites(Condition::RbCohm),
            hom.sites(Condition::RbLh3),
            "{name}"
        );
        let n = h.source.dim0();
        for (i, j) in rbl2::par::pairs(n) {
            let (x, y) = (unit(n, i), unit(n, j));
            let paths = rbcohm_paths(&h, &x, &y);
            let diff = tensor::sub(&paths.right.arrow, &paths.left.arrow);
            assert_eq!(diff, rblh3_residual(&h, &x, &y), "{name} ({i},{j})");
        }
    }
}
