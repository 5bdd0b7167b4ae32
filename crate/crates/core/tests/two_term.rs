mod common;

use std::collections::BTreeMap;

use rbl2::catalog;
use rbl2::scalar::one;
use rbl2::search::mutate;
use rbl2::structure::{Kind, Structure};
use rbl2::two_term::{verify_2term, verify_rb_hom, verify_rb_triple};

const FAMILIES: [&str; 10] = [
    "a", "b", "c", "d", "rb1", "rb2", "rb3", "rblh1", "rblh2", "rblh3",
];

#[test]
fn catalog_two_term_instances_pass() {
    let all = common::two_terms();
    assert!(all.len() >= 8);
    for (name, l) in all {
        assert!(verify_2term(&l).unwrap().is_empty(), "{name}");
    }
}

#[test]
fn catalog_rb_triples_pass() {
    for (name, g) in common::rb_two_terms() {
        assert!(verify_rb_triple(&g).unwrap().is_empty(), "{name}");
    }
}

#[test]
fn catalog_rb_homs_pass() {
    for (name, h) in common::rb_homs() {
        assert!(verify_rb_hom(&h).unwrap().is_empty(), "{name}");
    }
}

/// First single-entry mutant (delta 1, catalog order, then site order)
/// whose violation list names exactly one of the ten conditions.
fn isolating_mutants() -> BTreeMap<&'static str, String> {
    let mut found = BTreeMap::new();
    for entry in common::entries() {
        let s = &entry.doc.structure;
        if !matches!(
            s.kind(),
            Kind::TwoTerm | Kind::RbTwoTerm | Kind::Hom | Kind::RbHom
        ) {
            continue;
        }
        for site in common::mutation_sites(s) {
            let mutant = mutate(s, &site, &one()).unwrap();
            let report = mutant.verify().unwrap();
            let families = report.families();
            if families.len() != 1 {
                continue;
            }
            let family = *families.iter().next().unwrap();
            if FAMILIES.contains(&family) && !found.contains_key(family) {
                found.insert(family, format!("{}:{site}", entry.name));
            }
            if found.len() == FAMILIES.len() {
                return found;
            }
        }
    }
    found
}

#[test]
fn every_condition_has_an_isolating_mutant() {
    let found = isolating_mutants();
    for family in FAMILIES {
        assert!(
            found.contains_key(family),
            "no isolating mutant for {family}: {found:?}"
        );
    }
}

fn mutant_report(s: Structure, site: &str) -> rbl2::VerificationReport {
    mutate(&s, &site.parse().unwrap(), &one())
        .unwrap()
        .verify()
        .unwrap()
}

#[test]
fn known_isolating_mutants() {
    let cases: [(Structure, &str, &str); 10] = [
        (
            catalog::adjoint_complex(&catalog::aff1()).into(),
            "l1/0,0",
            "a",
        ),
        (catalog::sl2_string().into(), "l2_00/0,1,0", "b"),
        (catalog::sl2_string().into(), "l2_01/0,0,0", "c"),
        (catalog::solv4_trivial_rb().into(), "l3/0,1,2,0", "d"),
        (
            catalog::rb_lie_as_2term(&catalog::aff1_rb()).into(),
            "r0/0,0",
            "rb1",
        ),
        (catalog::solv4_trivial_rb().into(), "l2_01/3,0,0", "rb2"),
        (catalog::solv4_trivial_rb().into(), "r2/0,2,0", "rb3"),
        (
            catalog::ideal_hom(
                &catalog::aff1_rb_diag(),
                &rbl2::tensor::LinearMap::from_int_rows(&[&[0], &[1]]),
            )
            .unwrap()
            .into(),
            "phi3/0,0",
            "rblh1",
        ),
        (
            catalog::zero_hom(
                &catalog::adjoint_rb(&catalog::aff1(), &catalog::aff1_rb().r).unwrap(),
                &catalog::sl2_string_rb(),
            )
            .into(),
            "phi1/0,0",
            "rblh2",
        ),
        (catalog::sl2_gauge().unwrap().into(), "phi2/0,2,0", "rblh3"),
    ];
    for (s, site, family) in cases {
        assert!(s.verify().unwrap().is_empty(), "{site}: unmutated");
        let report = mutant_report(s, site);
        assert!(!report.is_empty(), "{site}");
        let families: Vec<_> = report.families().into_iter().collect();
        assert_eq!(families, vec![family], "{site}: {report}");
    }
}

#[test]
fn diagonal_mutation_breaks_skewness() {
    let report = mutant_report(catalog::sl2_string().into(), "l2_00/1,1,0");
    assert!(report.conditions().contains(&rbl2::Condition::L2Skew));
}
