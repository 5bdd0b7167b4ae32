mod common;

use rbl2::algebra::verify_rb;
use rbl2::crossed::{
    crossed_semidirect, crossed_to_strict, derived_crossed, prelie_crossed_to_lie_crossed,
    rb_crossed_to_prelie_crossed, strict_to_crossed, verify_lie_crossed, verify_prelie_crossed,
    verify_rb_crossed, PreLieCrossedModule,
};
use rbl2::structure::Structure;
use rbl2::tensor::LinearMap;
use rbl2::Error;

#[test]
fn catalog_crossed_modules_verify() {
    let all = common::crossed_rb();
    assert!(all.len() >= 4);
    for (name, c) in all {
        assert!(verify_rb_crossed(&c).unwrap().is_empty(), "{name}");
    }
}

#[test]
fn strict_roundtrip_from_crossed() {
    for (name, c) in common::crossed_rb() {
        let g = crossed_to_strict(&c).unwrap();
        assert!(g.is_strict(), "{name}");
        assert_eq!(strict_to_crossed(&g).unwrap(), c, "{name}");
    }
}

#[test]
fn crossed_roundtrip_from_strict() {
    let strict: Vec<_> = common::rb_two_terms()
        .into_iter()
        .filter(|(_, g)| g.is_strict())
        .collect();
    assert!(strict.len() >= 3);
    for (name, g) in strict {
        assert_eq!(
            crossed_to_strict(&strict_to_crossed(&g).unwrap()).unwrap(),
            g,
            "{name}"
        );
    }
}

#[test]
fn non_strict_input_is_rejected() {
    let g = rbl2::catalog::sl2_string_rb();
    assert!(matches!(strict_to_crossed(&g), Err(Error::NotStrict(_))));
}

#[test]
fn descendent_chain_matches_derived_crossed() {
    for (name, c) in common::crossed_rb() {
        let pm = rb_crossed_to_prelie_crossed(&c).unwrap();
        assert!(verify_prelie_crossed(&pm).unwrap().is_empty(), "{name}");
        let chain = prelie_crossed_to_lie_crossed(&pm).unwrap();
        assert!(verify_lie_crossed(&chain).unwrap().is_empty(), "{name}");
        let (derived, hom_report) = derived_crossed(&c).unwrap();
        assert_eq!(derived, chain, "{name}");
        assert!(hom_report.is_empty(), "{name}");
    }
}

#[test]
fn crossed_semidirect_products_pass() {
    for (name, c) in common::crossed_rb() {
        let s = crossed_semidirect(&c).unwrap();
        assert_eq!(s.dim(), c.base.dim0() + c.base.dim1());
        assert!(verify_rb(&s).unwrap().is_empty(), "{name}");
    }
}

#[test]
fn catalog_prelie_crossed_entry_matches_construction() {
    let entries = common::select(|s| match s {
        Structure::CrossedPreLie(p) => Some(p.clone()),
        _ => None,
    });
    let rb = common::crossed_rb();
    let source = &rb
        .iter()
        .find(|(n, _)| *n == "aff1-ideal-rb-crossed")
        .unwrap()
        .1;
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0].1, rb_crossed_to_prelie_crossed(source).unwrap());
}

/// `r_x l_y - r_y l_x - r_{x∗y} + r_y r_x` at one pair.
fn swapped_compat(pm: &PreLieCrossedModule, i: usize, j: usize) -> LinearMap {
    let (lx, ly, rx, ry) = (pm.l.basis(i), pm.l.basis(j), pm.r.basis(i), pm.r.basis(j));
    rx.compose(ly)
        .sub(&ry.compose(lx))
        .sub(&pm.r.at(&pm.p0.mult.basis(i, j)))
        .add(&ry.compose(rx))
}

/// Adjoint crossed modules `(g, g, id, ad)` of every operator on the
/// `{-1, 0, 1}` grid for aff1, h3 and sl2.
fn adjoint_crossed_modules() -> Vec<(String, rbl2::crossed::RbLieCrossedModule)> {
    use rbl2::catalog::{adjoint_rb, aff1, h3, sl2};
    use rbl2::scalar::int;
    use rbl2::search::{enumerate_rb_operators, operator_line, SearchSpec};
    let mut out = Vec::new();
    for (name, g) in [("aff1", aff1()), ("h3", h3()), ("sl2", sl2())] {
        let spec = SearchSpec::new(g.clone(), [int(-1), int(0), int(1)]);
        for a in enumerate_rb_operators(&spec).unwrap() {
            let strict = adjoint_rb(&g, &a.r).unwrap();
            out.push((
                format!("{name} {}", operator_line(&a.r)),
                strict_to_crossed(&strict).unwrap(),
            ));
        }
    }
    out
}

#[test]
/// Every module here passed the adopted compatibility inside the
/// construction; the swapped form fails on some of them.
fn swapped_compatibility_form_rejects_constructed_modules() {
    let mut rejected = Vec::new();
    let mut total = 0;
    let corpus = common::crossed_rb()
        .into_iter()
        .map(|(n, c)| (n.to_string(), c));
    for (name, c) in corpus.chain(adjoint_crossed_modules()) {
        let pm = rb_crossed_to_prelie_crossed(&c).unwrap();
        let n = pm.dim0();
        total += 1;
        if (0..n).any(|i| (0..n).any(|j| !swapped_compat(&pm, i, j).is_zero())) {
            rejected.push(name);
        }
    }
    assert!(total > 600);
    assert!(
        rejected.contains(&"aff1 RB 1/1,0/1;0/1,0/1".to_string()),
        "{rejected:?}"
    );
}
