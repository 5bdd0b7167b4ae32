mod common;

use rbl2::catalog;
use rbl2::tensor::{self, unit};
use rbl2::two_term::{compose_rb_homs, rblh3_residual, verify_rb_hom, RbLInfinityHom};
use rbl2::Error;

/// Catalog homs plus the identity on every catalog instance.
fn corpus() -> Vec<(String, RbLInfinityHom)> {
    let mut homs: Vec<(String, RbLInfinityHom)> = common::rb_homs()
        .into_iter()
        .map(|(n, h)| (n.to_string(), h))
        .collect();
    for (name, g) in common::rb_two_terms() {
        homs.push((format!("id:{name}"), RbLInfinityHom::identity(&g)));
    }
    homs
}

#[test]
fn corpus_homs_verify() {
    for (name, h) in corpus() {
        assert!(verify_rb_hom(&h).unwrap().is_empty(), "{name}");
    }
}

#[test]
fn composition_is_associative() {
    let homs = corpus();
    let mut triples = 0;
    let mut non_identity = 0;
    for (nf, f) in &homs {
        for (ng, g) in homs.iter().filter(|(_, g)| g.source == f.target) {
            let gf = compose_rb_homs(g, f).unwrap();
            for (nh, h) in homs.iter().filter(|(_, h)| h.source == g.target) {
                let left = compose_rb_homs(h, &gf).unwrap();
                let right = compose_rb_homs(&compose_rb_homs(h, g).unwrap(), f).unwrap();
                assert_eq!(left, right, "{nh} . {ng} . {nf}");
                triples += 1;
                if [nf, ng, nh]
                    .iter()
                    .filter(|n| !n.starts_with("id:"))
                    .count()
                    >= 2
                {
                    non_identity += 1;
                }
            }
        }
    }
    assert!(triples >= 40, "{triples}");
    assert!(non_identity > 0);
}

#[test]
fn identities_are_units() {
    for (name, f) in corpus() {
        let left = RbLInfinityHom::identity(&f.target);
        let right = RbLInfinityHom::identity(&f.source);
        assert_eq!(compose_rb_homs(&left, &f).unwrap(), f, "{name}");
        assert_eq!(compose_rb_homs(&f, &right).unwrap(), f, "{name}");
    }
}

#[test]
fn composites_verify() {
    let homs = corpus();
    let mut checked = 0;
    for (nf, f) in &homs {
        for (ng, g) in homs.iter().filter(|(_, g)| g.source == f.target) {
            let gf = compose_rb_homs(g, f).unwrap();
            assert!(verify_rb_hom(&gf).unwrap().is_empty(), "{ng} . {nf}");
            checked += 1;
        }
    }
    assert!(checked > homs.len());
}

#[test]
fn mismatched_endpoints_are_rejected() {
    let f = catalog::sl2_gauge().unwrap();
    let g = RbLInfinityHom::identity(&catalog::solv4_trivial_rb());
    assert!(matches!(
        compose_rb_homs(&g, &f),
        Err(Error::SourceTargetMismatch)
    ));
}

/// Residual with the bracket of the `φ3` values dropped.
fn residual_without_bracket(
    h: &RbLInfinityHom,
    x: &[rbl2::Scalar],
    y: &[rbl2::Scalar],
) -> tensor::Vector {
    let t = &h.target.linf;
    let (f3x, f3y) = (h.phi3.apply(x), h.phi3.apply(y));
    let (p0x, p0y) = (
        h.target.r0(&h.maps.phi0.apply(x)),
        h.target.r0(&h.maps.phi0.apply(y)),
    );
    let bracket = tensor::sum(
        t.dim1(),
        [
            &t.act_rev(&f3x, &p0y),
            &t.act(&p0x, &f3y),
            &t.act(&t.l1(&f3x), &f3y),
        ],
    );
    tensor::add(&rblh3_residual(h, x, y), &bracket)
}

/// The homs `(id, id, 0, R)` that forget the operator on an adjoint
/// complex pass the Rota-Baxter compatibility only because the bracket of
/// the `φ3` values is kept: dropping it leaves `[Rx, Ry]` in the residual.
#[test]
fn forget_homs_need_the_phi3_bracket() {
    let h3_op = rbl2::tensor::LinearMap::from_int_rows(&[&[-1, -1, 0], &[-1, 0, 0], &[0, 0, 1]]);
    assert!(rbl2::algebra::is_rota_baxter(
        &catalog::h3().bracket,
        &h3_op
    ));
    for (g, r) in [
        (catalog::aff1(), catalog::aff1_homotopy_operator()),
        (catalog::h3(), h3_op),
    ] {
        let h = catalog::forget_operator(&g, &r).unwrap();
        assert!(verify_rb_hom(&h).unwrap().is_empty());
        let n = g.dim();
        let mut dropped = 0;
        for (i, j) in rbl2::par::pairs(n) {
            let (x, y) = (unit(n, i), unit(n, j));
            let rest = residual_without_bracket(&h, &x, &y);
            assert_eq!(rest, g.br(&r.apply(&x), &r.apply(&y)));
            dropped += usize::from(!tensor::is_zero(&rest));
        }
        assert!(dropped > 0);
    }
}
