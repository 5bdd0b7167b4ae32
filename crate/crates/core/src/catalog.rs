//! The shipped example catalog. Every entry is assembled from structure
//! constants or from the library's constructions and is verified before it
//! is returned.

use crate::algebra::{
    adjoint_representation, dual_representation, prelie_from_rb, LieAlgebra, RotaBaxterLieAlgebra,
};
use crate::crossed::{crossed_to_strict, ideal_inclusion, rb_crossed_to_prelie_crossed};
use crate::error::{Error, Result};
use crate::format::Document;
use crate::scalar::Scalar;
use crate::structure::Structure;
use crate::tensor::{self, from_ints, unit, BilinearMap, LinearMap, TrilinearMap};
use crate::two_term::{
    complete_rb_triple, rblh3_residual, Completion, HomMaps, LInfinityHom, RbLInfinityHom,
    RbTriple, TwoTermComplex, TwoTermLInfinity, TwoTermRbLInfinity,
};

#[derive(Clone, Debug)]
pub struct Entry {
    pub name: &'static str,
    pub doc: Document,
}

pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::abelian(n)
}

/// `[e0, e1] = e1`.
pub fn aff1() -> LieAlgebra {
    LieAlgebra::from_upper(2, |_, _| from_ints(&[0, 1]))
}

/// `[e0, e1] = e2`.
pub fn h3() -> LieAlgebra {
    LieAlgebra::from_upper(3, |i, j| {
        if (i, j) == (0, 1) {
            from_ints(&[0, 0, 1])
        } else {
            from_ints(&[0, 0, 0])
        }
    })
}

/// Basis `h, e, f`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_upper(3, |i, j| match (i, j) {
        (0, 1) => from_ints(&[0, 2, 0]),
        (0, 2) => from_ints(&[0, 0, -2]),
        _ => from_ints(&[1, 0, 0]),
    })
}

/// `h3` extended by the derivation `diag(1, 1, 2)`: `[e0,e1] = e2`,
/// `[e3,e0] = e0`, `[e3,e1] = e1`, `[e3,e2] = 2e2`.
pub fn solv4() -> LieAlgebra {
    LieAlgebra::from_upper(4, |i, j| match (i, j) {
        (0, 1) => from_ints(&[0, 0, 1, 0]),
        (0, 3) => from_ints(&[-1, 0, 0, 0]),
        (1, 3) => from_ints(&[0, -1, 0, 0]),
        (2, 3) => from_ints(&[0, 0, -2, 0]),
        _ => from_ints(&[0, 0, 0, 0]),
    })
}

fn rb(base: LieAlgebra, rows: &[&[i64]]) -> RotaBaxterLieAlgebra {
    RotaBaxterLieAlgebra {
        base,
        r: LinearMap::from_int_rows(rows),
    }
}

/// `R(e0) = 0`, `R(e1) = e0`.
pub fn aff1_rb() -> RotaBaxterLieAlgebra {
    rb(aff1(), &[&[0, 1], &[0, 0]])
}

/// `R(e0) = e0`, `R(e1) = 0`; preserves the ideal spanned by `e1`.
pub fn aff1_rb_diag() -> RotaBaxterLieAlgebra {
    rb(aff1(), &[&[1, 0], &[0, 0]])
}

/// `R(e0) = e1`, `R(e2) = e2`.
pub fn h3_rb() -> RotaBaxterLieAlgebra {
    rb(h3(), &[&[0, 0, 0], &[1, 0, 0], &[0, 0, 1]])
}

/// `R(e) = f`.
pub fn sl2_rb() -> RotaBaxterLieAlgebra {
    rb(sl2(), &[&[0, 0, 0], &[0, 0, 0], &[0, 1, 0]])
}

/// `R(e1) = -e0 - e2`.
pub fn solv4_rb() -> RotaBaxterLieAlgebra {
    rb(
        solv4(),
        &[&[0, -1, 0, 0], &[0, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, 0, 0]],
    )
}

/// `id: g → g` with `l2(x, u) = [x, u]`.
pub fn adjoint_complex(g: &LieAlgebra) -> TwoTermLInfinity {
    let n = g.dim();
    TwoTermLInfinity {
        complex: TwoTermComplex {
            l1: LinearMap::identity(n),
        },
        l2_00: g.bracket.clone(),
        l2_01: BilinearMap {
            skew: false,
            ..g.bracket.clone()
        },
        l3: TrilinearMap::zero(n, n, true),
    }
}

/// The adjoint complex with `R0 = R1 = r` and `R2` solved from
/// condition (1).
pub fn adjoint_rb(g: &LieAlgebra, r: &LinearMap) -> Result<TwoTermRbLInfinity> {
    let linf = adjoint_complex(g);
    match complete_rb_triple(&linf, r, r)? {
        Completion::Solved(rb) => Ok(TwoTermRbLInfinity { linf, rb }),
        Completion::Unsolvable { pair, defect } => Err(Error::Schema(format!(
            "adjoint completion unsolvable at {pair:?}: {defect:?}"
        ))),
        Completion::PostSolveFailed { report, .. } => {
            Err(Error::broken("adjoint completion", report))
        }
    }
}

/// `g0 = sl2`, `g1` one-dimensional, `l1 = 0`, trivial action and
/// `l3(x, y, z) = tr(x [y, z])` in the defining representation.
pub fn sl2_string() -> TwoTermLInfinity {
    let g = sl2();
    // trace form on h, e, f: tr(hh) = 2, tr(ef) = tr(fe) = 1
    let form = |x: &[Scalar], y: &[Scalar]| {
        &x[0] * &y[0] * Scalar::from_integer(2.into()) + &x[1] * &y[2] + &x[2] * &y[1]
    };
    let l3 = TrilinearMap::alternating_from_sorted(3, 1, |i, j, k| {
        vec![form(&unit(3, i), &g.br(&unit(3, j), &unit(3, k)))]
    });
    TwoTermLInfinity {
        complex: TwoTermComplex {
            l1: LinearMap::zero(3, 1),
        },
        l2_00: g.bracket,
        l2_01: BilinearMap::zero(3, 1, 1, false),
        l3,
    }
}

/// The string algebra with `R0(e) = f`, `R1 = 2` and `R2(h, e) = 1`.
pub fn sl2_string_rb() -> TwoTermRbLInfinity {
    let mut r2 = BilinearMap::zero(3, 3, 1, true);
    r2.set(0, 0, 1, crate::scalar::int(1));
    r2.set(0, 1, 0, crate::scalar::int(-1));
    TwoTermRbLInfinity {
        linf: sl2_string(),
        rb: RbTriple {
            r0: sl2_rb().r,
            r1: LinearMap::from_int_rows(&[&[2]]),
            r2,
        },
    }
}

/// `g0 = solv4`, `g1` one-dimensional, everything else zero except `R0`.
pub fn solv4_trivial_rb() -> TwoTermRbLInfinity {
    TwoTermRbLInfinity {
        linf: TwoTermLInfinity {
            complex: TwoTermComplex {
                l1: LinearMap::zero(4, 1),
            },
            l2_00: solv4().bracket,
            l2_01: BilinearMap::zero(4, 1, 1, false),
            l3: TrilinearMap::zero(4, 1, true),
        },
        rb: RbTriple {
            r0: solv4_rb().r,
            r1: LinearMap::from_int_rows(&[&[1]]),
            r2: BilinearMap::zero(4, 4, 1, true),
        },
    }
}

/// A Lie algebra with an operator, viewed as a 2-term instance with
/// `g1 = 0`.
pub fn rb_lie_as_2term(a: &RotaBaxterLieAlgebra) -> TwoTermRbLInfinity {
    TwoTermRbLInfinity {
        linf: TwoTermLInfinity::from_lie(a.base.bracket.clone()),
        rb: RbTriple {
            r0: a.r.clone(),
            r1: LinearMap::zero(0, 0),
            r2: BilinearMap::zero(a.dim(), a.dim(), 0, true),
        },
    }
}

/// For a source with `l1 = 0` and trivial action: the homomorphism with
/// `φ0 = φ1 = id` and the given `φ2`, `φ3`, onto the target obtained by
/// transporting `l3` and `R2` along it.
pub fn gauge_hom(
    source: &TwoTermRbLInfinity,
    phi2: BilinearMap,
    phi3: LinearMap,
) -> Result<RbLInfinityHom> {
    let (n, m) = (source.dim0(), source.dim1());
    if !source.linf.complex.l1.is_zero() || !source.linf.l2_01.is_zero() {
        return Err(Error::Schema(
            "gauge_hom needs l1 = 0 and a trivial action".into(),
        ));
    }
    let s = &source.linf;
    let l3 = TrilinearMap::alternating_from_sorted(n, m, |i, j, k| {
        let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
        tensor::sum(
            m,
            [
                &phi2.apply(&s.br(&x, &y), &z),
                &s.l3(&x, &y, &z),
                &tensor::neg(&phi2.apply(&x, &s.br(&y, &z))),
                &tensor::neg(&phi2.apply(&s.br(&x, &z), &y)),
            ],
        )
    });
    let mut target = source.clone();
    target.linf.l3 = l3;
    target.rb.r2 = BilinearMap::zero(n, n, m, true);
    let mut hom = RbLInfinityHom {
        source: source.clone(),
        target,
        maps: HomMaps {
            phi0: LinearMap::identity(n),
            phi1: LinearMap::identity(m),
            phi2,
        },
        phi3,
    };
    let r2 = BilinearMap::skew_from_upper(n, m, |i, j| {
        tensor::neg(&rblh3_residual(&hom, &unit(n, i), &unit(n, j)))
    });
    hom.target.rb.r2 = r2;
    Ok(hom)
}

/// `(id, id, 0, R)` from the adjoint complex with operator `R` to the one
/// with the zero operator.
pub fn forget_operator(g: &LieAlgebra, r: &LinearMap) -> Result<RbLInfinityHom> {
    let n = g.dim();
    let source = adjoint_rb(g, r)?;
    let target = adjoint_rb(g, &LinearMap::zero(n, n))?;
    Ok(RbLInfinityHom {
        source,
        target,
        maps: HomMaps::identity(n, n),
        phi3: r.clone(),
    })
}

/// The strict instance of an ideal inclusion mapped into the adjoint
/// complex: `φ0 = id`, `φ1` the inclusion, `φ2 = 0`, `φ3 = 0`.
pub fn ideal_hom(a: &RotaBaxterLieAlgebra, inclusion: &LinearMap) -> Result<RbLInfinityHom> {
    let n = a.dim();
    let source = crossed_to_strict(&ideal_inclusion(a, inclusion)?)?;
    let target = adjoint_rb(&a.base, &a.r)?;
    Ok(RbLInfinityHom {
        maps: HomMaps {
            phi0: LinearMap::identity(n),
            phi1: inclusion.clone(),
            phi2: BilinearMap::zero(n, n, n, true),
        },
        phi3: LinearMap::zero(n, n),
        source,
        target,
    })
}

pub fn zero_hom(source: &TwoTermRbLInfinity, target: &TwoTermRbLInfinity) -> RbLInfinityHom {
    let (n, m) = (source.dim0(), source.dim1());
    let (n2, m2) = (target.dim0(), target.dim1());
    RbLInfinityHom {
        source: source.clone(),
        target: target.clone(),
        maps: HomMaps {
            phi0: LinearMap::zero(n2, n),
            phi1: LinearMap::zero(m2, m),
            phi2: BilinearMap::zero(n, n, m2, true),
        },
        phi3: LinearMap::zero(m2, n),
    }
}

/// `R = [[1, 1], [0, 1]]` on the adjoint complex of `aff1`; not a
/// Rota-Baxter operator, so `R2` is nonzero.
pub fn aff1_homotopy_operator() -> LinearMap {
    LinearMap::from_int_rows(&[&[1, 1], &[0, 1]])
}

pub fn h3_homotopy_operator() -> LinearMap {
    LinearMap::from_int_rows(&[&[1, 0, 0], &[1, 1, 0], &[0, 1, 1]])
}

pub fn sl2_gauge() -> Result<RbLInfinityHom> {
    let mut phi2 = BilinearMap::zero(3, 3, 1, true);
    phi2.set(0, 0, 1, crate::scalar::int(1));
    phi2.set(0, 1, 0, crate::scalar::int(-1));
    let phi3 = LinearMap::from_int_rows(&[&[1, 0, 1]]);
    gauge_hom(&sl2_string_rb(), phi2, phi3)
}

fn col(entries: &[i64]) -> LinearMap {
    let rows: Vec<&[i64]> = entries.chunks(1).collect();
    LinearMap::from_int_rows(&rows)
}

/// Every catalog entry, in file-name order of the written catalog.
pub fn catalog() -> Result<Vec<Entry>> {
    let e = |name: &'static str, s: Structure| Entry {
        name,
        doc: Document::new(s),
    };
    let aff1_ideal = ideal_inclusion(&aff1_rb_diag(), &col(&[0, 1]))?;
    let h3_center = ideal_inclusion(&h3_rb(), &col(&[0, 0, 1]))?;
    let solv4_derived = ideal_inclusion(
        &solv4_rb(),
        &LinearMap::from_int_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]),
    )?;
    let aff1_adjoint_cm = crate::crossed::strict_to_crossed(&adjoint_rb(&aff1(), &aff1_rb().r)?)?;
    let aff1_homotopy = adjoint_rb(&aff1(), &aff1_homotopy_operator())?;
    let sl2_gauge = sl2_gauge()?;

    let mut out = vec![
        e("abelian1", abelian(1).into()),
        e("abelian2", abelian(2).into()),
        e("abelian3", abelian(3).into()),
        Entry {
            name: "aff1",
            doc: Document::new(aff1()).with_labels("g", &["e1", "e2"]),
        },
        e("h3", h3().into()),
        e("sl2", sl2().into()),
        e("solv4", solv4().into()),
        e("aff1-rb", aff1_rb().into()),
        e("aff1-rb-diag", aff1_rb_diag().into()),
        e("h3-rb", h3_rb().into()),
        e("sl2-rb", sl2_rb().into()),
        e("solv4-rb", solv4_rb().into()),
        e("aff1-prelie", prelie_from_rb(&aff1_rb())?.into()),
        e("sl2-prelie", prelie_from_rb(&sl2_rb())?.into()),
        e(
            "aff1-rb-adjoint",
            adjoint_representation(&aff1_rb())?.into(),
        ),
        e(
            "aff1-rb-coadjoint",
            dual_representation(&adjoint_representation(&aff1_rb())?)?.into(),
        ),
        e("h3-rb-adjoint", adjoint_representation(&h3_rb())?.into()),
        e("aff1-adjoint-complex", adjoint_complex(&aff1()).into()),
        e("sl2-string", sl2_string().into()),
        e("aff1-rb-2term", rb_lie_as_2term(&aff1_rb()).into()),
        e("aff1-adjoint-rb", adjoint_rb(&aff1(), &aff1_rb().r)?.into()),
        e("aff1-adjoint-homotopy", aff1_homotopy.clone().into()),
        e(
            "h3-adjoint-homotopy",
            adjoint_rb(&h3(), &h3_homotopy_operator())?.into(),
        ),
        e("sl2-string-rb", sl2_string_rb().into()),
        e("sl2-string-gauged", sl2_gauge.target.clone().into()),
        e("solv4-trivial-rb", solv4_trivial_rb().into()),
        e("aff1-ideal-strict", crossed_to_strict(&aff1_ideal)?.into()),
        e(
            "sl2-gauge-underlying",
            LInfinityHom {
                source: sl2_gauge.source.linf.clone(),
                target: sl2_gauge.target.linf.clone(),
                maps: sl2_gauge.maps.clone(),
            }
            .into(),
        ),
        e(
            "aff1-homotopy-identity",
            RbLInfinityHom::identity(&aff1_homotopy).into(),
        ),
        e(
            "aff1-forget-operator",
            forget_operator(&aff1(), &aff1_homotopy_operator())?.into(),
        ),
        e(
            "aff1-ideal-hom",
            ideal_hom(&aff1_rb_diag(), &col(&[0, 1]))?.into(),
        ),
        e("sl2-gauge", sl2_gauge.into()),
        e(
            "sl2-string-zero-hom",
            zero_hom(&sl2_string_rb(), &solv4_trivial_rb()).into(),
        ),
        e(
            "aff1-adjoint-zero-hom",
            zero_hom(&adjoint_rb(&aff1(), &aff1_rb().r)?, &sl2_string_rb()).into(),
        ),
        e("aff1-ideal-crossed", aff1_ideal.base.clone().into()),
        e("aff1-ideal-rb-crossed", aff1_ideal.clone().into()),
        e("h3-center-rb-crossed", h3_center.into()),
        e("solv4-derived-rb-crossed", solv4_derived.into()),
        e("aff1-adjoint-rb-crossed", aff1_adjoint_cm.into()),
        e(
            "aff1-ideal-prelie-crossed",
            rb_crossed_to_prelie_crossed(&aff1_ideal)?.into(),
        ),
    ];
    out.sort_by_key(|entry| entry.name);
    for entry in &out {
        let report = entry.doc.structure.verify()?;
        if !report.is_valid() {
            return Err(Error::broken(
                format!("catalog entry {}", entry.name),
                report,
            ));
        }
    }
    Ok(out)
}
