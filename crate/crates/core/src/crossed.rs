//! Crossed modules of Lie, Rota-Baxter Lie and pre-Lie algebras, and the
//! constructions relating them to strict 2-term Rota-Baxter L∞-algebras.

use crate::algebra::{
    action_hom_violations, bracket_violations, commute_violations, ensure, lie_hom_violations,
    ordered_pairs, prelie_violations, rb_violations, rep_rb_violations, LieAlgebra, PreLieAlgebra,
    RotaBaxterLieAlgebra,
};
use crate::error::{Error, Result};
use crate::linsolve;
use crate::report::{hit, hit_eq, Condition, VerificationReport};
use crate::tensor::{self, unit, Action, BilinearMap, LinearMap, TrilinearMap};
use crate::two_term::{
    verify_rb_2term, RbTriple, TwoTermComplex, TwoTermLInfinity, TwoTermRbLInfinity,
};

/// `d: g1 → g0` with an action `ρ` of `g0` on `g1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieCrossedModule {
    pub g0: LieAlgebra,
    pub g1: LieAlgebra,
    pub d: LinearMap,
    pub rho: Action,
}

impl LieCrossedModule {
    pub fn dim0(&self) -> usize {
        self.g0.dim()
    }

    pub fn dim1(&self) -> usize {
        self.g1.dim()
    }

    pub fn check_shape(&self) -> Result<()> {
        self.g0.check_shape("g0 bracket")?;
        self.g1.check_shape("g1 bracket")?;
        let (n, m) = (self.dim0(), self.dim1());
        self.d.check_shape("d", n, m)?;
        self.rho.check_shape("rho", n, m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RbLieCrossedModule {
    pub base: LieCrossedModule,
    pub t0: LinearMap,
    pub t1: LinearMap,
}

impl RbLieCrossedModule {
    pub fn check_shape(&self) -> Result<()> {
        self.base.check_shape()?;
        self.t0
            .check_shape("t0", self.base.dim0(), self.base.dim0())?;
        self.t1
            .check_shape("t1", self.base.dim1(), self.base.dim1())
    }
}

/// `δ: g1 → g0` with left and right actions `l`, `r` of `g0` on `g1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PreLieCrossedModule {
    pub p0: PreLieAlgebra,
    pub p1: PreLieAlgebra,
    pub delta: LinearMap,
    pub l: Action,
    pub r: Action,
}

impl PreLieCrossedModule {
    pub fn dim0(&self) -> usize {
        self.p0.dim()
    }

    pub fn dim1(&self) -> usize {
        self.p1.dim()
    }

    pub fn check_shape(&self) -> Result<()> {
        self.p0.check_shape("mult0")?;
        self.p1.check_shape("mult1")?;
        let (n, m) = (self.dim0(), self.dim1());
        self.delta.check_shape("delta", n, m)?;
        self.l.check_shape("l", n, m)?;
        self.r.check_shape("r", n, m)
    }
}

fn relabel(report: VerificationReport, condition: Condition) -> VerificationReport {
    report
        .into_iter()
        .map(|mut v| {
            v.condition = condition;
            v
        })
        .collect()
}

fn lie_crossed_violations(cm: &LieCrossedModule) -> VerificationReport {
    let (n, m) = (cm.dim0(), cm.dim1());
    let (b0, b1) = (&cm.g0.bracket, &cm.g1.bracket);
    let mut report = VerificationReport::new();
    report.extend_scoped("g0", bracket_violations(b0));
    report.extend_scoped("g1", bracket_violations(b1));
    report.extend(relabel(
        lie_hom_violations(&cm.d, b1, b0),
        Condition::BoundaryHom,
    ));
    report.extend(action_hom_violations(Condition::Action, b0, &cm.rho));
    let g1_pairs = ordered_pairs(m, b1.skew_defects().is_empty());
    for i in 0..n {
        let rx = cm.rho.basis(i);
        for &(a, b) in &g1_pairs {
            let lhs = rx.apply(&b1.basis(a, b));
            let rhs = tensor::add(
                &b1.apply(&rx.column(a), &unit(m, b)),
                &b1.apply(&unit(m, a), &rx.column(b)),
            );
            report.extend(hit_eq(Condition::Derivation, vec![i, a, b], &lhs, &rhs));
        }
        for a in 0..m {
            let lhs = cm.d.apply(&rx.column(a));
            let rhs = b0.apply(&unit(n, i), &cm.d.column(a));
            report.extend(hit_eq(Condition::Peiffer1, vec![i, a], &lhs, &rhs));
        }
    }
    for a in 0..m {
        let rdu = cm.rho.at(&cm.d.column(a));
        for b in 0..m {
            report.extend(hit_eq(
                Condition::Peiffer2,
                vec![a, b],
                &rdu.column(b),
                &b1.basis(a, b),
            ));
        }
    }
    report
}

pub fn verify_lie_crossed(cm: &LieCrossedModule) -> Result<VerificationReport> {
    cm.check_shape()?;
    Ok(lie_crossed_violations(cm).sorted())
}

/// Crossed-module axioms, Rota-Baxter identities on both terms,
/// `d T1 = T0 d`, and `(ρ, T1)` as a representation of `(g0, T0)`.
pub fn verify_rb_crossed(cm: &RbLieCrossedModule) -> Result<VerificationReport> {
    cm.check_shape()?;
    let base = &cm.base;
    let mut report = lie_crossed_violations(base);
    report.extend_scoped("g0", rb_violations(&base.g0.bracket, &cm.t0));
    report.extend_scoped("g1", rb_violations(&base.g1.bracket, &cm.t1));
    report.extend(commute_violations(
        Condition::BoundaryCommute,
        &base.d,
        &cm.t1,
        &cm.t0,
    ));
    report.extend(rep_rb_violations(&cm.t0, &base.rho, &cm.t1));
    Ok(report.sorted())
}

/// `x ∗ y - y ∗ x`.
fn commutator(mult: &BilinearMap) -> BilinearMap {
    let n = mult.dim_a;
    BilinearMap::skew_from_upper(n, n, |i, j| {
        tensor::sub(&mult.basis(i, j), &mult.basis(j, i))
    })
}

/// Pre-Lie axioms on both terms, `δ` multiplicative, `l` a representation
/// of the sub-adjacent Lie algebra, the `(l, r)` compatibility
/// `l_x r_y - r_y l_x = r_{x∗y} - r_y r_x`, and the four boundary identities.
pub fn verify_prelie_crossed(cm: &PreLieCrossedModule) -> Result<VerificationReport> {
    cm.check_shape()?;
    let (n, m) = (cm.dim0(), cm.dim1());
    let (p0, p1) = (&cm.p0.mult, &cm.p1.mult);
    let mut report = VerificationReport::new();
    report.extend_scoped("p0", prelie_violations(p0));
    report.extend_scoped("p1", prelie_violations(p1));
    for a in 0..m {
        for b in 0..m {
            let lhs = cm.delta.apply(&p1.basis(a, b));
            let rhs = p0.apply(&cm.delta.column(a), &cm.delta.column(b));
            report.extend(hit_eq(Condition::BoundaryHom, vec![a, b], &lhs, &rhs));
        }
    }
    report.extend(action_hom_violations(
        Condition::LeftRep,
        &commutator(p0),
        &cm.l,
    ));
    for i in 0..n {
        for j in 0..n {
            let (lx, ry) = (cm.l.basis(i), cm.r.basis(j));
            let lhs = lx.compose(ry).sub(&ry.compose(lx));
            let rhs = cm.r.at(&p0.basis(i, j)).sub(&ry.compose(cm.r.basis(i)));
            report.extend(hit(Condition::RepCompat, vec![i, j], lhs.sub(&rhs).entries));
        }
    }
    for i in 0..n {
        let x = unit(n, i);
        for a in 0..m {
            let du = cm.delta.column(a);
            let left = cm.delta.apply(&cm.l.basis(i).column(a));
            report.extend(hit_eq(
                Condition::BoundaryLeft,
                vec![i, a],
                &left,
                &p0.apply(&x, &du),
            ));
            let right = cm.delta.apply(&cm.r.basis(i).column(a));
            report.extend(hit_eq(
                Condition::BoundaryRight,
                vec![i, a],
                &right,
                &p0.apply(&du, &x),
            ));
        }
    }
    for a in 0..m {
        for b in 0..m {
            let uv = p1.basis(a, b);
            let l_du_v = cm.l.apply(&cm.delta.column(a), &unit(m, b));
            report.extend(hit_eq(Condition::LeftBoundary, vec![a, b], &l_du_v, &uv));
            let r_dv_u = cm.r.apply(&cm.delta.column(b), &unit(m, a));
            report.extend(hit_eq(Condition::RightBoundary, vec![a, b], &r_dv_u, &uv));
        }
    }
    Ok(report.sorted())
}

/// `l1 = d`, `l2 = [·,·]_{g0}` on `g0`, `l2(x, u) = ρ(x) u`, `R0 = T0`,
/// `R1 = T1`, `l3 = 0`, `R2 = 0`.
pub fn crossed_to_strict(cm: &RbLieCrossedModule) -> Result<TwoTermRbLInfinity> {
    cm.check_shape()?;
    let base = &cm.base;
    let (n, m) = (base.dim0(), base.dim1());
    let g = TwoTermRbLInfinity {
        linf: TwoTermLInfinity {
            complex: TwoTermComplex { l1: base.d.clone() },
            l2_00: base.g0.bracket.clone(),
            l2_01: base.rho.to_bilinear(),
            l3: TrilinearMap::zero(n, m, true),
        },
        rb: RbTriple {
            r0: cm.t0.clone(),
            r1: cm.t1.clone(),
            r2: BilinearMap::zero(n, n, m, true),
        },
    };
    ensure("crossed_to_strict", verify_rb_2term(&g)?)?;
    Ok(g)
}

/// `[u, v] = l2(l1 u, v)`, `ρ(x) u = l2(x, u)`, `T0 = R0`, `T1 = R1`.
pub fn strict_to_crossed(g: &TwoTermRbLInfinity) -> Result<RbLieCrossedModule> {
    g.check_shape()?;
    if !g.linf.l3.is_zero() {
        return Err(Error::NotStrict("l3 is nonzero".into()));
    }
    if !g.rb.r2.is_zero() {
        return Err(Error::NotStrict("R2 is nonzero".into()));
    }
    let m = g.dim1();
    let l = &g.linf;
    let g1 = BilinearMap::from_fn(m, m, m, true, |a, b| l.act(&l.l1(&unit(m, a)), &unit(m, b)));
    let cm = RbLieCrossedModule {
        base: LieCrossedModule {
            g0: LieAlgebra {
                bracket: l.l2_00.clone(),
            },
            g1: LieAlgebra { bracket: g1 },
            d: l.complex.l1.clone(),
            rho: Action::from_bilinear(&l.l2_01),
        },
        t0: g.rb.r0.clone(),
        t1: g.rb.r1.clone(),
    };
    ensure("strict_to_crossed", verify_rb_crossed(&cm)?)?;
    Ok(cm)
}

/// `g0 ⊕ g1` with `[x+u, y+v] = [x,y] + ρ(x)v - ρ(y)u + [u,v]` and
/// operator `T0 ⊕ T1`.
pub fn crossed_semidirect(cm: &RbLieCrossedModule) -> Result<RotaBaxterLieAlgebra> {
    cm.check_shape()?;
    let base = &cm.base;
    let (n, m) = (base.dim0(), base.dim1());
    let bracket = BilinearMap::skew_from_upper(n + m, n + m, |a, b| match (a < n, b < n) {
        (true, true) => tensor::concat(&base.g0.bracket.basis(a, b), &tensor::zeros(m)),
        (true, false) => tensor::concat(&tensor::zeros(n), &base.rho.basis(a).column(b - n)),
        _ => tensor::concat(&tensor::zeros(n), &base.g1.bracket.basis(a - n, b - n)),
    });
    let out = RotaBaxterLieAlgebra {
        base: LieAlgebra { bracket },
        r: cm.t0.direct_sum(&cm.t1),
    };
    ensure("crossed_semidirect", crate::algebra::verify_rb(&out)?)?;
    Ok(out)
}

/// `x ∗0 y = [T0 x, y]`, `u ∗1 v = [T1 u, v]`, `l_x = ρ(T0 x)`,
/// `r_x = -ρ(x) T1`.
pub fn rb_crossed_to_prelie_crossed(cm: &RbLieCrossedModule) -> Result<PreLieCrossedModule> {
    cm.check_shape()?;
    let base = &cm.base;
    let (n, m) = (base.dim0(), base.dim1());
    let mult = |b: &BilinearMap, t: &LinearMap, k: usize| {
        BilinearMap::from_fn(k, k, k, false, |i, j| b.apply(&t.column(i), &unit(k, j)))
    };
    let out = PreLieCrossedModule {
        p0: PreLieAlgebra {
            mult: mult(&base.g0.bracket, &cm.t0, n),
        },
        p1: PreLieAlgebra {
            mult: mult(&base.g1.bracket, &cm.t1, m),
        },
        delta: base.d.clone(),
        l: Action::from_fn(n, m, |i| base.rho.at(&cm.t0.column(i))),
        r: Action::from_fn(n, m, |i| base.rho.basis(i).compose(&cm.t1).neg()),
    };
    ensure("rb_crossed_to_prelie_crossed", verify_prelie_crossed(&out)?)?;
    Ok(out)
}

/// Commutator brackets on both terms, `d = δ`, `ρ = l - r`.
pub fn prelie_crossed_to_lie_crossed(pm: &PreLieCrossedModule) -> Result<LieCrossedModule> {
    pm.check_shape()?;
    let (n, m) = (pm.dim0(), pm.dim1());
    let out = LieCrossedModule {
        g0: LieAlgebra {
            bracket: commutator(&pm.p0.mult),
        },
        g1: LieAlgebra {
            bracket: commutator(&pm.p1.mult),
        },
        d: pm.delta.clone(),
        rho: Action::from_fn(n, m, |i| pm.l.basis(i).sub(pm.r.basis(i))),
    };
    ensure("prelie_crossed_to_lie_crossed", verify_lie_crossed(&out)?)?;
    Ok(out)
}

/// Crossed-module homomorphism checks: `ψ0`, `ψ1` Lie homs, `ψ0 d = d' ψ1`
/// and `ψ1(ρ(x) v) = ρ'(ψ0 x) ψ1 v`.
pub fn verify_crossed_hom(
    psi0: &LinearMap,
    psi1: &LinearMap,
    source: &LieCrossedModule,
    target: &LieCrossedModule,
) -> Result<VerificationReport> {
    source.check_shape()?;
    target.check_shape()?;
    let (n, m) = (source.dim0(), source.dim1());
    psi0.check_shape("psi0", target.dim0(), n)?;
    psi1.check_shape("psi1", target.dim1(), m)?;
    let mut report = VerificationReport::new();
    report.extend_scoped(
        "psi0",
        lie_hom_violations(psi0, &source.g0.bracket, &target.g0.bracket),
    );
    report.extend_scoped(
        "psi1",
        lie_hom_violations(psi1, &source.g1.bracket, &target.g1.bracket),
    );
    for a in 0..m {
        let lhs = psi0.apply(&source.d.column(a));
        let rhs = target.d.apply(&psi1.column(a));
        report.extend(hit_eq(Condition::BoundaryCommute, vec![a], &lhs, &rhs));
    }
    for i in 0..n {
        let rho_psi = target.rho.at(&psi0.column(i));
        for a in 0..m {
            let lhs = psi1.apply(&source.rho.basis(i).column(a));
            let rhs = rho_psi.apply(&psi1.column(a));
            report.extend(hit_eq(Condition::HomAction, vec![i, a], &lhs, &rhs));
        }
    }
    Ok(report.sorted())
}

/// `[x, y]_{T0} = [T0 x, y] - [T0 y, x]`, likewise on `g1`, and
/// `ρ_T(x) u = ρ(T0 x) u + ρ(x) T1 u`. The report certifies `(T0, T1)` as
/// a homomorphism to the original crossed module.
pub fn derived_crossed(cm: &RbLieCrossedModule) -> Result<(LieCrossedModule, VerificationReport)> {
    cm.check_shape()?;
    let base = &cm.base;
    let (n, m) = (base.dim0(), base.dim1());
    let derived = |b: &BilinearMap, t: &LinearMap, k: usize| {
        BilinearMap::skew_from_upper(k, k, |i, j| {
            tensor::sub(
                &b.apply(&t.column(i), &unit(k, j)),
                &b.apply(&t.column(j), &unit(k, i)),
            )
        })
    };
    let out = LieCrossedModule {
        g0: LieAlgebra {
            bracket: derived(&base.g0.bracket, &cm.t0, n),
        },
        g1: LieAlgebra {
            bracket: derived(&base.g1.bracket, &cm.t1, m),
        },
        d: base.d.clone(),
        rho: Action::from_fn(n, m, |i| {
            base.rho
                .at(&cm.t0.column(i))
                .add(&base.rho.basis(i).compose(&cm.t1))
        }),
    };
    ensure("derived_crossed", verify_lie_crossed(&out)?)?;
    let hom = verify_crossed_hom(&cm.t0, &cm.t1, &out, base)?;
    Ok((out, hom))
}

/// The inclusion of an ideal `h ⊆ g`, spanned by the columns of
/// `inclusion`, as a Rota-Baxter crossed module with `ρ = ad`. The ideal
/// must be closed under `R`.
pub fn ideal_inclusion(
    rba: &RotaBaxterLieAlgebra,
    inclusion: &LinearMap,
) -> Result<RbLieCrossedModule> {
    rba.check_shape()?;
    let n = rba.dim();
    let m = inclusion.cols;
    inclusion.check_shape("inclusion", n, m)?;
    let coords = |v: &[crate::scalar::Scalar], what: &str| {
        linsolve::solve(inclusion, v)
            .ok_or_else(|| Error::shape(format!("span is not closed under {what}")))
    };
    let mut g1 = BilinearMap::zero(m, m, m, true);
    for a in 0..m {
        for b in 0..m {
            let w = coords(
                &rba.base.br(&inclusion.column(a), &inclusion.column(b)),
                "the bracket",
            )?;
            for (k, x) in w.into_iter().enumerate() {
                g1.set(k, a, b, x);
            }
        }
    }
    let mut maps = Vec::with_capacity(n);
    for i in 0..n {
        let mut cols = Vec::with_capacity(m);
        for a in 0..m {
            cols.push(coords(
                &rba.base.br(&unit(n, i), &inclusion.column(a)),
                "ad",
            )?);
        }
        maps.push(LinearMap::from_columns(m, m, |a| cols[a].clone()));
    }
    let mut t1_cols = Vec::with_capacity(m);
    for a in 0..m {
        t1_cols.push(coords(&rba.r.apply(&inclusion.column(a)), "R")?);
    }
    let cm = RbLieCrossedModule {
        base: LieCrossedModule {
            g0: rba.base.clone(),
            g1: LieAlgebra { bracket: g1 },
            d: inclusion.clone(),
            rho: Action { dim_v: m, maps },
        },
        t0: rba.r.clone(),
        t1: LinearMap::from_columns(m, m, |a| t1_cols[a].clone()),
    };
    ensure("ideal_inclusion", verify_rb_crossed(&cm)?)?;
    Ok(cm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::from_ints;

    fn aff1() -> LieAlgebra {
        LieAlgebra::from_upper(2, |_, _| from_ints(&[0, 1]))
    }

    fn aff1_ideal(r: LinearMap) -> RbLieCrossedModule {
        let rba = RotaBaxterLieAlgebra { base: aff1(), r };
        ideal_inclusion(&rba, &LinearMap::from_int_rows(&[&[0], &[1]])).unwrap()
    }

    #[test]
    fn ideal_with_zero_operator_is_valid() {
        let cm = aff1_ideal(LinearMap::zero(2, 2));
        assert!(verify_rb_crossed(&cm).unwrap().is_valid());
        assert_eq!(cm.base.rho.basis(0), &LinearMap::from_int_rows(&[&[1]]));
    }

    #[test]
    fn ideal_not_closed_under_operator_is_rejected() {
        let rba = RotaBaxterLieAlgebra {
            base: aff1(),
            r: LinearMap::from_int_rows(&[&[0, 1], &[0, 0]]),
        };
        let inc = LinearMap::from_int_rows(&[&[0], &[1]]);
        assert!(matches!(
            ideal_inclusion(&rba, &inc),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn peiffer_mutation_is_localized() {
        let mut cm = aff1_ideal(LinearMap::zero(2, 2)).base;
        *cm.rho.maps[1].get_mut(0, 0) += crate::scalar::one();
        let report = verify_lie_crossed(&cm).unwrap();
        let conds = report.conditions();
        assert!(conds.contains(&Condition::Peiffer1) || conds.contains(&Condition::Peiffer2));
        assert!(conds.iter().all(|c| matches!(
            c,
            Condition::Peiffer1 | Condition::Peiffer2 | Condition::Action | Condition::Derivation
        )));
    }

    #[test]
    fn strict_round_trip() {
        let cm = aff1_ideal(LinearMap::zero(2, 2));
        let g = crossed_to_strict(&cm).unwrap();
        assert_eq!(strict_to_crossed(&g).unwrap(), cm);
    }
}
