//! Lie, pre-Lie and Rota-Baxter Lie algebras with their representations.

use crate::error::{Error, Result};
use crate::par;
use crate::report::{hit, hit_eq, Condition, VerificationReport, Violation};
use crate::scalar::Scalar;
use crate::tensor::{self, unit, Action, BilinearMap, LinearMap, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    pub bracket: BilinearMap,
}

impl LieAlgebra {
    pub fn new(bracket: BilinearMap) -> Result<Self> {
        let n = bracket.dim_a;
        bracket.check_shape("bracket", n, n, n)?;
        Ok(Self { bracket })
    }

    pub fn abelian(n: usize) -> Self {
        Self {
            bracket: BilinearMap::zero(n, n, n, true),
        }
    }

    /// Skew bracket from its values `[e_i, e_j]` for `i < j`.
    pub fn from_upper(n: usize, f: impl FnMut(usize, usize) -> Vector) -> Self {
        Self {
            bracket: BilinearMap::skew_from_upper(n, n, f),
        }
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim_a
    }

    pub fn br(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.bracket.apply(x, y)
    }

    pub fn ad(&self, x: &[Scalar]) -> LinearMap {
        self.bracket.left_matrix(x)
    }

    pub fn check_shape(&self, what: &str) -> Result<()> {
        let n = self.dim();
        self.bracket.check_shape(what, n, n, n)
    }
}

/// Skew and Jacobi violations of a bracket. Jacobi runs over `i < j < k`
/// when the bracket is skew and over all cyclic classes otherwise.
pub fn bracket_violations(bracket: &BilinearMap) -> VerificationReport {
    let n = bracket.dim_a;
    let mut report: VerificationReport = bracket
        .skew_defects()
        .into_iter()
        .map(|(i, j, r)| Violation::new(Condition::Skew, vec![i, j], r))
        .collect();
    let triples: Vec<(usize, usize, usize)> = if report.is_empty() {
        par::triples(n)
    } else {
        let mut t = Vec::new();
        for i in 0..n {
            for j in i..n {
                for k in i..n {
                    t.push((i, j, k));
                }
            }
        }
        t
    };
    report.extend(par::check_each(&triples, |&(i, j, k)| {
        let e = |a| unit(n, a);
        let r = tensor::sum(
            n,
            [
                &bracket.apply(&e(i), &bracket.basis(j, k)),
                &bracket.apply(&e(j), &bracket.basis(k, i)),
                &bracket.apply(&e(k), &bracket.basis(i, j)),
            ],
        );
        hit(Condition::Jacobi, vec![i, j, k], r)
    }));
    report
}

pub fn verify_lie(alg: &LieAlgebra) -> Result<VerificationReport> {
    alg.check_shape("bracket")?;
    Ok(bracket_violations(&alg.bracket).sorted())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotaBaxterLieAlgebra {
    pub base: LieAlgebra,
    pub r: LinearMap,
}

impl RotaBaxterLieAlgebra {
    pub fn new(base: LieAlgebra, r: LinearMap) -> Result<Self> {
        let rba = Self { base, r };
        rba.check_shape()?;
        Ok(rba)
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn check_shape(&self) -> Result<()> {
        self.base.check_shape("bracket")?;
        let n = self.dim();
        self.r.check_shape("r", n, n)
    }
}

pub(crate) fn ordered_pairs(n: usize, skew: bool) -> Vec<(usize, usize)> {
    if skew {
        par::pairs(n)
    } else {
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
    }
}

/// `[R x, R y] - R([R x, y] + [x, R y])` on basis vectors `i`, `j`.
pub fn rb_defect(bracket: &BilinearMap, r: &LinearMap, i: usize, j: usize) -> Vector {
    let n = bracket.dim_a;
    let rx = r.column(i);
    let ry = r.column(j);
    let lhs = bracket.apply(&rx, &ry);
    let inner = tensor::add(
        &bracket.apply(&rx, &unit(n, j)),
        &bracket.apply(&unit(n, i), &ry),
    );
    tensor::sub(&lhs, &r.apply(&inner))
}

/// Rota-Baxter identity violations of `r` on `bracket`.
pub fn rb_violations(bracket: &BilinearMap, r: &LinearMap) -> VerificationReport {
    let skew = bracket.skew_defects().is_empty();
    let pairs = ordered_pairs(bracket.dim_a, skew);
    par::check_each(&pairs, |&(i, j)| {
        hit(
            Condition::RotaBaxter,
            vec![i, j],
            rb_defect(bracket, r, i, j),
        )
    })
}

/// Checks the base Lie algebra and the Rota-Baxter identity.
pub fn verify_rb(rba: &RotaBaxterLieAlgebra) -> Result<VerificationReport> {
    rba.check_shape()?;
    let mut report = bracket_violations(&rba.base.bracket);
    report.extend(rb_violations(&rba.base.bracket, &rba.r));
    Ok(report.sorted())
}

/// Rota-Baxter test that stops at the first failing pair `i < j`. The
/// bracket is assumed skew.
pub fn is_rota_baxter(bracket: &BilinearMap, r: &LinearMap) -> bool {
    let n = bracket.dim_a;
    (0..n).all(|i| (i + 1..n).all(|j| tensor::is_zero(&rb_defect(bracket, r, i, j))))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PreLieAlgebra {
    pub mult: BilinearMap,
}

impl PreLieAlgebra {
    pub fn new(mult: BilinearMap) -> Result<Self> {
        let n = mult.dim_a;
        mult.check_shape("mult", n, n, n)?;
        Ok(Self { mult })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            mult: BilinearMap::zero(n, n, n, false),
        }
    }

    pub fn dim(&self) -> usize {
        self.mult.dim_a
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.mult.apply(x, y)
    }

    pub fn check_shape(&self, what: &str) -> Result<()> {
        let n = self.dim();
        self.mult.check_shape(what, n, n, n)
    }
}

/// Associator symmetry `(x,y,z) = (y,x,z)` over `i < j` and every `k`.
pub fn prelie_violations(mult: &BilinearMap) -> VerificationReport {
    let n = mult.dim_a;
    let triples: Vec<(usize, usize, usize)> = par::pairs(n)
        .into_iter()
        .flat_map(|(i, j)| (0..n).map(move |k| (i, j, k)))
        .collect();
    par::check_each(&triples, |&(i, j, k)| {
        let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
        let assoc = |a: &[Scalar], b: &[Scalar]| {
            tensor::sub(
                &mult.apply(&mult.apply(a, b), &z),
                &mult.apply(a, &mult.apply(b, &z)),
            )
        };
        hit_eq(
            Condition::PreLie,
            vec![i, j, k],
            &assoc(&x, &y),
            &assoc(&y, &x),
        )
    })
}

pub fn verify_prelie(p: &PreLieAlgebra) -> Result<VerificationReport> {
    p.check_shape("mult")?;
    Ok(prelie_violations(&p.mult).sorted())
}

/// `phi([x, y]) - [phi x, phi y]` over source pairs.
pub fn lie_hom_violations(
    phi: &LinearMap,
    source: &BilinearMap,
    target: &BilinearMap,
) -> VerificationReport {
    let n = source.dim_a;
    let pairs = ordered_pairs(n, source.skew_defects().is_empty());
    par::check_each(&pairs, |&(i, j)| {
        let lhs = phi.apply(&source.basis(i, j));
        let rhs = target.apply(&phi.column(i), &phi.column(j));
        hit_eq(Condition::LieHom, vec![i, j], &lhs, &rhs)
    })
}

pub fn verify_lie_hom(
    phi: &LinearMap,
    source: &LieAlgebra,
    target: &LieAlgebra,
) -> Result<VerificationReport> {
    source.check_shape("source bracket")?;
    target.check_shape("target bracket")?;
    phi.check_shape("hom", target.dim(), source.dim())?;
    Ok(lie_hom_violations(phi, &source.bracket, &target.bracket).sorted())
}

/// `phi R = S phi` per source basis vector.
pub fn commute_violations(
    condition: Condition,
    phi: &LinearMap,
    r: &LinearMap,
    s: &LinearMap,
) -> VerificationReport {
    (0..phi.cols)
        .filter_map(|i| {
            hit_eq(
                condition,
                vec![i],
                &phi.apply(&r.column(i)),
                &s.apply(&phi.column(i)),
            )
        })
        .collect()
}

pub fn verify_rb_lie_hom(
    phi: &LinearMap,
    source: &RotaBaxterLieAlgebra,
    target: &RotaBaxterLieAlgebra,
) -> Result<VerificationReport> {
    source.check_shape()?;
    target.check_shape()?;
    phi.check_shape("hom", target.dim(), source.dim())?;
    let mut report = lie_hom_violations(phi, &source.base.bracket, &target.base.bracket);
    report.extend(commute_violations(
        Condition::RbCommute,
        phi,
        &source.r,
        &target.r,
    ));
    Ok(report.sorted())
}

/// `ρ([x, y]) - [ρ(x), ρ(y)]` over pairs, flattened row-major.
pub fn action_hom_violations(
    condition: Condition,
    bracket: &BilinearMap,
    rho: &Action,
) -> VerificationReport {
    let n = bracket.dim_a;
    let pairs = ordered_pairs(n, bracket.skew_defects().is_empty());
    par::check_each(&pairs, |&(i, j)| {
        let lhs = rho.at(&bracket.basis(i, j));
        let (a, b) = (rho.basis(i), rho.basis(j));
        let rhs = a.compose(b).sub(&b.compose(a));
        hit(condition, vec![i, j], lhs.sub(&rhs).entries)
    })
}

/// `ρ(R x) 𝓡 - 𝓡 ρ(R x) - 𝓡 ρ(x) 𝓡` per basis vector, flattened row-major.
pub fn rep_rb_violations(r: &LinearMap, rho: &Action, cal_r: &LinearMap) -> VerificationReport {
    (0..rho.dim())
        .filter_map(|i| {
            let rho_rx = rho.at(&r.column(i));
            let lhs = rho_rx.compose(cal_r);
            let rhs = cal_r
                .compose(&rho_rx)
                .add(&cal_r.compose(rho.basis(i)).compose(cal_r));
            hit(Condition::RepRb, vec![i], lhs.sub(&rhs).entries)
        })
        .collect()
}

/// A representation `(V; ρ, 𝓡)` of a Rota-Baxter Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RbRepresentation {
    pub algebra: RotaBaxterLieAlgebra,
    pub rho: Action,
    pub cal_r: LinearMap,
}

impl RbRepresentation {
    pub fn dim_v(&self) -> usize {
        self.rho.dim_v
    }

    pub fn check_shape(&self) -> Result<()> {
        self.algebra.check_shape()?;
        let v = self.dim_v();
        self.rho.check_shape("rho", self.algebra.dim(), v)?;
        self.cal_r.check_shape("calr", v, v)
    }
}

pub fn verify_representation(rep: &RbRepresentation) -> Result<VerificationReport> {
    rep.check_shape()?;
    let mut report = VerificationReport::new();
    report.extend_scoped("algebra", verify_rb(&rep.algebra)?);
    report.extend(action_hom_violations(
        Condition::RepHom,
        &rep.algebra.base.bracket,
        &rep.rho,
    ));
    report.extend(rep_rb_violations(&rep.algebra.r, &rep.rho, &rep.cal_r));
    Ok(report.sorted())
}

pub(crate) fn ensure(context: &str, report: VerificationReport) -> Result<()> {
    if report.is_valid() {
        Ok(())
    } else {
        Err(Error::broken(context, report))
    }
}

/// `x ∗ y = [R x, y]`.
pub fn prelie_from_rb(rba: &RotaBaxterLieAlgebra) -> Result<PreLieAlgebra> {
    rba.check_shape()?;
    let n = rba.dim();
    let mult = BilinearMap::from_fn(n, n, n, false, |i, j| {
        rba.base.bracket.apply(&rba.r.column(i), &unit(n, j))
    });
    let p = PreLieAlgebra { mult };
    ensure("prelie_from_rb", verify_prelie(&p)?)?;
    Ok(p)
}

/// Commutator bracket `x ∗ y - y ∗ x`.
pub fn subadjacent_lie(p: &PreLieAlgebra) -> Result<LieAlgebra> {
    p.check_shape("mult")?;
    let n = p.dim();
    let alg = LieAlgebra::from_upper(n, |i, j| {
        tensor::sub(&p.mult.basis(i, j), &p.mult.basis(j, i))
    });
    ensure("subadjacent_lie", verify_lie(&alg)?)?;
    Ok(alg)
}

/// `[x, y]_R = [R x, y] - [R y, x]`, certified so that `R` is a Lie
/// homomorphism from the new bracket to the old one.
pub fn derived_bracket(rba: &RotaBaxterLieAlgebra) -> Result<LieAlgebra> {
    rba.check_shape()?;
    let n = rba.dim();
    let b = &rba.base.bracket;
    let alg = LieAlgebra::from_upper(n, |i, j| {
        tensor::sub(
            &b.apply(&rba.r.column(i), &unit(n, j)),
            &b.apply(&rba.r.column(j), &unit(n, i)),
        )
    });
    ensure("derived_bracket", verify_lie(&alg)?)?;
    ensure(
        "derived_bracket homomorphism",
        verify_lie_hom(&rba.r, &alg, &rba.base)?,
    )?;
    Ok(alg)
}

/// `(g; ad, R)`.
pub fn adjoint_representation(rba: &RotaBaxterLieAlgebra) -> Result<RbRepresentation> {
    rba.check_shape()?;
    let n = rba.dim();
    let rep = RbRepresentation {
        algebra: rba.clone(),
        rho: Action::from_fn(n, n, |i| rba.base.ad(&unit(n, i))),
        cal_r: rba.r.clone(),
    };
    ensure("adjoint_representation", verify_representation(&rep)?)?;
    Ok(rep)
}

/// `(V*; ρ*, -𝓡*)` with `ρ*(x) = -ρ(x)ᵀ`.
pub fn dual_representation(rep: &RbRepresentation) -> Result<RbRepresentation> {
    rep.check_shape()?;
    let dual = RbRepresentation {
        algebra: rep.algebra.clone(),
        rho: Action {
            dim_v: rep.dim_v(),
            maps: rep.rho.maps.iter().map(|m| m.transpose().neg()).collect(),
        },
        cal_r: rep.cal_r.transpose().neg(),
    };
    ensure("dual_representation", verify_representation(&dual)?)?;
    Ok(dual)
}

/// Bracket on `g ⊕ V`: `[x+u, y+v] = [x,y] + ρ(x)v - ρ(y)u`.
pub fn semidirect_bracket(bracket: &BilinearMap, rho: &Action) -> BilinearMap {
    let n = bracket.dim_a;
    let m = rho.dim_v;
    BilinearMap::skew_from_upper(n + m, n + m, |a, b| match (a < n, b < n) {
        (true, true) => tensor::concat(&bracket.basis(a, b), &tensor::zeros(m)),
        (true, false) => tensor::concat(&tensor::zeros(n), &rho.basis(a).column(b - n)),
        // a < b, so only the (x, u) and (u, v) blocks remain
        _ => tensor::zeros(n + m),
    })
}

/// `g ⊕ V` with operator `R ⊕ 𝓡`, certified together with the projection
/// onto `g` as a Rota-Baxter homomorphism.
pub fn semidirect_product(rep: &RbRepresentation) -> Result<RotaBaxterLieAlgebra> {
    rep.check_shape()?;
    let n = rep.algebra.dim();
    let m = rep.dim_v();
    let out = RotaBaxterLieAlgebra {
        base: LieAlgebra {
            bracket: semidirect_bracket(&rep.algebra.base.bracket, &rep.rho),
        },
        r: rep.algebra.r.direct_sum(&rep.cal_r),
    };
    ensure("semidirect_product", verify_rb(&out)?)?;
    let projection =
        LinearMap::from_columns(
            n,
            n + m,
            |c| {
                if c < n {
                    unit(n, c)
                } else {
                    tensor::zeros(n)
                }
            },
        );
    ensure(
        "semidirect_product projection",
        verify_rb_lie_hom(&projection, &out, &rep.algebra)?,
    )?;
    Ok(out)
}
