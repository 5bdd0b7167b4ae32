//! 2-term L∞-algebras, Rota-Baxter triples on them and their homomorphisms.
//!
//! Degree conventions: `l2_00` is the bracket on `g0`, `l2_01(x, u)` is the
//! bracket of `x ∈ g0` with `u ∈ g1`, extended by `l2(u, x) = -l2(x, u)`;
//! `l2` vanishes on `g1 × g1`.

use crate::error::{Error, Result};
use crate::linsolve;
use crate::par;
use crate::report::{hit, hit_eq, Condition, VerificationReport, Violation};
use crate::scalar::Scalar;
use crate::tensor::{self, unit, BilinearMap, LinearMap, TrilinearMap, Vector};

/// `g1 --l1--> g0`, with `l1` a `dim0 x dim1` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoTermComplex {
    pub l1: LinearMap,
}

impl TwoTermComplex {
    pub fn dim0(&self) -> usize {
        self.l1.rows
    }

    pub fn dim1(&self) -> usize {
        self.l1.cols
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoTermLInfinity {
    pub complex: TwoTermComplex,
    pub l2_00: BilinearMap,
    pub l2_01: BilinearMap,
    pub l3: TrilinearMap,
}

impl TwoTermLInfinity {
    /// A Lie algebra on `g0` with `g1 = 0`.
    pub fn from_lie(bracket: BilinearMap) -> Self {
        let n = bracket.dim_a;
        Self {
            complex: TwoTermComplex {
                l1: LinearMap::zero(n, 0),
            },
            l2_00: bracket,
            l2_01: BilinearMap::zero(n, 0, 0, false),
            l3: TrilinearMap::zero(n, 0, true),
        }
    }

    pub fn dim0(&self) -> usize {
        self.complex.dim0()
    }

    pub fn dim1(&self) -> usize {
        self.complex.dim1()
    }

    pub fn l1(&self, u: &[Scalar]) -> Vector {
        self.complex.l1.apply(u)
    }

    /// `l2(x, y)` on `g0`.
    pub fn br(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.l2_00.apply(x, y)
    }

    /// `l2(x, u)` for `x ∈ g0`, `u ∈ g1`.
    pub fn act(&self, x: &[Scalar], u: &[Scalar]) -> Vector {
        self.l2_01.apply(x, u)
    }

    /// `l2(u, x) = -l2(x, u)`.
    pub fn act_rev(&self, u: &[Scalar], x: &[Scalar]) -> Vector {
        tensor::neg(&self.act(x, u))
    }

    pub fn l3(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        self.l3.apply(x, y, z)
    }

    pub fn is_strict(&self) -> bool {
        self.l3.is_zero()
    }

    pub fn check_shape(&self) -> Result<()> {
        let (n, m) = (self.dim0(), self.dim1());
        self.complex.l1.check_shape("l1", n, m)?;
        self.l2_00.check_shape("l2_00", n, n, n)?;
        self.l2_01.check_shape("l2_01", n, m, m)?;
        self.l3.check_shape("l3", n, m)
    }

    pub fn e0(&self, i: usize) -> Vector {
        unit(self.dim0(), i)
    }

    pub fn e1(&self, a: usize) -> Vector {
        unit(self.dim1(), a)
    }
}

/// Residual of condition (d) on `x_0..x_3`:
/// `Σ_a (-1)^a l2(x_a, l3(x̂_a)) + Σ_{a<b} (-1)^{a+b} l3(l2(x_a, x_b), rest)`.
pub fn jacobiator_residual(l: &TwoTermLInfinity, x: [&[Scalar]; 4]) -> Vector {
    let mut acc = tensor::zeros(l.dim1());
    for a in 0..4 {
        let rest: Vec<&[Scalar]> = (0..4).filter(|&c| c != a).map(|c| x[c]).collect();
        let term = l.act(x[a], &l.l3(rest[0], rest[1], rest[2]));
        if a % 2 == 0 {
            tensor::add_assign(&mut acc, &term);
        } else {
            tensor::sub_assign(&mut acc, &term);
        }
    }
    for a in 0..4 {
        for b in (a + 1)..4 {
            let rest: Vec<&[Scalar]> = (0..4).filter(|&c| c != a && c != b).map(|c| x[c]).collect();
            let term = l.l3(&l.br(x[a], x[b]), rest[0], rest[1]);
            if (a + b) % 2 == 0 {
                tensor::add_assign(&mut acc, &term);
            } else {
                tensor::sub_assign(&mut acc, &term);
            }
        }
    }
    acc
}

/// Conditions (a)–(d) plus the skew and alternating flags.
pub fn verify_2term(l: &TwoTermLInfinity) -> Result<VerificationReport> {
    l.check_shape()?;
    let (n, m) = (l.dim0(), l.dim1());
    let mut report: VerificationReport = l
        .l2_00
        .skew_defects()
        .into_iter()
        .map(|(i, j, r)| Violation::new(Condition::L2Skew, vec![i, j], r))
        .collect();
    for (i, j, k, r) in l.l3.alternation_defects() {
        report.push(Violation::new(Condition::L3Alt, vec![i, j, k], r));
    }

    let xu: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..m).map(move |a| (i, a))).collect();
    report.extend(par::check_each(&xu, |&(i, a)| {
        let (x, u) = (l.e0(i), l.e1(a));
        hit_eq(
            Condition::A1,
            vec![i, a],
            &l.l1(&l.act(&x, &u)),
            &l.br(&x, &l.l1(&u)),
        )
    }));

    let uv: Vec<(usize, usize)> = (0..m).flat_map(|a| (a..m).map(move |b| (a, b))).collect();
    report.extend(par::check_each(&uv, |&(a, b)| {
        let (u, v) = (l.e1(a), l.e1(b));
        let lhs = l.act(&l.l1(&u), &v);
        let rhs = l.act_rev(&u, &l.l1(&v));
        hit_eq(Condition::A2, vec![a, b], &lhs, &rhs)
    }));

    let triples = par::triples(n);
    report.extend(par::check_each(&triples, |&(i, j, k)| {
        let (x, y, z) = (l.e0(i), l.e0(j), l.e0(k));
        let rhs = tensor::sum(
            n,
            [
                &l.br(&x, &l.br(&y, &z)),
                &l.br(&z, &l.br(&x, &y)),
                &l.br(&y, &l.br(&z, &x)),
            ],
        );
        hit_eq(Condition::B, vec![i, j, k], &l.l1(&l.l3(&x, &y, &z)), &rhs)
    }));

    let xyu: Vec<(usize, usize, usize)> = par::pairs(n)
        .into_iter()
        .flat_map(|(i, j)| (0..m).map(move |a| (i, j, a)))
        .collect();
    report.extend(par::check_each(&xyu, |&(i, j, a)| {
        let (x, y, u) = (l.e0(i), l.e0(j), l.e1(a));
        let rhs = tensor::sum(
            m,
            [
                &l.act(&x, &l.act(&y, &u)),
                &l.act_rev(&u, &l.br(&x, &y)),
                &l.act(&y, &l.act_rev(&u, &x)),
            ],
        );
        hit_eq(Condition::C, vec![i, j, a], &l.l3(&x, &y, &l.l1(&u)), &rhs)
    }));

    if !l.l3.is_zero() {
        let quads = par::quadruples(n);
        report.extend(par::check_each(&quads, |q| {
            let e: Vec<Vector> = q.iter().map(|&i| l.e0(i)).collect();
            let r = jacobiator_residual(l, [&e[0], &e[1], &e[2], &e[3]]);
            hit(Condition::D, q.to_vec(), r)
        }));
    }
    Ok(report.sorted())
}

/// `(R0, R1, R2)` with `R2: Λ²g0 → g1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RbTriple {
    pub r0: LinearMap,
    pub r1: LinearMap,
    pub r2: BilinearMap,
}

impl RbTriple {
    pub fn zero(dim0: usize, dim1: usize) -> Self {
        Self {
            r0: LinearMap::zero(dim0, dim0),
            r1: LinearMap::zero(dim1, dim1),
            r2: BilinearMap::zero(dim0, dim0, dim1, true),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoTermRbLInfinity {
    pub linf: TwoTermLInfinity,
    pub rb: RbTriple,
}

impl TwoTermRbLInfinity {
    pub fn dim0(&self) -> usize {
        self.linf.dim0()
    }

    pub fn dim1(&self) -> usize {
        self.linf.dim1()
    }

    pub fn is_strict(&self) -> bool {
        self.linf.is_strict() && self.rb.r2.is_zero()
    }

    pub fn check_shape(&self) -> Result<()> {
        self.linf.check_shape()?;
        let (n, m) = (self.dim0(), self.dim1());
        self.rb.r0.check_shape("r0", n, n)?;
        self.rb.r1.check_shape("r1", m, m)?;
        self.rb.r2.check_shape("r2", n, n, m)
    }

    pub fn r0(&self, x: &[Scalar]) -> Vector {
        self.rb.r0.apply(x)
    }

    pub fn r1(&self, u: &[Scalar]) -> Vector {
        self.rb.r1.apply(u)
    }

    pub fn r2(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.rb.r2.apply(x, y)
    }
}

/// `R0(l2(R0x, y) + l2(x, R0y)) - l2(R0x, R0y)`, the defect that condition
/// (1) asks `l1 R2` to cancel.
pub fn rb_defect0(g: &TwoTermRbLInfinity, x: &[Scalar], y: &[Scalar]) -> Vector {
    let l = &g.linf;
    let (rx, ry) = (g.r0(x), g.r0(y));
    let inner = tensor::add(&l.br(&rx, y), &l.br(x, &ry));
    tensor::sub(&g.r0(&inner), &l.br(&rx, &ry))
}

/// Condition (2) residual
/// `R1(l2(R1u, x) + l2(u, R0x)) - l2(R1u, R0x) - R2(l1u, x)`.
pub fn rb2_residual(g: &TwoTermRbLInfinity, u: &[Scalar], x: &[Scalar]) -> Vector {
    let l = &g.linf;
    let r1u = g.r1(u);
    let r0x = g.r0(x);
    let inner = tensor::add(&l.act_rev(&r1u, x), &l.act_rev(u, &r0x));
    let lhs = tensor::sub(&g.r1(&inner), &l.act_rev(&r1u, &r0x));
    tensor::sub(&lhs, &g.r2(&l.l1(u), x))
}

/// Condition (3) residual: the three grouped summands summed over cyclic
/// permutations of `(x1, x2, x3)`, plus `l3(R0x1, R0x2, R0x3)` once.
pub fn rb3_residual(g: &TwoTermRbLInfinity, x1: &[Scalar], x2: &[Scalar], x3: &[Scalar]) -> Vector {
    let l = &g.linf;
    let group = |a: &[Scalar], b: &[Scalar], c: &[Scalar]| {
        let (ra, rb, rc) = (g.r0(a), g.r0(b), g.r0(c));
        let r2bc = g.r2(b, c);
        let first = l.act(&ra, &r2bc);
        let second = g.r2(c, &tensor::sub(&l.br(&ra, b), &l.br(&rb, a)));
        let third = g.r1(&tensor::sub(&l.act_rev(&r2bc, a), &l.l3(&rb, &rc, a)));
        tensor::sum(g.dim1(), [&first, &second, &third])
    };
    let mut acc = group(x1, x2, x3);
    tensor::add_assign(&mut acc, &group(x2, x3, x1));
    tensor::add_assign(&mut acc, &group(x3, x1, x2));
    tensor::add_assign(&mut acc, &l.l3(&g.r0(x1), &g.r0(x2), &g.r0(x3)));
    acc
}

/// Chain-map property and conditions (1)–(3).
pub fn verify_rb_triple(g: &TwoTermRbLInfinity) -> Result<VerificationReport> {
    g.check_shape()?;
    let l = &g.linf;
    let (n, m) = (g.dim0(), g.dim1());
    let mut report: VerificationReport =
        g.rb.r2
            .skew_defects()
            .into_iter()
            .map(|(i, j, r)| Violation::new(Condition::R2Skew, vec![i, j], r))
            .collect();
    for a in 0..m {
        let u = l.e1(a);
        report.extend(hit_eq(
            Condition::ChainMap,
            vec![a],
            &l.l1(&g.r1(&u)),
            &g.r0(&l.l1(&u)),
        ));
    }

    let pairs = par::pairs(n);
    report.extend(par::check_each(&pairs, |&(i, j)| {
        let (x, y) = (l.e0(i), l.e0(j));
        hit_eq(
            Condition::Rb1,
            vec![i, j],
            &rb_defect0(g, &x, &y),
            &l.l1(&g.r2(&x, &y)),
        )
    }));

    let ux: Vec<(usize, usize)> = (0..m).flat_map(|a| (0..n).map(move |i| (a, i))).collect();
    report.extend(par::check_each(&ux, |&(a, i)| {
        hit(
            Condition::Rb2,
            vec![a, i],
            rb2_residual(g, &l.e1(a), &l.e0(i)),
        )
    }));

    let triples = par::triples(n);
    report.extend(par::check_each(&triples, |&(i, j, k)| {
        let r = rb3_residual(g, &l.e0(i), &l.e0(j), &l.e0(k));
        hit(Condition::Rb3, vec![i, j, k], r)
    }));
    Ok(report.sorted())
}

/// The 2-term L∞ conditions followed by the Rota-Baxter triple conditions.
pub fn verify_rb_2term(g: &TwoTermRbLInfinity) -> Result<VerificationReport> {
    let mut report = verify_2term(&g.linf)?;
    report.extend(verify_rb_triple(g)?);
    Ok(report.sorted())
}

/// Outcome of solving condition (1) for `R2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Completion {
    Solved(RbTriple),
    /// The defect at `pair` is not in the image of `l1`.
    Unsolvable {
        pair: (usize, usize),
        defect: Vector,
    },
    /// `R2` solves condition (1) but the full triple still fails.
    PostSolveFailed {
        triple: RbTriple,
        report: VerificationReport,
    },
}

/// Solves `l1 R2(x, y) = R0(l2(R0x, y) + l2(x, R0y)) - l2(R0x, R0y)` pair by
/// pair. Each pair takes the basic solution of its linear system, so free
/// coordinates are zero and pivots are taken left to right.
pub fn complete_rb_triple(
    l: &TwoTermLInfinity,
    r0: &LinearMap,
    r1: &LinearMap,
) -> Result<Completion> {
    l.check_shape()?;
    let (n, m) = (l.dim0(), l.dim1());
    r0.check_shape("r0", n, n)?;
    r1.check_shape("r1", m, m)?;
    for a in 0..m {
        let u = l.e1(a);
        if l.l1(&r1.apply(&u)) != r0.apply(&l.l1(&u)) {
            return Err(Error::NotChainMap(a));
        }
    }
    let mut g = TwoTermRbLInfinity {
        linf: l.clone(),
        rb: RbTriple {
            r0: r0.clone(),
            r1: r1.clone(),
            r2: BilinearMap::zero(n, n, m, true),
        },
    };
    let mut solved = Vec::new();
    for (i, j) in par::pairs(n) {
        let defect = rb_defect0(&g, &l.e0(i), &l.e0(j));
        match linsolve::solve(&l.complex.l1, &defect) {
            Some(w) => solved.push(((i, j), w)),
            None => {
                return Ok(Completion::Unsolvable {
                    pair: (i, j),
                    defect,
                })
            }
        }
    }
    let mut it = solved.into_iter();
    g.rb.r2 =
        BilinearMap::skew_from_upper(n, m, |_, _| it.next().map(|(_, w)| w).unwrap_or_default());
    let report = verify_rb_triple(&g)?;
    if report.is_valid() {
        Ok(Completion::Solved(g.rb))
    } else {
        Ok(Completion::PostSolveFailed {
            triple: g.rb,
            report,
        })
    }
}

/// `(φ0, φ1, φ2)` with `φ2: Λ²g0 → g1'`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomMaps {
    pub phi0: LinearMap,
    pub phi1: LinearMap,
    pub phi2: BilinearMap,
}

impl HomMaps {
    pub fn identity(dim0: usize, dim1: usize) -> Self {
        Self {
            phi0: LinearMap::identity(dim0),
            phi1: LinearMap::identity(dim1),
            phi2: BilinearMap::zero(dim0, dim0, dim1, true),
        }
    }

    fn check_shape(&self, source: &TwoTermLInfinity, target: &TwoTermLInfinity) -> Result<()> {
        let (n, m) = (source.dim0(), source.dim1());
        let (n2, m2) = (target.dim0(), target.dim1());
        self.phi0.check_shape("phi0", n2, n)?;
        self.phi1.check_shape("phi1", m2, m)?;
        self.phi2.check_shape("phi2", n, n, m2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LInfinityHom {
    pub source: TwoTermLInfinity,
    pub target: TwoTermLInfinity,
    pub maps: HomMaps,
}

impl LInfinityHom {
    pub fn identity(l: &TwoTermLInfinity) -> Self {
        Self {
            source: l.clone(),
            target: l.clone(),
            maps: HomMaps::identity(l.dim0(), l.dim1()),
        }
    }
}

fn hom_violations(
    source: &TwoTermLInfinity,
    target: &TwoTermLInfinity,
    f: &HomMaps,
) -> Result<VerificationReport> {
    source.check_shape()?;
    target.check_shape()?;
    f.check_shape(source, target)?;
    let (s, t) = (source, target);
    let (n, m) = (s.dim0(), s.dim1());
    let f0 = |x: &[Scalar]| f.phi0.apply(x);
    let f1 = |u: &[Scalar]| f.phi1.apply(u);
    let f2 = |x: &[Scalar], y: &[Scalar]| f.phi2.apply(x, y);

    let mut report: VerificationReport = f
        .phi2
        .skew_defects()
        .into_iter()
        .map(|(i, j, r)| Violation::new(Condition::Phi2Skew, vec![i, j], r))
        .collect();
    for a in 0..m {
        let u = s.e1(a);
        report.extend(hit_eq(
            Condition::HomChain,
            vec![a],
            &t.l1(&f1(&u)),
            &f0(&s.l1(&u)),
        ));
    }

    let pairs = par::pairs(n);
    report.extend(par::check_each(&pairs, |&(i, j)| {
        let (x, y) = (s.e0(i), s.e0(j));
        let rhs = tensor::sub(&f0(&s.br(&x, &y)), &t.br(&f0(&x), &f0(&y)));
        hit_eq(Condition::Hom1, vec![i, j], &t.l1(&f2(&x, &y)), &rhs)
    }));

    let xu: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..m).map(move |a| (i, a))).collect();
    report.extend(par::check_each(&xu, |&(i, a)| {
        let (x, u) = (s.e0(i), s.e1(a));
        let rhs = tensor::sub(&f1(&s.act(&x, &u)), &t.act(&f0(&x), &f1(&u)));
        hit_eq(Condition::Hom2, vec![i, a], &f2(&x, &s.l1(&u)), &rhs)
    }));

    let triples = par::triples(n);
    report.extend(par::check_each(&triples, |&(i, j, k)| {
        let (x, y, z) = (s.e0(i), s.e0(j), s.e0(k));
        let m2 = t.dim1();
        let lhs = tensor::sum(
            m2,
            [
                &t.act_rev(&f2(&x, &y), &f0(&z)),
                &f2(&s.br(&x, &y), &z),
                &f1(&s.l3(&x, &y, &z)),
            ],
        );
        let rhs = tensor::sum(
            m2,
            [
                &t.l3(&f0(&x), &f0(&y), &f0(&z)),
                &t.act(&f0(&x), &f2(&y, &z)),
                &t.act_rev(&f2(&x, &z), &f0(&y)),
                &f2(&x, &s.br(&y, &z)),
                &f2(&s.br(&x, &z), &y),
            ],
        );
        hit_eq(Condition::Hom3, vec![i, j, k], &lhs, &rhs)
    }));
    Ok(report)
}

/// Chain-map property and conditions (1)–(3) of an L∞-homomorphism.
pub fn verify_hom(f: &LInfinityHom) -> Result<VerificationReport> {
    Ok(hom_violations(&f.source, &f.target, &f.maps)?.sorted())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RbLInfinityHom {
    pub source: TwoTermRbLInfinity,
    pub target: TwoTermRbLInfinity,
    pub maps: HomMaps,
    pub phi3: LinearMap,
}

impl RbLInfinityHom {
    pub fn identity(g: &TwoTermRbLInfinity) -> Self {
        Self {
            source: g.clone(),
            target: g.clone(),
            maps: HomMaps::identity(g.dim0(), g.dim1()),
            phi3: LinearMap::zero(g.dim1(), g.dim0()),
        }
    }

    pub fn underlying(&self) -> LInfinityHom {
        LInfinityHom {
            source: self.source.linf.clone(),
            target: self.target.linf.clone(),
            maps: self.maps.clone(),
        }
    }
}

/// Residual of the Rota-Baxter compatibility on a pair, with the bracket of
/// `φ3(x)` and `φ3(y)` read as the arrow part of the bracket of the
/// morphisms `F3(x)` and `F3(y)`:
/// `l2'(φ3x, R0'φ0y) + l2'(R0'φ0x, φ3y) + l2'(l1'φ3x, φ3y)`, and the
/// two-argument `φ3(a, b)` read as `φ3(l2(a, b))`.
pub fn rblh3_residual(f: &RbLInfinityHom, x: &[Scalar], y: &[Scalar]) -> Vector {
    let (s, t) = (&f.source, &f.target);
    let f0 = |v: &[Scalar]| f.maps.phi0.apply(v);
    let f1 = |u: &[Scalar]| f.maps.phi1.apply(u);
    let f2 = |a: &[Scalar], b: &[Scalar]| f.maps.phi2.apply(a, b);
    let f3 = |v: &[Scalar]| f.phi3.apply(v);
    let (tl, sl) = (&t.linf, &s.linf);
    let (f0x, f0y) = (f0(x), f0(y));
    let (f3x, f3y) = (f3(x), f3(y));
    let (r0x, r0y) = (s.r0(x), s.r0(y));
    let lhs = tensor::sum(
        t.dim1(),
        [
            &t.r2(&f0x, &f0y),
            &t.r1(&tl.act_rev(&f3x, &f0y)),
            &t.r1(&tl.act(&f0x, &f3y)),
            &t.r1(&f2(&r0x, y)),
            &t.r1(&f2(x, &r0y)),
            &f3(&sl.br(&r0x, y)),
            &f3(&sl.br(x, &r0y)),
        ],
    );
    let bracket_arrow = tensor::sum(
        t.dim1(),
        [
            &tl.act_rev(&f3x, &t.r0(&f0y)),
            &tl.act(&t.r0(&f0x), &f3y),
            &tl.act(&tl.l1(&f3x), &f3y),
        ],
    );
    let rhs = tensor::sum(
        t.dim1(),
        [&bracket_arrow, &f2(&r0x, &r0y), &f1(&s.r2(x, y))],
    );
    tensor::sub(&lhs, &rhs)
}

/// Underlying L∞-homomorphism conditions plus the three Rota-Baxter
/// compatibilities.
pub fn verify_rb_hom(f: &RbLInfinityHom) -> Result<VerificationReport> {
    f.source.check_shape()?;
    f.target.check_shape()?;
    let (s, t) = (&f.source, &f.target);
    let (n, m) = (s.dim0(), s.dim1());
    f.phi3.check_shape("phi3", t.dim1(), n)?;
    let mut report = hom_violations(&s.linf, &t.linf, &f.maps)?;
    let f0 = |v: &[Scalar]| f.maps.phi0.apply(v);
    let f1 = |u: &[Scalar]| f.maps.phi1.apply(u);
    for i in 0..n {
        let x = s.linf.e0(i);
        let lhs = t.linf.l1(&f.phi3.apply(&x));
        let rhs = tensor::sub(&f0(&s.r0(&x)), &t.r0(&f0(&x)));
        report.extend(hit_eq(Condition::RbLh1, vec![i], &lhs, &rhs));
    }
    for a in 0..m {
        let u = s.linf.e1(a);
        let lhs = f.phi3.apply(&s.linf.l1(&u));
        let rhs = tensor::sub(&f1(&s.r1(&u)), &t.r1(&f1(&u)));
        report.extend(hit_eq(Condition::RbLh2, vec![a], &lhs, &rhs));
    }
    let pairs = par::pairs(n);
    report.extend(par::check_each(&pairs, |&(i, j)| {
        let r = rblh3_residual(f, &s.linf.e0(i), &s.linf.e0(j));
        hit(Condition::RbLh3, vec![i, j], r)
    }));
    Ok(report.sorted())
}

fn compose_maps(g: &HomMaps, f: &HomMaps) -> HomMaps {
    let n = f.phi0.cols;
    let phi2 = BilinearMap::from_fn(n, n, g.phi1.rows, true, |i, j| {
        tensor::add(
            &g.phi1.apply(&f.phi2.basis(i, j)),
            &g.phi2.apply(&f.phi0.column(i), &f.phi0.column(j)),
        )
    });
    HomMaps {
        phi0: g.phi0.compose(&f.phi0),
        phi1: g.phi1.compose(&f.phi1),
        phi2: BilinearMap {
            skew: f.phi2.skew && g.phi2.skew,
            ..phi2
        },
    }
}

/// `g ∘ f` for L∞-homomorphisms.
pub fn compose_homs(g: &LInfinityHom, f: &LInfinityHom) -> Result<LInfinityHom> {
    if f.target != g.source {
        return Err(Error::SourceTargetMismatch);
    }
    let out = LInfinityHom {
        source: f.source.clone(),
        target: g.target.clone(),
        maps: compose_maps(&g.maps, &f.maps),
    };
    if verify_hom(f)?.is_valid() && verify_hom(g)?.is_valid() {
        let report = verify_hom(&out)?;
        if !report.is_valid() {
            return Err(Error::broken("compose_homs", report));
        }
    }
    Ok(out)
}

/// `g ∘ f` with `(g∘f)_2(x,y) = g1 f2(x,y) + g2(f0x, f0y)` and
/// `(g∘f)_3(x) = g1 f3(x) + g3(f0x)`. The result is re-verified whenever
/// both inputs verify.
pub fn compose_rb_homs(g: &RbLInfinityHom, f: &RbLInfinityHom) -> Result<RbLInfinityHom> {
    if f.target != g.source {
        return Err(Error::SourceTargetMismatch);
    }
    let phi3 = g
        .maps
        .phi1
        .compose(&f.phi3)
        .add(&g.phi3.compose(&f.maps.phi0));
    let out = RbLInfinityHom {
        source: f.source.clone(),
        target: g.target.clone(),
        maps: compose_maps(&g.maps, &f.maps),
        phi3,
    };
    if verify_rb_hom(f)?.is_valid() && verify_rb_hom(g)?.is_valid() {
        let report = verify_rb_hom(&out)?;
        if !report.is_valid() {
            return Err(Error::broken("compose_rb_homs", report));
        }
    }
    Ok(out)
}
