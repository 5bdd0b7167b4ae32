//! Skeletal 2-vector-space calculus and the Rota-Baxter Lie 2-algebra view
//! of a 2-term Rota-Baxter L∞-algebra.
//!
//! A morphism of the 2-vector space built on `g1 --l1--> g0` is a pair
//! `(source, arrow)` in `g0 ⊕ g1`; its target is `source + l1(arrow)`.
//! [`compose`]`(f, g)` means "g then f" and requires `t(g) = s(f)`.

use crate::error::{Error, Result};
use crate::linsolve;
use crate::par;
use crate::report::{hit, Condition, VerificationReport, Violation};
use crate::scalar::{self, Scalar};
use crate::tensor::{self, unit, BilinearMap, LinearMap, TrilinearMap, Vector};
use crate::two_term::{
    rb2_residual, rb3_residual, rblh3_residual, HomMaps, RbLInfinityHom, RbTriple, TwoTermComplex,
    TwoTermLInfinity, TwoTermRbLInfinity,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism2V {
    pub source: Vector,
    pub arrow: Vector,
}

impl Morphism2V {
    pub fn new(source: Vector, arrow: Vector) -> Self {
        Self { source, arrow }
    }

    /// `i(x) = (x, 0)`.
    pub fn identity(x: &[Scalar], dim1: usize) -> Self {
        Self {
            source: x.to_vec(),
            arrow: tensor::zeros(dim1),
        }
    }

    pub fn target(&self, complex: &TwoTermComplex) -> Vector {
        tensor::add(&self.source, &complex.l1.apply(&self.arrow))
    }

    /// Sum in the vector space of morphisms.
    pub fn add(&self, other: &Morphism2V) -> Morphism2V {
        Morphism2V {
            source: tensor::add(&self.source, &other.source),
            arrow: tensor::add(&self.arrow, &other.arrow),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Morphism2V {
        Morphism2V {
            source: tensor::scale(c, &self.source),
            arrow: tensor::scale(c, &self.arrow),
        }
    }

    /// `g0 ⊕ g1` coordinates.
    pub fn flatten(&self) -> Vector {
        tensor::concat(&self.source, &self.arrow)
    }
}

fn fmt_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(scalar::format).collect();
    format!("[{}]", parts.join(","))
}

/// `f ∘ g`: first `g`, then `f`.
pub fn compose(complex: &TwoTermComplex, f: &Morphism2V, g: &Morphism2V) -> Result<Morphism2V> {
    let tg = g.target(complex);
    if tg != f.source {
        return Err(Error::NotComposable {
            target: fmt_vector(&tg),
            next_source: fmt_vector(&f.source),
        });
    }
    Ok(Morphism2V {
        source: g.source.clone(),
        arrow: tensor::add(&g.arrow, &f.arrow),
    })
}

/// Composes a path of morphisms in order without stopping at boundary
/// mismatches. Returns the composite and, for each junction `k` where the
/// target of the partial composite differs from the source of edge `k`,
/// the difference `target - source`.
fn chain(complex: &TwoTermComplex, edges: &[Morphism2V]) -> (Morphism2V, Vec<(usize, Vector)>) {
    let mut acc = edges[0].clone();
    let mut mismatches = Vec::new();
    for (k, e) in edges.iter().enumerate().skip(1) {
        let t = acc.target(complex);
        if t != e.source {
            mismatches.push((k, tensor::sub(&t, &e.source)));
        }
        tensor::add_assign(&mut acc.arrow, &e.arrow);
    }
    (acc, mismatches)
}

/// The Rota-Baxter Lie 2-algebra presented by a 2-term Rota-Baxter
/// L∞-algebra: objects `g0`, morphisms `g0 ⊕ g1`.
#[derive(Clone, Copy, Debug)]
pub struct RbLie2View<'a> {
    pub base: &'a TwoTermRbLInfinity,
}

impl<'a> RbLie2View<'a> {
    pub fn new(base: &'a TwoTermRbLInfinity) -> Self {
        Self { base }
    }

    fn l(&self) -> &TwoTermLInfinity {
        &self.base.linf
    }

    pub fn complex(&self) -> &TwoTermComplex {
        &self.base.linf.complex
    }

    pub fn dim0(&self) -> usize {
        self.base.dim0()
    }

    pub fn dim1(&self) -> usize {
        self.base.dim1()
    }

    pub fn s(&self, f: &Morphism2V) -> Vector {
        f.source.clone()
    }

    pub fn t(&self, f: &Morphism2V) -> Vector {
        f.target(self.complex())
    }

    pub fn i(&self, x: &[Scalar]) -> Morphism2V {
        Morphism2V::identity(x, self.dim1())
    }

    pub fn compose(&self, f: &Morphism2V, g: &Morphism2V) -> Result<Morphism2V> {
        compose(self.complex(), f, g)
    }

    /// Bracket on objects.
    pub fn bracket_objects(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.l().br(x, y)
    }

    /// `[f, g] = (l2(x, z), l2(f⃗, z) + l2(y, g⃗))` for `f: x → y`, `g: z → w`.
    pub fn bracket(&self, f: &Morphism2V, g: &Morphism2V) -> Morphism2V {
        let l = self.l();
        let y = self.t(f);
        Morphism2V {
            source: l.br(&f.source, &g.source),
            arrow: tensor::add(&l.act_rev(&f.arrow, &g.source), &l.act(&y, &g.arrow)),
        }
    }

    /// `[f, g] = (l2(x, z), l2(x, g⃗) + l2(f⃗, w))`.
    pub fn bracket_alt(&self, f: &Morphism2V, g: &Morphism2V) -> Morphism2V {
        let l = self.l();
        let w = self.t(g);
        Morphism2V {
            source: l.br(&f.source, &g.source),
            arrow: tensor::add(&l.act(&f.source, &g.arrow), &l.act_rev(&f.arrow, &w)),
        }
    }

    /// `J_{x,y,z} = ([[x,y],z], l3(x,y,z))`.
    pub fn jacobiator(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Morphism2V {
        let l = self.l();
        Morphism2V {
            source: l.br(&l.br(x, y), z),
            arrow: l.l3(x, y, z),
        }
    }

    pub fn p0(&self, x: &[Scalar]) -> Vector {
        self.base.r0(x)
    }

    /// `P1(y, u) = (R0 y, R1 u)`.
    pub fn p1(&self, f: &Morphism2V) -> Morphism2V {
        Morphism2V {
            source: self.base.r0(&f.source),
            arrow: self.base.r1(&f.arrow),
        }
    }

    /// `𝓡_{x,y} = ([P0 x, P0 y], R2(x, y))`.
    pub fn rb_iso(&self, x: &[Scalar], y: &[Scalar]) -> Morphism2V {
        Morphism2V {
            source: self.l().br(&self.p0(x), &self.p0(y)),
            arrow: self.base.r2(x, y),
        }
    }
}

/// Both expressions of the morphism bracket; they agree whenever condition
/// (a) holds, and a disagreement is reported as a broken invariant.
pub fn bracket_morphisms(
    view: &RbLie2View<'_>,
    f: &Morphism2V,
    g: &Morphism2V,
) -> Result<Morphism2V> {
    let (n, m) = (view.dim0(), view.dim1());
    for (what, v, d) in [
        ("f source", &f.source, n),
        ("f arrow", &f.arrow, m),
        ("g source", &g.source, n),
        ("g arrow", &g.arrow, m),
    ] {
        if v.len() != d {
            return Err(Error::shape(format!(
                "{what}: expected length {d}, got {}",
                v.len()
            )));
        }
    }
    let a = view.bracket(f, g);
    let b = view.bracket_alt(f, g);
    if a != b {
        let report = VerificationReport::from_iter([Violation::new(
            Condition::A2,
            vec![],
            tensor::sub(&a.arrow, &b.arrow),
        )]);
        return Err(Error::broken("bracket_morphisms", report));
    }
    Ok(a)
}

fn flags_hold(g: &TwoTermRbLInfinity) -> bool {
    g.linf.l2_00.skew_defects().is_empty()
        && g.linf.l3.alternation_defects().is_empty()
        && g.rb.r2.skew_defects().is_empty()
}

/// Junction numbering of the coherence diagram for a triple `(x, y, z)`,
/// with `X = P0 x` and so on. Left path: 1 after the Jacobiator, 2 at `A`,
/// 3 at `B`, 4 at `C`, 5 at the end `F`. Right path: 6 after the identity,
/// 7 at the bracket node below it, 8 at `D`, 9 at `E`, 10 at the end `F`.
pub struct RbCohPaths {
    pub left: Morphism2V,
    pub right: Morphism2V,
    pub mismatches: Vec<(usize, Vector)>,
}

/// Builds both composites of the Rota-Baxter coherence diagram on a triple.
/// Nodes `B`–`F` are evaluated as printed; edges labelled `1 + m` have the
/// printed node as source and the arrow part of `m`.
pub fn rbcoh_paths(view: &RbLie2View<'_>, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> RbCohPaths {
    let v = view;
    let br = |a: &[Scalar], b: &[Scalar]| v.bracket_objects(a, b);
    let p = |a: &[Scalar]| v.p0(a);
    let one = |a: &[Scalar]| v.i(a);
    let n = v.dim0();
    let (bx, by, bz) = (p(x), p(y), p(z));
    let sum = |parts: &[Vector]| tensor::sum(n, parts.iter());
    let pb = |a: &[Scalar], b: &[Scalar]| p(&br(a, b));

    let node_b = sum(&[
        pb(&bx, &br(&by, z)),
        pb(x, &pb(&by, z)),
        pb(&bx, &br(y, &bz)),
        pb(x, &pb(y, &bz)),
        pb(&pb(x, &bz), y),
        pb(&br(x, &bz), &by),
        pb(&pb(&bx, z), y),
        pb(&br(&bx, z), &by),
    ]);
    let node_c = sum(&[
        pb(&bx, &br(&by, z)),
        pb(x, &pb(&by, z)),
        pb(&bx, &br(y, &bz)),
        pb(x, &pb(y, &bz)),
        pb(&pb(x, &bz), y),
        pb(&br(x, &bz), &by),
        pb(&pb(&bx, z), y),
        pb(&bx, &br(z, &by)),
        pb(&br(&bx, &by), z),
    ]);
    let node_d = sum(&[
        pb(&pb(&bx, y), z),
        pb(&pb(x, &by), z),
        pb(&br(&bx, y), &bz),
        pb(&br(x, &by), &bz),
    ]);
    let node_e = sum(&[
        pb(&pb(&bx, y), z),
        pb(&pb(x, &by), z),
        pb(&bx, &br(y, &bz)),
        pb(&br(x, &bz), &by),
        pb(&br(&bx, &bz), y),
        pb(x, &br(&by, &bz)),
    ]);
    let node_f = sum(&[
        pb(&pb(&bx, y), z),
        pb(&pb(x, &by), z),
        pb(&bx, &br(y, &bz)),
        pb(&br(x, &bz), &by),
        pb(&pb(&bx, z), y),
        pb(&pb(x, &bz), y),
        pb(x, &pb(&by, z)),
        pb(x, &pb(y, &bz)),
    ]);

    let left_edges = [
        v.jacobiator(&bx, &by, &bz),
        v.bracket(&one(&bx), &v.rb_iso(y, z))
            .add(&v.bracket(&v.rb_iso(x, z), &one(&by))),
        v.rb_iso(x, &br(&by, z))
            .add(&v.rb_iso(x, &br(y, &bz)))
            .add(&v.rb_iso(&br(x, &bz), y))
            .add(&v.rb_iso(&br(&bx, z), y)),
        Morphism2V::new(node_b, v.p1(&v.jacobiator(&bx, z, &by)).arrow),
        Morphism2V::new(node_c, v.p1(&v.bracket(&v.rb_iso(x, y), &one(z))).arrow),
    ];
    let right_edges = [
        one(&br(&br(&bx, &by), &bz)),
        v.bracket(&v.rb_iso(x, y), &one(&bz)),
        v.rb_iso(&br(&bx, y), z).add(&v.rb_iso(&br(x, &by), z)),
        Morphism2V::new(
            node_d,
            tensor::add(
                &v.p1(&v.jacobiator(&bx, y, &bz)).arrow,
                &v.p1(&v.jacobiator(x, &by, &bz)).arrow,
            ),
        ),
        Morphism2V::new(
            node_e,
            tensor::add(
                &v.p1(&v.bracket(&v.rb_iso(x, z), &one(y))).arrow,
                &v.p1(&v.bracket(&one(x), &v.rb_iso(y, z))).arrow,
            ),
        ),
    ];
    let (left, mut mismatches) = chain(v.complex(), &left_edges);
    let (right, right_mismatches) = chain(v.complex(), &right_edges);
    mismatches.extend(right_mismatches.into_iter().map(|(k, r)| (k + 5, r)));
    for (k, path) in [(5, &left), (10, &right)] {
        let t = path.target(v.complex());
        if t != node_f {
            mismatches.push((k, tensor::sub(&t, &node_f)));
        }
    }
    mismatches.sort_by_key(|(k, _)| *k);
    RbCohPaths {
        left,
        right,
        mismatches,
    }
}

/// Evaluates the Rota-Baxter coherence diagram on every basis triple
/// `i < j < k`. Reports `rbcoh` where the two composites differ and
/// `rbcoh-node` where a printed node does not match the incoming target.
/// The composite difference is checked against the condition (3) residual.
pub fn verify_rbcoh(view: &RbLie2View<'_>) -> Result<VerificationReport> {
    let g = view.base;
    g.check_shape()?;
    let n = g.dim0();
    let assert_agreement = flags_hold(g);
    let triples = par::triples(n);
    let per_triple = par::map_collect(triples.len(), |t| {
        let (i, j, k) = triples[t];
        let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
        let paths = rbcoh_paths(view, &x, &y, &z);
        let diff = tensor::sub(&paths.left.arrow, &paths.right.arrow);
        let mut out: Vec<Violation> = paths
            .mismatches
            .into_iter()
            .map(|(e, r)| Violation::new(Condition::RbCohNode, vec![i, j, k, e], r))
            .collect();
        let agree = !assert_agreement || diff == rb3_residual(g, &x, &y, &z);
        out.extend(hit(Condition::RbCoh, vec![i, j, k], diff));
        (out, agree)
    });
    let mut report = VerificationReport::new();
    let mut disagreements = VerificationReport::new();
    for ((i, j, k), (violations, agree)) in triples.iter().zip(per_triple) {
        if !agree {
            disagreements.push(Violation::new(Condition::Rb3, vec![*i, *j, *k], vec![]));
        }
        report.extend(violations);
    }
    if !disagreements.is_valid() {
        return Err(Error::broken("verify_rbcoh arrow-part form", disagreements));
    }
    Ok(report.sorted())
}

/// Naturality of `𝓡` on `f = (0, u)` and an object `y`: the two composites
/// of the naturality square, compared on arrow parts. Agrees with condition
/// (2) residual by residual.
pub fn verify_rb_naturality(view: &RbLie2View<'_>) -> Result<VerificationReport> {
    let g = view.base;
    g.check_shape()?;
    let (n, m) = (g.dim0(), g.dim1());
    let mut report = VerificationReport::new();
    let mut disagreements = VerificationReport::new();
    for a in 0..m {
        let f = Morphism2V::new(tensor::zeros(n), unit(m, a));
        let z = view.t(&f);
        for i in 0..n {
            let y = unit(n, i);
            let py = view.p0(&y);
            let whisker = view
                .p1(&view.bracket(&view.p1(&f), &view.i(&y)))
                .add(&view.p1(&view.bracket(&f, &view.i(&py))));
            let (lhs, _) = chain(view.complex(), &[view.rb_iso(&f.source, &y), whisker]);
            let (rhs, _) = chain(
                view.complex(),
                &[
                    view.bracket(&view.p1(&f), &view.i(&py)),
                    view.rb_iso(&z, &y),
                ],
            );
            let diff = tensor::sub(&lhs.arrow, &rhs.arrow);
            if diff != rb2_residual(g, &unit(m, a), &y) {
                disagreements.push(Violation::new(Condition::Rb2, vec![a, i], vec![]));
            }
            report.extend(hit(Condition::Naturality, vec![a, i], diff));
        }
    }
    if !disagreements.is_valid() {
        return Err(Error::broken("verify_rb_naturality", disagreements));
    }
    Ok(report.sorted())
}

/// The Rota-Baxter Lie 2-algebra homomorphism presented by a Rota-Baxter
/// L∞-homomorphism.
#[derive(Clone, Copy, Debug)]
pub struct Lie2HomView<'a> {
    pub hom: &'a RbLInfinityHom,
}

impl<'a> Lie2HomView<'a> {
    pub fn new(hom: &'a RbLInfinityHom) -> Self {
        Self { hom }
    }

    pub fn f0(&self, x: &[Scalar]) -> Vector {
        self.hom.maps.phi0.apply(x)
    }

    /// `F1 = φ0 ⊕ φ1`.
    pub fn f1(&self, f: &Morphism2V) -> Morphism2V {
        Morphism2V {
            source: self.hom.maps.phi0.apply(&f.source),
            arrow: self.hom.maps.phi1.apply(&f.arrow),
        }
    }

    /// `F2(x, y) = ([φ0 x, φ0 y], φ2(x, y))`.
    pub fn f2(&self, x: &[Scalar], y: &[Scalar]) -> Morphism2V {
        Morphism2V {
            source: self.hom.target.linf.br(&self.f0(x), &self.f0(y)),
            arrow: self.hom.maps.phi2.apply(x, y),
        }
    }

    /// `F3(x) = (R0' φ0 x, φ3 x)`.
    pub fn f3(&self, x: &[Scalar]) -> Morphism2V {
        Morphism2V {
            source: self.hom.target.r0(&self.f0(x)),
            arrow: self.hom.phi3.apply(x),
        }
    }
}

pub struct RbCohmPaths {
    pub left: Morphism2V,
    pub right: Morphism2V,
    pub mismatches: Vec<(usize, Vector)>,
}

/// Both composites of the homomorphism coherence square on a pair. Right
/// path (junctions 1–3, end 4): `𝓡'`, then the whiskered `F3`, then `P1'F2`,
/// then `F3` of the brackets. Left path (junctions 5–6, end 7): `[F3x, F3y]`,
/// then `F2(P0x, P0y)`, then `F1(𝓡_{x,y})`.
pub fn rbcohm_paths(hom: &RbLInfinityHom, x: &[Scalar], y: &[Scalar]) -> RbCohmPaths {
    let h = Lie2HomView::new(hom);
    let sv = RbLie2View::new(&hom.source);
    let tv = RbLie2View::new(&hom.target);
    let (f0x, f0y) = (h.f0(x), h.f0(y));
    let (r0x, r0y) = (sv.p0(x), sv.p0(y));
    let right_edges = [
        tv.rb_iso(&f0x, &f0y),
        tv.p1(&tv.bracket(&h.f3(x), &tv.i(&f0y)))
            .add(&tv.p1(&tv.bracket(&tv.i(&f0x), &h.f3(y)))),
        tv.p1(&h.f2(&r0x, y)).add(&tv.p1(&h.f2(x, &r0y))),
        h.f3(&sv.bracket_objects(&r0x, y))
            .add(&h.f3(&sv.bracket_objects(x, &r0y))),
    ];
    let left_edges = [
        tv.bracket(&h.f3(x), &h.f3(y)),
        h.f2(&r0x, &r0y),
        h.f1(&sv.rb_iso(x, y)),
    ];
    let end = h.f0(&sv.p0(&tensor::add(
        &sv.bracket_objects(&r0x, y),
        &sv.bracket_objects(x, &r0y),
    )));
    let (right, mut mismatches) = chain(tv.complex(), &right_edges);
    let (left, left_mismatches) = chain(tv.complex(), &left_edges);
    mismatches.extend(left_mismatches.into_iter().map(|(k, r)| (k + 4, r)));
    for (k, path) in [(4, &right), (7, &left)] {
        let t = path.target(tv.complex());
        if t != end {
            mismatches.push((k, tensor::sub(&t, &end)));
        }
    }
    mismatches.sort_by_key(|(k, _)| *k);
    RbCohmPaths {
        left,
        right,
        mismatches,
    }
}

/// Evaluates the homomorphism coherence square on every basis pair
/// `i < j`; the composite difference (right minus left) is checked against
/// the RBLh3 residual.
pub fn verify_rbcohm(hom: &RbLInfinityHom) -> Result<VerificationReport> {
    hom.source.check_shape()?;
    hom.target.check_shape()?;
    let n = hom.source.dim0();
    hom.maps.phi0.check_shape("phi0", hom.target.dim0(), n)?;
    hom.maps
        .phi1
        .check_shape("phi1", hom.target.dim1(), hom.source.dim1())?;
    hom.maps.phi2.check_shape("phi2", n, n, hom.target.dim1())?;
    hom.phi3.check_shape("phi3", hom.target.dim1(), n)?;
    let pairs = par::pairs(n);
    let per_pair = par::map_collect(pairs.len(), |p| {
        let (i, j) = pairs[p];
        let (x, y) = (unit(n, i), unit(n, j));
        let paths = rbcohm_paths(hom, &x, &y);
        let diff = tensor::sub(&paths.right.arrow, &paths.left.arrow);
        let agree = diff == rblh3_residual(hom, &x, &y);
        let mut out: Vec<Violation> = paths
            .mismatches
            .into_iter()
            .map(|(e, r)| Violation::new(Condition::RbCohmNode, vec![i, j, e], r))
            .collect();
        out.extend(hit(Condition::RbCohm, vec![i, j], diff));
        (out, agree)
    });
    let mut report = VerificationReport::new();
    let mut disagreements = VerificationReport::new();
    for ((i, j), (violations, agree)) in pairs.iter().zip(per_pair) {
        if !agree {
            disagreements.push(Violation::new(Condition::RbLh3, vec![*i, *j], vec![]));
        }
        report.extend(violations);
    }
    if !disagreements.is_valid() {
        return Err(Error::broken(
            "verify_rbcohm arrow-part form",
            disagreements,
        ));
    }
    Ok(report.sorted())
}

/// `ker(s)` inside `g0 ⊕ g1` and coordinates with respect to its basis.
struct Kernel {
    basis: LinearMap,
    dim1: usize,
}

impl Kernel {
    fn of_source_map(dim0: usize, dim1: usize) -> Self {
        let s = LinearMap::from_columns(dim0, dim0 + dim1, |c| {
            if c < dim0 {
                unit(dim0, c)
            } else {
                tensor::zeros(dim0)
            }
        });
        let vectors = linsolve::nullspace(&s);
        Self {
            basis: LinearMap::from_columns(dim0 + dim1, vectors.len(), |c| vectors[c].clone()),
            dim1,
        }
    }

    fn dim(&self) -> usize {
        self.basis.cols
    }

    fn vector(&self, a: usize) -> Morphism2V {
        let v = self.basis.column(a);
        let n = v.len() - self.dim1;
        Morphism2V::new(v[..n].to_vec(), v[n..].to_vec())
    }

    /// Coordinates of a morphism with zero source.
    fn coords(&self, f: &Morphism2V) -> Result<Vector> {
        linsolve::solve(&self.basis, &f.flatten())
            .ok_or_else(|| Error::shape("morphism is not in the kernel of the source map"))
    }
}

/// `f - i(s(f))`, the arrow part as an element of `ker(s)`.
fn arrow_morphism(f: &Morphism2V) -> Morphism2V {
    Morphism2V::new(tensor::zeros(f.source.len()), f.arrow.clone())
}

/// Reads a 2-term Rota-Baxter L∞-algebra back off the Lie 2-algebra view:
/// `g1 = ker(s)`, `l1 = t|ker(s)`, `l2(x, u) = [1_x, u]`, `l3` the arrow of
/// the Jacobiator, `R1 = P1|ker(s)`, `R2` the arrow of `𝓡`.
pub fn extract(view: &RbLie2View<'_>) -> Result<TwoTermRbLInfinity> {
    let (n, m) = (view.dim0(), view.dim1());
    let ker = Kernel::of_source_map(n, m);
    let k = ker.dim();
    let e = |i: usize| unit(n, i);
    let l1 = LinearMap::from_columns(n, k, |a| view.t(&ker.vector(a)));
    let l2_00 = BilinearMap::from_fn(n, n, n, view.base.linf.l2_00.skew, |i, j| {
        view.bracket_objects(&e(i), &e(j))
    });
    let mut failure = None;
    let mut coords = |f: &Morphism2V| match ker.coords(f) {
        Ok(c) => c,
        Err(err) => {
            failure.get_or_insert(err);
            tensor::zeros(k)
        }
    };
    let l2_01 = BilinearMap::from_fn(n, k, k, view.base.linf.l2_01.skew, |i, a| {
        coords(&view.bracket(&view.i(&e(i)), &ker.vector(a)))
    });
    let mut l3 = TrilinearMap::zero(n, k, view.base.linf.l3.alt);
    for i in 0..n {
        for j in 0..n {
            for c in 0..n {
                let v = coords(&arrow_morphism(&view.jacobiator(&e(i), &e(j), &e(c))));
                for (l, x) in v.into_iter().enumerate() {
                    let at = l3.index(l, i, j, c);
                    l3.coeffs[at] = x;
                }
            }
        }
    }
    let r0 = LinearMap::from_columns(n, n, |i| view.p0(&e(i)));
    let r1 = LinearMap::from_columns(k, k, |a| coords(&view.p1(&ker.vector(a))));
    let r2 = BilinearMap::from_fn(n, n, k, view.base.rb.r2.skew, |i, j| {
        coords(&arrow_morphism(&view.rb_iso(&e(i), &e(j))))
    });
    if let Some(err) = failure {
        return Err(err);
    }
    Ok(TwoTermRbLInfinity {
        linf: TwoTermLInfinity {
            complex: TwoTermComplex { l1 },
            l2_00,
            l2_01,
            l3,
        },
        rb: RbTriple { r0, r1, r2 },
    })
}

fn multi_index(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut idx = vec![0; dims.len()];
    for (slot, &d) in idx.iter_mut().zip(dims).rev() {
        *slot = flat % d;
        flat /= d;
    }
    idx
}

/// Entrywise comparison of two coefficient arrays of the same layout.
fn compare(
    report: &mut VerificationReport,
    scope: &str,
    dims: &[usize],
    got: &[Scalar],
    want: &[Scalar],
) {
    let mut sub = VerificationReport::new();
    if got.len() != want.len() {
        sub.push(Violation::new(Condition::RoundTrip, vec![], vec![]));
    } else {
        for (flat, (a, b)) in got.iter().zip(want).enumerate() {
            if a != b {
                sub.push(Violation::new(
                    Condition::RoundTrip,
                    multi_index(dims, flat),
                    vec![a - b],
                ));
            }
        }
    }
    report.extend_scoped(scope, sub);
}

/// Applies the Lie 2-algebra construction and reads the structure back,
/// reporting every tensor entry that changed. Empty on every input, since
/// the comparison isomorphism is the identity on the skeletal presentation.
pub fn roundtrip_st(g: &TwoTermRbLInfinity) -> Result<VerificationReport> {
    g.check_shape()?;
    let view = RbLie2View::new(g);
    let back = extract(&view)?;
    let (n, m) = (g.dim0(), g.dim1());
    let mut report = VerificationReport::new();
    if back.dim1() != m {
        report.push(Violation::new(
            Condition::RoundTrip,
            vec![back.dim1(), m],
            vec![],
        ));
        return Ok(report);
    }
    let (a, b) = (&back.linf, &g.linf);
    compare(
        &mut report,
        "l1",
        &[n, m],
        &a.complex.l1.entries,
        &b.complex.l1.entries,
    );
    compare(
        &mut report,
        "l2_00",
        &[n, n, n],
        &a.l2_00.coeffs,
        &b.l2_00.coeffs,
    );
    compare(
        &mut report,
        "l2_01",
        &[m, n, m],
        &a.l2_01.coeffs,
        &b.l2_01.coeffs,
    );
    compare(&mut report, "l3", &[m, n, n, n], &a.l3.coeffs, &b.l3.coeffs);
    compare(
        &mut report,
        "r0",
        &[n, n],
        &back.rb.r0.entries,
        &g.rb.r0.entries,
    );
    compare(
        &mut report,
        "r1",
        &[m, m],
        &back.rb.r1.entries,
        &g.rb.r1.entries,
    );
    compare(
        &mut report,
        "r2",
        &[m, n, n],
        &back.rb.r2.coeffs,
        &g.rb.r2.coeffs,
    );
    Ok(report.sorted())
}

/// Reads the maps of a Rota-Baxter L∞-homomorphism back off the Lie
/// 2-algebra homomorphism `(F0, F1, F2, F3)`.
pub fn extract_hom(hom: &RbLInfinityHom) -> Result<(HomMaps, LinearMap)> {
    let h = Lie2HomView::new(hom);
    let (n, m) = (hom.source.dim0(), hom.source.dim1());
    let (n2, m2) = (hom.target.dim0(), hom.target.dim1());
    let src_ker = Kernel::of_source_map(n, m);
    let tgt_ker = Kernel::of_source_map(n2, m2);
    let e = |i: usize| unit(n, i);
    let mut failure = None;
    let mut coords = |f: &Morphism2V| match tgt_ker.coords(f) {
        Ok(c) => c,
        Err(err) => {
            failure.get_or_insert(err);
            tensor::zeros(tgt_ker.dim())
        }
    };
    let phi0 = LinearMap::from_columns(n2, n, |i| h.f0(&e(i)));
    let phi1 = LinearMap::from_columns(tgt_ker.dim(), src_ker.dim(), |a| {
        coords(&h.f1(&src_ker.vector(a)))
    });
    let phi2 = BilinearMap::from_fn(n, n, tgt_ker.dim(), hom.maps.phi2.skew, |i, j| {
        coords(&arrow_morphism(&h.f2(&e(i), &e(j))))
    });
    let phi3 = LinearMap::from_columns(tgt_ker.dim(), n, |i| coords(&arrow_morphism(&h.f3(&e(i)))));
    if let Some(err) = failure {
        return Err(err);
    }
    Ok((HomMaps { phi0, phi1, phi2 }, phi3))
}

/// Hom round trip: maps read back from the Lie 2-algebra homomorphism are
/// compared entrywise with the originals.
pub fn roundtrip_hom(hom: &RbLInfinityHom) -> Result<VerificationReport> {
    hom.source.check_shape()?;
    hom.target.check_shape()?;
    let (n, m) = (hom.source.dim0(), hom.source.dim1());
    let (n2, m2) = (hom.target.dim0(), hom.target.dim1());
    let (maps, phi3) = extract_hom(hom)?;
    let mut report = VerificationReport::new();
    compare(
        &mut report,
        "phi0",
        &[n2, n],
        &maps.phi0.entries,
        &hom.maps.phi0.entries,
    );
    compare(
        &mut report,
        "phi1",
        &[m2, m],
        &maps.phi1.entries,
        &hom.maps.phi1.entries,
    );
    compare(
        &mut report,
        "phi2",
        &[m2, n, n],
        &maps.phi2.coeffs,
        &hom.maps.phi2.coeffs,
    );
    compare(
        &mut report,
        "phi3",
        &[m2, n],
        &phi3.entries,
        &hom.phi3.entries,
    );
    Ok(report.sorted())
}
