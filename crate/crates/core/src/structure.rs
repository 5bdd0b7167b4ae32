//! A single type covering every structure kind a document can hold, with
//! verification dispatch and access to the named tensors.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{
    verify_lie, verify_prelie, verify_rb, verify_representation, LieAlgebra, PreLieAlgebra,
    RbRepresentation, RotaBaxterLieAlgebra,
};
use crate::crossed::{
    verify_lie_crossed, verify_prelie_crossed, verify_rb_crossed, LieCrossedModule,
    PreLieCrossedModule, RbLieCrossedModule,
};
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::tensor::{Action, BilinearMap, LinearMap, TrilinearMap};
use crate::two_term::{
    verify_2term, verify_hom, verify_rb_2term, verify_rb_hom, HomMaps, LInfinityHom,
    RbLInfinityHom, RbTriple, TwoTermComplex, TwoTermLInfinity, TwoTermRbLInfinity,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Lie,
    RbLie,
    PreLie,
    Representation,
    TwoTerm,
    RbTwoTerm,
    Hom,
    RbHom,
    CrossedLie,
    CrossedRb,
    CrossedPreLie,
}

impl Kind {
    pub const ALL: [Kind; 11] = [
        Kind::Lie,
        Kind::RbLie,
        Kind::PreLie,
        Kind::Representation,
        Kind::TwoTerm,
        Kind::RbTwoTerm,
        Kind::Hom,
        Kind::RbHom,
        Kind::CrossedLie,
        Kind::CrossedRb,
        Kind::CrossedPreLie,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Kind::Lie => "lie",
            Kind::RbLie => "rb-lie",
            Kind::PreLie => "pre-lie",
            Kind::Representation => "representation",
            Kind::TwoTerm => "2term",
            Kind::RbTwoTerm => "rb-2term",
            Kind::Hom => "hom",
            Kind::RbHom => "rb-hom",
            Kind::CrossedLie => "crossed-lie",
            Kind::CrossedRb => "crossed-rb",
            Kind::CrossedPreLie => "crossed-prelie",
        }
    }

    /// Names of the dimensions a document of this kind declares. Hom kinds
    /// take theirs from the nested source and target.
    pub fn dim_names(self) -> &'static [&'static str] {
        match self {
            Kind::Lie | Kind::RbLie | Kind::PreLie => &["g"],
            Kind::Representation => &["g", "v"],
            Kind::TwoTerm
            | Kind::RbTwoTerm
            | Kind::CrossedLie
            | Kind::CrossedRb
            | Kind::CrossedPreLie => &["g0", "g1"],
            Kind::Hom | Kind::RbHom => &[],
        }
    }

    /// Kind of the nested source and target documents of a hom.
    pub fn endpoint(self) -> Option<Kind> {
        match self {
            Kind::Hom => Some(Kind::TwoTerm),
            Kind::RbHom => Some(Kind::RbTwoTerm),
            _ => None,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Structure {
    Lie(LieAlgebra),
    RbLie(RotaBaxterLieAlgebra),
    PreLie(PreLieAlgebra),
    Representation(RbRepresentation),
    TwoTerm(TwoTermLInfinity),
    RbTwoTerm(TwoTermRbLInfinity),
    Hom(LInfinityHom),
    RbHom(RbLInfinityHom),
    CrossedLie(LieCrossedModule),
    CrossedRb(RbLieCrossedModule),
    CrossedPreLie(PreLieCrossedModule),
}

pub enum TensorRef<'a> {
    Linear(&'a LinearMap),
    Bilinear(&'a BilinearMap),
    Trilinear(&'a TrilinearMap),
    Action(&'a Action),
}

pub enum TensorMut<'a> {
    Linear(&'a mut LinearMap),
    Bilinear(&'a mut BilinearMap),
    Trilinear(&'a mut TrilinearMap),
    Action(&'a mut Action),
}

fn zero_2term(n: usize, m: usize) -> TwoTermLInfinity {
    TwoTermLInfinity {
        complex: TwoTermComplex {
            l1: LinearMap::zero(n, m),
        },
        l2_00: BilinearMap::zero(n, n, n, true),
        l2_01: BilinearMap::zero(n, m, m, false),
        l3: TrilinearMap::zero(n, m, true),
    }
}

fn zero_lie_crossed(n: usize, m: usize) -> LieCrossedModule {
    LieCrossedModule {
        g0: LieAlgebra::abelian(n),
        g1: LieAlgebra::abelian(m),
        d: LinearMap::zero(n, m),
        rho: Action::zero(n, m),
    }
}

fn zero_hom_maps(source: (usize, usize), target: (usize, usize)) -> HomMaps {
    HomMaps {
        phi0: LinearMap::zero(target.0, source.0),
        phi1: LinearMap::zero(target.1, source.1),
        phi2: BilinearMap::zero(source.0, source.0, target.1, true),
    }
}

macro_rules! tensor_list {
    ($wrap:ident, $($name:literal => $kind:ident($e:expr)),* $(,)?) => {
        vec![$(($name, $wrap::$kind($e))),*]
    };
}

impl Structure {
    pub fn kind(&self) -> Kind {
        match self {
            Structure::Lie(_) => Kind::Lie,
            Structure::RbLie(_) => Kind::RbLie,
            Structure::PreLie(_) => Kind::PreLie,
            Structure::Representation(_) => Kind::Representation,
            Structure::TwoTerm(_) => Kind::TwoTerm,
            Structure::RbTwoTerm(_) => Kind::RbTwoTerm,
            Structure::Hom(_) => Kind::Hom,
            Structure::RbHom(_) => Kind::RbHom,
            Structure::CrossedLie(_) => Kind::CrossedLie,
            Structure::CrossedRb(_) => Kind::CrossedRb,
            Structure::CrossedPreLie(_) => Kind::CrossedPreLie,
        }
    }

    /// The all-zero structure of a non-hom kind with the given dimensions,
    /// in the order of [`Kind::dim_names`].
    pub fn zero(kind: Kind, dims: &[usize]) -> Result<Structure> {
        let want = kind.dim_names().len();
        if dims.len() != want || kind.endpoint().is_some() {
            return Err(Error::Schema(format!(
                "kind `{kind}` takes {want} dimensions, got {}",
                dims.len()
            )));
        }
        let (n, m) = (dims[0], dims.get(1).copied().unwrap_or(0));
        Ok(match kind {
            Kind::Lie => Structure::Lie(LieAlgebra::abelian(n)),
            Kind::RbLie => Structure::RbLie(RotaBaxterLieAlgebra {
                base: LieAlgebra::abelian(n),
                r: LinearMap::zero(n, n),
            }),
            Kind::PreLie => Structure::PreLie(PreLieAlgebra::zero(n)),
            Kind::Representation => Structure::Representation(RbRepresentation {
                algebra: RotaBaxterLieAlgebra {
                    base: LieAlgebra::abelian(n),
                    r: LinearMap::zero(n, n),
                },
                rho: Action::zero(n, m),
                cal_r: LinearMap::zero(m, m),
            }),
            Kind::TwoTerm => Structure::TwoTerm(zero_2term(n, m)),
            Kind::RbTwoTerm => Structure::RbTwoTerm(TwoTermRbLInfinity {
                linf: zero_2term(n, m),
                rb: RbTriple::zero(n, m),
            }),
            Kind::CrossedLie => Structure::CrossedLie(zero_lie_crossed(n, m)),
            Kind::CrossedRb => Structure::CrossedRb(RbLieCrossedModule {
                base: zero_lie_crossed(n, m),
                t0: LinearMap::zero(n, n),
                t1: LinearMap::zero(m, m),
            }),
            Kind::CrossedPreLie => Structure::CrossedPreLie(PreLieCrossedModule {
                p0: PreLieAlgebra::zero(n),
                p1: PreLieAlgebra::zero(m),
                delta: LinearMap::zero(n, m),
                l: Action::zero(n, m),
                r: Action::zero(n, m),
            }),
            Kind::Hom | Kind::RbHom => unreachable!("hom kinds rejected above"),
        })
    }

    /// A hom with zero maps between two endpoint structures of the matching
    /// kind.
    pub fn zero_hom(kind: Kind, source: Structure, target: Structure) -> Result<Structure> {
        let mismatch = || {
            Error::Schema(format!(
                "`{kind}` endpoints must both be `{}`",
                kind.endpoint().map_or("", Kind::tag)
            ))
        };
        match (kind, source, target) {
            (Kind::Hom, Structure::TwoTerm(s), Structure::TwoTerm(t)) => {
                let maps = zero_hom_maps((s.dim0(), s.dim1()), (t.dim0(), t.dim1()));
                Ok(Structure::Hom(LInfinityHom {
                    source: s,
                    target: t,
                    maps,
                }))
            }
            (Kind::RbHom, Structure::RbTwoTerm(s), Structure::RbTwoTerm(t)) => {
                let maps = zero_hom_maps((s.dim0(), s.dim1()), (t.dim0(), t.dim1()));
                let phi3 = LinearMap::zero(t.dim1(), s.dim0());
                Ok(Structure::RbHom(RbLInfinityHom {
                    source: s,
                    target: t,
                    maps,
                    phi3,
                }))
            }
            _ => Err(mismatch()),
        }
    }

    /// Dimensions in the order of [`Kind::dim_names`].
    pub fn dims(&self) -> Vec<usize> {
        match self {
            Structure::Lie(a) => vec![a.dim()],
            Structure::RbLie(a) => vec![a.dim()],
            Structure::PreLie(a) => vec![a.dim()],
            Structure::Representation(r) => vec![r.algebra.dim(), r.dim_v()],
            Structure::TwoTerm(l) => vec![l.dim0(), l.dim1()],
            Structure::RbTwoTerm(g) => vec![g.dim0(), g.dim1()],
            Structure::CrossedLie(c) => vec![c.dim0(), c.dim1()],
            Structure::CrossedRb(c) => vec![c.base.dim0(), c.base.dim1()],
            Structure::CrossedPreLie(c) => vec![c.dim0(), c.dim1()],
            Structure::Hom(_) | Structure::RbHom(_) => vec![],
        }
    }

    /// Source and target of a hom, as structures.
    pub fn endpoints(&self) -> Option<(Structure, Structure)> {
        match self {
            Structure::Hom(h) => Some((
                Structure::TwoTerm(h.source.clone()),
                Structure::TwoTerm(h.target.clone()),
            )),
            Structure::RbHom(h) => Some((
                Structure::RbTwoTerm(h.source.clone()),
                Structure::RbTwoTerm(h.target.clone()),
            )),
            _ => None,
        }
    }

    /// The structure's own tensors in document order; for homs these are
    /// only the maps, the endpoints being separate documents.
    pub fn tensors(&self) -> Vec<(&'static str, TensorRef<'_>)> {
        use TensorRef as T;
        match self {
            Structure::Lie(a) => tensor_list!(T, "bracket" => Bilinear(&a.bracket)),
            Structure::RbLie(a) => tensor_list!(T,
                "bracket" => Bilinear(&a.base.bracket),
                "r" => Linear(&a.r)),
            Structure::PreLie(a) => tensor_list!(T, "mult" => Bilinear(&a.mult)),
            Structure::Representation(r) => tensor_list!(T,
                "bracket" => Bilinear(&r.algebra.base.bracket),
                "r" => Linear(&r.algebra.r),
                "rho" => Action(&r.rho),
                "calr" => Linear(&r.cal_r)),
            Structure::TwoTerm(l) => tensor_list!(T,
                "l1" => Linear(&l.complex.l1),
                "l2_00" => Bilinear(&l.l2_00),
                "l2_01" => Bilinear(&l.l2_01),
                "l3" => Trilinear(&l.l3)),
            Structure::RbTwoTerm(g) => tensor_list!(T,
                "l1" => Linear(&g.linf.complex.l1),
                "l2_00" => Bilinear(&g.linf.l2_00),
                "l2_01" => Bilinear(&g.linf.l2_01),
                "l3" => Trilinear(&g.linf.l3),
                "r0" => Linear(&g.rb.r0),
                "r1" => Linear(&g.rb.r1),
                "r2" => Bilinear(&g.rb.r2)),
            Structure::Hom(h) => tensor_list!(T,
                "phi0" => Linear(&h.maps.phi0),
                "phi1" => Linear(&h.maps.phi1),
                "phi2" => Bilinear(&h.maps.phi2)),
            Structure::RbHom(h) => tensor_list!(T,
                "phi0" => Linear(&h.maps.phi0),
                "phi1" => Linear(&h.maps.phi1),
                "phi2" => Bilinear(&h.maps.phi2),
                "phi3" => Linear(&h.phi3)),
            Structure::CrossedLie(c) => tensor_list!(T,
                "bracket0" => Bilinear(&c.g0.bracket),
                "bracket1" => Bilinear(&c.g1.bracket),
                "d" => Linear(&c.d),
                "rho" => Action(&c.rho)),
            Structure::CrossedRb(c) => tensor_list!(T,
                "bracket0" => Bilinear(&c.base.g0.bracket),
                "bracket1" => Bilinear(&c.base.g1.bracket),
                "d" => Linear(&c.base.d),
                "rho" => Action(&c.base.rho),
                "t0" => Linear(&c.t0),
                "t1" => Linear(&c.t1)),
            Structure::CrossedPreLie(c) => tensor_list!(T,
                "mult0" => Bilinear(&c.p0.mult),
                "mult1" => Bilinear(&c.p1.mult),
                "delta" => Linear(&c.delta),
                "l" => Action(&c.l),
                "r" => Action(&c.r)),
        }
    }

    /// Mutable access by name; `source/...` and `target/...` reach into
    /// the endpoints of a hom.
    pub fn tensor_mut(&mut self, name: &str) -> Option<TensorMut<'_>> {
        use TensorMut as T;
        if let Some((side, rest)) = name.split_once('/') {
            let (s, t) = match self {
                Structure::Hom(h) => (&mut h.source, &mut h.target),
                Structure::RbHom(h) => {
                    return match side {
                        "source" => rb_2term_mut(&mut h.source, rest),
                        "target" => rb_2term_mut(&mut h.target, rest),
                        _ => None,
                    }
                }
                _ => return None,
            };
            return match side {
                "source" => two_term_mut(s, rest),
                "target" => two_term_mut(t, rest),
                _ => None,
            };
        }
        Some(match (self, name) {
            (Structure::Lie(a), "bracket") => T::Bilinear(&mut a.bracket),
            (Structure::RbLie(a), "bracket") => T::Bilinear(&mut a.base.bracket),
            (Structure::RbLie(a), "r") => T::Linear(&mut a.r),
            (Structure::PreLie(a), "mult") => T::Bilinear(&mut a.mult),
            (Structure::Representation(r), "bracket") => T::Bilinear(&mut r.algebra.base.bracket),
            (Structure::Representation(r), "r") => T::Linear(&mut r.algebra.r),
            (Structure::Representation(r), "rho") => T::Action(&mut r.rho),
            (Structure::Representation(r), "calr") => T::Linear(&mut r.cal_r),
            (Structure::TwoTerm(l), n) => return two_term_mut(l, n),
            (Structure::RbTwoTerm(g), n) => return rb_2term_mut(g, n),
            (Structure::Hom(h), "phi0") => T::Linear(&mut h.maps.phi0),
            (Structure::Hom(h), "phi1") => T::Linear(&mut h.maps.phi1),
            (Structure::Hom(h), "phi2") => T::Bilinear(&mut h.maps.phi2),
            (Structure::RbHom(h), "phi0") => T::Linear(&mut h.maps.phi0),
            (Structure::RbHom(h), "phi1") => T::Linear(&mut h.maps.phi1),
            (Structure::RbHom(h), "phi2") => T::Bilinear(&mut h.maps.phi2),
            (Structure::RbHom(h), "phi3") => T::Linear(&mut h.phi3),
            (Structure::CrossedLie(c), n) => return lie_crossed_mut(c, n),
            (Structure::CrossedRb(c), "t0") => T::Linear(&mut c.t0),
            (Structure::CrossedRb(c), "t1") => T::Linear(&mut c.t1),
            (Structure::CrossedRb(c), n) => return lie_crossed_mut(&mut c.base, n),
            (Structure::CrossedPreLie(c), "mult0") => T::Bilinear(&mut c.p0.mult),
            (Structure::CrossedPreLie(c), "mult1") => T::Bilinear(&mut c.p1.mult),
            (Structure::CrossedPreLie(c), "delta") => T::Linear(&mut c.delta),
            (Structure::CrossedPreLie(c), "l") => T::Action(&mut c.l),
            (Structure::CrossedPreLie(c), "r") => T::Action(&mut c.r),
            _ => return None,
        })
    }

    /// Runs the verifier for this kind. Homs are checked together with
    /// their endpoints, whose violations are scoped `source` and `target`.
    pub fn verify(&self) -> Result<VerificationReport> {
        match self {
            Structure::Lie(a) => verify_lie(a),
            Structure::RbLie(a) => verify_rb(a),
            Structure::PreLie(a) => verify_prelie(a),
            Structure::Representation(r) => verify_representation(r),
            Structure::TwoTerm(l) => verify_2term(l),
            Structure::RbTwoTerm(g) => verify_rb_2term(g),
            Structure::Hom(h) => {
                let mut report = verify_hom(h)?;
                report.extend_scoped("source", verify_2term(&h.source)?);
                report.extend_scoped("target", verify_2term(&h.target)?);
                Ok(report.sorted())
            }
            Structure::RbHom(h) => {
                let mut report = verify_rb_hom(h)?;
                report.extend_scoped("source", verify_rb_2term(&h.source)?);
                report.extend_scoped("target", verify_rb_2term(&h.target)?);
                Ok(report.sorted())
            }
            Structure::CrossedLie(c) => verify_lie_crossed(c),
            Structure::CrossedRb(c) => verify_rb_crossed(c),
            Structure::CrossedPreLie(c) => verify_prelie_crossed(c),
        }
    }
}

fn two_term_mut<'a>(l: &'a mut TwoTermLInfinity, name: &str) -> Option<TensorMut<'a>> {
    Some(match name {
        "l1" => TensorMut::Linear(&mut l.complex.l1),
        "l2_00" => TensorMut::Bilinear(&mut l.l2_00),
        "l2_01" => TensorMut::Bilinear(&mut l.l2_01),
        "l3" => TensorMut::Trilinear(&mut l.l3),
        _ => return None,
    })
}

fn rb_2term_mut<'a>(g: &'a mut TwoTermRbLInfinity, name: &str) -> Option<TensorMut<'a>> {
    Some(match name {
        "r0" => TensorMut::Linear(&mut g.rb.r0),
        "r1" => TensorMut::Linear(&mut g.rb.r1),
        "r2" => TensorMut::Bilinear(&mut g.rb.r2),
        other => return two_term_mut(&mut g.linf, other),
    })
}

fn lie_crossed_mut<'a>(c: &'a mut LieCrossedModule, name: &str) -> Option<TensorMut<'a>> {
    Some(match name {
        "bracket0" => TensorMut::Bilinear(&mut c.g0.bracket),
        "bracket1" => TensorMut::Bilinear(&mut c.g1.bracket),
        "d" => TensorMut::Linear(&mut c.d),
        "rho" => TensorMut::Action(&mut c.rho),
        _ => return None,
    })
}

macro_rules! impl_from {
    ($($variant:ident($ty:ty)),* $(,)?) => {
        $(impl From<$ty> for Structure {
            fn from(value: $ty) -> Self {
                Structure::$variant(value)
            }
        })*
    };
}

impl_from!(
    Lie(LieAlgebra),
    RbLie(RotaBaxterLieAlgebra),
    PreLie(PreLieAlgebra),
    Representation(RbRepresentation),
    TwoTerm(TwoTermLInfinity),
    RbTwoTerm(TwoTermRbLInfinity),
    Hom(LInfinityHom),
    RbHom(RbLInfinityHom),
    CrossedLie(LieCrossedModule),
    CrossedRb(RbLieCrossedModule),
    CrossedPreLie(PreLieCrossedModule),
);
