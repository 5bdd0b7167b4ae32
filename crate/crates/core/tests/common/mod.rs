#![allow(dead_code)]

use rbl2::algebra::{LieAlgebra, RotaBaxterLieAlgebra};
use rbl2::catalog::{self, Entry};
use rbl2::crossed::RbLieCrossedModule;
use rbl2::structure::Structure;
use rbl2::tensor::LinearMap;
use rbl2::two_term::{RbLInfinityHom, RbTriple, TwoTermLInfinity, TwoTermRbLInfinity};

pub fn entries() -> Vec<Entry> {
    catalog::catalog().expect("catalog builds")
}

pub fn select<T>(f: impl Fn(&Structure) -> Option<T>) -> Vec<(&'static str, T)> {
    entries()
        .into_iter()
        .filter_map(|e| f(&e.doc.structure).map(|t| (e.name, t)))
        .collect()
}

pub fn lie_algebras() -> Vec<(&'static str, LieAlgebra)> {
    select(|s| match s {
        Structure::Lie(a) => Some(a.clone()),
        _ => None,
    })
}

pub fn rb_lie_algebras() -> Vec<(&'static str, RotaBaxterLieAlgebra)> {
    select(|s| match s {
        Structure::RbLie(a) => Some(a.clone()),
        _ => None,
    })
}

pub fn two_terms() -> Vec<(&'static str, TwoTermLInfinity)> {
    select(|s| match s {
        Structure::TwoTerm(l) => Some(l.clone()),
        Structure::RbTwoTerm(g) => Some(g.linf.clone()),
        _ => None,
    })
}

/// Catalog 2-term Rota-Baxter instances, with plain 2-term entries carried
/// along with the zero operator triple.
pub fn rb_two_terms() -> Vec<(&'static str, TwoTermRbLInfinity)> {
    select(|s| match s {
        Structure::TwoTerm(l) => Some(with_zero_operators(l.clone())),
        Structure::RbTwoTerm(g) => Some(g.clone()),
        _ => None,
    })
}

pub fn with_zero_operators(linf: TwoTermLInfinity) -> TwoTermRbLInfinity {
    let rb = RbTriple::zero(linf.dim0(), linf.dim1());
    TwoTermRbLInfinity { linf, rb }
}

pub fn rb_homs() -> Vec<(&'static str, RbLInfinityHom)> {
    select(|s| match s {
        Structure::RbHom(h) => Some(h.clone()),
        Structure::Hom(h) => Some(RbLInfinityHom {
            source: with_zero_operators(h.source.clone()),
            target: with_zero_operators(h.target.clone()),
            maps: h.maps.clone(),
            phi3: LinearMap::zero(h.target.dim1(), h.source.dim0()),
        }),
        _ => None,
    })
}

pub fn crossed_rb() -> Vec<(&'static str, RbLieCrossedModule)> {
    select(|s| match s {
        Structure::CrossedRb(c) => Some(c.clone()),
        _ => None,
    })
}

/// Every in-bounds entry position of every tensor of `s`, in tensor order.
pub fn sites(s: &Structure) -> Vec<rbl2::search::Site> {
    use rbl2::structure::TensorRef;
    let mut out = Vec::new();
    for (name, t) in s.tensors() {
        let dims: Vec<usize> = match t {
            TensorRef::Linear(m) => vec![m.rows, m.cols],
            TensorRef::Bilinear(b) => vec![b.dim_a, b.dim_b, b.dim_out],
            TensorRef::Trilinear(t) => vec![t.dim, t.dim, t.dim, t.dim_out],
            TensorRef::Action(a) => vec![a.dim(), a.dim_v, a.dim_v],
        };
        let mut index = vec![0; dims.len()];
        if dims.contains(&0) {
            continue;
        }
        loop {
            out.push(rbl2::search::Site {
                tensor: name.to_string(),
                indices: index.clone(),
            });
            let mut p = dims.len();
            loop {
                if p == 0 {
                    break;
                }
                p -= 1;
                index[p] += 1;
                if index[p] < dims[p] {
                    break;
                }
                index[p] = 0;
            }
            if index.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    out
}

/// [`sites`] plus, for homs, the endpoint sites under `source/` and
/// `target/`.
pub fn mutation_sites(s: &Structure) -> Vec<rbl2::search::Site> {
    let mut out = sites(s);
    if let Some((source, target)) = s.endpoints() {
        for (prefix, end) in [("source", source), ("target", target)] {
            out.extend(sites(&end).into_iter().map(|mut site| {
                site.tensor = format!("{prefix}/{}", site.tensor);
                site
            }));
        }
    }
    out
}
