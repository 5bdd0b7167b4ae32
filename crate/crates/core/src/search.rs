//! Exhaustive Rota-Baxter operator search over a finite coefficient grid,
//! and single-entry mutation of verified structures.

use crate::algebra::{is_rota_baxter, LieAlgebra, RotaBaxterLieAlgebra};
use crate::error::{Error, Result};
use crate::par;
use crate::scalar::{self, Scalar};
use crate::structure::{Structure, TensorMut};
use crate::tensor::{LinearMap, PERMUTATIONS_3};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Candidates are tested in blocks of this size; each block is one unit of
/// parallel work.
const BLOCK: u128 = 4096;

#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub target: LieAlgebra,
    /// Deduplicated and sorted ascending by [`SearchSpec::new`].
    pub coeffs: Vec<Scalar>,
    /// Row-major `dim x dim` pattern; masked-out entries are fixed at zero.
    pub mask: Option<Vec<bool>>,
    pub budget: u64,
}

impl SearchSpec {
    pub fn new(target: LieAlgebra, coeffs: impl IntoIterator<Item = Scalar>) -> Self {
        let mut coeffs: Vec<Scalar> = coeffs.into_iter().collect();
        coeffs.sort();
        coeffs.dedup();
        Self {
            target,
            coeffs,
            mask: None,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_mask(mut self, mask: Vec<bool>) -> Self {
        self.mask = Some(mask);
        self
    }

    /// Row-major positions of the entries being searched.
    fn free_entries(&self) -> Vec<usize> {
        let n = self.target.dim();
        (0..n * n)
            .filter(|&p| self.mask.as_ref().is_none_or(|m| m[p]))
            .collect()
    }

    /// `|coeffs|^(free entries)`, saturating.
    pub fn candidates(&self) -> u128 {
        let free = self.free_entries().len() as u32;
        (self.coeffs.len() as u128)
            .checked_pow(free)
            .unwrap_or(u128::MAX)
    }
}

/// Every operator on the grid that satisfies the Rota-Baxter identity, in
/// lexicographic order of the row-major entry sequence (coefficients
/// compared as numbers). The order is independent of the worker count.
pub fn enumerate_rb_operators(spec: &SearchSpec) -> Result<Vec<RotaBaxterLieAlgebra>> {
    spec.target.check_shape("bracket")?;
    if spec.coeffs.is_empty() {
        return Err(Error::EmptyCoefficients);
    }
    let n = spec.target.dim();
    if let Some(mask) = &spec.mask {
        if mask.len() != n * n {
            return Err(Error::shape(format!(
                "mask: expected {} entries, got {}",
                n * n,
                mask.len()
            )));
        }
    }
    let total = spec.candidates();
    if total > u128::from(spec.budget) {
        return Err(Error::BudgetExceeded {
            candidates: total,
            budget: spec.budget,
        });
    }
    let free = spec.free_entries();
    let k = spec.coeffs.len() as u128;
    let blocks = total.div_ceil(BLOCK) as usize;
    let bracket = &spec.target.bracket;
    let found = par::map_collect(blocks, |b| {
        let start = b as u128 * BLOCK;
        let end = (start + BLOCK).min(total);
        let mut hits = Vec::new();
        let mut r = LinearMap::zero(n, n);
        for t in start..end {
            let mut rest = t;
            for &pos in free.iter().rev() {
                r.entries[pos] = spec.coeffs[(rest % k) as usize].clone();
                rest /= k;
            }
            if is_rota_baxter(bracket, &r) {
                hits.push(r.clone());
            }
        }
        hits
    });
    Ok(found
        .into_iter()
        .flatten()
        .map(|r| RotaBaxterLieAlgebra {
            base: spec.target.clone(),
            r,
        })
        .collect())
}

/// A mutation site: a tensor name (possibly prefixed, e.g. `source/l3`)
/// and an index tuple in document order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Site {
    pub tensor: String,
    pub indices: Vec<usize>,
}

impl std::str::FromStr for Site {
    type Err = Error;

    /// `tensor/i,j,...`, e.g. `bracket/0,1,1` or `source/l2_00/0,1,0`.
    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::BadSite(text.to_string());
        let (tensor, idx) = text.rsplit_once('/').ok_or_else(bad)?;
        if tensor.is_empty() {
            return Err(bad());
        }
        let indices = idx
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Site {
            tensor: tensor.to_string(),
            indices,
        })
    }
}

impl std::fmt::Display for Site {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(usize::to_string).collect();
        write!(f, "{}/{}", self.tensor, idx.join(","))
    }
}

fn check_bounds(site: &Site, dims: &[usize]) -> Result<()> {
    if site.indices.len() != dims.len() || site.indices.iter().zip(dims).any(|(i, d)| i >= d) {
        return Err(Error::BadSite(format!(
            "{site}: expected {} indices below {dims:?}",
            dims.len()
        )));
    }
    Ok(())
}

/// Adds `delta` to one tensor entry. On a skew bilinear tensor the mirrored
/// entry receives `-delta`, and on an alternating trilinear tensor every
/// permuted entry receives the signed `delta`, so the flag stays satisfied
/// unless the site lies on a diagonal. The result is not verified.
pub fn mutate(value: &Structure, site: &Site, delta: &Scalar) -> Result<Structure> {
    let mut out = value.clone();
    let tensor = out
        .tensor_mut(&site.tensor)
        .ok_or_else(|| Error::BadSite(format!("{site}: no tensor `{}`", site.tensor)))?;
    let ix = &site.indices;
    match tensor {
        TensorMut::Linear(m) => {
            check_bounds(site, &[m.rows, m.cols])?;
            *m.get_mut(ix[0], ix[1]) += delta;
        }
        TensorMut::Bilinear(b) => {
            check_bounds(site, &[b.dim_a, b.dim_b, b.dim_out])?;
            let (i, j, k) = (ix[0], ix[1], ix[2]);
            let at = b.index(k, i, j);
            b.coeffs[at] += delta;
            if b.skew && i != j {
                let at = b.index(k, j, i);
                b.coeffs[at] -= delta;
            }
        }
        TensorMut::Trilinear(t) => {
            check_bounds(site, &[t.dim, t.dim, t.dim, t.dim_out])?;
            let (xyz, l) = ([ix[0], ix[1], ix[2]], ix[3]);
            let distinct = xyz[0] != xyz[1] && xyz[1] != xyz[2] && xyz[0] != xyz[2];
            if t.alt && distinct {
                for (perm, sign) in PERMUTATIONS_3 {
                    let at = t.index(l, xyz[perm[0]], xyz[perm[1]], xyz[perm[2]]);
                    let signed = if sign > 0 { delta.clone() } else { -delta };
                    t.coeffs[at] += signed;
                }
            } else {
                let at = t.index(l, xyz[0], xyz[1], xyz[2]);
                t.coeffs[at] += delta;
            }
        }
        TensorMut::Action(a) => {
            check_bounds(site, &[a.dim(), a.dim_v, a.dim_v])?;
            *a.maps[ix[0]].get_mut(ix[1], ix[2]) += delta;
        }
    }
    Ok(out)
}

/// One search result as text: `RB` followed by the rows of the operator,
/// entries `p/q` separated by `,` and rows by `;`.
pub fn operator_line(r: &LinearMap) -> String {
    let rows: Vec<String> = (0..r.rows)
        .map(|i| {
            let row: Vec<String> = (0..r.cols).map(|j| scalar::format(r.get(i, j))).collect();
            row.join(",")
        })
        .collect();
    format!("RB {}", rows.join(";"))
}

/// Parses a comma-separated coefficient list such as `-1,0,1/2`.
pub fn parse_coeffs(text: &str) -> Result<Vec<Scalar>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| scalar::parse(s.trim()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::tensor::from_ints;

    fn aff1() -> LieAlgebra {
        LieAlgebra::from_upper(2, |_, _| from_ints(&[0, 1]))
    }

    #[test]
    fn abelian_grid_is_complete() {
        let spec = SearchSpec::new(LieAlgebra::abelian(2), [int(0), int(1)]);
        assert_eq!(enumerate_rb_operators(&spec).unwrap().len(), 16);
    }

    #[test]
    fn zero_grid_gives_zero_operator() {
        let spec = SearchSpec::new(aff1(), [int(0)]);
        let found = enumerate_rb_operators(&spec).unwrap();
        assert_eq!(found.len(), 1);
        assert!(found[0].r.is_zero());
    }

    #[test]
    fn budget_is_enforced() {
        let spec = SearchSpec::new(aff1(), [int(-1), int(0), int(1)]).with_budget(80);
        assert!(matches!(
            enumerate_rb_operators(&spec),
            Err(Error::BudgetExceeded {
                candidates: 81,
                budget: 80
            })
        ));
        let spec = SearchSpec::new(aff1(), Vec::new());
        assert!(matches!(
            enumerate_rb_operators(&spec),
            Err(Error::EmptyCoefficients)
        ));
    }

    #[test]
    fn mask_fixes_entries() {
        let spec = SearchSpec::new(aff1(), [int(-1), int(0), int(1)])
            .with_mask(vec![false, true, false, false]);
        let found = enumerate_rb_operators(&spec).unwrap();
        let rs: Vec<_> = found.iter().map(|f| f.r.get(0, 1).clone()).collect();
        assert_eq!(rs, vec![int(-1), int(0), int(1)]);
    }

    #[test]
    fn site_syntax() {
        let s: Site = "source/l2_00/0,1,1".parse().unwrap();
        assert_eq!(s.tensor, "source/l2_00");
        assert_eq!(s.indices, vec![0, 1, 1]);
        assert_eq!(s.to_string(), "source/l2_00/0,1,1");
        assert!("bracket".parse::<Site>().is_err());
        assert!("bracket/a".parse::<Site>().is_err());
    }
}
