//! Dense structure-constant containers over exact rationals.
//!
//! Index convention, fixed across the crate and the document format:
//! `BilinearMap` stores `c[k][i][j]`, the coordinate `k` of `m(e_i, f_j)`;
//! `TrilinearMap` stores `d[l][i][j][k]`, the coordinate `l` of
//! `m(e_i, e_j, e_k)`. Linear maps are row-major `rows x cols` matrices
//! acting on column vectors.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zeros(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = zeros(n);
    v[i] = Scalar::one();
    v
}

pub fn from_ints(values: &[i64]) -> Vector {
    values.iter().map(|&v| scalar::int(v)).collect()
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[Scalar]) -> Vector {
    a.iter().map(|x| -x).collect()
}

pub fn scale(c: &Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

pub fn add_assign(acc: &mut [Scalar], b: &[Scalar]) {
    debug_assert_eq!(acc.len(), b.len());
    for (x, y) in acc.iter_mut().zip(b) {
        *x += y;
    }
}

pub fn sub_assign(acc: &mut [Scalar], b: &[Scalar]) {
    debug_assert_eq!(acc.len(), b.len());
    for (x, y) in acc.iter_mut().zip(b) {
        *x -= y;
    }
}

pub fn is_zero(a: &[Scalar]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Sum of a list of vectors of dimension `n`.
pub fn sum<'a>(n: usize, parts: impl IntoIterator<Item = &'a Vector>) -> Vector {
    let mut acc = zeros(n);
    for p in parts {
        add_assign(&mut acc, p);
    }
    acc
}

/// Concatenation `a ⊕ b`.
pub fn concat(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().chain(b).cloned().collect()
}

fn check_len(what: &str, expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::shape(format!(
            "{what}: expected {expected} entries, got {got}"
        )))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Scalar>,
}

impl LinearMap {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        check_len("linear map", rows * cols, entries.len())?;
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: zeros(rows * cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Scalar::one();
        }
        m
    }

    /// Builds a matrix from integer rows. Panics on ragged input.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            entries.extend(row.iter().map(|&v| scalar::int(v)));
        }
        Self {
            rows: r,
            cols: c,
            entries,
        }
    }

    /// Builds a matrix column by column.
    pub fn from_columns(rows: usize, cols: usize, mut col: impl FnMut(usize) -> Vector) -> Self {
        let mut m = Self::zero(rows, cols);
        for j in 0..cols {
            let v = col(j);
            debug_assert_eq!(v.len(), rows);
            for (i, x) in v.into_iter().enumerate() {
                m.entries[i * cols + j] = x;
            }
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        debug_assert_eq!(v.len(), self.cols);
        let mut out = zeros(self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = &self.entries[r * self.cols + c];
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        debug_assert_eq!(self.cols, other.rows);
        LinearMap::from_columns(self.rows, other.cols, |j| self.apply(&other.column(j)))
    }

    pub fn transpose(&self) -> LinearMap {
        let mut t = LinearMap::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn neg(&self) -> LinearMap {
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            entries: neg(&self.entries),
        }
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            entries: add(&self.entries, &other.entries),
        }
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            entries: sub(&self.entries, &other.entries),
        }
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            entries: scale(c, &self.entries),
        }
    }

    pub fn is_zero(&self) -> bool {
        is_zero(&self.entries)
    }

    pub fn check_shape(&self, what: &str, rows: usize, cols: usize) -> Result<()> {
        if self.rows != rows || self.cols != cols || self.entries.len() != rows * cols {
            return Err(Error::shape(format!(
                "{what}: expected {rows}x{cols}, got {}x{} with {} entries",
                self.rows,
                self.cols,
                self.entries.len()
            )));
        }
        Ok(())
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &LinearMap) -> LinearMap {
        let mut m = LinearMap::zero(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m.set(self.rows + r, self.cols + c, other.get(r, c).clone());
            }
        }
        m
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearMap {
    pub dim_a: usize,
    pub dim_b: usize,
    pub dim_out: usize,
    pub coeffs: Vec<Scalar>,
    /// Marks the map as expected to satisfy `c[k][i][j] = -c[k][j][i]`.
    /// The flag is not enforced on construction; verifiers report breaches.
    pub skew: bool,
}

impl BilinearMap {
    pub fn zero(dim_a: usize, dim_b: usize, dim_out: usize, skew: bool) -> Self {
        Self {
            dim_a,
            dim_b,
            dim_out,
            coeffs: zeros(dim_a * dim_b * dim_out),
            skew,
        }
    }

    pub fn new(
        dim_a: usize,
        dim_b: usize,
        dim_out: usize,
        coeffs: Vec<Scalar>,
        skew: bool,
    ) -> Result<Self> {
        check_len("bilinear map", dim_a * dim_b * dim_out, coeffs.len())?;
        if skew && dim_a != dim_b {
            return Err(Error::shape("skew bilinear map needs equal factors"));
        }
        Ok(Self {
            dim_a,
            dim_b,
            dim_out,
            coeffs,
            skew,
        })
    }

    /// Builds the map from its values on basis pairs.
    pub fn from_fn(
        dim_a: usize,
        dim_b: usize,
        dim_out: usize,
        skew: bool,
        mut f: impl FnMut(usize, usize) -> Vector,
    ) -> Self {
        let mut m = Self::zero(dim_a, dim_b, dim_out, skew);
        for i in 0..dim_a {
            for j in 0..dim_b {
                let v = f(i, j);
                debug_assert_eq!(v.len(), dim_out);
                for (k, x) in v.into_iter().enumerate() {
                    let idx = m.index(k, i, j);
                    m.coeffs[idx] = x;
                }
            }
        }
        m
    }

    /// Skew map from the values on pairs `i < j`; the diagonal is zero and
    /// the lower triangle is the negated upper triangle.
    pub fn skew_from_upper(
        dim: usize,
        dim_out: usize,
        mut f: impl FnMut(usize, usize) -> Vector,
    ) -> Self {
        let mut m = Self::zero(dim, dim, dim_out, true);
        for i in 0..dim {
            for j in (i + 1)..dim {
                let v = f(i, j);
                for (k, x) in v.into_iter().enumerate() {
                    let a = m.index(k, i, j);
                    let b = m.index(k, j, i);
                    m.coeffs[b] = -&x;
                    m.coeffs[a] = x;
                }
            }
        }
        m
    }

    #[inline]
    pub fn index(&self, k: usize, i: usize, j: usize) -> usize {
        (k * self.dim_a + i) * self.dim_b + j
    }

    pub fn get(&self, k: usize, i: usize, j: usize) -> &Scalar {
        &self.coeffs[self.index(k, i, j)]
    }

    pub fn set(&mut self, k: usize, i: usize, j: usize, value: Scalar) {
        let idx = self.index(k, i, j);
        self.coeffs[idx] = value;
    }

    /// `m(e_i, f_j)`.
    pub fn basis(&self, i: usize, j: usize) -> Vector {
        (0..self.dim_out)
            .map(|k| self.get(k, i, j).clone())
            .collect()
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        debug_assert_eq!(x.len(), self.dim_a);
        debug_assert_eq!(y.len(), self.dim_b);
        let mut out = zeros(self.dim_out);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = &self.coeffs[self.index(k, i, j)];
                    if !c.is_zero() {
                        *o += c * &w;
                    }
                }
            }
        }
        out
    }

    /// Partial evaluation `y ↦ m(x, y)` as a matrix.
    pub fn left_matrix(&self, x: &[Scalar]) -> LinearMap {
        LinearMap::from_columns(self.dim_out, self.dim_b, |j| {
            self.apply(x, &unit(self.dim_b, j))
        })
    }

    /// Pairs `(i, j)` with `i <= j` where `m(e_i, e_j) + m(e_j, e_i) != 0`,
    /// with that sum as residual.
    pub fn skew_defects(&self) -> Vec<(usize, usize, Vector)> {
        let mut out = Vec::new();
        if self.dim_a != self.dim_b {
            return out;
        }
        for i in 0..self.dim_a {
            for j in i..self.dim_b {
                let r = add(&self.basis(i, j), &self.basis(j, i));
                if !is_zero(&r) {
                    out.push((i, j, r));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        is_zero(&self.coeffs)
    }

    pub fn check_shape(
        &self,
        what: &str,
        dim_a: usize,
        dim_b: usize,
        dim_out: usize,
    ) -> Result<()> {
        if (self.dim_a, self.dim_b, self.dim_out) != (dim_a, dim_b, dim_out)
            || self.coeffs.len() != dim_a * dim_b * dim_out
        {
            return Err(Error::shape(format!(
                "{what}: expected {dim_a}x{dim_b}->{dim_out}, got {}x{}->{} with {} coefficients",
                self.dim_a,
                self.dim_b,
                self.dim_out,
                self.coeffs.len()
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TrilinearMap {
    pub dim: usize,
    pub dim_out: usize,
    pub coeffs: Vec<Scalar>,
    /// Marks the map as expected to be totally antisymmetric.
    pub alt: bool,
}

impl TrilinearMap {
    pub fn zero(dim: usize, dim_out: usize, alt: bool) -> Self {
        Self {
            dim,
            dim_out,
            coeffs: zeros(dim * dim * dim * dim_out),
            alt,
        }
    }

    pub fn new(dim: usize, dim_out: usize, coeffs: Vec<Scalar>, alt: bool) -> Result<Self> {
        check_len("trilinear map", dim * dim * dim * dim_out, coeffs.len())?;
        Ok(Self {
            dim,
            dim_out,
            coeffs,
            alt,
        })
    }

    /// Alternating map from its values on triples `i < j < k`.
    pub fn alternating_from_sorted(
        dim: usize,
        dim_out: usize,
        mut f: impl FnMut(usize, usize, usize) -> Vector,
    ) -> Self {
        let mut m = Self::zero(dim, dim_out, true);
        for i in 0..dim {
            for j in (i + 1)..dim {
                for k in (j + 1)..dim {
                    let v = f(i, j, k);
                    for (l, x) in v.iter().enumerate() {
                        m.set_alternating(l, [i, j, k], x);
                    }
                }
            }
        }
        m
    }

    /// Writes `value` at `(l, idx)` and the signed value at every permutation
    /// of `idx`. Indices must be distinct.
    pub fn set_alternating(&mut self, l: usize, idx: [usize; 3], value: &Scalar) {
        for (perm, sign) in PERMUTATIONS_3 {
            let p = [idx[perm[0]], idx[perm[1]], idx[perm[2]]];
            let v = if sign > 0 { value.clone() } else { -value };
            let at = self.index(l, p[0], p[1], p[2]);
            self.coeffs[at] = v;
        }
    }

    #[inline]
    pub fn index(&self, l: usize, i: usize, j: usize, k: usize) -> usize {
        ((l * self.dim + i) * self.dim + j) * self.dim + k
    }

    pub fn get(&self, l: usize, i: usize, j: usize, k: usize) -> &Scalar {
        &self.coeffs[self.index(l, i, j, k)]
    }

    pub fn basis(&self, i: usize, j: usize, k: usize) -> Vector {
        (0..self.dim_out)
            .map(|l| self.get(l, i, j, k).clone())
            .collect()
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        let mut out = zeros(self.dim_out);
        if self.is_zero() {
            return out;
        }
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for (k, zk) in z.iter().enumerate() {
                    if zk.is_zero() {
                        continue;
                    }
                    let w = &xy * zk;
                    for (l, o) in out.iter_mut().enumerate() {
                        let c = &self.coeffs[self.index(l, i, j, k)];
                        if !c.is_zero() {
                            *o += c * &w;
                        }
                    }
                }
            }
        }
        out
    }

    /// Index triples (sorted, possibly with repeats) where the map is not
    /// totally antisymmetric, with the first failing permutation's residual
    /// `m(σ·idx) - sign(σ) m(idx)`.
    pub fn alternation_defects(&self) -> Vec<(usize, usize, usize, Vector)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i..self.dim {
                for k in j..self.dim {
                    let idx = [i, j, k];
                    let base = self.basis(i, j, k);
                    let distinct = i != j && j != k;
                    if !distinct && !is_zero(&base) {
                        out.push((i, j, k, base));
                        continue;
                    }
                    for (perm, sign) in PERMUTATIONS_3.iter().skip(1) {
                        let v = self.basis(idx[perm[0]], idx[perm[1]], idx[perm[2]]);
                        let expected = if *sign > 0 { base.clone() } else { neg(&base) };
                        let r = sub(&v, &expected);
                        if !is_zero(&r) {
                            out.push((i, j, k, r));
                            break;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        is_zero(&self.coeffs)
    }

    pub fn check_shape(&self, what: &str, dim: usize, dim_out: usize) -> Result<()> {
        if (self.dim, self.dim_out) != (dim, dim_out) || self.coeffs.len() != dim.pow(3) * dim_out {
            return Err(Error::shape(format!(
                "{what}: expected {dim}^3->{dim_out}, got {}^3->{} with {} coefficients",
                self.dim,
                self.dim_out,
                self.coeffs.len()
            )));
        }
        Ok(())
    }
}

/// The six permutations of three slots with their signs; identity first.
pub const PERMUTATIONS_3: [([usize; 3], i8); 6] = [
    ([0, 1, 2], 1),
    ([1, 2, 0], 1),
    ([2, 0, 1], 1),
    ([1, 0, 2], -1),
    ([0, 2, 1], -1),
    ([2, 1, 0], -1),
];

/// A linear action of a `dim`-dimensional algebra on a `dim_v`-dimensional
/// space, stored as one `dim_v x dim_v` matrix per basis vector and extended
/// linearly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Action {
    pub dim_v: usize,
    pub maps: Vec<LinearMap>,
}

impl Action {
    pub fn zero(dim: usize, dim_v: usize) -> Self {
        Self {
            dim_v,
            maps: vec![LinearMap::zero(dim_v, dim_v); dim],
        }
    }

    pub fn new(dim_v: usize, maps: Vec<LinearMap>) -> Result<Self> {
        for (i, m) in maps.iter().enumerate() {
            m.check_shape(&format!("action matrix {i}"), dim_v, dim_v)?;
        }
        Ok(Self { dim_v, maps })
    }

    pub fn from_fn(dim: usize, dim_v: usize, f: impl FnMut(usize) -> LinearMap) -> Self {
        Self {
            dim_v,
            maps: (0..dim).map(f).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.maps.len()
    }

    pub fn basis(&self, i: usize) -> &LinearMap {
        &self.maps[i]
    }

    /// `Σ x_i ρ(e_i)`.
    pub fn at(&self, x: &[Scalar]) -> LinearMap {
        debug_assert_eq!(x.len(), self.maps.len());
        let mut acc = LinearMap::zero(self.dim_v, self.dim_v);
        for (xi, m) in x.iter().zip(&self.maps) {
            if !xi.is_zero() {
                acc = acc.add(&m.scale(xi));
            }
        }
        acc
    }

    /// `ρ(x) v`.
    pub fn apply(&self, x: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = zeros(self.dim_v);
        for (xi, m) in x.iter().zip(&self.maps) {
            if !xi.is_zero() {
                add_assign(&mut out, &scale(xi, &m.apply(v)));
            }
        }
        out
    }

    /// The same action written as a bilinear map `(x, v) ↦ ρ(x) v`.
    pub fn to_bilinear(&self) -> BilinearMap {
        BilinearMap::from_fn(self.dim(), self.dim_v, self.dim_v, false, |i, j| {
            self.maps[i].column(j)
        })
    }

    pub fn from_bilinear(m: &BilinearMap) -> Self {
        debug_assert_eq!(m.dim_b, m.dim_out);
        Self::from_fn(m.dim_a, m.dim_out, |i| {
            LinearMap::from_columns(m.dim_out, m.dim_b, |j| m.basis(i, j))
        })
    }

    pub fn check_shape(&self, what: &str, dim: usize, dim_v: usize) -> Result<()> {
        if self.maps.len() != dim || self.dim_v != dim_v {
            return Err(Error::shape(format!(
                "{what}: expected {dim} matrices of size {dim_v}, got {} of size {}",
                self.maps.len(),
                self.dim_v
            )));
        }
        for (i, m) in self.maps.iter().enumerate() {
            m.check_shape(&format!("{what}[{i}]"), dim_v, dim_v)?;
        }
        Ok(())
    }
}
