//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::scalar::Scalar;
use crate::tensor::{zeros, LinearMap, Vector};

/// Reduced row echelon form of `m` with pivot columns chosen left to right.
pub struct Rref {
    pub matrix: LinearMap,
    pub pivots: Vec<usize>,
}

pub fn rref(m: &LinearMap) -> Rref {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        if p != row {
            for c in 0..a.cols {
                a.entries.swap(p * a.cols + c, row * a.cols + c);
            }
        }
        let inv = Scalar::one() / a.get(row, col);
        for c in col..a.cols {
            let v = a.get(row, c) * &inv;
            a.set(row, c, v);
        }
        for r in 0..a.rows {
            if r == row || a.get(r, col).is_zero() {
                continue;
            }
            let factor = a.get(r, col).clone();
            for c in col..a.cols {
                let v = a.get(r, c) - &factor * a.get(row, c);
                a.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    Rref { matrix: a, pivots }
}

pub fn rank(m: &LinearMap) -> usize {
    rref(m).pivots.len()
}

/// Solves `m x = b`. Free variables are set to zero, so the solution is the
/// basic one for the left-to-right pivot order. `None` when inconsistent.
pub fn solve(m: &LinearMap, b: &[Scalar]) -> Option<Vector> {
    debug_assert_eq!(b.len(), m.rows);
    let mut aug = LinearMap::zero(m.rows, m.cols + 1);
    for (r, rhs) in b.iter().enumerate() {
        for c in 0..m.cols {
            aug.set(r, c, m.get(r, c).clone());
        }
        aug.set(r, m.cols, rhs.clone());
    }
    let Rref { matrix, pivots } = rref(&aug);
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = zeros(m.cols);
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = matrix.get(r, m.cols).clone();
    }
    Some(x)
}

/// Basis of the null space, one vector per free column, each with a 1 in
/// its free coordinate.
pub fn nullspace(m: &LinearMap) -> Vec<Vector> {
    let Rref { matrix, pivots } = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = zeros(m.cols);
            v[f] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -matrix.get(r, f);
            }
            v
        })
        .collect()
}
