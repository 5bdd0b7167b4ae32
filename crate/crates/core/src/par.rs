//! Order-preserving data parallelism over index ranges.
//!
//! With the `rayon` feature the maps below fan out over the current rayon
//! pool; without it they run in a plain loop. Output order is always the
//! index order, so results never depend on the worker count.

#[cfg(feature = "rayon")]
use rayon::prelude::*;

use crate::report::{VerificationReport, Violation};

#[cfg(feature = "rayon")]
pub fn map_collect<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "rayon"))]
pub fn map_collect<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Runs `f` on each index and concatenates the violations in index order.
pub fn collect_report<F>(n: usize, f: F) -> VerificationReport
where
    F: Fn(usize) -> Vec<Violation> + Sync + Send,
{
    map_collect(n, f).into_iter().flatten().collect()
}

/// Checks every item of `items` and concatenates the violations in item
/// order.
pub fn check_each<T, I, F>(items: &[T], f: F) -> VerificationReport
where
    T: Sync,
    I: IntoIterator<Item = Violation>,
    F: Fn(&T) -> I + Sync + Send,
{
    collect_report(items.len(), |n| f(&items[n]).into_iter().collect())
}

/// Runs `f` inside a pool of `workers` threads (0 means the rayon default).
#[cfg(feature = "rayon")]
pub fn with_workers<R: Send>(workers: usize, f: impl FnOnce() -> R + Send) -> R {
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(not(feature = "rayon"))]
pub fn with_workers<R: Send>(_workers: usize, f: impl FnOnce() -> R + Send) -> R {
    f()
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            out.push((i, j));
        }
    }
    out
}

pub fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                out.push((i, j, k));
            }
        }
    }
    out
}

pub fn quadruples(n: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                for l in (k + 1)..n {
                    out.push([i, j, k, l]);
                }
            }
        }
    }
    out
}
