//! Sweep helpers for the verification kernels.
//!
//! The law checkers and name-validation sweeps iterate over large index
//! ranges of independent work items. With the `parallel` feature (default)
//! these fan out over a rayon pool; without it they run sequentially. The
//! `*_seq` twins are always sequential so benchmarks can compare both paths.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// `true` iff `pred` holds on every index in `0..n`.
#[cfg(feature = "parallel")]
pub fn range_all(n: u64, pred: impl Fn(u64) -> bool + Send + Sync) -> bool {
    (0..n).into_par_iter().all(pred)
}

#[cfg(not(feature = "parallel"))]
pub fn range_all(n: u64, pred: impl Fn(u64) -> bool + Send + Sync) -> bool {
    (0..n).all(pred)
}

pub fn range_all_seq(n: u64, pred: impl Fn(u64) -> bool) -> bool {
    (0..n).all(pred)
}

/// First `Some` produced over `0..n`, earliest index wins.
#[cfg(feature = "parallel")]
pub fn range_find_map<T: Send>(n: u64, f: impl Fn(u64) -> Option<T> + Send + Sync) -> Option<T> {
    (0..n).into_par_iter().find_map_first(f)
}

#[cfg(not(feature = "parallel"))]
pub fn range_find_map<T: Send>(n: u64, f: impl Fn(u64) -> Option<T> + Send + Sync) -> Option<T> {
    (0..n).find_map(f)
}

pub fn range_find_map_seq<T>(n: u64, f: impl Fn(u64) -> Option<T>) -> Option<T> {
    (0..n).find_map(f)
}

/// Map `0..n` and collect in index order.
#[cfg(feature = "parallel")]
pub fn range_map<T: Send>(n: u64, f: impl Fn(u64) -> T + Send + Sync) -> Vec<T> {
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn range_map<T: Send>(n: u64, f: impl Fn(u64) -> T + Send + Sync) -> Vec<T> {
    (0..n).map(f).collect()
}

pub fn range_map_seq<T>(n: u64, f: impl Fn(u64) -> T) -> Vec<T> {
    (0..n).map(f).collect()
}
