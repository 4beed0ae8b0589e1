//! Execution backend for the enumeration engines.
//!
//! Every heavy loop in the crate is a map over a contiguous index range
//! followed by an associative reduction or an ordered search. With the
//! `parallel` feature the range is split into chunks and handed to rayon;
//! without it (or with [`Execution::Sequential`]) the same chunks run in
//! order on the calling thread. Chunk order is preserved by both backends,
//! so results never depend on scheduling.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

fn chunk_ranges(total: u64, chunk: u64) -> impl Iterator<Item = Range<u64>> + Clone {
    let chunk = chunk.max(1);
    let count = total.div_ceil(chunk);
    (0..count).map(move |c| c * chunk..((c + 1) * chunk).min(total))
}

/// Maps `f` over chunks of `0..total` and folds the results with `combine`.
pub fn map_reduce<T, F, C>(exec: Execution, total: u64, chunk: u64, identity: T, f: F, combine: C) -> T
where
    T: Send + Sync + Clone,
    F: Fn(Range<u64>) -> T + Sync + Send,
    C: Fn(T, T) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            let chunk = chunk.max(1);
            let count = total.div_ceil(chunk);
            (0..count)
                .into_par_iter()
                .map(|c| f(c * chunk..((c + 1) * chunk).min(total)))
                .reduce(|| identity.clone(), &combine)
        }
        _ => chunk_ranges(total, chunk).map(f).fold(identity, combine),
    }
}

/// Returns the result of the first chunk (in index order) for which `f` yields `Some`.
pub fn find_first<T, F>(exec: Execution, total: u64, chunk: u64, f: F) -> Option<T>
where
    T: Send,
    F: Fn(Range<u64>) -> Option<T> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            let chunk = chunk.max(1);
            let count = total.div_ceil(chunk);
            (0..count)
                .into_par_iter()
                .find_map_first(|c| f(c * chunk..((c + 1) * chunk).min(total)))
        }
        _ => chunk_ranges(total, chunk).find_map(f),
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map_items<I, T, F>(exec: Execution, items: &[I], f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}
