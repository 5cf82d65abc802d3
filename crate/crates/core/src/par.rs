//! Execution strategy for the data-parallel sweeps (column subsets, message
//! enumeration, divisor candidates, search triples).
//!
//! With the `parallel` feature the sweeps run on the rayon global pool;
//! without it, [`Execution::Parallel`] silently degrades to sequential.
//! Every helper returns results in input order, so output never depends on
//! the worker count.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this build actually runs `Parallel` on multiple threads.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    #[cfg_attr(not(feature = "parallel"), allow(dead_code))]
    fn is_parallel(self) -> bool {
        Self::parallel_available() && self == Execution::Parallel
    }
}

/// First `Some` in index order.
pub(crate) fn find_map_first<T, F>(exec: Execution, range: Range<u64>, f: F) -> Option<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return range.into_par_iter().find_map_first(f);
    }
    let _ = exec;
    range.into_iter().find_map(f)
}

/// `filter_map` over an index range, keeping input order.
pub(crate) fn filter_map_range<T, F>(exec: Execution, range: Range<u64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return range.into_par_iter().filter_map(f).collect();
    }
    let _ = exec;
    range.into_iter().filter_map(f).collect()
}

/// `map` over a slice, keeping input order.
pub(crate) fn map_slice<I, T, F>(exec: Execution, items: &[I], f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Minimum of `f` over the range; ties go to the smallest index.
pub(crate) fn min_by_key_range<K, T, F>(exec: Execution, range: Range<u64>, f: F) -> Option<(K, u64, T)>
where
    K: Ord + Send,
    T: Send,
    F: Fn(u64) -> Option<(K, T)> + Sync + Send,
{
    let pick = |a: Option<(K, u64, T)>, b: Option<(K, u64, T)>| match (a, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some(b)) => {
            if (&b.0, b.1) < (&a.0, a.1) {
                Some(b)
            } else {
                Some(a)
            }
        }
    };
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return range
            .into_par_iter()
            .map(|i| f(i).map(|(k, t)| (k, i, t)))
            .reduce(|| None, pick);
    }
    let _ = exec;
    range
        .into_iter()
        .map(|i| f(i).map(|(k, t)| (k, i, t)))
        .fold(None, pick)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        for exec in [Execution::Sequential, Execution::Parallel] {
            assert_eq!(find_map_first(exec, 0..1000, |i| (i % 97 == 50).then_some(i)), Some(50));
            assert_eq!(filter_map_range(exec, 0..20, |i| (i % 3 == 0).then_some(i)), vec![0, 3, 6, 9, 12, 15, 18]);
            assert_eq!(map_slice(exec, &[1, 2, 3], |x| x * 2), vec![2, 4, 6]);
            let m = min_by_key_range(exec, 0..100, |i| Some(((i as i64 - 40).abs() % 7, i)));
            assert_eq!(m.map(|x| x.1), Some(5));
        }
    }
}
