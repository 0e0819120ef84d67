//! Data-parallel helpers with a sequential fallback.
//!
//! Work items are indexed and results come back in index order, so output is
//! identical whichever strategy runs it. Without the `parallel` feature,
//! [`Execution::Parallel`] silently runs sequentially.

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

/// `(0..n).map(f)` under the chosen strategy, results in index order.
pub fn map_indexed<T, F>(exec: Execution, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        Execution::Sequential => (0..n).map(f).collect(),
        Execution::Parallel => parallel_map(n, f),
    }
}

/// Smallest index `i < n` with `f(i)` returning `Some`, and that value.
pub fn find_first<T, F>(exec: Execution, n: usize, f: F) -> Option<(usize, T)>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    match exec {
        Execution::Sequential => (0..n).find_map(|i| f(i).map(|v| (i, v))),
        Execution::Parallel => parallel_find_first(n, f),
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

#[cfg(feature = "parallel")]
fn parallel_find_first<T, F>(n: usize, f: F) -> Option<(usize, T)>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    use rayon::prelude::*;
    (0..n)
        .into_par_iter()
        .filter_map(|i| f(i).map(|v| (i, v)))
        .find_first(|_| true)
}

#[cfg(not(feature = "parallel"))]
fn parallel_find_first<T, F>(n: usize, f: F) -> Option<(usize, T)>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    (0..n).find_map(|i| f(i).map(|v| (i, v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let f = |i: usize| (i * i) % 7;
        assert_eq!(
            map_indexed(Execution::Sequential, 100, f),
            map_indexed(Execution::Parallel, 100, f)
        );
    }

    #[test]
    fn find_first_is_lowest_index() {
        let f = |i: usize| (i % 10 == 3).then_some(i * 2);
        assert_eq!(find_first(Execution::Parallel, 100, f), Some((3, 6)));
        assert_eq!(find_first(Execution::Sequential, 100, f), Some((3, 6)));
        assert_eq!(find_first(Execution::Parallel, 3, f), None);
    }
}
