//! Execution strategy for the data-parallel loops (determinant expansion,
//! Haagerup enumeration, permutation search).
//!
//! Every parallel loop reduces with an order-independent operation (exact
//! integer sums, or a first-index search), so results never depend on the
//! worker count. Without the `parallel` feature, [`Exec::Parallel`] silently
//! runs sequentially.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Maps `f` over `0..len` and folds the results with `merge`, starting from
/// `init()` in every partition. `merge` must be associative and commutative.
pub(crate) fn map_reduce<T, I, F, M>(exec: Exec, len: usize, init: I, f: F, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(&mut T, usize) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..len)
            .into_par_iter()
            .fold(&init, |mut acc, i| {
                f(&mut acc, i);
                acc
            })
            .reduce(&init, &merge);
    }
    let _ = (exec, &merge);
    let mut acc = init();
    for i in 0..len {
        f(&mut acc, i);
    }
    acc
}

/// Returns the result for the smallest index in `0..len` where `f` yields
/// `Some`, regardless of scheduling.
pub(crate) fn find_map_first<T, F>(exec: Exec, len: usize, f: F) -> Option<(usize, T)>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..len).into_par_iter().find_map_first(|i| f(i).map(|t| (i, t)));
    }
    let _ = exec;
    (0..len).find_map(|i| f(i).map(|t| (i, t)))
}
