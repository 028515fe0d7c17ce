//! Sequential/parallel dispatch for the data-parallel inner loops.
//!
//! Every reduction used here is an exact `max`/`min` over `f64`, so the
//! result does not depend on how work is split between threads.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Uses rayon when the `parallel` feature is enabled, otherwise
    /// identical to `Sequential`.
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

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// `max` of `f` over `items`, or `init` when `items` is empty.
    pub(crate) fn max_by<T, F>(self, items: &[T], init: f64, f: F) -> f64
    where
        T: Sync,
        F: Fn(&T) -> f64 + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(&f).reduce(|| init, f64::max);
        }
        items.iter().map(f).fold(init, f64::max)
    }

    /// Maps `f` over `0..n`, preserving order.
    pub(crate) fn map_range<R, F>(self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..n).into_par_iter().map(f).collect();
        }
        (0..n).map(f).collect()
    }
}
