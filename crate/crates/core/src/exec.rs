//! Execution strategy for the data-parallel kernels.
//!
//! Every kernel that splits work takes an [`Exec`]. With the `parallel`
//! feature disabled, [`Exec::Parallel`] silently runs the sequential path, so
//! callers never need their own `cfg` switches. Results are identical under
//! both strategies: branches are always merged in branch order.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
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
    /// Sequential for one worker, parallel otherwise.
    pub fn for_threads(threads: usize) -> Self {
        if threads <= 1 {
            Exec::Sequential
        } else {
            Exec::Parallel
        }
    }

    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Maps `f` over `items`, keeping input order in the output.
    pub fn map<T, R, F>(self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
        items.into_iter().map(f).collect()
    }
}
