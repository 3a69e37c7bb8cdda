//! Order-preserving data-parallel map with a sequential fallback.
//!
//! Without the `parallel` feature every strategy runs sequentially.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    Sequential,
    #[default]
    Parallel,
}

impl Strategy {
    /// `items.iter().map(f)`, result order independent of scheduling.
    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match self {
            Strategy::Sequential => items.iter().map(f).collect(),
            Strategy::Parallel => parallel_map(items, f),
        }
    }

    /// Maps and flattens; blocks keep item order.
    pub fn flat_map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> Vec<U> + Sync + Send,
    {
        self.map(items, f).into_iter().flatten().collect()
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.iter().map(f).collect()
}

/// Runs `f` on a pool of `jobs` workers (the global pool when `None`).
pub fn with_jobs<R, F>(jobs: Option<usize>, f: F) -> Result<R>
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    match jobs {
        Some(0) => Err(Error::InvalidParameters("--jobs must be at least 1".into())),
        #[cfg(feature = "parallel")]
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Error::Unsupported(format!("cannot start worker pool: {e}")))?;
            Ok(pool.install(f))
        }
        _ => Ok(f()),
    }
}
