//! Order-preserving map over independent work items.
//!
//! With the `parallel` feature the work is spread over a rayon pool; without
//! it every [`Execution`] runs sequentially. Results always come back in input
//! order, so the choice never changes any output.

use crate::error::{Error, Result};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "EWJN_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Serial,
    /// `threads: None` lets the pool pick one worker per core.
    Parallel {
        threads: Option<usize>,
    },
}

impl Default for Execution {
    fn default() -> Self {
        Execution::Parallel { threads: None }
    }
}

impl Execution {
    /// Read the thread cap from `EWJN_THREADS`. `1` selects the serial path.
    pub fn from_env() -> Result<Self> {
        match std::env::var(THREADS_ENV) {
            Ok(raw) => Self::from_thread_count(&raw),
            Err(std::env::VarError::NotPresent) => Ok(Execution::default()),
            Err(e) => Err(Error::Validation(format!("{THREADS_ENV}: {e}"))),
        }
    }

    pub fn from_thread_count(raw: &str) -> Result<Self> {
        let n: usize = raw
            .trim()
            .parse()
            .map_err(|_| Error::Validation(format!("{THREADS_ENV} must be a positive integer, got `{raw}`")))?;
        match n {
            0 => Err(Error::Validation(format!("{THREADS_ENV} must be at least 1"))),
            1 => Ok(Execution::Serial),
            n => Ok(Execution::Parallel { threads: Some(n) }),
        }
    }

    pub fn is_parallel(&self) -> bool {
        cfg!(feature = "parallel") && matches!(self, Execution::Parallel { .. })
    }

    /// Apply `f` to every item, returning results in input order.
    pub fn map<T, U, F>(&self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match self {
            Execution::Serial => items.iter().map(f).collect(),
            Execution::Parallel { threads } => parallel_map(*threads, items, f),
        }
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<T, U, F>(threads: Option<usize>, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;

    let run = || items.par_iter().map(&f).collect();
    match threads {
        None => run(),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(run),
            // a pool that cannot be built still leaves the global one
            Err(_) => run(),
        },
    }
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, U, F>(_threads: Option<usize>, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.iter().map(f).collect()
}
