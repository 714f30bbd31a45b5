//! Order-preserving data-parallel maps.
//!
//! With the `parallel` feature (default) work is spread over rayon's pool;
//! without it every [`Execution`] runs serially. Output order never depends
//! on the execution mode.

/// How a batch of independent jobs is executed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Serial,
    #[default]
    Parallel,
}

impl Execution {
    /// `Parallel` when the crate was built with rayon support.
    pub fn available() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Serial
        }
    }
}

/// Maps `f` over `lo..=hi`, returning results in ascending order.
pub fn map_range<R, F>(lo: u64, hi: u64, exec: Execution, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> R + Sync + Send,
{
    if lo > hi {
        return Vec::new();
    }
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (lo..=hi).into_par_iter().map(f).collect()
        }
        _ => (lo..=hi).map(f).collect(),
    }
}

/// Runs `op` on a pool of `jobs` workers. Serial builds just call `op`.
pub fn with_jobs<R: Send>(jobs: usize, op: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
            Ok(pool) => pool.install(op),
            Err(_) => op(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
        op()
    }
}
