use rayon::prelude::*;

/// How trials are scheduled. Results are identical in both modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Rayon's global pool.
    #[default]
    Parallel,
}

/// Runs `trial(i)` for `i in 0..trials` and returns the results in index order.
pub fn run_trials<T, F>(trials: u64, execution: Execution, trial: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    match execution {
        Execution::Sequential => (0..trials).map(trial).collect(),
        Execution::Parallel => (0..trials).into_par_iter().map(trial).collect(),
    }
}
