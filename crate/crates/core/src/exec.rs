use alloc::vec::Vec;

/// Runs a batch of independent jobs and returns their results in job order.
///
/// Implementations may run jobs concurrently, but the returned vector must be
/// indexed by job number so that callers can merge deterministically.
pub trait Executor: Sync {
    fn map<T, F>(&self, jobs: usize, job: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync;
}

/// Runs every job on the calling thread.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn map<T, F>(&self, jobs: usize, job: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync,
    {
        (0..jobs).map(job).collect()
    }
}

impl<E: Executor> Executor for &E {
    fn map<T, F>(&self, jobs: usize, job: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync,
    {
        (**self).map(jobs, job)
    }
}
