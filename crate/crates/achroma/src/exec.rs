//! Execution-mode plumbing. The `parallel` feature pulls in rayon; without
//! it `Mode::Parallel` degrades to the sequential path, so callers and
//! benches compile against one API either way.

/// How batch work (part audits, table rows, fuzz batches, solver subtree
/// scans) is scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    Parallel,
}

impl Mode {
    /// Parallel when compiled in, sequential otherwise.
    pub fn preferred() -> Mode {
        if cfg!(feature = "parallel") {
            Mode::Parallel
        } else {
            Mode::Sequential
        }
    }
}

/// Order-preserving map over an index range.
pub(crate) fn map_indexed<T, F>(mode: Mode, len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match mode {
        Mode::Sequential => (0..len).map(f).collect(),
        Mode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                (0..len).into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                (0..len).map(f).collect()
            }
        }
    }
}

/// True if any element of the range satisfies the predicate; the parallel
/// path may evaluate in any order but the verdict is deterministic.
pub(crate) fn any_indexed<F>(mode: Mode, len: usize, f: F) -> bool
where
    F: Fn(usize) -> bool + Sync + Send,
{
    match mode {
        Mode::Sequential => (0..len).any(f),
        Mode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                (0..len).into_par_iter().any(f)
            }
            #[cfg(not(feature = "parallel"))]
            {
                (0..len).any(f)
            }
        }
    }
}
