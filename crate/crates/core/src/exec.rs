//! Row-wise evaluation over grids, parallel with the `parallel` feature and
//! sequential otherwise. Every row is written by exactly one closure call, so
//! the result does not depend on the schedule.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Rayon over rows; falls back to sequential without the `parallel` feature.
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Fills a row-major buffer of `width`-long rows with `f(row_index, row)`.
pub fn fill_rows<T, F>(exec: Exec, buf: &mut [T], width: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync,
{
    if width == 0 {
        return;
    }
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        buf.par_chunks_mut(width).enumerate().for_each(|(j, row)| f(j, row));
        return;
    }
    let _ = exec;
    buf.chunks_mut(width).enumerate().for_each(|(j, row)| f(j, row));
}

/// Maps `f` over `0..len`, collecting results in index order.
pub fn map_indices<T, F>(exec: Exec, len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..len).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..len).map(f).collect()
}
