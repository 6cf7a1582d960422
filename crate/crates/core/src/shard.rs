//! Per-size work distribution. Results always come back in ascending size
//! order, so the worker count never changes any output.

use rayon::prelude::*;

/// Evaluates `f(n)` for `n = 0..=max_n` on `jobs` workers.
pub fn map_sizes<T, F>(max_n: u32, jobs: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u32) -> T + Sync + Send,
{
    map_range(0, max_n, jobs, f)
}

/// Evaluates `f(n)` for `n = lo..=hi` on `jobs` workers.
pub fn map_range<T, F>(lo: u32, hi: u32, jobs: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u32) -> T + Sync + Send,
{
    if lo > hi {
        return Vec::new();
    }
    if jobs <= 1 {
        return (lo..=hi).map(f).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        // Largest sizes dominate the cost, so schedule them first.
        Ok(pool) => pool.install(|| {
            let mut out: Vec<(u32, T)> =
                (lo..=hi).rev().collect::<Vec<_>>().into_par_iter().map(|n| (n, f(n))).collect();
            out.sort_by_key(|&(n, _)| n);
            out.into_iter().map(|(_, t)| t).collect()
        }),
        Err(_) => (lo..=hi).map(f).collect(),
    }
}
