//! Order-preserving maps over integer ranges.
//!
//! With the `parallel` feature (on by default) [`map_range`] runs on the
//! rayon global pool; without it, it is [`map_range_sequential`]. Both
//! return results in range order, so callers see identical output.

pub fn map_range_sequential<T, F>(lo: i64, hi: i64, f: F) -> Vec<T>
where
    F: Fn(i64) -> T,
{
    (lo..=hi).map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_range_parallel<T, F>(lo: i64, hi: i64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(i64) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (lo..=hi).into_par_iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_range<T, F>(lo: i64, hi: i64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(i64) -> T + Sync + Send,
{
    map_range_parallel(lo, hi, f)
}

#[cfg(not(feature = "parallel"))]
pub fn map_range<T, F>(lo: i64, hi: i64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(i64) -> T + Sync + Send,
{
    map_range_sequential(lo, hi, f)
}
