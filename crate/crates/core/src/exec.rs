//! Data-parallel driving loops, backed by rayon when the `parallel`
//! feature is enabled and by plain iterators otherwise. Every helper is
//! deterministic: "first" always means first in the original order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn find_map_first_u64<R, F>(lo: u64, hi: u64, f: F) -> Option<R>
where
    R: Send,
    F: Fn(u64) -> Option<R> + Sync + Send,
{
    (lo..hi).into_par_iter().find_map_first(f)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn find_map_first_u64<R, F>(lo: u64, hi: u64, f: F) -> Option<R>
where
    R: Send,
    F: Fn(u64) -> Option<R> + Sync + Send,
{
    (lo..hi).find_map(f)
}

#[cfg(feature = "parallel")]
pub(crate) fn min_map_u64<F>(lo: u64, hi: u64, f: F) -> Option<u64>
where
    F: Fn(u64) -> u64 + Sync + Send,
{
    (lo..hi).into_par_iter().map(f).min()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn min_map_u64<F>(lo: u64, hi: u64, f: F) -> Option<u64>
where
    F: Fn(u64) -> u64 + Sync + Send,
{
    (lo..hi).map(f).min()
}

#[cfg(feature = "parallel")]
pub(crate) fn fill_u32<F>(len: usize, f: F) -> Vec<u32>
where
    F: Fn(usize) -> u32 + Sync + Send,
{
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn fill_u32<F>(len: usize, f: F) -> Vec<u32>
where
    F: Fn(usize) -> u32 + Sync + Send,
{
    (0..len).map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn map_vec<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_vec<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    items.into_iter().map(f).collect()
}
