//! Data-parallel driver for the lattice sweeps.
//!
//! Every hot loop in the crate is a map/filter/count over an independent set
//! of lattice points or instances. With the `parallel` feature (default)
//! these run on the rayon pool; without it they fall back to plain
//! sequential iterators with identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn count_where<T, F>(items: &[T], pred: F) -> u64
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    items.par_iter().filter(|t| pred(t)).count() as u64
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn count_where<T, F>(items: &[T], pred: F) -> u64
where
    F: Fn(&T) -> bool,
{
    items.iter().filter(|t| pred(t)).count() as u64
}

#[cfg(feature = "parallel")]
pub(crate) fn filter_collect<T, F>(items: Vec<T>, pred: F) -> Vec<T>
where
    T: Send + Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    items.into_par_iter().filter(|t| pred(t)).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn filter_collect<T, F>(items: Vec<T>, pred: F) -> Vec<T>
where
    F: Fn(&T) -> bool,
{
    items.into_iter().filter(|t| pred(t)).collect()
}
