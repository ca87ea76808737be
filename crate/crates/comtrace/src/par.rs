//! Batch execution over independent instances.
//!
//! With the `parallel` feature (default) [`map`] runs on the rayon pool;
//! without it, or through [`map_seq`], items run in order on the caller's
//! thread. Results are always in input order.

/// Maps `f` over `items` sequentially.
pub fn map_seq<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.iter().map(f).collect()
}

/// Maps `f` over `items` on the rayon pool.
#[cfg(feature = "parallel")]
pub fn map_par<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

/// Maps `f` over `items`, in parallel when the `parallel` feature is enabled.
pub fn map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    #[cfg(feature = "parallel")]
    {
        map_par(items, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_seq(items, f)
    }
}

/// Index of the first item for which `f` fails, if any, with its message.
pub fn find_failure<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> Result<(), String> + Sync + Send,
) -> Option<(usize, String)> {
    map(items, f).into_iter().enumerate().find_map(|(i, r)| r.err().map(|e| (i, e)))
}
