//! Minimal data parallelism over scoped threads.
//!
//! Work items are split into contiguous chunks, one per worker, and the
//! results are reassembled in input order, so output never depends on the
//! thread count. `GEODISCORD_THREADS` caps the number of workers.

use std::num::NonZeroUsize;

/// How many worker threads to use: the `GEODISCORD_THREADS` environment
/// variable when set to a positive integer, otherwise the machine's
/// available parallelism (1 if that cannot be determined).
pub fn thread_cap() -> usize {
    if let Ok(v) = std::env::var("GEODISCORD_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                return n;
            }
        }
    }
    std::thread::available_parallelism()
        .map(NonZeroUsize::get)
        .unwrap_or(1)
}

/// Apply `f` to every item, fanning out across at most `threads` workers,
/// and return the results in input order. `f(index, item)` sees the item's
/// original index.
pub fn map_ordered<T, R, F>(items: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(usize, &T) -> R + Sync,
{
    let threads = threads.clamp(1, items.len().max(1));
    if threads == 1 || items.len() <= 1 {
        return items.iter().enumerate().map(|(i, t)| f(i, t)).collect();
    }
    let chunk = items.len().div_ceil(threads);
    let mut out: Vec<R> = Vec::with_capacity(items.len());
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .enumerate()
            .map(|(c, slice)| {
                let f = &f;
                scope.spawn(move || {
                    slice
                        .iter()
                        .enumerate()
                        .map(|(i, t)| f(c * chunk + i, t))
                        .collect::<Vec<R>>()
                })
            })
            .collect();
        for h in handles {
            out.extend(h.join().expect("worker thread panicked"));
        }
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_input_order_for_any_thread_count() {
        let items: Vec<u64> = (0..101).collect();
        let expect: Vec<u64> = items.iter().map(|x| x * x).collect();
        for threads in [1, 2, 3, 7, 200] {
            let got = map_ordered(&items, threads, |i, &x| {
                assert_eq!(i as u64, x);
                x * x
            });
            assert_eq!(got, expect);
        }
    }

    #[test]
    fn handles_empty_and_single_inputs() {
        let empty: Vec<u32> = Vec::new();
        assert!(map_ordered(&empty, 4, |_, &x| x).is_empty());
        assert_eq!(map_ordered(&[5u32], 4, |_, &x| x + 1), vec![6]);
    }
}
