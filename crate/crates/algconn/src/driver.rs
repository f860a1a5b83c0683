//! Multi-threaded exhaustive scans.
//!
//! The code space is cut into contiguous ranges, one per worker. Workers
//! share only the accumulator factory; partial results are merged in range
//! order, which makes the output independent of the worker count.

use std::num::NonZeroUsize;
use std::thread;

use algconn_core::scan::{code_space, scan_range, split_range, Accumulator, ScanConfig};
use algconn_core::Result;

pub fn default_jobs() -> usize {
    thread::available_parallelism().map_or(1, NonZeroUsize::get)
}

/// Scans every labeled graph of order `n` with `jobs` workers, each feeding
/// its own accumulator from `make`.
pub fn scan_parallel<A, F>(n: usize, cfg: &ScanConfig, jobs: usize, make: F) -> Result<A>
where
    A: Accumulator + Send,
    F: Fn() -> Result<A> + Sync,
{
    cfg.check_order(n)?;
    let ranges = split_range(code_space(n)?, jobs.max(1));
    if ranges.len() <= 1 {
        let mut acc = make()?;
        for range in ranges {
            scan_range(n, range, &mut acc)?;
        }
        return Ok(acc);
    }
    let parts: Vec<Result<A>> = thread::scope(|s| {
        let handles: Vec<_> = ranges
            .into_iter()
            .map(|range| {
                let make = &make;
                s.spawn(move || {
                    let mut acc = make()?;
                    scan_range(n, range, &mut acc)?;
                    Ok(acc)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("scan worker panicked")).collect()
    });
    let mut parts = parts.into_iter();
    let mut acc = parts.next().expect("at least one range")?;
    for part in parts {
        acc.merge(part?);
    }
    Ok(acc)
}
