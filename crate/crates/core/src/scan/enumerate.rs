use alloc::vec::Vec;
use core::ops::Range;

use super::ScanConfig;
use crate::graph::{complement, Graph, GraphCode, MAX_ORDER};
use crate::{Error, Result};

/// Number of labeled graphs of order `n`.
pub fn code_space(n: usize) -> Result<u64> {
    GraphCode::space_size(n)
}

/// Labeled graphs of order `n` whose codes lie in `range`, in code order.
pub fn graphs_in_range(n: usize, range: Range<u64>) -> Result<impl Iterator<Item = Graph>> {
    let space = code_space(n)?;
    if range.end > space || range.start > range.end {
        return Err(Error::InvalidParameter("code range exceeds the labeled graph space"));
    }
    Ok(range.map(move |code| GraphCode { n, code }.decode()))
}

/// Every labeled graph of order `n` accepted by `filter`, in code order.
/// Refuses orders above the configured guard.
pub fn enumerate_graphs<F>(n: usize, cfg: &ScanConfig, mut filter: F) -> Result<impl Iterator<Item = Graph>>
where
    F: FnMut(&Graph) -> bool,
{
    cfg.check_order(n)?;
    Ok(graphs_in_range(n, 0..code_space(n)?)?.filter(move |g| filter(g)))
}

/// Splits `0..total` into at most `parts` contiguous nonempty ranges of
/// near-equal length, in increasing order.
pub fn split_range(total: u64, parts: usize) -> Vec<Range<u64>> {
    let parts = (parts.max(1) as u64).min(total.max(1));
    let (base, extra) = (total / parts, total % parts);
    let mut out = Vec::with_capacity(parts as usize);
    let mut start = 0;
    for i in 0..parts {
        let len = base + u64::from(i < extra);
        if len > 0 {
            out.push(start..start + len);
        }
        start += len;
    }
    out
}

/// Calls `f` on every labeled graph of order `n` with minimum degree at
/// least `min_degree`, returning how many were visited.
///
/// Builds complements of maximum degree at most `n - 1 - min_degree` edge by
/// edge, so graphs below the degree floor are never generated. The visiting
/// order is deterministic. A floor above `n - 1` is clipped, leaving `K_n`.
pub fn for_each_min_degree_graph(n: usize, min_degree: usize, f: &mut dyn FnMut(Graph) -> Result<()>) -> Result<u64> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::InvalidOrder(n));
    }
    let cap = n - 1 - min_degree.min(n - 1);
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut walk = Walk {
        pairs: &pairs,
        cap,
        degree: alloc::vec![0; n],
        h: Graph::empty(n)?,
        visited: 0,
        f,
    };
    walk.step(0)?;
    Ok(walk.visited)
}

struct Walk<'a, 'f> {
    pairs: &'a [(usize, usize)],
    cap: usize,
    degree: Vec<usize>,
    h: Graph,
    visited: u64,
    f: &'f mut dyn FnMut(Graph) -> Result<()>,
}

impl Walk<'_, '_> {
    fn step(&mut self, idx: usize) -> Result<()> {
        if idx == self.pairs.len() {
            self.visited += 1;
            return (self.f)(complement(&self.h));
        }
        self.step(idx + 1)?;
        let (i, j) = self.pairs[idx];
        if self.degree[i] < self.cap && self.degree[j] < self.cap {
            self.degree[i] += 1;
            self.degree[j] += 1;
            self.h.add_edge(i, j)?;
            self.step(idx + 1)?;
            self.h.remove_edge(i, j)?;
            self.degree[i] -= 1;
            self.degree[j] -= 1;
        }
        Ok(())
    }
}
