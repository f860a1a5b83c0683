use alloc::vec;
use alloc::vec::Vec;

use super::{for_each_min_degree_graph, Accumulator, GraphFacts, ScanConfig, Source, MAX_RECORDED_COUNTEREXAMPLES};
use crate::clique::{contains_complete_multipartite, MULTIPARTITE_GUARD};
use crate::graph::Graph;
use crate::{Error, Result};

/// Every graph with `α >= n - ceil(n/r) + εn` must contain the complete
/// `r`-partite graph with parts of size `k`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SupersatReport {
    pub n: usize,
    pub r: usize,
    pub k: usize,
    pub epsilon: f64,
    pub threshold: f64,
    /// Graphs below this minimum degree were skipped: `α <= δ` for
    /// non-complete graphs, so none of them can qualify.
    pub min_degree_floor: Option<usize>,
    pub graphs_scanned: u64,
    pub qualifying: u64,
    pub violations: Vec<Graph>,
    pub violation_count: u64,
    /// No graph qualified, so the check holds trivially.
    pub vacuous: bool,
    pub source: Source,
}

impl SupersatReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SupersatScan {
    n: usize,
    r: usize,
    k: usize,
    epsilon: f64,
    threshold: f64,
    tolerance: f64,
    scanned: u64,
    qualifying: u64,
    violations: Vec<Graph>,
    violation_count: u64,
}

impl SupersatScan {
    pub fn new(n: usize, r: usize, k: usize, epsilon: f64, cfg: &ScanConfig) -> Result<Self> {
        cfg.validate()?;
        if r < 1 || k < 1 || k * r > MULTIPARTITE_GUARD {
            return Err(Error::InvalidParameter("supersaturation needs r, k >= 1 and kr <= 8"));
        }
        if n == 0 || epsilon.is_nan() || epsilon < 0.0 {
            return Err(Error::InvalidParameter("supersaturation needs n >= 1 and epsilon >= 0"));
        }
        Ok(SupersatScan {
            n,
            r,
            k,
            epsilon,
            threshold: (n - n.div_ceil(r)) as f64 + epsilon * n as f64,
            tolerance: cfg.tolerance,
            scanned: 0,
            qualifying: 0,
            violations: Vec::new(),
            violation_count: 0,
        })
    }

    /// Smallest minimum degree a non-complete qualifying graph can have.
    pub fn min_degree_floor(&self) -> usize {
        let d = libm::ceil(self.threshold - self.tolerance).max(0.0) as usize;
        d.min(self.n - 1)
    }

    pub fn finish(self, min_degree_floor: Option<usize>, source: Source) -> SupersatReport {
        SupersatReport {
            n: self.n,
            r: self.r,
            k: self.k,
            epsilon: self.epsilon,
            threshold: self.threshold,
            min_degree_floor,
            graphs_scanned: self.scanned,
            qualifying: self.qualifying,
            violations: self.violations,
            violation_count: self.violation_count,
            vacuous: self.qualifying == 0,
            source,
        }
    }
}

impl Accumulator for SupersatScan {
    fn observe(&mut self, f: &GraphFacts) -> Result<()> {
        if f.order() != self.n {
            return Err(Error::InvalidParameter("scanned graph has the wrong order"));
        }
        self.scanned += 1;
        if self.n < 2 || f.alpha()? < self.threshold - self.tolerance {
            return Ok(());
        }
        self.qualifying += 1;
        if !contains_complete_multipartite(&f.graph, &vec![self.k; self.r])? {
            self.violation_count += 1;
            if self.violations.len() < MAX_RECORDED_COUNTEREXAMPLES {
                self.violations.push(f.graph.clone());
            }
        }
        Ok(())
    }

    fn merge(&mut self, later: Self) {
        self.scanned += later.scanned;
        self.qualifying += later.qualifying;
        self.violation_count += later.violation_count;
        let room = MAX_RECORDED_COUNTEREXAMPLES.saturating_sub(self.violations.len());
        self.violations.extend(later.violations.into_iter().take(room));
    }
}

/// Scans every labeled graph of order `n` that could qualify, generating
/// only those with minimum degree at least [`SupersatScan::min_degree_floor`].
pub fn verify_supersaturation(n: usize, r: usize, k: usize, epsilon: f64, cfg: &ScanConfig) -> Result<SupersatReport> {
    cfg.check_order(n)?;
    let mut scan = SupersatScan::new(n, r, k, epsilon, cfg)?;
    let floor = scan.min_degree_floor();
    for_each_min_degree_graph(n, floor, &mut |g| scan.observe(&GraphFacts::new(g)))?;
    Ok(scan.finish(Some(floor), Source::MinDegree(floor)))
}
