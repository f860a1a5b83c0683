//! Exhaustive small-order checks of the extremal α results.
//!
//! Scans run over every labeled graph of one order (by [`GraphCode`]) or over
//! a caller-supplied stream such as a graph6 corpus. Per-graph facts are
//! computed once and fed to accumulators; accumulators built on disjoint
//! code ranges merge in range order, so a parallel scan reproduces the
//! serial certificate exactly.
//!
//! [`GraphCode`]: crate::GraphCode

mod enumerate;
mod extremal;
mod join;
mod sandwich;
mod supersat;
mod trend;

use alloc::string::String;
use alloc::vec::Vec;
use core::cell::OnceCell;

pub use enumerate::{code_space, enumerate_graphs, for_each_min_degree_graph, graphs_in_range, split_range};
pub use extremal::{
    verify_max_theorem, verify_max_theorem_over, verify_min_theorem, verify_min_theorem_over, Counterexample, ExtremalCertificate,
    MaxScan, MinScan, Mode,
};
pub use join::{check_join_characterization, JoinCheck, JoinDecomposition};
pub use sandwich::{verify_sandwich, SandwichScan, SandwichSummary};
pub use supersat::{verify_supersaturation, SupersatReport, SupersatScan};
pub use trend::{erdos_stone_trend, TrendRow, TrendTable};

use crate::clique::clique_number;
use crate::graph::{is_connected, Graph};
use crate::spectra::algebraic_connectivity;
use crate::{Error, Result};

pub const DEFAULT_GUARD: usize = 7;
pub const MAX_GUARD: usize = 9;

/// Counterexamples kept verbatim in a certificate; the count is exact.
pub const MAX_RECORDED_COUNTEREXAMPLES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ScanConfig {
    /// Largest order the labeled enumeration accepts.
    pub guard: usize,
    /// Slack for "never exceeds" / "never below" comparisons.
    pub tolerance: f64,
    /// Distance from the bound at which a graph counts as attaining it.
    pub equality: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            guard: DEFAULT_GUARD,
            tolerance: 1e-8,
            equality: 1e-6,
        }
    }
}

impl ScanConfig {
    pub fn with_guard(guard: usize) -> Result<Self> {
        let cfg = ScanConfig {
            guard,
            ..ScanConfig::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.guard == 0 || self.guard > MAX_GUARD {
            return Err(Error::InvalidParameter("guard must be in 1..=9"));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 || self.equality.is_nan() || self.equality <= 0.0 {
            return Err(Error::InvalidParameter("tolerances must be positive"));
        }
        Ok(())
    }

    pub fn check_order(&self, n: usize) -> Result<()> {
        self.validate()?;
        if n > self.guard {
            return Err(Error::GuardExceeded { n, guard: self.guard });
        }
        Ok(())
    }
}

/// Where the scanned graphs came from.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Source {
    /// Every labeled graph of the order, in code order.
    Enumeration,
    /// Every labeled graph with minimum degree at least the given value.
    MinDegree(usize),
    /// An external stream trusted to be exhaustive; the label names it.
    Corpus(String),
}

/// One scanned graph with lazily computed invariants, shared by every
/// accumulator observing it.
pub struct GraphFacts {
    pub graph: Graph,
    connected: OnceCell<bool>,
    omega: OnceCell<usize>,
    alpha: OnceCell<f64>,
}

impl GraphFacts {
    pub fn new(graph: Graph) -> Self {
        GraphFacts {
            graph,
            connected: OnceCell::new(),
            omega: OnceCell::new(),
            alpha: OnceCell::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn connected(&self) -> bool {
        *self.connected.get_or_init(|| is_connected(&self.graph))
    }

    pub fn omega(&self) -> usize {
        *self.omega.get_or_init(|| clique_number(&self.graph))
    }

    /// α, exactly 0 when disconnected. Requires order at least 2.
    pub fn alpha(&self) -> Result<f64> {
        if let Some(&a) = self.alpha.get() {
            return Ok(a);
        }
        let a = if self.connected() {
            algebraic_connectivity(&self.graph)?
        } else {
            0.0
        };
        Ok(*self.alpha.get_or_init(|| a))
    }
}

/// Partial scan state that can absorb the state of a later range.
pub trait Accumulator: Sized {
    fn observe(&mut self, facts: &GraphFacts) -> Result<()>;

    /// Appends the results of `later`, which scanned graphs that come after
    /// everything `self` has seen.
    fn merge(&mut self, later: Self);
}

impl<A: Accumulator> Accumulator for Vec<A> {
    fn observe(&mut self, facts: &GraphFacts) -> Result<()> {
        self.iter_mut().try_for_each(|a| a.observe(facts))
    }

    fn merge(&mut self, later: Self) {
        for (a, b) in self.iter_mut().zip(later) {
            a.merge(b);
        }
    }
}

impl<A: Accumulator, B: Accumulator> Accumulator for (A, B) {
    fn observe(&mut self, facts: &GraphFacts) -> Result<()> {
        self.0.observe(facts)?;
        self.1.observe(facts)
    }

    fn merge(&mut self, later: Self) {
        self.0.merge(later.0);
        self.1.merge(later.1);
    }
}

/// Feeds every labeled graph of order `n` with code in `range` to `acc`.
pub fn scan_range<A: Accumulator>(n: usize, range: core::ops::Range<u64>, acc: &mut A) -> Result<()> {
    for g in graphs_in_range(n, range)? {
        acc.observe(&GraphFacts::new(g))?;
    }
    Ok(())
}

/// Serial scan over all labeled graphs of order `n`.
pub fn scan_all<A: Accumulator>(n: usize, cfg: &ScanConfig, acc: &mut A) -> Result<()> {
    cfg.check_order(n)?;
    scan_range(n, 0..code_space(n)?, acc)
}

/// Feeds each graph of `graphs` to `acc`.
pub fn scan_stream<A: Accumulator, I: IntoIterator<Item = Graph>>(graphs: I, acc: &mut A) -> Result<()> {
    for g in graphs {
        acc.observe(&GraphFacts::new(g))?;
    }
    Ok(())
}

/// Keeps one representative per isomorphism class, in first-seen order.
#[derive(Debug, Clone, Default, PartialEq)]
pub(crate) struct IsoClasses {
    pub reps: Vec<Graph>,
}

impl IsoClasses {
    pub fn insert(&mut self, g: &Graph) -> bool {
        if self.reps.iter().any(|r| crate::graph::is_isomorphic(r, g)) {
            return false;
        }
        self.reps.push(g.clone());
        true
    }

    pub fn merge(&mut self, later: IsoClasses) {
        for g in later.reps {
            self.insert(&g);
        }
    }
}
