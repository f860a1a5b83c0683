use alloc::vec::Vec;

use super::{scan_all, Accumulator, Counterexample, GraphFacts, IsoClasses, ScanConfig, MAX_RECORDED_COUNTEREXAMPLES};
use crate::bounds::{clique_lower_bound, clique_upper_bound, degree_chain, BOUND_SLACK, EQUALITY_TOLERANCE};
use crate::graph::{is_isomorphic, turan};
use crate::{Error, Result};

/// Checks `n/(n-α) <= ω <= n+1-4/(nα)` (real and integer-rounded) on every
/// connected non-complete graph, and that the lower bound is attained only
/// by Turán graphs `T_{n,r}` with `r | n`. Optionally also checks the
/// degree chain, which needs a max-flow per graph.
#[derive(Debug, Clone, PartialEq)]
pub struct SandwichScan {
    n: usize,
    with_chain: bool,
    checked: u64,
    violations: Vec<Counterexample>,
    violation_count: u64,
    equality_count: u64,
    equality_classes: IsoClasses,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SandwichSummary {
    pub n: usize,
    pub chain_checked: bool,
    pub checked: u64,
    pub violations: Vec<Counterexample>,
    pub violation_count: u64,
    /// Labeled graphs with `n/(n-α) = ω` within the equality tolerance.
    pub equality_count: u64,
    /// Labeled copies of `T_{n,r}` over `r | n`, `2 <= r < n`.
    pub expected_equality_count: u64,
    pub equality_classes: Vec<crate::graph::Graph>,
}

impl SandwichSummary {
    pub fn passed(&self) -> bool {
        self.violation_count == 0 && self.equality_count == self.expected_equality_count
    }
}

impl SandwichScan {
    pub fn new(n: usize, with_chain: bool) -> Self {
        SandwichScan {
            n,
            with_chain,
            checked: 0,
            violations: Vec::new(),
            violation_count: 0,
            equality_count: 0,
            equality_classes: IsoClasses::default(),
        }
    }

    fn reject(&mut self, f: &GraphFacts, alpha: f64, reason: &'static str) {
        self.violation_count += 1;
        if self.violations.len() < MAX_RECORDED_COUNTEREXAMPLES {
            self.violations.push(Counterexample {
                graph: f.graph.clone(),
                alpha,
                reason,
            });
        }
    }

    pub fn finish(self) -> Result<SandwichSummary> {
        let n = self.n;
        let expected = (2..n).filter(|&r| n.is_multiple_of(r)).map(|r| labeled_balanced_multipartite(n, r)).sum();
        let mut summary = SandwichSummary {
            n,
            chain_checked: self.with_chain,
            checked: self.checked,
            violations: self.violations,
            violation_count: self.violation_count,
            equality_count: self.equality_count,
            expected_equality_count: expected,
            equality_classes: self.equality_classes.reps,
        };
        for g in summary.equality_classes.clone() {
            let omega = crate::clique::clique_number(&g);
            let turan_ok = n.is_multiple_of(omega) && is_isomorphic(&g, &turan(n, omega)?);
            if !turan_ok {
                summary.violation_count += 1;
                summary.violations.push(Counterexample {
                    alpha: crate::spectra::algebraic_connectivity(&g)?,
                    graph: g,
                    reason: "lower bound attained by a non-Turán graph",
                });
            }
        }
        Ok(summary)
    }
}

/// `n! / ((n/r)!^r r!)`: labelings of `T_{n,r}` when `r | n`.
fn labeled_balanced_multipartite(n: usize, r: usize) -> u64 {
    let fact = |m: usize| (1..=m as u64).product::<u64>();
    fact(n) / (fact(n / r).pow(r as u32) * fact(r))
}

impl Accumulator for SandwichScan {
    fn observe(&mut self, f: &GraphFacts) -> Result<()> {
        if f.order() != self.n {
            return Err(Error::InvalidParameter("scanned graph has the wrong order"));
        }
        if self.n < 2 || !f.connected() || f.graph.is_complete() {
            return Ok(());
        }
        self.checked += 1;
        let alpha = f.alpha()?;
        let omega = f.omega() as f64;
        let lower = clique_lower_bound(self.n, alpha)?;
        let upper = clique_upper_bound(self.n, alpha)?;
        if lower > omega + BOUND_SLACK || libm::ceil(lower - BOUND_SLACK) > omega {
            self.reject(f, alpha, "clique number below n/(n-α)");
        }
        if omega > upper + BOUND_SLACK || omega > libm::floor(upper + BOUND_SLACK) {
            self.reject(f, alpha, "clique number above n+1-4/(nα)");
        }
        if (lower - omega).abs() <= EQUALITY_TOLERANCE {
            self.equality_count += 1;
            self.equality_classes.insert(&f.graph);
        }
        if self.with_chain && !degree_chain(&f.graph)?.holds() {
            self.reject(f, alpha, "degree chain α <= ν <= δ <= 2e/n fails");
        }
        Ok(())
    }

    fn merge(&mut self, later: Self) {
        self.checked += later.checked;
        self.violation_count += later.violation_count;
        let room = MAX_RECORDED_COUNTEREXAMPLES.saturating_sub(self.violations.len());
        self.violations.extend(later.violations.into_iter().take(room));
        self.equality_count += later.equality_count;
        self.equality_classes.merge(later.equality_classes);
    }
}

/// Serial sandwich scan over all labeled graphs of order `n`.
pub fn verify_sandwich(n: usize, with_chain: bool, cfg: &ScanConfig) -> Result<SandwichSummary> {
    let mut scan = SandwichScan::new(n, with_chain);
    scan_all(n, cfg, &mut scan)?;
    scan.finish()
}
