use alloc::vec::Vec;

use super::join::{check_join_characterization, has_edgeless_factors};
use super::{scan_all, scan_stream, Accumulator, GraphFacts, IsoClasses, ScanConfig, Source, MAX_RECORDED_COUNTEREXAMPLES};
use crate::graph::{is_isomorphic, kite, turan, Graph};
use crate::spectra::algebraic_connectivity;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Mode {
    Max,
    Min,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Counterexample {
    pub graph: Graph,
    pub alpha: f64,
    pub reason: &'static str,
}

/// Result of one exhaustive extremal check.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ExtremalCertificate {
    pub n: usize,
    pub r: usize,
    pub mode: Mode,
    /// The predicted extremum.
    pub bound: f64,
    /// The extremum over qualifying graphs, if any qualified.
    pub achieved: Option<f64>,
    /// `achieved` is within the equality tolerance of `bound`.
    pub attained: bool,
    /// One graph per isomorphism class attaining the bound, first-seen order.
    pub achievers: Vec<Graph>,
    /// Labeled graphs attaining the bound.
    pub achiever_count: u64,
    pub characterization_ok: bool,
    /// At most [`MAX_RECORDED_COUNTEREXAMPLES`] entries.
    pub counterexamples: Vec<Counterexample>,
    pub counterexample_count: u64,
    pub graphs_scanned: u64,
    pub qualifying: u64,
    pub source: Source,
}

impl ExtremalCertificate {
    pub fn passed(&self) -> bool {
        self.counterexample_count == 0 && self.characterization_ok && self.attained
    }
}

#[derive(Debug, Clone, PartialEq)]
struct Tally {
    extremum: Option<f64>,
    classes: IsoClasses,
    achiever_count: u64,
    counterexamples: Vec<Counterexample>,
    counterexample_count: u64,
    scanned: u64,
    qualifying: u64,
}

impl Tally {
    fn new() -> Self {
        Tally {
            extremum: None,
            classes: IsoClasses::default(),
            achiever_count: 0,
            counterexamples: Vec::new(),
            counterexample_count: 0,
            scanned: 0,
            qualifying: 0,
        }
    }

    fn reject(&mut self, graph: &Graph, alpha: f64, reason: &'static str) {
        self.counterexample_count += 1;
        if self.counterexamples.len() < MAX_RECORDED_COUNTEREXAMPLES {
            self.counterexamples.push(Counterexample {
                graph: graph.clone(),
                alpha,
                reason,
            });
        }
    }

    fn achieve(&mut self, graph: &Graph) {
        self.achiever_count += 1;
        self.classes.insert(graph);
    }

    fn merge(&mut self, later: Tally, pick: fn(f64, f64) -> f64) {
        self.extremum = match (self.extremum, later.extremum) {
            (Some(a), Some(b)) => Some(pick(a, b)),
            (a, b) => a.or(b),
        };
        self.classes.merge(later.classes);
        self.achiever_count += later.achiever_count;
        self.counterexample_count += later.counterexample_count;
        let room = MAX_RECORDED_COUNTEREXAMPLES.saturating_sub(self.counterexamples.len());
        self.counterexamples.extend(later.counterexamples.into_iter().take(room));
        self.scanned += later.scanned;
        self.qualifying += later.qualifying;
    }

    #[allow(clippy::too_many_arguments)]
    fn certificate(self, n: usize, r: usize, mode: Mode, bound: f64, equality: f64, characterization_ok: bool, source: Source) -> ExtremalCertificate {
        ExtremalCertificate {
            n,
            r,
            mode,
            bound,
            achieved: self.extremum,
            attained: self.extremum.is_some_and(|a| (a - bound).abs() <= equality),
            achievers: self.classes.reps,
            achiever_count: self.achiever_count,
            characterization_ok,
            counterexamples: self.counterexamples,
            counterexample_count: self.counterexample_count,
            graphs_scanned: self.scanned,
            qualifying: self.qualifying,
            source,
        }
    }
}

fn check_order(f: &GraphFacts, n: usize) -> Result<()> {
    if f.order() != n {
        return Err(Error::InvalidParameter("scanned graph has the wrong order"));
    }
    Ok(())
}

/// Maximum α over non-complete `K_{r+1}`-free graphs of order `n`, against
/// `n - ceil(n/r)` and its equality characterization.
#[derive(Debug, Clone, PartialEq)]
pub struct MaxScan {
    n: usize,
    r: usize,
    k: usize,
    t: usize,
    bound: f64,
    cfg: ScanConfig,
    tally: Tally,
}

impl MaxScan {
    pub fn new(n: usize, r: usize, cfg: &ScanConfig) -> Result<Self> {
        if r < 2 || r >= n {
            return Err(Error::InvalidParameter("max check needs 2 <= r < n"));
        }
        cfg.validate()?;
        Ok(MaxScan {
            n,
            r,
            k: n / r,
            t: n % r,
            bound: (n - n.div_ceil(r)) as f64,
            cfg: *cfg,
            tally: Tally::new(),
        })
    }

    /// Residues where only the Turán graph attains the bound.
    fn turan_only(&self) -> bool {
        self.t == 0 || self.t == self.r - 1
    }

    pub fn finish(mut self, source: Source) -> Result<ExtremalCertificate> {
        let mut characterization_ok = true;
        let reps = self.tally.classes.reps.clone();
        let target = turan(self.n, self.r)?;
        for g in &reps {
            let ok = if self.turan_only() {
                is_isomorphic(g, &target)
            } else {
                check_join_characterization(g, self.n, self.r)?.ok
            };
            if !ok {
                characterization_ok = false;
                let alpha = algebraic_connectivity(g)?;
                self.tally.reject(g, alpha, "attains the bound outside the characterization");
            }
        }
        Ok(self
            .tally
            .certificate(self.n, self.r, Mode::Max, self.bound, self.cfg.equality, characterization_ok, source))
    }
}

impl Accumulator for MaxScan {
    fn observe(&mut self, f: &GraphFacts) -> Result<()> {
        check_order(f, self.n)?;
        self.tally.scanned += 1;
        if f.omega() > self.r || f.graph.is_complete() {
            return Ok(());
        }
        self.tally.qualifying += 1;
        let alpha = f.alpha()?;
        self.tally.extremum = Some(self.tally.extremum.map_or(alpha, |m| m.max(alpha)));
        if alpha > self.bound + self.cfg.tolerance {
            self.tally.reject(&f.graph, alpha, "exceeds n - ceil(n/r)");
        }
        if alpha >= self.bound - self.cfg.equality {
            self.tally.achieve(&f.graph);
        } else if !self.turan_only()
            && has_edgeless_factors(&f.graph, self.k, self.t)
            && check_join_characterization(&f.graph, self.n, self.r)?.ok
        {
            self.tally.reject(&f.graph, alpha, "has the join decomposition but misses the bound");
        }
        Ok(())
    }

    fn merge(&mut self, later: Self) {
        self.tally.merge(later.tally, f64::max);
    }
}

/// Minimum α over connected graphs of order `n` with clique number exactly
/// `r`, against the kite.
#[derive(Debug, Clone, PartialEq)]
pub struct MinScan {
    n: usize,
    r: usize,
    bound: f64,
    kite: Graph,
    cfg: ScanConfig,
    tally: Tally,
}

impl MinScan {
    pub fn new(n: usize, r: usize, cfg: &ScanConfig) -> Result<Self> {
        if r < 2 || r > n {
            return Err(Error::InvalidParameter("min check needs 2 <= r <= n"));
        }
        cfg.validate()?;
        let kite = kite(n, r)?;
        Ok(MinScan {
            n,
            r,
            bound: algebraic_connectivity(&kite)?,
            kite,
            cfg: *cfg,
            tally: Tally::new(),
        })
    }

    pub fn finish(mut self, source: Source) -> Result<ExtremalCertificate> {
        let mut characterization_ok = true;
        for g in self.tally.classes.reps.clone() {
            if !is_isomorphic(&g, &self.kite) {
                characterization_ok = false;
                let alpha = algebraic_connectivity(&g)?;
                self.tally.reject(&g, alpha, "attains the kite value but is not the kite");
            }
        }
        Ok(self
            .tally
            .certificate(self.n, self.r, Mode::Min, self.bound, self.cfg.equality, characterization_ok, source))
    }
}

impl Accumulator for MinScan {
    fn observe(&mut self, f: &GraphFacts) -> Result<()> {
        check_order(f, self.n)?;
        self.tally.scanned += 1;
        if !f.connected() || f.omega() != self.r {
            return Ok(());
        }
        self.tally.qualifying += 1;
        let alpha = f.alpha()?;
        self.tally.extremum = Some(self.tally.extremum.map_or(alpha, |m| m.min(alpha)));
        if alpha < self.bound - self.cfg.tolerance {
            self.tally.reject(&f.graph, alpha, "below the kite");
        }
        if alpha <= self.bound + self.cfg.equality {
            self.tally.achieve(&f.graph);
        }
        Ok(())
    }

    fn merge(&mut self, later: Self) {
        self.tally.merge(later.tally, f64::min);
    }
}

/// Serial exhaustive max check over all labeled graphs of order `n`.
pub fn verify_max_theorem(n: usize, r: usize, cfg: &ScanConfig) -> Result<ExtremalCertificate> {
    let mut scan = MaxScan::new(n, r, cfg)?;
    scan_all(n, cfg, &mut scan)?;
    scan.finish(Source::Enumeration)
}

/// Max check over a caller-supplied stream, trusted to be exhaustive.
pub fn verify_max_theorem_over<I>(n: usize, r: usize, cfg: &ScanConfig, graphs: I, source: Source) -> Result<ExtremalCertificate>
where
    I: IntoIterator<Item = Graph>,
{
    let mut scan = MaxScan::new(n, r, cfg)?;
    scan_stream(graphs, &mut scan)?;
    scan.finish(source)
}

pub fn verify_min_theorem(n: usize, r: usize, cfg: &ScanConfig) -> Result<ExtremalCertificate> {
    let mut scan = MinScan::new(n, r, cfg)?;
    scan_all(n, cfg, &mut scan)?;
    scan.finish(Source::Enumeration)
}

pub fn verify_min_theorem_over<I>(n: usize, r: usize, cfg: &ScanConfig, graphs: I, source: Source) -> Result<ExtremalCertificate>
where
    I: IntoIterator<Item = Graph>,
{
    let mut scan = MinScan::new(n, r, cfg)?;
    scan_stream(graphs, &mut scan)?;
    scan.finish(source)
}
