//! Two-sided clique-number bounds from the algebraic connectivity, and the
//! degree chain `α <= ν <= δ <= 2e/n`.

use libm::{ceil, floor};

use crate::clique::clique_number;
use crate::graph::{is_connected, vertex_connectivity, Graph};
use crate::spectra::algebraic_connectivity;
use crate::{Error, Result};

/// Slack for the chain and bound comparisons.
pub const BOUND_SLACK: f64 = 1e-9;

/// Tolerance for classifying a bound as attained.
pub const EQUALITY_TOLERANCE: f64 = 1e-6;

/// `n / (n - α)`, a lower bound on ω for connected non-complete graphs.
pub fn clique_lower_bound(n: usize, alpha: f64) -> Result<f64> {
    let nf = n as f64;
    if alpha <= 0.0 {
        return Err(Error::Disconnected);
    }
    if alpha >= nf - BOUND_SLACK {
        return Err(Error::CompleteGraph("lower clique bound is undefined for K_n (ω = n)"));
    }
    Ok(nf / (nf - alpha))
}

/// `n + 1 - 4 / (n α)`, an upper bound on ω.
pub fn clique_upper_bound(n: usize, alpha: f64) -> Result<f64> {
    if alpha <= 0.0 {
        return Err(Error::Disconnected);
    }
    let nf = n as f64;
    Ok(nf + 1.0 - 4.0 / (nf * alpha))
}

/// `4 / (n (n - r + 1))`, the diameter bound on α of the kite `Ki_{n,r}`.
pub fn kite_alpha_floor(n: usize, r: usize) -> Result<f64> {
    if r < 2 || r > n {
        return Err(Error::InvalidParameter("kite needs 2 <= r <= n"));
    }
    Ok(4.0 / (n as f64 * (n - r + 1) as f64))
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DegreeChain {
    pub alpha: f64,
    pub nu: usize,
    pub delta: usize,
    pub avg_degree: f64,
}

impl DegreeChain {
    /// `α <= ν <= δ <= 2e/n`, with [`BOUND_SLACK`] on the real comparisons.
    pub fn holds(&self) -> bool {
        self.alpha <= self.nu as f64 + BOUND_SLACK
            && self.nu <= self.delta
            && self.delta as f64 <= self.avg_degree + BOUND_SLACK
    }
}

pub fn degree_chain(g: &Graph) -> Result<DegreeChain> {
    if g.is_complete() {
        return Err(Error::CompleteGraph("degree chain needs a non-complete graph (α(K_n) = n > ν)"));
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    Ok(DegreeChain {
        alpha: algebraic_connectivity(g)?,
        nu: vertex_connectivity(g),
        delta: g.min_degree(),
        avg_degree: 2.0 * g.edge_count() as f64 / g.order() as f64,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BoundFlags {
    /// Bounds are undefined (complete graph); ω = n is reported directly.
    pub complete: bool,
    pub lower_holds: bool,
    pub upper_holds: bool,
    /// `n / (n - α)` equals ω within [`EQUALITY_TOLERANCE`].
    pub lower_equality: bool,
    pub chain_holds: bool,
}

/// Everything known about one connected graph: α, ω, both clique bounds
/// with integer brackets, and the degree chain.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BoundsReport {
    pub n: usize,
    pub alpha: f64,
    pub omega: usize,
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    pub lower_ceil: Option<usize>,
    pub upper_floor: Option<usize>,
    pub nu: usize,
    pub delta: usize,
    pub avg2e_n: f64,
    pub flags: BoundFlags,
}

impl BoundsReport {
    /// All applicable bounds and the chain hold.
    pub fn ok(&self) -> bool {
        self.flags.complete || (self.flags.lower_holds && self.flags.upper_holds && self.flags.chain_holds)
    }
}

pub fn sandwich_report(g: &Graph) -> Result<BoundsReport> {
    let n = g.order();
    if n < 2 {
        return Err(Error::InvalidParameter("bounds need n >= 2"));
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let alpha = algebraic_connectivity(g)?;
    let omega = clique_number(g);
    let nu = vertex_connectivity(g);
    let delta = g.min_degree();
    let avg2e_n = 2.0 * g.edge_count() as f64 / n as f64;

    if g.is_complete() {
        return Ok(BoundsReport {
            n,
            alpha,
            omega,
            lower: None,
            upper: None,
            lower_ceil: None,
            upper_floor: None,
            nu,
            delta,
            avg2e_n,
            flags: BoundFlags {
                complete: true,
                ..BoundFlags::default()
            },
        });
    }

    let lower = clique_lower_bound(n, alpha)?;
    let upper = clique_upper_bound(n, alpha)?;
    let chain = DegreeChain {
        alpha,
        nu,
        delta,
        avg_degree: avg2e_n,
    };
    let w = omega as f64;
    Ok(BoundsReport {
        n,
        alpha,
        omega,
        lower: Some(lower),
        upper: Some(upper),
        lower_ceil: Some(ceil(lower - BOUND_SLACK) as usize),
        upper_floor: Some(floor(upper + BOUND_SLACK) as usize),
        nu,
        delta,
        avg2e_n,
        flags: BoundFlags {
            complete: false,
            lower_holds: lower <= w + BOUND_SLACK,
            upper_holds: w <= upper + BOUND_SLACK,
            lower_equality: (lower - w).abs() <= EQUALITY_TOLERANCE,
            chain_holds: chain.holds(),
        },
    })
}
