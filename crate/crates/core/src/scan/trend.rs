use alloc::vec::Vec;

use crate::{Error, Result};

/// One row of the `α(T_{n,r}) / n` table.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TrendRow {
    pub n: usize,
    /// `n - ceil(n/r)`, exact.
    pub alpha_turan: usize,
    pub ratio: f64,
    /// `ratio - (1 - 1/r)`, at most 0.
    pub gap: f64,
    /// `r | n` and the ratio is exactly `1 - 1/r`.
    pub exact: bool,
    /// `|ratio - (1 - 1/r)| < 1/n`.
    pub within: bool,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TrendTable {
    pub r: usize,
    pub rows: Vec<TrendRow>,
}

impl TrendTable {
    /// Every row is within `1/n` of the limit and every multiple of `r` hits
    /// it exactly.
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|row| row.within && (row.n % self.r != 0 || row.exact))
    }
}

/// `α(T_{n,r}) / n` for `n = r..=n_max`. Both checks are decided in integers:
/// with `c = ceil(n/r)`, the ratio equals `1 - 1/r` iff `r(n - c) = n(r - 1)`,
/// and the gap is below `1/n` iff `rc - n < r`.
pub fn erdos_stone_trend(r: usize, n_max: usize) -> Result<TrendTable> {
    if r < 2 {
        return Err(Error::InvalidParameter("trend needs r >= 2"));
    }
    let rows = (r..=n_max)
        .map(|n| {
            let c = n.div_ceil(r);
            let alpha_turan = n - c;
            let ratio = alpha_turan as f64 / n as f64;
            TrendRow {
                n,
                alpha_turan,
                ratio,
                // (r(n - c) - n(r - 1)) / (nr) = (n - rc) / (nr), exact 0 when r | n.
                gap: (n as f64 - (r * c) as f64) / (n * r) as f64,
                exact: r * alpha_turan == n * (r - 1),
                within: r * c - n < r,
            }
        })
        .collect();
    Ok(TrendTable { r, rows })
}
