use super::Graph;
use crate::{Error, Result};

/// Largest order whose upper triangle fits in a `u64` code.
pub const MAX_CODE_ORDER: usize = 11;

/// A labeled graph packed into an integer: bit `j(j-1)/2 + i` holds the
/// edge `(i, j)` for `i < j`, i.e. the upper triangle read column by column
/// `(0,1), (0,2), (1,2), (0,3), ...`, the same order graph6 uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GraphCode {
    pub n: usize,
    pub code: u64,
}

#[inline]
pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Number of upper-triangle bits for order `n`.
#[inline]
pub const fn triangle_bits(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl GraphCode {
    pub fn new(n: usize, code: u64) -> Result<Self> {
        if n == 0 || n > MAX_CODE_ORDER {
            return Err(Error::InvalidOrder(n));
        }
        let bits = triangle_bits(n);
        if bits < 64 && code >> bits != 0 {
            return Err(Error::InvalidParameter("code has bits beyond the upper triangle"));
        }
        Ok(GraphCode { n, code })
    }

    /// Number of labeled graphs of order `n`, i.e. `2^(n(n-1)/2)`.
    pub fn space_size(n: usize) -> Result<u64> {
        if n == 0 || n > MAX_CODE_ORDER {
            return Err(Error::InvalidOrder(n));
        }
        Ok(1u64 << triangle_bits(n))
    }

    pub fn encode(g: &Graph) -> Result<Self> {
        let n = g.order();
        if n > MAX_CODE_ORDER {
            return Err(Error::InvalidOrder(n));
        }
        let code = g.edges().fold(0u64, |acc, (i, j)| acc | 1 << pair_index(i, j));
        Ok(GraphCode { n, code })
    }

    pub fn decode(&self) -> Graph {
        let mut rows = [0u64; MAX_CODE_ORDER];
        let mut bits = self.code;
        'outer: for j in 1..self.n {
            for i in 0..j {
                if bits == 0 {
                    break 'outer;
                }
                if bits & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                bits >>= 1;
            }
        }
        Graph {
            n: self.n,
            rows: rows[..self.n].to_vec(),
        }
    }
}
