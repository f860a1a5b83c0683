//! Cyclic Jacobi rotations for dense symmetric matrices.

use alloc::vec;
use alloc::vec::Vec;
use libm::sqrt;

use super::SymMatrix;
use crate::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues (unsorted, diagonal order) and, when requested, the
/// eigenvectors as columns of a row-major `n x n` array.
pub(crate) struct Diagonalized {
    pub values: Vec<f64>,
    pub vectors: Option<Vec<f64>>,
}

/// Sweeps over all pairs `(p, q)`, `p < q`, zeroing `a[p][q]` with a plane
/// rotation, until the off-diagonal Frobenius norm drops to
/// `tol * ||m||_F`.
pub(crate) fn diagonalize(m: &SymMatrix, tol: f64, want_vectors: bool) -> Result<Diagonalized> {
    let n = m.n;
    let mut a = m.data.clone();
    let mut v = want_vectors.then(|| {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        id
    });
    let target = tol * frobenius(&a);

    for sweep in 0..MAX_SWEEPS {
        if off_diagonal(&a, n) <= target {
            let values = (0..n).map(|i| a[i * n + i]).collect();
            return Ok(Diagonalized { values, vectors: v });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                // A coupling below roundoff of both diagonal entries is dropped
                // instead of rotated: inside a degenerate cluster it would force
                // a 45 degree rotation that keeps remixing the residuals between
                // clusters, and convergence turns linear.
                let (app, aqq) = (a[p * n + p].abs(), a[q * n + q].abs());
                let g = 100.0 * apq.abs();
                if sweep > 3 && app + g == app && aqq + g == aqq {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + sqrt(theta * theta + 1.0))
                } else {
                    -1.0 / (-theta + sqrt(theta * theta + 1.0))
                };
                let c = 1.0 / sqrt(t * t + 1.0);
                let s = t * c;
                rotate(&mut a, n, p, q, c, s, t);
                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
    Err(Error::NoConvergence(MAX_SWEEPS))
}

/// `a <- J^T a J` for the rotation in the `(p, q)` plane.
#[inline]
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize, c: f64, s: f64, t: f64) {
    let apq = a[p * n + q];
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let (akp, akq) = (a[k * n + p], a[k * n + q]);
        let kp = c * akp - s * akq;
        let kq = s * akp + c * akq;
        a[k * n + p] = kp;
        a[p * n + k] = kp;
        a[k * n + q] = kq;
        a[q * n + k] = kq;
    }
    a[p * n + p] -= t * apq;
    a[q * n + q] += t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

fn frobenius(a: &[f64]) -> f64 {
    sqrt(a.iter().map(|x| x * x).sum())
}

fn off_diagonal(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            sum += 2.0 * a[p * n + q] * a[p * n + q];
        }
    }
    sqrt(sum)
}
