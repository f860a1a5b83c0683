//! Laplacian spectra: full eigendecomposition, algebraic connectivity and
//! Fiedler vectors.

mod jacobi;

use alloc::vec::Vec;

pub use jacobi::{DEFAULT_TOLERANCE, MAX_SWEEPS};

use crate::graph::{complement, is_connected, Graph};
use crate::{Error, Result};

/// Eigenvalues closer than this to α count toward its multiplicity.
pub const MULTIPLICITY_TOLERANCE: f64 = 1e-7;

const SYMMETRY_TOLERANCE: f64 = 1e-12;

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::Dimension {
                expected: n * n,
                got: data.len(),
            });
        }
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                worst = worst.max((data[i * n + j] - data[j * n + i]).abs());
            }
        }
        if worst > SYMMETRY_TOLERANCE || worst.is_nan() {
            return Err(Error::NotSymmetric(worst));
        }
        Ok(SymMatrix { n, data })
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let n = values.len();
        let mut data = alloc::vec![0.0; n * n];
        for (i, &x) in values.iter().enumerate() {
            data[i * n + i] = x;
        }
        SymMatrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// `M x` for a vector of matching length.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// `L(G) = D(G) - A(G)`.
pub fn laplacian(g: &Graph) -> SymMatrix {
    let n = g.order();
    let mut data = alloc::vec![0.0; n * n];
    for v in 0..n {
        data[v * n + v] = g.degree(v) as f64;
    }
    for (u, v) in g.edges() {
        data[u * n + v] = -1.0;
        data[v * n + u] = -1.0;
    }
    SymMatrix { n, data }
}

/// Full eigendecomposition with eigenvalues sorted descending,
/// `λ_1 >= ... >= λ_n`, and orthonormal eigenvectors aligned with them.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<Vec<f64>>,
}

impl Spectrum {
    /// Second-smallest eigenvalue `λ_{n-1}`; `None` below order 2.
    pub fn alpha(&self) -> Option<f64> {
        let n = self.eigenvalues.len();
        (n >= 2).then(|| self.eigenvalues[n - 2])
    }

    pub fn largest(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    /// Number of eigenvalues within `tol` of `value`.
    pub fn multiplicity(&self, value: f64, tol: f64) -> usize {
        self.eigenvalues.iter().filter(|&&x| (x - value).abs() <= tol).count()
    }
}

/// Cyclic Jacobi eigendecomposition; `tol` bounds the final off-diagonal
/// Frobenius norm relative to `||m||_F`.
pub fn eig_sym(m: &SymMatrix, tol: f64) -> Result<Spectrum> {
    let d = jacobi::diagonalize(m, tol, true)?;
    let n = m.n;
    let vectors = d.vectors.expect("requested");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d.values[j].total_cmp(&d.values[i]));
    let eigenvalues = order.iter().map(|&i| d.values[i]).collect();
    let eigenvectors = order.iter().map(|&i| (0..n).map(|k| vectors[k * n + i]).collect()).collect();
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
    })
}

/// Eigenvalues only, sorted descending.
pub fn eigenvalues_sym(m: &SymMatrix, tol: f64) -> Result<Vec<f64>> {
    let mut values = jacobi::diagonalize(m, tol, false)?.values;
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

/// Sorted Laplacian eigenvalues of `g`, descending.
pub fn laplacian_eigenvalues(g: &Graph) -> Result<Vec<f64>> {
    eigenvalues_sym(&laplacian(g), DEFAULT_TOLERANCE)
}

pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum> {
    eig_sym(&laplacian(g), DEFAULT_TOLERANCE)
}

/// Algebraic connectivity α(G), the second-smallest Laplacian eigenvalue.
///
/// Exactly 0 for disconnected graphs (decided structurally).
pub fn algebraic_connectivity(g: &Graph) -> Result<f64> {
    if g.order() < 2 {
        return Err(Error::InvalidParameter("algebraic connectivity needs n >= 2"));
    }
    if !is_connected(g) {
        return Ok(0.0);
    }
    let values = laplacian_eigenvalues(g)?;
    Ok(values[values.len() - 2])
}

/// Largest Laplacian eigenvalue λ_1(G).
pub fn lambda_max(g: &Graph) -> Result<f64> {
    Ok(laplacian_eigenvalues(g)?[0])
}

/// α(G) next to `n - λ_1(complement(G))`; the two agree for every graph
/// because `L(G) + L(complement(G)) = nI - J`.
pub fn complement_alpha_check(g: &Graph) -> Result<(f64, f64)> {
    let alpha = algebraic_connectivity(g)?;
    let via_complement = g.order() as f64 - lambda_max(&complement(g))?;
    Ok((alpha, via_complement))
}

/// Unit eigenvector for α with its multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct FiedlerVector {
    pub values: Vec<f64>,
    pub alpha: f64,
    pub multiplicity: usize,
}

impl FiedlerVector {
    pub fn is_simple(&self) -> bool {
        self.multiplicity == 1
    }
}

/// Fiedler vector of a connected graph, signed so that its first
/// coordinate with magnitude above 1e-9 is positive.
pub fn fiedler_vector(g: &Graph) -> Result<FiedlerVector> {
    let n = g.order();
    if n < 2 {
        return Err(Error::InvalidParameter("Fiedler vector needs n >= 2"));
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let spec = laplacian_spectrum(g)?;
    let alpha = spec.eigenvalues[n - 2];
    let mut values = spec.eigenvectors[n - 2].clone();
    if let Some(first) = values.iter().find(|x| x.abs() > 1e-9) {
        if *first < 0.0 {
            values.iter_mut().for_each(|x| *x = -*x);
        }
    }
    Ok(FiedlerVector {
        values,
        alpha,
        multiplicity: spec.multiplicity(alpha, MULTIPLICITY_TOLERANCE),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;
    use libm::{cos, sin, sqrt};

    const PI: f64 = core::f64::consts::PI;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn laplacian_examples() {
        let l = laplacian(&complete(2).unwrap());
        assert_eq!(l.data, [1.0, -1.0, -1.0, 1.0]);
        assert!(laplacian(&Graph::empty(4).unwrap()).data.iter().all(|&x| x == 0.0));
        let paw = laplacian(&kite(4, 3).unwrap());
        assert_eq!([paw.get(0, 0), paw.get(1, 1), paw.get(2, 2), paw.get(3, 3)], [3.0, 2.0, 2.0, 1.0]);
        assert_eq!(paw.data.iter().filter(|&&x| x == -1.0).count(), 8);
        for v in 0..4 {
            assert_eq!((0..4).map(|j| paw.get(v, j)).sum::<f64>(), 0.0);
        }
    }

    #[test]
    fn diagonal_input() {
        let s = eig_sym(&SymMatrix::diagonal(&[3.0, 1.0, 2.0]), DEFAULT_TOLERANCE).unwrap();
        assert_eq!(s.eigenvalues, [3.0, 2.0, 1.0]);
        assert_eq!(s.eigenvectors[0], [1.0, 0.0, 0.0]);
        assert_eq!(s.eigenvectors[1], [0.0, 0.0, 1.0]);
        assert_eq!(s.eigenvectors[2], [0.0, 1.0, 0.0]);
    }

    #[test]
    fn rejects_asymmetric_and_misshaped() {
        assert!(matches!(SymMatrix::new(2, alloc::vec![1.0, 2.0, 2.5, 1.0]), Err(Error::NotSymmetric(_))));
        assert!(matches!(SymMatrix::new(2, alloc::vec![1.0]), Err(Error::Dimension { .. })));
    }

    #[test]
    fn complete_graph_spectrum() {
        for n in 2..12 {
            let v = laplacian_eigenvalues(&complete(n).unwrap()).unwrap();
            assert!(v[..n - 1].iter().all(|&x| close(x, n as f64, 1e-10)));
            assert!(close(v[n - 1], 0.0, 1e-10));
        }
    }

    #[test]
    fn path_spectrum_closed_form() {
        for n in 2..=30 {
            let got = laplacian_eigenvalues(&path(n).unwrap()).unwrap();
            let mut want: Vec<f64> = (0..n)
                .map(|j| {
                    let s = sin(j as f64 * PI / (2.0 * n as f64));
                    4.0 * s * s
                })
                .collect();
            want.sort_by(|a, b| b.total_cmp(a));
            for (a, b) in got.iter().zip(&want) {
                assert!(close(*a, *b, 1e-10), "n={n}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn turan_alpha_values() {
        for (n, r, want) in [(6, 3, 4.0), (7, 3, 4.0), (12, 4, 9.0)] {
            assert!(close(algebraic_connectivity(&turan(n, r).unwrap()).unwrap(), want, 1e-9));
        }
        let k331 = complete_multipartite(&[3, 3, 1]).unwrap();
        assert!(close(algebraic_connectivity(&k331).unwrap(), 4.0, 1e-9));
    }

    #[test]
    fn paw_spectrum() {
        // characteristic polynomial x(x-1)(x-3)(x-4); spanning trees 3 = 4*3*1/4
        let v = laplacian_eigenvalues(&kite(4, 3).unwrap()).unwrap();
        for (a, b) in v.iter().zip([4.0, 3.0, 1.0, 0.0]) {
            assert!(close(*a, b, 1e-10));
        }
        assert!(close(algebraic_connectivity(&kite(4, 3).unwrap()).unwrap(), 1.0, 1e-10));
    }

    #[test]
    fn alpha_errors_and_disconnected() {
        assert!(algebraic_connectivity(&complete(1).unwrap()).is_err());
        assert_eq!(algebraic_connectivity(&Graph::empty(5).unwrap()).unwrap(), 0.0);
        assert!(close(algebraic_connectivity(&complete(6).unwrap()).unwrap(), 6.0, 1e-10));
    }

    #[test]
    fn fiedler_small_paths() {
        let f = fiedler_vector(&path(2).unwrap()).unwrap();
        assert!(close(f.alpha, 2.0, 1e-12));
        assert!(close(f.values[0], 1.0 / sqrt(2.0), 1e-12) && close(f.values[1], -1.0 / sqrt(2.0), 1e-12));
        let f = fiedler_vector(&path(3).unwrap()).unwrap();
        assert!(close(f.alpha, 1.0, 1e-12));
        assert!(close(f.values[1], 0.0, 1e-12));
        assert!(close(f.values[0], 1.0 / sqrt(2.0), 1e-12) && close(f.values[2], -1.0 / sqrt(2.0), 1e-12));
        assert_eq!(f.multiplicity, 1);
        assert_eq!(fiedler_vector(&Graph::empty(3).unwrap()), Err(Error::Disconnected));
    }

    #[test]
    fn fiedler_tailed_clique_signs() {
        let g = tailed_clique(TailedCliqueSpec::new(3, 2, 2).unwrap()).unwrap();
        let f = fiedler_vector(&g).unwrap();
        assert!(f.is_simple());
        // u_2 = vertex 4, v_2 = vertex 6
        assert!(f.values[4] * f.values[6] < -1e-9);
        let n = g.order();
        let ones: f64 = f.values.iter().sum();
        assert!(ones.abs() < 1e-8);
        let lx = laplacian(&g).apply(&f.values);
        let resid: f64 = lx.iter().zip(&f.values).map(|(a, b)| (a - f.alpha * b).powi(2)).sum();
        assert!(sqrt(resid) < 1e-8 && n == 7);
    }

    #[test]
    fn lambda_max_examples() {
        for k in 1..8 {
            assert!(close(lambda_max(&complete(k + 1).unwrap()).unwrap(), (k + 1) as f64, 1e-10));
        }
        for a in 1..5 {
            for b in 1..5 {
                let kab = join(&Graph::empty(a).unwrap(), &Graph::empty(b).unwrap()).unwrap();
                assert!(close(lambda_max(&kab).unwrap(), (a + b) as f64, 1e-10));
            }
        }
        assert_eq!(lambda_max(&complete(1).unwrap()).unwrap(), 0.0);
    }

    #[test]
    fn complement_alpha_examples() {
        let (a, b) = complement_alpha_check(&turan(6, 3).unwrap()).unwrap();
        assert!(close(a, 4.0, 1e-10) && close(b, 4.0, 1e-10));
        let (a, b) = complement_alpha_check(&complete(5).unwrap()).unwrap();
        assert!(close(a, 5.0, 1e-10) && close(b, 5.0, 1e-10));
    }

    #[test]
    fn cycle_spectrum_closed_form() {
        // independent oracle: 2 - 2cos(2πj/n)
        for n in 3..20 {
            let got = laplacian_eigenvalues(&cycle(n).unwrap()).unwrap();
            let mut want: Vec<f64> = (0..n).map(|j| 2.0 - 2.0 * cos(2.0 * PI * j as f64 / n as f64)).collect();
            want.sort_by(|a, b| b.total_cmp(a));
            for (a, b) in got.iter().zip(&want) {
                assert!(close(*a, *b, 1e-10));
            }
        }
    }

    #[test]
    fn degenerate_clusters_converge() {
        // T_{28,17} has only the eigenvalues 28, 26 and 0; it used to stall.
        for n in 3..=40 {
            for r in 2..n {
                let g = turan(n, r).unwrap();
                let values = laplacian_eigenvalues(&g).unwrap();
                let c = n.div_ceil(r);
                assert!(close(values[n - 2], (n - c) as f64, 1e-8), "T({n},{r})");
                let with_vectors = laplacian_spectrum(&g).unwrap();
                assert!(close(with_vectors.eigenvalues[0], n as f64, 1e-8));
            }
        }
    }
}
