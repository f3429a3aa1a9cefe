//! Numeric spectra of Hermitian-adjacency matrices via the real-symmetric
//! embedding [[A, -B], [B, A]] of H = A + iB, Hermitian energy, and the
//! n*sqrt(D) bound gap.
//!
//! The embedding doubles every eigenvalue's multiplicity; the doubling is
//! asserted, not assumed. Floating point is confined to this module.

use crate::error::{Error, Result};
use crate::hermitian::{build_hermitian, skew_matrix, HermitianMatrix};
use crate::mixed::MixedGraph;

/// Absolute off-diagonal Frobenius norm target for the Jacobi sweeps.
pub const DEFAULT_SOLVER_TOL: f64 = 1e-10;
/// Tolerance used for energy comparisons.
pub const DEFAULT_ENERGY_TOL: f64 = 1e-9;
const MAX_SWEEPS: usize = 50;

/// Eigenvalues of one Hermitian-adjacency matrix, ascending.
#[derive(Debug, Clone)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    tol: f64,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Sum of absolute eigenvalues (= sum of singular values).
    pub fn energy(&self) -> f64 {
        self.eigenvalues.iter().map(|l| l.abs()).sum()
    }
}

/// Cyclic Jacobi diagonalization of a dense symmetric matrix (row-major,
/// n x n). Returns unsorted eigenvalues once the off-diagonal Frobenius
/// norm drops below `tol`; errors if the sweep budget is exhausted.
pub fn jacobi_eigenvalues(a: &mut [f64], n: usize, tol: f64) -> Result<Vec<f64>> {
    debug_assert_eq!(a.len(), n * n);
    if n < 2 {
        return Ok(a.iter().step_by(n + 1).copied().collect());
    }
    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                s += a[p * n + q] * a[p * n + q];
            }
        }
        (2.0 * s).sqrt()
    };
    for _ in 0..MAX_SWEEPS {
        if off_norm(a) < tol {
            let vals = a.iter().step_by(n + 1).copied().collect();
            return Ok(vals);
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let h = a[q * n + q] - a[p * n + p];
                let t = if apq.abs() * 1e15 < h.abs() {
                    // small rotation regime
                    apq / h
                } else {
                    let theta = 0.5 * h / apq;
                    let mut t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        t = -t;
                    }
                    t
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let delta = t * apq;
                a[p * n + p] -= delta;
                a[q * n + q] += delta;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for j in 0..n {
                    if j == p || j == q {
                        continue;
                    }
                    let g = a[p * n + j];
                    let h = a[q * n + j];
                    a[p * n + j] = g - s * (h + g * tau);
                    a[q * n + j] = h + s * (g - h * tau);
                    a[j * n + p] = a[p * n + j];
                    a[j * n + q] = a[q * n + j];
                }
            }
        }
    }
    Err(Error::NoConvergence { off: off_norm(a), sweeps: MAX_SWEEPS })
}

/// Eigenvalues of `h` to within `tol`, through the 2n x 2n real symmetric
/// embedding. The 2n embedded values are sorted, adjacent values paired
/// (each pair must agree within 10*tol) and one value emitted per pair; the
/// two moment identities (trace 0, trace of H^2 = 2|E|) are then checked.
pub fn eigenvalues(h: &HermitianMatrix, tol: f64) -> Result<Spectrum> {
    let n = h.dim();
    let m = 2 * n;
    let mut a = vec![0.0f64; m * m];
    for i in 0..n {
        for j in 0..n {
            let e = h.get(i, j);
            let (re, im) = (e.re as f64, e.im as f64);
            a[i * m + j] = re;
            a[(i + n) * m + (j + n)] = re;
            a[i * m + (j + n)] = -im;
            a[(i + n) * m + j] = im;
        }
    }
    let mut vals = jacobi_eigenvalues(&mut a, m, tol)?;
    vals.sort_by(|x, y| x.partial_cmp(y).expect("eigenvalues are finite"));
    let mut eigenvalues = Vec::with_capacity(n);
    for pair in vals.chunks(2) {
        if (pair[1] - pair[0]).abs() >= 10.0 * tol {
            return Err(Error::SpectralCheck(format!(
                "embedded eigenvalues not paired: {} vs {}",
                pair[0], pair[1]
            )));
        }
        eigenvalues.push(0.5 * (pair[0] + pair[1]));
    }

    let trace_h2: f64 = {
        let mut nonzero = 0usize;
        for i in 0..n {
            for j in 0..n {
                if !h.get(i, j).is_zero() {
                    nonzero += 1;
                }
            }
        }
        nonzero as f64 // sum of |h_ij|^2 over unit entries = 2|E|
    };
    let check_tol = 10.0 * tol * (n as f64 + 1.0) + 1e-12;
    let sum: f64 = eigenvalues.iter().sum();
    if sum.abs() > check_tol {
        return Err(Error::SpectralCheck(format!("eigenvalue sum {sum} is not 0")));
    }
    let sum_sq: f64 = eigenvalues.iter().map(|l| l * l).sum();
    if (sum_sq - trace_h2).abs() > check_tol * (1.0 + trace_h2) {
        return Err(Error::SpectralCheck(format!(
            "eigenvalue square sum {sum_sq} differs from 2|E| = {trace_h2}"
        )));
    }
    Ok(Spectrum { eigenvalues, tol })
}

/// Hermitian energy: the sum of absolute eigenvalues of H(m).
pub fn hermitian_energy(m: &MixedGraph, tol: f64) -> Result<f64> {
    Ok(eigenvalues(&build_hermitian(m), tol)?.energy())
}

/// The bound n*sqrt(D) for `m`'s order and maximum degree.
pub fn energy_bound(m: &MixedGraph) -> f64 {
    let n = m.graph().vertex_count() as f64;
    n * (m.graph().max_degree() as f64).sqrt()
}

/// n*sqrt(D) - E_H(m): nonnegative up to solver error, and zero exactly on
/// the optimum graphs.
pub fn energy_bound_gap(m: &MixedGraph, tol: f64) -> Result<f64> {
    Ok(energy_bound(m) - hermitian_energy(m, tol)?)
}

/// For an oriented graph, compares the skew energy (sum of singular values
/// of the real skew matrix, computed independently through S^T S) against
/// the Hermitian energy. Errors if `m` has an undirected edge.
pub fn skew_energy_equals_hermitian(m: &MixedGraph, tol: f64) -> Result<bool> {
    let s = skew_matrix(m)?;
    let n = s.dim();
    // gram = S^T S, symmetric positive semidefinite
    let mut gram = vec![0.0f64; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0i64;
            for k in 0..n {
                acc += s.get(k, i) * s.get(k, j);
            }
            gram[i * n + j] = acc as f64;
        }
    }
    let vals = jacobi_eigenvalues(&mut gram, n, tol)?;
    let skew_energy: f64 = vals.iter().map(|&l| l.max(0.0).sqrt()).sum();
    let hermitian = hermitian_energy(m, tol)?;
    // singular values through S^T S carry the square root of the eigenvalue
    // error near zero, so the comparison runs at sqrt(tol) per vertex
    Ok((skew_energy - hermitian).abs() <= tol.sqrt() * (n as f64 + 1.0))
}
