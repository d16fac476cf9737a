//! Cyclic Jacobi eigenvalues of a complex Hermitian matrix.
//!
//! Each rotation first removes the phase of the pivot `a_pq = r e^{iφ}` with
//! the diagonal unitary `diag(1, e^{-iφ})` on `(p, q)`, then applies the real
//! Jacobi rotation that annihilates the resulting real symmetric 2×2 block:
//!
//! ```text
//! J = | c          s        |
//!     | -s e^{-iφ}  c e^{-iφ} |,   A' = J† A J
//! ```
//!
//! The tangent `t = sgn(θ)/(|θ| + √(θ²+1))`, `θ = (a_qq - a_pp)/(2r)`, is the
//! smaller of the two admissible angles.

use num_complex::Complex64;

use super::FockDensityMatrix;
use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 100;

/// Convergence threshold on the off-diagonal Frobenius norm.
pub const OFF_DIAGONAL_TOL: f64 = 1e-13;

/// Full spectrum of `rho`, descending.
pub fn hermitian_eigenvalues(rho: &FockDensityMatrix) -> Result<Vec<f64>> {
    jacobi_eigenvalues(rho.dim(), rho.entries().to_vec())
}

/// Spectrum, descending, of the Hermitian `n × n` row-major matrix `a`.
/// Only Hermitian input is meaningful; the lower triangle is trusted to be
/// the conjugate of the upper.
pub fn jacobi_eigenvalues(n: usize, mut a: Vec<Complex64>) -> Result<Vec<f64>> {
    assert_eq!(a.len(), n * n, "matrix is not {n}x{n}");
    for i in 0..n {
        a[i * n + i].im = 0.0;
    }

    let off_norm = |a: &[Complex64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                s += a[p * n + q].norm_sqr();
            }
        }
        (2.0 * s).sqrt()
    };

    let mut sweeps = 0;
    let mut residual = off_norm(&a);
    while residual >= OFF_DIAGONAL_TOL {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, residual });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
        sweeps += 1;
        residual = off_norm(&a);
    }

    let mut eigs: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
    eigs.sort_by(|x, y| y.total_cmp(x));
    Ok(eigs)
}

fn rotate(a: &mut [Complex64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    let phase = apq / r; // e^{iφ}
    let theta = (aqq - app) / (2.0 * r);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let e = phase.conj(); // e^{-iφ}
    let j_pp = Complex64::from(c);
    let j_pq = Complex64::from(s);
    let j_qp = -e * s;
    let j_qq = e * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = akp * j_pp + akq * j_qp;
        let new_kq = akp * j_pq + akq * j_qq;
        a[k * n + p] = new_kp;
        a[k * n + q] = new_kq;
        a[p * n + k] = new_kp.conj();
        a[q * n + k] = new_kq.conj();
    }
    a[p * n + p] = Complex64::from(app - t * r);
    a[q * n + q] = Complex64::from(aqq + t * r);
    a[p * n + q] = Complex64::new(0.0, 0.0);
    a[q * n + p] = Complex64::new(0.0, 0.0);
}
