//! Truncated Fock-space representations used as a brute-force oracle.
//!
//! States are built from number-basis amplitudes, assembled into dense
//! density matrices and diagonalized numerically. Nothing here uses the
//! closed-form overlaps, normalizations or spectra of the other modules.
//!
//! Two-mode matrices use the row-major index `i = i₁·dim₂ + i₂`: mode 1 is the
//! slow index.

mod jacobi;
pub mod oracle;
pub mod states;

pub use jacobi::{hermitian_eigenvalues, jacobi_eigenvalues, MAX_SWEEPS, OFF_DIAGONAL_TOL};

use num_complex::Complex64;

use crate::coherent::Amplitude;
use crate::error::{Error, Result};
use crate::Subsystem;

/// Largest per-mode cutoff [`choose_cutoff`] will return.
pub const MAX_CUTOFF: usize = 256;

/// Default tail tolerance for cutoff selection.
pub const DEFAULT_TAIL_TOL: f64 = 1e-12;

/// Allowed `max |M - M†|` before symmetrization.
pub const HERMITICITY_TOL: f64 = 1e-13;

/// Eigenvalues in `[-NEGATIVE_EIGEN_TOL, 0)` are treated as roundoff.
pub const NEGATIVE_EIGEN_TOL: f64 = 1e-10;

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

/// A state vector over one or more truncated modes.
#[derive(Debug, Clone, PartialEq)]
pub struct FockVector {
    amplitudes: Vec<Complex64>,
    mode_dims: Vec<usize>,
    deficit: f64,
}

impl FockVector {
    pub fn new(amplitudes: Vec<Complex64>, mode_dims: Vec<usize>) -> Result<Self> {
        let dim: usize = mode_dims.iter().product();
        if dim != amplitudes.len() {
            return Err(Error::DimensionMismatch(dim, amplitudes.len()));
        }
        let norm_sqr: f64 = amplitudes.iter().map(|c| c.norm_sqr()).sum();
        Ok(FockVector {
            amplitudes,
            mode_dims,
            deficit: (1.0 - norm_sqr).max(0.0),
        })
    }

    /// Total dimension (the cutoff, for a single mode).
    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn mode_dims(&self) -> &[usize] {
        &self.mode_dims
    }

    /// `max(0, 1 - ‖v‖²)`: probability lost to truncation for a unit state.
    pub fn deficit(&self) -> f64 {
        self.deficit
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|c| c.norm_sqr()).sum()
    }

    /// `⟨self|ket⟩`.
    pub fn dot(&self, ket: &FockVector) -> Complex64 {
        debug_assert_eq!(self.dim(), ket.dim());
        self.amplitudes
            .iter()
            .zip(&ket.amplitudes)
            .map(|(b, k)| b.conj() * k)
            .sum()
    }
}

/// A dense Hermitian matrix over one or more truncated modes.
#[derive(Debug, Clone, PartialEq)]
pub struct FockDensityMatrix {
    dim: usize,
    entries: Vec<Complex64>,
    mode_dims: Vec<usize>,
}

impl FockDensityMatrix {
    pub fn zeros(mode_dims: Vec<usize>) -> Self {
        let dim = mode_dims.iter().product();
        FockDensityMatrix {
            dim,
            entries: vec![ZERO; dim * dim],
            mode_dims,
        }
    }

    /// Wraps row-major `entries`, rejecting non-Hermitian input.
    pub fn from_entries(mode_dims: Vec<usize>, entries: Vec<Complex64>) -> Result<Self> {
        let dim: usize = mode_dims.iter().product();
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch(dim * dim, entries.len()));
        }
        let m = FockDensityMatrix {
            dim,
            entries,
            mode_dims,
        };
        let asymmetry = m.max_asymmetry();
        if asymmetry > HERMITICITY_TOL {
            return Err(Error::HermiticityViolation { asymmetry });
        }
        Ok(m)
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(vec![values.len()]);
        for (i, &v) in values.iter().enumerate() {
            m.entries[i * m.dim + i] = Complex64::from(v);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mode_dims(&self) -> &[usize] {
        &self.mode_dims
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.entries[i * self.dim + i].re).sum()
    }

    /// `max |Mᵢⱼ - conj(Mⱼᵢ)|`.
    pub fn max_asymmetry(&self) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                let d = self.entries[i * n + j] - self.entries[j * n + i].conj();
                worst = worst.max(d.norm());
            }
        }
        worst
    }

    /// Replaces the matrix by `(M + M†)/2`.
    fn symmetrize(&mut self) {
        let n = self.dim;
        for i in 0..n {
            self.entries[i * n + i].im = 0.0;
            for j in i + 1..n {
                let avg = 0.5 * (self.entries[i * n + j] + self.entries[j * n + i].conj());
                self.entries[i * n + j] = avg;
                self.entries[j * n + i] = avg.conj();
            }
        }
    }

    /// Adds `weight · (a ⊗ b)` in place. `self` must have dimension
    /// `a.dim · b.dim`.
    pub fn add_tensor(&mut self, weight: f64, a: &FockDensityMatrix, b: &FockDensityMatrix) {
        let (da, db) = (a.dim, b.dim);
        assert_eq!(self.dim, da * db, "tensor dimension mismatch");
        let n = self.dim;
        for i1 in 0..da {
            for j1 in 0..da {
                let x = a.entries[i1 * da + j1] * weight;
                if x == ZERO {
                    continue;
                }
                for i2 in 0..db {
                    let row = (i1 * db + i2) * n + j1 * db;
                    let src = &b.entries[i2 * db..(i2 + 1) * db];
                    for (dst, y) in self.entries[row..row + db].iter_mut().zip(src) {
                        *dst += x * y;
                    }
                }
            }
        }
    }
}

/// Kronecker product with concatenated mode dimensions.
pub trait Tensor {
    fn tensor(&self, other: &Self) -> Self;
}

impl Tensor for FockVector {
    fn tensor(&self, other: &FockVector) -> FockVector {
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|x| other.amplitudes.iter().map(move |y| x * y))
            .collect();
        let mode_dims = self.mode_dims.iter().chain(&other.mode_dims).copied().collect();
        FockVector::new(amplitudes, mode_dims).expect("dimensions multiply")
    }
}

impl Tensor for FockDensityMatrix {
    fn tensor(&self, other: &FockDensityMatrix) -> FockDensityMatrix {
        let mode_dims = self.mode_dims.iter().chain(&other.mode_dims).copied().collect();
        let mut out = FockDensityMatrix::zeros(mode_dims);
        out.add_tensor(1.0, self, other);
        out
    }
}

pub fn tensor_product<T: Tensor>(a: &T, b: &T) -> T {
    a.tensor(b)
}

/// Smallest cutoff at which both the Poisson tail of `|α|² = max_abs_alpha²`
/// and the thermal tail `(N/(1+N))^cutoff` drop below `tail_tol`.
pub fn choose_cutoff(max_abs_alpha: f64, mean_photons: f64, tail_tol: f64) -> Result<usize> {
    assert!(tail_tol > 0.0, "tail tolerance must be positive");
    crate::purity::check_mean_photons(mean_photons)?;
    let exceeded = Error::CutoffExceeded {
        cap: MAX_CUTOFF,
        tail_tol,
    };
    let mu = max_abs_alpha * max_abs_alpha;
    if !mu.is_finite() || mu >= MAX_CUTOFF as f64 {
        return Err(exceeded);
    }

    // Poisson tails Σ_{n>=K} pₙ by suffix summation, far enough past the cap
    // that the omitted mass is below any representable tolerance.
    let horizon = 4 * MAX_CUTOFF;
    let mut pmf = Vec::with_capacity(horizon);
    let mut log_p = -mu;
    let log_mu = mu.ln();
    for n in 0..horizon {
        if n > 0 {
            log_p += log_mu - (n as f64).ln();
        }
        pmf.push(if mu == 0.0 {
            if n == 0 {
                1.0
            } else {
                0.0
            }
        } else {
            log_p.exp()
        });
    }
    let mut tails = vec![0.0; horizon + 1];
    for n in (0..horizon).rev() {
        tails[n] = tails[n + 1] + pmf[n];
    }

    let ratio = mean_photons / (1.0 + mean_photons);
    (1..=MAX_CUTOFF)
        .find(|&k| tails[k] < tail_tol && ratio.powi(k as i32) < tail_tol)
        .ok_or(exceeded)
}

/// `cₙ = e^{-|α|²/2} αⁿ/√(n!)` for `n < cutoff`, by the recurrence
/// `cₙ = cₙ₋₁ α/√n`.
pub fn coherent_fock(alpha: Amplitude, cutoff: usize) -> FockVector {
    assert!(cutoff >= 1, "cutoff must be at least 1");
    let z = alpha.value();
    let mut amplitudes = Vec::with_capacity(cutoff);
    let mut c = Complex64::from((-0.5 * alpha.norm_sqr()).exp());
    amplitudes.push(c);
    for n in 1..cutoff {
        c = c * z / (n as f64).sqrt();
        amplitudes.push(c);
    }
    FockVector::new(amplitudes, vec![cutoff]).expect("single mode")
}

/// Diagonal thermal state `pₙ = Nⁿ/(1+N)^{n+1}`, truncated.
pub fn thermal_fock(mean_photons: f64, cutoff: usize) -> Result<FockDensityMatrix> {
    crate::purity::check_mean_photons(mean_photons)?;
    let ratio = mean_photons / (1.0 + mean_photons);
    let mut p = 1.0 / (1.0 + mean_photons);
    let mut weights = Vec::with_capacity(cutoff);
    for _ in 0..cutoff {
        weights.push(p);
        p *= ratio;
    }
    Ok(FockDensityMatrix::diagonal(&weights))
}

/// `Σ wᵢ |ketᵢ⟩⟨braᵢ|`, symmetrized after checking that the sum is Hermitian.
pub fn assemble_mixture(terms: &[(Complex64, &FockVector, &FockVector)]) -> Result<FockDensityMatrix> {
    let Some(&(_, first, _)) = terms.first() else {
        return Err(Error::DimensionMismatch(0, 0));
    };
    let mode_dims = first.mode_dims.clone();
    let mut m = FockDensityMatrix::zeros(mode_dims);
    let n = m.dim;
    for &(w, ket, bra) in terms {
        for v in [ket, bra] {
            if v.dim() != n {
                return Err(Error::DimensionMismatch(n, v.dim()));
            }
        }
        for (i, k) in ket.amplitudes.iter().enumerate() {
            let wk = w * k;
            if wk == ZERO {
                continue;
            }
            let row = &mut m.entries[i * n..(i + 1) * n];
            for (dst, b) in row.iter_mut().zip(&bra.amplitudes) {
                *dst += wk * b.conj();
            }
        }
    }
    let asymmetry = m.max_asymmetry();
    if asymmetry > HERMITICITY_TOL {
        return Err(Error::HermiticityViolation { asymmetry });
    }
    m.symmetrize();
    Ok(m)
}

/// Reduced state of the `keep` mode of a two-mode matrix.
pub fn partial_trace(rho: &FockDensityMatrix, keep: Subsystem) -> Result<FockDensityMatrix> {
    let [d1, d2] = rho.mode_dims[..] else {
        return Err(Error::ModeCountMismatch {
            expected: 2,
            found: rho.mode_dims.len(),
        });
    };
    let n = rho.dim;
    let (kept, traced) = match keep {
        Subsystem::First => (d1, d2),
        Subsystem::Second => (d2, d1),
    };
    let index = |k: usize, t: usize| match keep {
        Subsystem::First => k * d2 + t,
        Subsystem::Second => t * d2 + k,
    };
    let mut out = FockDensityMatrix::zeros(vec![kept]);
    for i in 0..kept {
        for j in 0..kept {
            out.entries[i * kept + j] = (0..traced)
                .map(|t| rho.entries[index(i, t) * n + index(j, t)])
                .sum();
        }
    }
    Ok(out)
}

/// `-Σ λ ln λ` over a spectrum; values within roundoff below zero count as 0.
pub fn entropy_from_spectrum(eigs: &[f64]) -> Result<f64> {
    let mut s = 0.0;
    for &x in eigs {
        if x < -NEGATIVE_EIGEN_TOL {
            return Err(Error::NegativeEigenvalue(x));
        }
        s += crate::xlogx_neg(x.max(0.0));
    }
    Ok(s)
}

/// `Tr ρ² = Σᵢⱼ |ρᵢⱼ|²` for Hermitian `ρ`.
pub fn purity_from_matrix(rho: &FockDensityMatrix) -> f64 {
    rho.entries.iter().map(|z| z.norm_sqr()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coherent::overlap;

    #[test]
    fn cutoff_examples() {
        assert_eq!(choose_cutoff(0.0, 0.0, 1e-12).unwrap(), 1);
        // smallest K with Poisson(μ) tail below 1e-12, by 40-digit summation
        assert_eq!(choose_cutoff(1.0, 0.0, 1e-12).unwrap(), 15);
        assert_eq!(choose_cutoff(2.0, 0.0, 1e-12).unwrap(), 26);
        assert_eq!(choose_cutoff(3.0, 0.0, 1e-12).unwrap(), 38);
        assert_eq!(choose_cutoff(4.0, 0.0, 1e-12).unwrap(), 52);
        // (N/(1+N))^K < 1e-12
        assert_eq!(choose_cutoff(0.0, 1.0, 1e-12).unwrap(), 40);
        assert_eq!(choose_cutoff(0.0, 2.0, 1e-12).unwrap(), 69);
        assert!(matches!(
            choose_cutoff(20.0, 0.0, 1e-12),
            Err(Error::CutoffExceeded { .. })
        ));
        assert!(choose_cutoff(1e200, 0.0, 1e-12).is_err());
    }

    #[test]
    fn coherent_vectors() {
        let v = coherent_fock(Amplitude::ZERO, 5);
        assert_eq!(v.amplitudes()[0], Complex64::from(1.0));
        assert!(v.amplitudes()[1..].iter().all(|c| *c == ZERO));
        assert_eq!(v.deficit(), 0.0);

        let p = coherent_fock(Amplitude::real(1.0), 32);
        let m = coherent_fock(Amplitude::real(-1.0), 32);
        let want = overlap(Amplitude::real(1.0), Amplitude::real(-1.0));
        assert!((m.dot(&p) - want).norm() < 1e-12);
        assert!(((-2.0f64).exp() - want.re).abs() < 1e-15);

        let v = coherent_fock(Amplitude::real(2.0), 32);
        assert!(v.deficit() < 1e-12);
        assert!((v.norm_sqr() + v.deficit() - 1.0).abs() < 1e-15);

        // no factorial overflow far past n = 170
        let v = coherent_fock(Amplitude::real(12.0), choose_cutoff(12.0, 0.0, 1e-12).unwrap());
        assert!(v.amplitudes().iter().all(|c| c.re.is_finite()));
        assert!(v.deficit() < 1e-12);
    }

    #[test]
    fn thermal_state() {
        let vac = thermal_fock(0.0, 4).unwrap();
        assert_eq!(vac.get(0, 0), Complex64::from(1.0));
        assert_eq!(vac.trace(), 1.0);
        let t = thermal_fock(1.0, 200).unwrap();
        assert_eq!(t.get(0, 0).re, 0.5);
        assert_eq!(t.get(1, 1).re, 0.25);
        assert!(1.0 - t.trace() < 1e-12);
        for n in [0.0, 0.5, 1.0, 2.0, 7.5] {
            let t = thermal_fock(n, 256).unwrap();
            assert!((purity_from_matrix(&t) - 1.0 / (1.0 + 2.0 * n)).abs() < 1e-10);
        }
        assert!(thermal_fock(-1.0, 4).is_err());
    }

    #[test]
    fn assembly() {
        let v = coherent_fock(Amplitude::new(0.3, 0.4).unwrap(), 20);
        let one = Complex64::from(1.0);
        let m = assemble_mixture(&[(one, &v, &v)]).unwrap();
        assert!((m.trace() - v.norm_sqr()).abs() < 1e-15);
        assert!((purity_from_matrix(&m) - v.norm_sqr().powi(2)).abs() < 1e-14);

        let w = coherent_fock(Amplitude::real(-1.0), 20);
        let err = assemble_mixture(&[(one, &v, &w)]).unwrap_err();
        assert!(matches!(err, Error::HermiticityViolation { .. }));

        let short = coherent_fock(Amplitude::ZERO, 3);
        assert!(matches!(
            assemble_mixture(&[(one, &v, &short)]),
            Err(Error::DimensionMismatch(..))
        ));
    }

    #[test]
    fn tensor_products() {
        let vac = coherent_fock(Amplitude::ZERO, 3);
        let vv = tensor_product(&vac, &vac);
        assert_eq!(vv.mode_dims(), &[3, 3]);
        assert_eq!(vv.amplitudes()[0], Complex64::from(1.0));
        assert!(vv.amplitudes()[1..].iter().all(|c| *c == ZERO));

        let a = thermal_fock(0.7, 6).unwrap();
        let b = thermal_fock(1.3, 5).unwrap();
        let ab = tensor_product(&a, &b);
        assert_eq!(ab.dim(), 30);
        assert!((ab.trace() - a.trace() * b.trace()).abs() < 1e-13);
        // mode 1 is the slow index
        assert_eq!(ab.get(5 + 1, 5 + 1), a.get(1, 1) * b.get(1, 1));
        assert_eq!(ab.get(2, 2), a.get(0, 0) * b.get(2, 2));

        let (x1, x2) = (Amplitude::new(0.5, 0.2).unwrap(), Amplitude::real(-0.8));
        let u = coherent_fock(x1, 30).tensor(&coherent_fock(x2, 30));
        let d = coherent_fock(-x1, 30).tensor(&coherent_fock(-x2, 30));
        let want = (-2.0 * x1.norm_sqr() - 2.0 * x2.norm_sqr()).exp();
        assert!((d.dot(&u) - want).norm() < 1e-12);
    }

    #[test]
    fn partial_traces() {
        let a = FockDensityMatrix::from_entries(
            vec![2],
            vec![
                Complex64::new(0.7, 0.0),
                Complex64::new(0.1, 0.2),
                Complex64::new(0.1, -0.2),
                Complex64::new(0.3, 0.0),
            ],
        )
        .unwrap();
        let b = thermal_fock(0.4, 3).unwrap();
        let ab = tensor_product(&a, &b);
        let r1 = partial_trace(&ab, Subsystem::First).unwrap();
        let r2 = partial_trace(&ab, Subsystem::Second).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!((r1.get(i, j) - a.get(i, j) * b.trace()).norm() < 1e-13);
            }
        }
        for i in 0..3 {
            for j in 0..3 {
                assert!((r2.get(i, j) - b.get(i, j) * a.trace()).norm() < 1e-13);
            }
        }
        assert!((r1.trace() - ab.trace()).abs() < 1e-13);
        assert!(matches!(
            partial_trace(&a, Subsystem::First),
            Err(Error::ModeCountMismatch { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn spectrum_entropy() {
        assert_eq!(entropy_from_spectrum(&[1.0, 0.0, 0.0]).unwrap(), 0.0);
        let ln2 = std::f64::consts::LN_2;
        assert!((entropy_from_spectrum(&[0.5, 0.5]).unwrap() - ln2).abs() < 1e-15);
        assert!((entropy_from_spectrum(&[0.5, 0.5, -5e-11]).unwrap() - ln2).abs() < 1e-15);
        assert!(matches!(
            entropy_from_spectrum(&[1.0, -1e-6]),
            Err(Error::NegativeEigenvalue(_))
        ));
    }

    #[test]
    fn non_hermitian_entries_rejected() {
        let e = vec![ZERO, Complex64::from(1.0), ZERO, ZERO];
        assert!(matches!(
            FockDensityMatrix::from_entries(vec![2], e),
            Err(Error::HermiticityViolation { .. })
        ));
    }
}
