//! Replica-method spectrum and entropy of a two-state coherent mixture.
//!
//! `ρⁿ` stays in the span of the four dyads `|α⟩⟨α|, |α⟩⟨β|, |β⟩⟨α|, |β⟩⟨β|`
//! and its coefficients obey a linear recurrence whose 4×4 matrix is two
//! copies of the 2×2 transfer matrix
//!
//! ```text
//! T = | a + c̄⟨α|β⟩    a⟨β|α⟩ + c̄ |
//!     | c + b⟨α|β⟩    c⟨β|α⟩ + b |
//! ```
//!
//! so `Tr ρⁿ = Tr Tⁿ = λ₁ⁿ + λ₂ⁿ`, where `λ₁,₂` solve `λ² - λ + D = 0` with
//! `D = (ab - |c|²)(1 - e^{-|α-β|²})`. The von Neumann entropy is
//! `-∂ₙ Tr ρⁿ` at `n = 1`.

use num_complex::Complex64;

use crate::coherent::{overlap, TwoStateMixture};
use crate::error::{Error, Result};

/// Raw `D` values farther than this outside `[0, 1/4]` are rejected.
pub const CLAMP_TOL: f64 = 1e-9;

/// Default finite-difference step of [`replica_entropy`].
pub const DEFAULT_STEP: f64 = 1e-5;

/// Determinant of the transfer matrix, i.e. the product `λ₁λ₂`, in `[0, 1/4]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct DParameter(f64);

impl DParameter {
    /// Clamps `d` into `[0, 1/4]` if it lies within [`CLAMP_TOL`] of the
    /// interval.
    pub fn new(d: f64) -> Result<Self> {
        if !(-CLAMP_TOL..=0.25 + CLAMP_TOL).contains(&d) {
            return Err(Error::ClampExceeded { d });
        }
        Ok(DParameter(d.clamp(0.0, 0.25)))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// The two nonzero eigenvalues of a rank-two density operator,
/// `0 <= lambda2 <= lambda1 <= 1`, `lambda1 + lambda2 = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralPair {
    pub lambda1: f64,
    pub lambda2: f64,
}

impl SpectralPair {
    /// `-λ₁ ln λ₁ - λ₂ ln λ₂` in nats.
    pub fn entropy(&self) -> f64 {
        crate::xlogx_neg(self.lambda1) + crate::xlogx_neg(self.lambda2)
    }
}

/// `D = (ab - |c|²)(1 - e^{-|α-β|²})`.
pub fn d_parameter(spec: &TwoStateMixture) -> Result<DParameter> {
    let distance = (spec.alpha().value() - spec.beta().value()).norm_sqr();
    DParameter::new(spec.determinant() * crate::one_minus_exp_neg(distance))
}

/// Roots of `λ² - λ + d = 0`.
pub fn spectral_pair(d: DParameter) -> SpectralPair {
    let root = (1.0 - 4.0 * d.0).max(0.0).sqrt();
    let lambda1 = 0.5 * (1.0 + root);
    // d / λ₁ avoids the cancellation in (1 - root) / 2 when d is small
    let lambda2 = d.0 / lambda1;
    SpectralPair { lambda1, lambda2 }
}

/// The 2×2 transfer matrix `T`, row-major.
pub fn transfer_matrix(spec: &TwoStateMixture) -> [[Complex64; 2]; 2] {
    let (a, b, c) = (
        Complex64::from(spec.a()),
        Complex64::from(spec.b()),
        spec.c(),
    );
    // ⟨β|α⟩ and ⟨α|β⟩
    let ba = overlap(spec.alpha(), spec.beta());
    let ab = ba.conj();
    [[a + c.conj() * ab, a * ba + c.conj()], [c + b * ab, c * ba + b]]
}

/// `Tr ρⁿ` for integer `n >= 1` by iterating the coefficient recurrence.
///
/// No eigen-decomposition is involved: the coefficient pairs `(C₁, C₂)` and
/// `(C₃, C₄)` start at `(a, c)` and `(c̄, b)` and are each multiplied by `T`
/// `n - 1` times, then `Tr ρⁿ = C₁ + C₄ + ⟨β|α⟩C₂ + ⟨α|β⟩C₃`.
///
/// # Panics
///
/// If `n == 0`.
pub fn trace_power_recurrence(spec: &TwoStateMixture, n: u32) -> f64 {
    assert!(n >= 1, "trace power requires n >= 1");
    let t = transfer_matrix(spec);
    let step = |v: [Complex64; 2]| {
        [
            t[0][0] * v[0] + t[0][1] * v[1],
            t[1][0] * v[0] + t[1][1] * v[1],
        ]
    };
    let mut upper = [Complex64::from(spec.a()), spec.c()];
    let mut lower = [spec.c().conj(), Complex64::from(spec.b())];
    for _ in 1..n {
        upper = step(upper);
        lower = step(lower);
    }
    let ba = overlap(spec.alpha(), spec.beta());
    (upper[0] + lower[1] + ba * upper[1] + ba.conj() * lower[0]).re
}

/// `λ₁ⁿ + λ₂ⁿ` for real `n > 0`, with `0ⁿ = 0`.
pub fn trace_power_spectral(pair: SpectralPair, n: f64) -> f64 {
    let pow = |x: f64| if x > 0.0 { x.powf(n) } else { 0.0 };
    pow(pair.lambda1) + pow(pair.lambda2)
}

/// Entropy as `-∂ₙ(λ₁ⁿ + λ₂ⁿ)` at `n = 1`, by central difference with step
/// `step`. A pure spectrum (`λ₂ = 0`) uses a forward difference.
///
/// # Panics
///
/// If `step` is not in `(0, 1e-3]`.
pub fn replica_entropy(spec: &TwoStateMixture, step: f64) -> Result<f64> {
    assert!(
        step > 0.0 && step <= 1e-3,
        "replica step must lie in (0, 1e-3], got {step}"
    );
    let pair = spectral_pair(d_parameter(spec)?);
    let f = |n: f64| trace_power_spectral(pair, n);
    let derivative = if pair.lambda2 == 0.0 {
        (f(1.0 + step) - f(1.0)) / step
    } else {
        (f(1.0 + step) - f(1.0 - step)) / (2.0 * step)
    };
    Ok(-derivative)
}

/// `S(ρ) = -λ₁ ln λ₁ - λ₂ ln λ₂` in nats.
pub fn entropy_closed(spec: &TwoStateMixture) -> Result<f64> {
    Ok(spectral_pair(d_parameter(spec)?).entropy())
}
