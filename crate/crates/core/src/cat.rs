//! Entropies of the mixture of two-mode even and odd cat states
//!
//! ```text
//! ρ(1,2) = a|α₊⟩⟨α₊| + b|α₋⟩⟨α₋|,   |α±⟩ = N±(|α₁,α₂⟩ ± |-α₁,-α₂⟩).
//! ```
//!
//! Tracing out either mode leaves a two-state coherent mixture on `|±αᵢ⟩`,
//! so the reduced entropies are binary entropies of a transfer-matrix
//! spectrum.

use crate::coherent::Amplitude;
use crate::error::{Error, Result};
use crate::replica::{spectral_pair, DParameter};
use crate::Subsystem;

/// Below this value of `|α₁|² + |α₂|²` the odd cat is treated as undefined.
pub const DEGENERATE_NORM_SQR: f64 = 1e-8;

const WEIGHT_TOL: f64 = 1e-12;

/// Parameters `(a, b, α₁, α₂)` of the even/odd cat mixture.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CatMixture {
    a: f64,
    b: f64,
    alpha1: Amplitude,
    alpha2: Amplitude,
}

impl CatMixture {
    pub fn new(a: f64, b: f64, alpha1: Amplitude, alpha2: Amplitude) -> Result<Self> {
        if !(a >= 0.0 && b >= 0.0 && (a + b - 1.0).abs() <= WEIGHT_TOL) {
            return Err(Error::WeightViolation { a, b });
        }
        if b > 0.0 && alpha1.norm_sqr() + alpha2.norm_sqr() < DEGENERATE_NORM_SQR {
            return Err(Error::DegenerateCatState);
        }
        Ok(CatMixture {
            a,
            b,
            alpha1,
            alpha2,
        })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn alpha1(&self) -> Amplitude {
        self.alpha1
    }

    pub fn alpha2(&self) -> Amplitude {
        self.alpha2
    }

    /// The same mixture with the two modes exchanged.
    pub fn swapped(&self) -> Self {
        CatMixture {
            alpha1: self.alpha2,
            alpha2: self.alpha1,
            ..*self
        }
    }

    /// Amplitude labels `(kept, traced)` when keeping `subsystem`.
    fn ordered(&self, subsystem: Subsystem) -> (Amplitude, Amplitude) {
        match subsystem {
            Subsystem::First => (self.alpha1, self.alpha2),
            Subsystem::Second => (self.alpha2, self.alpha1),
        }
    }
}

/// `-a ln a - b ln b`; the even and odd cats are orthogonal.
pub fn joint_entropy(spec: &CatMixture) -> f64 {
    crate::xlogx_neg(spec.a) + crate::xlogx_neg(spec.b)
}

/// `D(α₁, α₂)` of the reduced state of mode 1:
///
/// ```text
/// D = ¼(1 - e^{-4|α₁|²}) [(p + q)² - e^{-4|α₂|²}(p - q)²]
/// p = a / (1 + E),  q = b / (1 - E),  E = e^{-2|α₁|² - 2|α₂|²}
/// ```
///
/// The bracket is evaluated as `(1 - e₂)(p² + q²) + 2(1 + e₂)pq`, a sum of
/// non-negative terms, because `p + q` and `p - q` both blow up as the
/// amplitudes go to zero.
pub fn d_cat(spec: &CatMixture) -> Result<DParameter> {
    d_cat_ordered(spec.a, spec.b, spec.alpha1, spec.alpha2)
}

fn d_cat_ordered(a: f64, b: f64, kept: Amplitude, traced: Amplitude) -> Result<DParameter> {
    let x1 = kept.norm_sqr();
    let x2 = traced.norm_sqr();
    let total = 2.0 * (x1 + x2);
    let e = (-total).exp();
    let p = a / (1.0 + e);
    let q = if b == 0.0 {
        0.0
    } else if total == 0.0 {
        return Err(Error::DegenerateCatState);
    } else {
        b / crate::one_minus_exp_neg(total)
    };
    let e2 = (-4.0 * x2).exp();
    let one_minus_e2 = crate::one_minus_exp_neg(4.0 * x2);
    let bracket = one_minus_e2 * (p * p + q * q) + 2.0 * (1.0 + e2) * p * q;
    DParameter::new(0.25 * crate::one_minus_exp_neg(4.0 * x1) * bracket)
}

/// Von Neumann entropy of the reduced state of `subsystem`, in nats.
pub fn reduced_entropy(spec: &CatMixture, subsystem: Subsystem) -> Result<f64> {
    let (kept, traced) = spec.ordered(subsystem);
    let d = d_cat_ordered(spec.a, spec.b, kept, traced)?;
    Ok(spectral_pair(d).entropy())
}

/// Populations `(w₀, w₁)` of `|0⟩` and `|1⟩` in the reduced state of mode 1
/// to leading order in small amplitudes.
pub fn small_alpha_reduced_weights(spec: &CatMixture) -> Result<(f64, f64)> {
    let x1 = spec.alpha1.norm_sqr();
    let x2 = spec.alpha2.norm_sqr();
    let total = x1 + x2;
    if total == 0.0 {
        return Err(Error::DegenerateCatState);
    }
    Ok((spec.a + spec.b * x2 / total, spec.b * x1 / total))
}

/// Small-amplitude limit of the mode-1 reduced entropy.
pub fn small_alpha_entropy(spec: &CatMixture) -> Result<f64> {
    let (w0, w1) = small_alpha_reduced_weights(spec)?;
    Ok(crate::xlogx_neg(w0) + crate::xlogx_neg(w1))
}

/// One point of the mode-1 entropy curve: `|α₂| = ratio · |α₁|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub ratio: f64,
    pub abs_alpha1: f64,
    pub entropy1: f64,
}

/// Evaluates one sweep point with real non-negative amplitudes.
pub fn sweep_point(ratio: f64, abs_alpha1: f64, a: f64, b: f64) -> Result<SweepRow> {
    let spec = sweep_spec(ratio, abs_alpha1, a, b)?;
    Ok(SweepRow {
        ratio,
        abs_alpha1,
        entropy1: reduced_entropy(&spec, Subsystem::First)?,
    })
}

/// The cat mixture behind a sweep point.
pub fn sweep_spec(ratio: f64, abs_alpha1: f64, a: f64, b: f64) -> Result<CatMixture> {
    let alpha1 = Amplitude::new(abs_alpha1, 0.0)?;
    let alpha2 = Amplitude::new(ratio * abs_alpha1, 0.0)?;
    CatMixture::new(a, b, alpha1, alpha2)
}

/// Mode-1 entropy on the grid `ratios × alpha1_grid`, ratio-major, each
/// ratio's rows in ascending `|α₁|`.
pub fn sweep_fig1(ratios: &[f64], alpha1_grid: &[f64], a: f64, b: f64) -> Result<Vec<SweepRow>> {
    let mut grid = alpha1_grid.to_vec();
    grid.sort_by(f64::total_cmp);
    let mut rows = Vec::with_capacity(ratios.len() * grid.len());
    for &ratio in ratios {
        for &x in &grid {
            rows.push(sweep_point(ratio, x, a, b)?);
        }
    }
    Ok(rows)
}

/// `points` evenly spaced values from `min` to `max` inclusive.
pub fn linear_grid(min: f64, max: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![min],
        _ => {
            let step = (max - min) / (points - 1) as f64;
            (0..points)
                .map(|i| if i + 1 == points { max } else { min + step * i as f64 })
                .collect()
        }
    }
}
