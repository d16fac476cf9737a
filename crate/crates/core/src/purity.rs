//! Purity parameters `μ = Tr ρ²` and the bipartite purity inequality
//! `1 + μ(1,2) >= μ(1) + μ(2)`.
//!
//! `μ(i)` is the purity of the reduced state of mode `i` on its own space.

use crate::coherent::Amplitude;
use crate::error::{Error, Result};
use crate::one_minus_exp_neg;

const WEIGHT_TOL: f64 = 1e-12;

/// Joint and marginal purities of a two-mode state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PurityTriple {
    pub mu12: f64,
    pub mu1: f64,
    pub mu2: f64,
}

impl PurityTriple {
    /// `1 + μ(1,2) - μ(1) - μ(2)`.
    pub fn gap(&self) -> f64 {
        1.0 + self.mu12 - self.mu1 - self.mu2
    }
}

/// `a|α₁,α₂⟩⟨α₁,α₂| + b|-α₁,-α₂⟩⟨-α₁,-α₂|`, with `a + b = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparableCatMixture {
    pub a: f64,
    pub b: f64,
    pub alpha1: Amplitude,
    pub alpha2: Amplitude,
}

impl SeparableCatMixture {
    pub fn new(a: f64, b: f64, alpha1: Amplitude, alpha2: Amplitude) -> Result<Self> {
        let spec = SeparableCatMixture {
            a,
            b,
            alpha1,
            alpha2,
        };
        spec.check()?;
        Ok(spec)
    }

    fn check(&self) -> Result<()> {
        let (a, b) = (self.a, self.b);
        if a >= 0.0 && b >= 0.0 && (a + b - 1.0).abs() <= WEIGHT_TOL {
            Ok(())
        } else {
            Err(Error::WeightViolation { a, b })
        }
    }
}

/// `½|α₁⟩⟨α₁| ⊗ ρ_T + ½ρ_T ⊗ |α₂⟩⟨α₂|`, with the thermal state given by its
/// mean photon number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalMixture {
    pub alpha1: Amplitude,
    pub alpha2: Amplitude,
    pub mean_photons: f64,
}

impl ThermalMixture {
    pub fn new(alpha1: Amplitude, alpha2: Amplitude, mean_photons: f64) -> Result<Self> {
        check_mean_photons(mean_photons)?;
        Ok(ThermalMixture {
            alpha1,
            alpha2,
            mean_photons,
        })
    }
}

pub(crate) fn check_mean_photons(n: f64) -> Result<()> {
    if n >= 0.0 && n.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidMeanPhotons(n))
    }
}

/// Bose–Einstein occupation `(e^{1/T} - 1)^{-1}`.
pub fn thermal_mean_photon(temperature: f64) -> Result<f64> {
    if !(temperature > 0.0) {
        return Err(Error::InvalidTemperature(temperature));
    }
    // exp_m1 overflows to +inf as T -> 0+, giving 0
    Ok(1.0 / (1.0 / temperature).exp_m1())
}

/// `⟨α|ρ_T|α⟩ = e^{-|α|²/(1+N)} / (1+N)`.
pub fn thermal_coherent_overlap(alpha: Amplitude, mean_photons: f64) -> f64 {
    let s = 1.0 + mean_photons;
    (-alpha.norm_sqr() / s).exp() / s
}

/// `Tr ρ_T² = 1 / (1 + 2N)`.
pub fn thermal_purity(mean_photons: f64) -> f64 {
    1.0 / (1.0 + 2.0 * mean_photons)
}

/// `μ(1,2) = a² + b² + 2ab e^{-4|α₁|²-4|α₂|²}`, `μ(i) = a² + b² + 2ab e^{-4|αᵢ|²}`.
pub fn purity_triple_cat(spec: &SeparableCatMixture) -> Result<PurityTriple> {
    spec.check()?;
    let (a, b) = (spec.a, spec.b);
    let base = a * a + b * b;
    let x1 = spec.alpha1.norm_sqr();
    let x2 = spec.alpha2.norm_sqr();
    Ok(PurityTriple {
        mu12: base + 2.0 * a * b * (-4.0 * (x1 + x2)).exp(),
        mu1: base + 2.0 * a * b * (-4.0 * x1).exp(),
        mu2: base + 2.0 * a * b * (-4.0 * x2).exp(),
    })
}

/// `2ab(1 - e^{-4|α₁|²})(1 - e^{-4|α₂|²})`.
pub fn purity_gap_cat(spec: &SeparableCatMixture) -> Result<f64> {
    spec.check()?;
    Ok(2.0
        * spec.a
        * spec.b
        * one_minus_exp_neg(4.0 * spec.alpha1.norm_sqr())
        * one_minus_exp_neg(4.0 * spec.alpha2.norm_sqr()))
}

/// `½(1 - q₁)(1 - q₂)` with `qᵢ = ⟨αᵢ|ρ_T|αᵢ⟩`.
pub fn purity_gap_thermal(spec: &ThermalMixture) -> f64 {
    let q1 = thermal_coherent_overlap(spec.alpha1, spec.mean_photons);
    let q2 = thermal_coherent_overlap(spec.alpha2, spec.mean_photons);
    0.5 * (1.0 - q1) * (1.0 - q2)
}

pub fn purity_triple_thermal(spec: &ThermalMixture) -> PurityTriple {
    let q1 = thermal_coherent_overlap(spec.alpha1, spec.mean_photons);
    let q2 = thermal_coherent_overlap(spec.alpha2, spec.mean_photons);
    let t = thermal_purity(spec.mean_photons);
    PurityTriple {
        mu12: 0.25 * (2.0 * t + 2.0 * q1 * q2),
        mu1: 0.25 * (1.0 + 2.0 * q1 + t),
        mu2: 0.25 * (1.0 + 2.0 * q2 + t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sep(a: f64, x1: f64, x2: f64) -> SeparableCatMixture {
        SeparableCatMixture::new(a, 1.0 - a, Amplitude::real(x1), Amplitude::real(x2)).unwrap()
    }

    #[test]
    fn mean_photon_number() {
        assert_eq!(thermal_mean_photon(1e-3).unwrap(), 0.0);
        assert!((thermal_mean_photon(1.0 / std::f64::consts::LN_2).unwrap() - 1.0).abs() < 1e-15);
        // Σ n pₙ over the geometric distribution, independently summed
        let n = thermal_mean_photon(1.0).unwrap();
        assert!((n - 0.5819767068693265).abs() < 1e-15);
        let r = n / (1.0 + n);
        let oracle: f64 = (0..200).map(|k| k as f64 * r.powi(k) / (1.0 + n)).sum();
        assert!((n - oracle).abs() < 1e-12);
        for t in [0.0, -1.0, f64::NAN] {
            assert!(matches!(thermal_mean_photon(t), Err(Error::InvalidTemperature(_))));
        }
    }

    #[test]
    fn coherent_thermal_overlap() {
        assert_eq!(thermal_coherent_overlap(Amplitude::ZERO, 0.0), 1.0);
        assert_eq!(thermal_coherent_overlap(Amplitude::ZERO, 1.0), 0.5);
        let q = thermal_coherent_overlap(Amplitude::real(1.0), 1.0);
        assert!((q - 0.3032653298563167).abs() < 1e-15);
    }

    #[test]
    fn cat_triple_and_gap() {
        let t = purity_triple_cat(&sep(1.0, 0.7, 1.2)).unwrap();
        assert_eq!((t.mu12, t.mu1, t.mu2), (1.0, 1.0, 1.0));
        let t = purity_triple_cat(&sep(0.3, 0.0, 0.0)).unwrap();
        assert!((t.mu12 - 1.0).abs() < 1e-15 && (t.mu1 - 1.0).abs() < 1e-15);

        // brute-force Fock values
        let s = sep(0.5, 1.0, 1.0);
        let t = purity_triple_cat(&s).unwrap();
        assert!((t.mu12 - 0.500167731313951).abs() < 1e-12);
        assert!((purity_gap_cat(&s).unwrap() - 0.481852092425217).abs() < 1e-12);
        assert!((purity_gap_cat(&sep(0.5, 1.0, 2.0)).unwrap() - 0.49084212531862226).abs() < 1e-12);

        assert_eq!(purity_gap_cat(&sep(0.5, 0.0, 2.0)).unwrap(), 0.0);
        assert_eq!(purity_gap_cat(&sep(0.0, 1.0, 2.0)).unwrap(), 0.0);

        let bad = SeparableCatMixture {
            a: 0.7,
            b: 0.7,
            alpha1: Amplitude::ZERO,
            alpha2: Amplitude::ZERO,
        };
        assert!(matches!(purity_gap_cat(&bad), Err(Error::WeightViolation { .. })));
    }

    #[test]
    fn thermal_examples() {
        let z = Amplitude::ZERO;
        let s = ThermalMixture::new(z, Amplitude::real(1.5), 0.0).unwrap();
        assert_eq!(purity_gap_thermal(&s), 0.0);

        let x = Amplitude::real(std::f64::consts::LN_2.sqrt());
        let s = ThermalMixture::new(x, x, 0.0).unwrap();
        assert!((purity_gap_thermal(&s) - 0.125).abs() < 1e-15);

        let one = Amplitude::real(1.0);
        let s = ThermalMixture::new(one, one, 1.0).unwrap();
        assert!((purity_gap_thermal(&s) - 0.24271960029129896).abs() < 1e-10);

        let t = purity_triple_thermal(&ThermalMixture::new(z, z, 0.0).unwrap());
        assert_eq!((t.mu12, t.mu1, t.mu2), (1.0, 1.0, 1.0));
        let t = purity_triple_thermal(&ThermalMixture::new(z, z, 1.0).unwrap());
        assert!((t.mu1 - 7.0 / 12.0).abs() < 1e-15);

        assert!(ThermalMixture::new(z, z, -0.1).is_err());
        assert!(ThermalMixture::new(z, z, f64::INFINITY).is_err());
    }

    proptest! {
        #[test]
        fn cat_gap_consistent_and_nonnegative(a in 0.0..=1.0f64, x1 in 0.0..3.0f64, x2 in 0.0..3.0f64) {
            let s = sep(a, x1, x2);
            let gap = purity_gap_cat(&s).unwrap();
            let t = purity_triple_cat(&s).unwrap();
            prop_assert!(gap >= 0.0);
            prop_assert!((gap - t.gap()).abs() < 1e-12);
            for mu in [t.mu12, t.mu1, t.mu2] {
                prop_assert!(mu > 0.0 && mu <= 1.0 + 1e-15);
            }
        }

        #[test]
        fn thermal_gap_consistent_and_nonnegative(x1 in 0.0..3.0f64, x2 in 0.0..3.0f64, n in 0.0..5.0f64) {
            let s = ThermalMixture::new(Amplitude::real(x1), Amplitude::real(x2), n).unwrap();
            let gap = purity_gap_thermal(&s);
            prop_assert!(gap >= 0.0);
            prop_assert!((gap - purity_triple_thermal(&s).gap()).abs() < 1e-12);
        }

        #[test]
        fn thermal_gap_increases_with_first_amplitude(x in 0.0..3.0f64, dx in 0.01..1.0f64, x2 in 0.1..3.0f64, n in 0.0..5.0f64) {
            let lo = purity_gap_thermal(&ThermalMixture::new(Amplitude::real(x), Amplitude::real(x2), n).unwrap());
            let hi = purity_gap_thermal(&ThermalMixture::new(Amplitude::real(x + dx), Amplitude::real(x2), n).unwrap());
            prop_assert!(hi > lo);
        }
    }
}
