//! Brute-force values of the closed-form quantities.

use super::states::{
    cat_mixture_terms, reduce_product_terms, separable_cat_matrix, thermal_mixture_matrix,
    two_state_matrix, assemble_product_terms,
};
use super::{choose_cutoff, entropy_from_spectrum, hermitian_eigenvalues, partial_trace, purity_from_matrix};
use crate::cat::CatMixture;
use crate::coherent::TwoStateMixture;
use crate::error::Result;
use crate::purity::{PurityTriple, SeparableCatMixture, ThermalMixture};
use crate::Subsystem;

/// Per-mode cutoff ceiling for the thermal-mixture purity oracle. Purities
/// weight the geometric tail quadratically or against coherent amplitudes,
/// so they converge long before the trace does.
pub const THERMAL_CUTOFF_CAP: usize = 48;

/// Above this joint dimension the two-mode partial trace is taken on the
/// factored dyads instead of an assembled matrix.
pub const MAX_ASSEMBLED_DIM: usize = 2048;

/// Per-mode cutoffs for a two-mode coherent state pair `(|α₁|, |α₂|)`.
pub fn two_mode_cutoffs(abs1: f64, abs2: f64, tail_tol: f64) -> Result<[usize; 2]> {
    Ok([
        choose_cutoff(abs1, 0.0, tail_tol)?,
        choose_cutoff(abs2, 0.0, tail_tol)?,
    ])
}

/// Entropy of the single-mode mixture from its diagonalized Fock matrix,
/// with an explicit cutoff.
pub fn two_state_entropy_at(spec: &TwoStateMixture, cutoff: usize) -> Result<f64> {
    let rho = two_state_matrix(spec, cutoff)?;
    entropy_from_spectrum(&hermitian_eigenvalues(&rho)?)
}

pub fn two_state_entropy(spec: &TwoStateMixture, tail_tol: f64) -> Result<f64> {
    let max_abs = spec.alpha().abs().max(spec.beta().abs());
    two_state_entropy_at(spec, choose_cutoff(max_abs, 0.0, tail_tol)?)
}

/// `Tr ρⁿ` of the truncated single-mode matrix, from its spectrum.
pub fn two_state_trace_power(spec: &TwoStateMixture, n: f64, tail_tol: f64) -> Result<f64> {
    let max_abs = spec.alpha().abs().max(spec.beta().abs());
    let rho = two_state_matrix(spec, choose_cutoff(max_abs, 0.0, tail_tol)?)?;
    Ok(hermitian_eigenvalues(&rho)?
        .into_iter()
        .filter(|&x| x > 0.0)
        .map(|x| x.powf(n))
        .sum())
}

/// Reduced-state spectrum of the cat mixture, descending.
pub fn cat_reduced_spectrum_at(
    spec: &CatMixture,
    keep: Subsystem,
    cutoffs: [usize; 2],
) -> Result<Vec<f64>> {
    let terms = cat_mixture_terms(spec, cutoffs);
    let reduced = if cutoffs[0] * cutoffs[1] <= MAX_ASSEMBLED_DIM {
        partial_trace(&assemble_product_terms(&terms)?, keep)?
    } else {
        reduce_product_terms(&terms, keep)?
    };
    hermitian_eigenvalues(&reduced)
}

pub fn cat_reduced_entropy_at(
    spec: &CatMixture,
    keep: Subsystem,
    cutoffs: [usize; 2],
) -> Result<f64> {
    entropy_from_spectrum(&cat_reduced_spectrum_at(spec, keep, cutoffs)?)
}

pub fn cat_reduced_entropy(spec: &CatMixture, keep: Subsystem, tail_tol: f64) -> Result<f64> {
    let cutoffs = two_mode_cutoffs(spec.alpha1().abs(), spec.alpha2().abs(), tail_tol)?;
    cat_reduced_entropy_at(spec, keep, cutoffs)
}

/// Entropy of the full two-mode cat mixture matrix.
pub fn cat_joint_entropy_at(spec: &CatMixture, cutoffs: [usize; 2]) -> Result<f64> {
    let rho = assemble_product_terms(&cat_mixture_terms(spec, cutoffs))?;
    entropy_from_spectrum(&hermitian_eigenvalues(&rho)?)
}

pub fn cat_joint_entropy(spec: &CatMixture, tail_tol: f64) -> Result<f64> {
    let cutoffs = two_mode_cutoffs(spec.alpha1().abs(), spec.alpha2().abs(), tail_tol)?;
    cat_joint_entropy_at(spec, cutoffs)
}

fn triple_of(rho: &super::FockDensityMatrix) -> Result<PurityTriple> {
    Ok(PurityTriple {
        mu12: purity_from_matrix(rho),
        mu1: purity_from_matrix(&partial_trace(rho, Subsystem::First)?),
        mu2: purity_from_matrix(&partial_trace(rho, Subsystem::Second)?),
    })
}

pub fn separable_cat_purities_at(
    spec: &SeparableCatMixture,
    cutoffs: [usize; 2],
) -> Result<PurityTriple> {
    triple_of(&separable_cat_matrix(spec, cutoffs)?)
}

pub fn separable_cat_purities(spec: &SeparableCatMixture, tail_tol: f64) -> Result<PurityTriple> {
    let cutoffs = two_mode_cutoffs(spec.alpha1.abs(), spec.alpha2.abs(), tail_tol)?;
    separable_cat_purities_at(spec, cutoffs)
}

pub fn thermal_purities_at(spec: &ThermalMixture, cutoff: usize) -> Result<PurityTriple> {
    triple_of(&thermal_mixture_matrix(spec, cutoff)?)
}

/// Thermal-mixture purities at the tail-tolerance cutoff, capped at
/// [`THERMAL_CUTOFF_CAP`].
pub fn thermal_purities(spec: &ThermalMixture, tail_tol: f64) -> Result<PurityTriple> {
    thermal_purities_at(spec, thermal_cutoff(spec, tail_tol)?)
}

pub fn thermal_cutoff(spec: &ThermalMixture, tail_tol: f64) -> Result<usize> {
    let max_abs = spec.alpha1.abs().max(spec.alpha2.abs());
    // the cap only bites through the geometric tail
    let coherent = choose_cutoff(max_abs, 0.0, tail_tol)?;
    let full = choose_cutoff(max_abs, spec.mean_photons, tail_tol).unwrap_or(usize::MAX);
    Ok(full.min(THERMAL_CUTOFF_CAP.max(coherent)))
}
