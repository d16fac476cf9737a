//! Fock-space realizations of the mixtures handled by the closed forms.
//!
//! Normalizations are computed from the truncated vectors themselves.

use num_complex::Complex64;

use super::{
    assemble_mixture, coherent_fock, thermal_fock, FockDensityMatrix, FockVector, Tensor, ZERO,
};
use crate::cat::CatMixture;
use crate::coherent::TwoStateMixture;
use crate::error::Result;
use crate::purity::{SeparableCatMixture, ThermalMixture};
use crate::Subsystem;

/// `weight · |ket₁ ket₂⟩⟨bra₁ bra₂|`, kept factored.
#[derive(Debug, Clone)]
pub struct ProductTerm {
    pub weight: Complex64,
    pub ket: [FockVector; 2],
    pub bra: [FockVector; 2],
}

impl ProductTerm {
    fn joint_ket(&self) -> FockVector {
        self.ket[0].tensor(&self.ket[1])
    }

    fn joint_bra(&self) -> FockVector {
        self.bra[0].tensor(&self.bra[1])
    }
}

/// `a|α⟩⟨α| + c|α⟩⟨β| + c̄|β⟩⟨α| + b|β⟩⟨β|` at a single-mode cutoff.
pub fn two_state_matrix(spec: &TwoStateMixture, cutoff: usize) -> Result<FockDensityMatrix> {
    let va = coherent_fock(spec.alpha(), cutoff);
    let vb = coherent_fock(spec.beta(), cutoff);
    assemble_mixture(&[
        (Complex64::from(spec.a()), &va, &va),
        (spec.c(), &va, &vb),
        (spec.c().conj(), &vb, &va),
        (Complex64::from(spec.b()), &vb, &vb),
    ])
}

/// Dyads of `a|α₊⟩⟨α₊| + b|α₋⟩⟨α₋|` over `|u⟩ = |α₁,α₂⟩`, `|d⟩ = |-α₁,-α₂⟩`.
///
/// With `n± = ‖u ± d‖²` from the truncated vectors, the state is
/// `Σ w_{xy}|x⟩⟨y|` with `w_uu = w_dd = a/n₊ + b/n₋` and
/// `w_ud = w_du = a/n₊ - b/n₋`.
pub fn cat_mixture_terms(spec: &CatMixture, cutoffs: [usize; 2]) -> Vec<ProductTerm> {
    let u = [
        coherent_fock(spec.alpha1(), cutoffs[0]),
        coherent_fock(spec.alpha2(), cutoffs[1]),
    ];
    let d = [
        coherent_fock(-spec.alpha1(), cutoffs[0]),
        coherent_fock(-spec.alpha2(), cutoffs[1]),
    ];
    let uu = u[0].norm_sqr() * u[1].norm_sqr();
    let dd = d[0].norm_sqr() * d[1].norm_sqr();
    let ud = (u[0].dot(&d[0]) * u[1].dot(&d[1])).re;
    let even = if spec.a() > 0.0 { spec.a() / (uu + dd + 2.0 * ud) } else { 0.0 };
    let odd = if spec.b() > 0.0 { spec.b() / (uu + dd - 2.0 * ud) } else { 0.0 };
    let diag = Complex64::from(even + odd);
    let cross = Complex64::from(even - odd);
    product_terms(&u, &d, [[diag, cross], [cross, diag]])
}

/// Dyads of `a|α₁,α₂⟩⟨α₁,α₂| + b|-α₁,-α₂⟩⟨-α₁,-α₂|`.
pub fn separable_cat_terms(spec: &SeparableCatMixture, cutoffs: [usize; 2]) -> Vec<ProductTerm> {
    let u = [
        coherent_fock(spec.alpha1, cutoffs[0]),
        coherent_fock(spec.alpha2, cutoffs[1]),
    ];
    let d = [
        coherent_fock(-spec.alpha1, cutoffs[0]),
        coherent_fock(-spec.alpha2, cutoffs[1]),
    ];
    let (a, b) = (Complex64::from(spec.a), Complex64::from(spec.b));
    product_terms(&u, &d, [[a, ZERO], [ZERO, b]])
}

fn product_terms(
    u: &[FockVector; 2],
    d: &[FockVector; 2],
    weights: [[Complex64; 2]; 2],
) -> Vec<ProductTerm> {
    let vecs = [u, d];
    let mut terms = Vec::with_capacity(4);
    for (i, row) in weights.iter().enumerate() {
        for (j, &w) in row.iter().enumerate() {
            if w != ZERO {
                terms.push(ProductTerm {
                    weight: w,
                    ket: vecs[i].clone(),
                    bra: vecs[j].clone(),
                });
            }
        }
    }
    terms
}

/// Assembles the full two-mode matrix from product dyads.
pub fn assemble_product_terms(terms: &[ProductTerm]) -> Result<FockDensityMatrix> {
    let joint: Vec<(Complex64, FockVector, FockVector)> = terms
        .iter()
        .map(|t| (t.weight, t.joint_ket(), t.joint_bra()))
        .collect();
    let refs: Vec<_> = joint.iter().map(|(w, k, b)| (*w, k, b)).collect();
    assemble_mixture(&refs)
}

/// Partial trace of a sum of product dyads without forming the joint matrix:
/// `Tr₂ |k₁k₂⟩⟨b₁b₂| = ⟨b₂|k₂⟩ |k₁⟩⟨b₁|`.
pub fn reduce_product_terms(terms: &[ProductTerm], keep: Subsystem) -> Result<FockDensityMatrix> {
    let (kept, traced) = match keep {
        Subsystem::First => (0, 1),
        Subsystem::Second => (1, 0),
    };
    let reduced: Vec<(Complex64, &FockVector, &FockVector)> = terms
        .iter()
        .map(|t| {
            let w = t.weight * t.bra[traced].dot(&t.ket[traced]);
            (w, &t.ket[kept], &t.bra[kept])
        })
        .collect();
    assemble_mixture(&reduced)
}

pub fn cat_mixture_matrix(spec: &CatMixture, cutoffs: [usize; 2]) -> Result<FockDensityMatrix> {
    assemble_product_terms(&cat_mixture_terms(spec, cutoffs))
}

pub fn separable_cat_matrix(
    spec: &SeparableCatMixture,
    cutoffs: [usize; 2],
) -> Result<FockDensityMatrix> {
    assemble_product_terms(&separable_cat_terms(spec, cutoffs))
}

/// `½|α₁⟩⟨α₁| ⊗ ρ_T + ½ρ_T ⊗ |α₂⟩⟨α₂|` with both modes at `cutoff`.
pub fn thermal_mixture_matrix(spec: &ThermalMixture, cutoff: usize) -> Result<FockDensityMatrix> {
    let one = Complex64::from(1.0);
    let v1 = coherent_fock(spec.alpha1, cutoff);
    let v2 = coherent_fock(spec.alpha2, cutoff);
    let p1 = assemble_mixture(&[(one, &v1, &v1)])?;
    let p2 = assemble_mixture(&[(one, &v2, &v2)])?;
    let thermal = thermal_fock(spec.mean_photons, cutoff)?;
    let mut rho = FockDensityMatrix::zeros(vec![cutoff, cutoff]);
    rho.add_tensor(0.5, &p1, &thermal);
    rho.add_tensor(0.5, &thermal, &p2);
    Ok(rho)
}
