//! Von Neumann entropies of mixtures of coherent states.
//!
//! The closed forms come from the replica method: for a density operator
//! supported on two coherent states, `Tr ρⁿ` is the trace of the `n`-th power
//! of a 2×2 transfer matrix, so the spectrum has at most two nonzero
//! eigenvalues and the entropy is a binary entropy. The same machinery gives
//! the reduced entropies of a mixture of two-mode even and odd cat states and
//! the purity-inequality gaps of separable cat and thermal–coherent mixtures.
//!
//! Every closed form has an independent cross-check in [`fock`], which builds
//! the states as truncated Fock-space matrices and diagonalizes them with a
//! complex Jacobi eigensolver.

pub mod cat;
pub mod coherent;
pub mod compare;
mod error;
pub mod fock;
pub mod purity;
pub mod record;
pub mod replica;

pub use cat::{CatMixture, SweepRow};
pub use coherent::{cat_norm, overlap, Amplitude, CatSign, TwoStateMixture};
pub use error::{Error, Result};
pub use purity::{PurityTriple, SeparableCatMixture, ThermalMixture};
pub use record::OutputRecord;
pub use replica::{DParameter, SpectralPair};

pub use num_complex::Complex64;

/// One of the two modes of a bipartite state. Mode 1 is the outer
/// (row-major slow) index of a two-mode Fock matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subsystem {
    First,
    Second,
}

impl Subsystem {
    pub fn other(self) -> Self {
        match self {
            Subsystem::First => Subsystem::Second,
            Subsystem::Second => Subsystem::First,
        }
    }
}

/// `-x ln x` with `0 ln 0 = 0`.
#[inline]
pub(crate) fn xlogx_neg(x: f64) -> f64 {
    if x > 0.0 {
        -x * x.ln()
    } else {
        0.0
    }
}

/// `1 - e^{-x}` without cancellation for small `x`.
#[inline]
pub(crate) fn one_minus_exp_neg(x: f64) -> f64 {
    -(-x).exp_m1()
}
