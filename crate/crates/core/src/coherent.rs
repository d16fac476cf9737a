//! Coherent-state algebra: overlaps, two-state mixtures and cat-state
//! normalization constants.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Absolute tolerance on the unit-trace condition of a mixture.
pub const TRACE_TOL: f64 = 1e-12;

/// Roundoff allowance on `ab - |c|^2 >= 0`.
pub const POSITIVITY_TOL: f64 = 1e-12;

/// A coherent-state label `α ∈ ℂ`. Both components are finite.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct Amplitude(Complex64);

impl Amplitude {
    pub const ZERO: Amplitude = Amplitude(Complex64 { re: 0.0, im: 0.0 });

    pub fn new(re: f64, im: f64) -> Result<Self> {
        if re.is_finite() && im.is_finite() {
            Ok(Amplitude(Complex64::new(re, im)))
        } else {
            Err(Error::NonFinite { re, im })
        }
    }

    /// Real amplitude.
    ///
    /// # Panics
    ///
    /// If `x` is not finite.
    pub fn real(x: f64) -> Self {
        Self::new(x, 0.0).expect("real amplitude must be finite")
    }

    pub fn from_polar(modulus: f64, phase: f64) -> Result<Self> {
        let z = Complex64::from_polar(modulus, phase);
        Self::new(z.re, z.im)
    }

    pub fn value(self) -> Complex64 {
        self.0
    }

    pub fn re(self) -> f64 {
        self.0.re
    }

    pub fn im(self) -> f64 {
        self.0.im
    }

    /// `|α|²`, the mean photon number of `|α⟩`.
    pub fn norm_sqr(self) -> f64 {
        self.0.norm_sqr()
    }

    pub fn abs(self) -> f64 {
        self.0.norm()
    }

    /// Displaces the label by `shift`.
    pub fn shifted(self, shift: Complex64) -> Result<Self> {
        let z = self.0 + shift;
        Self::new(z.re, z.im)
    }

    /// Rotates the label by `e^{iθ}`.
    pub fn rotated(self, theta: f64) -> Self {
        Amplitude(self.0 * Complex64::from_polar(1.0, theta))
    }
}

impl std::ops::Neg for Amplitude {
    type Output = Amplitude;

    fn neg(self) -> Amplitude {
        Amplitude(-self.0)
    }
}

impl fmt::Debug for Amplitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Amplitude({} {:+}i)", self.0.re, self.0.im)
    }
}

impl TryFrom<Complex64> for Amplitude {
    type Error = Error;

    fn try_from(z: Complex64) -> Result<Self> {
        Self::new(z.re, z.im)
    }
}

/// `⟨β|α⟩ = exp(-|α|²/2 - |β|²/2 + β̄α)`.
///
/// The first argument is the ket. Exponents below about -745 underflow to
/// exactly zero.
pub fn overlap(ket: Amplitude, bra: Amplitude) -> Complex64 {
    let exponent = -0.5 * ket.norm_sqr() - 0.5 * bra.norm_sqr() + bra.0.conj() * ket.0;
    exponent.exp()
}

/// Parity label of a two-mode cat state `N±(|α₁,α₂⟩ ± |-α₁,-α₂⟩)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatSign {
    Even,
    Odd,
}

impl CatSign {
    pub fn factor(self) -> f64 {
        match self {
            CatSign::Even => 1.0,
            CatSign::Odd => -1.0,
        }
    }
}

/// Normalization `N± = 2^{-1/2} (1 ± e^{-2|α₁|²-2|α₂|²})^{-1/2}` of a two-mode
/// cat state.
pub fn cat_norm(sign: CatSign, alpha1: Amplitude, alpha2: Amplitude) -> Result<f64> {
    let x = 2.0 * (alpha1.norm_sqr() + alpha2.norm_sqr());
    let inner = match sign {
        CatSign::Even => 1.0 + (-x).exp(),
        CatSign::Odd => {
            if x == 0.0 {
                return Err(Error::DegenerateCatState);
            }
            crate::one_minus_exp_neg(x)
        }
    };
    Ok(std::f64::consts::FRAC_1_SQRT_2 / inner.sqrt())
}

/// The rank-two density operator
///
/// ```text
/// ρ = a|α⟩⟨α| + c|α⟩⟨β| + c̄|β⟩⟨α| + b|β⟩⟨β|
/// ```
///
/// A value of this type always satisfies `a, b >= 0`, `ab >= |c|²` and
/// `Tr ρ = 1` to within [`TRACE_TOL`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoStateMixture {
    a: f64,
    b: f64,
    c: Complex64,
    alpha: Amplitude,
    beta: Amplitude,
}

impl TwoStateMixture {
    /// Validates the coefficients; inputs are never rescaled.
    pub fn new(a: f64, b: f64, c: Complex64, alpha: Amplitude, beta: Amplitude) -> Result<Self> {
        let raw = TwoStateMixture {
            a,
            b,
            c,
            alpha,
            beta,
        };
        if !(a.is_finite() && b.is_finite() && c.re.is_finite() && c.im.is_finite()) {
            return Err(Error::NonFinite { re: c.re, im: c.im });
        }
        let det = raw.determinant();
        if a < 0.0 || b < 0.0 || det < -POSITIVITY_TOL {
            return Err(Error::NegativityViolation { a, b, det });
        }
        let trace = raw.trace();
        if (trace - 1.0).abs() > TRACE_TOL {
            return Err(Error::TraceViolation { trace });
        }
        Ok(raw)
    }

    /// Rescales `(a, b, c)` by the trace of the unnormalized operator, then
    /// validates.
    pub fn normalized(
        a_raw: f64,
        b_raw: f64,
        c_raw: Complex64,
        alpha: Amplitude,
        beta: Amplitude,
    ) -> Result<Self> {
        let raw = TwoStateMixture {
            a: a_raw,
            b: b_raw,
            c: c_raw,
            alpha,
            beta,
        };
        let trace = raw.trace();
        if !(trace > 0.0 && trace.is_finite()) {
            return Err(Error::ZeroTrace { trace });
        }
        Self::new(a_raw / trace, b_raw / trace, c_raw / trace, alpha, beta)
    }

    /// Incoherent mixture `a|α⟩⟨α| + b|β⟩⟨β|` with `a + b = 1`.
    pub fn incoherent(a: f64, b: f64, alpha: Amplitude, beta: Amplitude) -> Result<Self> {
        Self::new(a, b, Complex64::new(0.0, 0.0), alpha, beta)
    }

    /// The pure state `|α⟩⟨α|`.
    pub fn pure(alpha: Amplitude) -> Self {
        TwoStateMixture {
            a: 1.0,
            b: 0.0,
            c: Complex64::new(0.0, 0.0),
            alpha,
            beta: alpha,
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> Complex64 {
        self.c
    }

    pub fn alpha(&self) -> Amplitude {
        self.alpha
    }

    pub fn beta(&self) -> Amplitude {
        self.beta
    }

    /// `a + b + 2 Re(c⟨β|α⟩)`.
    pub fn trace(&self) -> f64 {
        self.a + self.b + 2.0 * (self.c * overlap(self.alpha, self.beta)).re
    }

    /// `ab - |c|²`.
    pub fn determinant(&self) -> f64 {
        self.a * self.b - self.c.norm_sqr()
    }

    /// The same operator written with the roles of `|α⟩` and `|β⟩` exchanged.
    pub fn swapped(&self) -> Self {
        TwoStateMixture {
            a: self.b,
            b: self.a,
            c: self.c.conj(),
            alpha: self.beta,
            beta: self.alpha,
        }
    }

    /// `D(γ) ρ D(γ)†`. Since `D(γ)|α⟩ = e^{i Im(γᾱ)}|α+γ⟩`, the coherence
    /// picks up the phase `Im(γᾱ) - Im(γβ̄)`.
    pub fn displaced(&self, shift: Complex64) -> Result<Self> {
        let phase = (shift * self.alpha.0.conj()).im - (shift * self.beta.0.conj()).im;
        Self::new(
            self.a,
            self.b,
            self.c * Complex64::from_polar(1.0, phase),
            self.alpha.shifted(shift)?,
            self.beta.shifted(shift)?,
        )
    }
}
