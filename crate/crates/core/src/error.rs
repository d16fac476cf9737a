use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite amplitude component ({re}, {im})")]
    NonFinite { re: f64, im: f64 },

    #[error("trace condition a + b + 2 Re(c<beta|alpha>) = 1 violated: trace = {trace}")]
    TraceViolation { trace: f64 },

    #[error("mixture is not positive: a = {a}, b = {b}, ab - |c|^2 = {det}")]
    NegativityViolation { a: f64, b: f64, det: f64 },

    #[error("mixture trace {trace} is not positive; cannot normalize")]
    ZeroTrace { trace: f64 },

    #[error("odd cat state is undefined at alpha1 = alpha2 = 0")]
    DegenerateCatState,

    #[error("mixture weights must be non-negative and sum to 1: a = {a}, b = {b}")]
    WeightViolation { a: f64, b: f64 },

    #[error("D parameter {d} lies outside [0, 1/4]")]
    ClampExceeded { d: f64 },

    #[error("temperature must be positive, got {0}")]
    InvalidTemperature(f64),

    #[error("mean photon number must be finite and non-negative, got {0}")]
    InvalidMeanPhotons(f64),

    #[error("no Fock cutoff <= {cap} reaches tail tolerance {tail_tol:e}")]
    CutoffExceeded { cap: usize, tail_tol: f64 },

    #[error("matrix is not Hermitian: max asymmetry {asymmetry:e}")]
    HermiticityViolation { asymmetry: f64 },

    #[error("expected {expected} modes, found {found}")]
    ModeCountMismatch { expected: usize, found: usize },

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("eigenvalue {0:e} is negative beyond roundoff")]
    NegativeEigenvalue(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
