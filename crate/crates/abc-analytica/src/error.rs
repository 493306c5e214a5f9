//! Crate-wide error type and the exit-code contract used by the CLI and FFI.

use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    // ---- input / schema problems (exit code 2) ----
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cannot parse polynomial coefficient `{0}`")]
    BadCoefficient(String),
    #[error("cannot parse polynomial expression `{0}`")]
    BadExpression(String),

    // ---- violated mathematical hypotheses (exit code 3) ----
    #[error("undefined gcd: both inputs are the zero polynomial")]
    GcdOfZeros,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("not relatively prime: gcd has degree {gcd_degree}")]
    NotRelativelyPrime { gcd_degree: usize },
    #[error("trivial input: all polynomials are constant")]
    TrivialInput,
    #[error("linearly dependent inputs: the Wronskian vanishes identically")]
    LinearlyDependent,
    #[error("zero sets not pairwise disjoint: functions {i} and {j} share a zero")]
    ZeroSetsOverlap { i: usize, j: usize },
    #[error("zero at {z} lies in the boundary guard band of the domain")]
    ZeroInGuardBand { z: Complex64 },
    #[error("zero at {z} lies outside the domain")]
    ZeroOutsideDomain { z: Complex64 },
    #[error("point {z} lies outside the closed domain")]
    PointOutsideClosure { z: Complex64 },
    #[error("W vanishes (numerically) on the boundary: min |W| = {min_modulus:.3e}")]
    BoundaryVanishing { min_modulus: f64 },
    #[error("zero too close to the boundary: min sampled |f| = {min_modulus:.3e}")]
    ZeroTooCloseToBoundary { min_modulus: f64 },
    #[error("series is not invertible at 0 (zero constant term)")]
    NonInvertibleAt0,
    #[error("alpha = {0} outside the admissible range")]
    AlphaOutOfRange(f64),
    #[error("Blaschke products live on different domains")]
    MixedDomains,
    #[error("series inputs require expansion about the domain center")]
    UnsupportedDomain,

    // ---- internal inconsistencies; these signal a bug (exit code 4) ----
    #[error("quadrature failed to converge: last two estimates {previous:.17e}, {latest:.17e}")]
    QuadratureDiverged { previous: f64, latest: f64 },
    #[error("quadrature inconsistency: routes disagree ({a:.12e} vs {b:.12e})")]
    QuadratureInconsistency { a: f64, b: f64 },
    #[error("root finder did not converge after {sweeps} sweeps; worst residual {worst_residual:.3e}")]
    RootsNotConverged {
        sweeps: usize,
        worst_residual: f64,
        best: Vec<Complex64>,
        residuals: Vec<f64>,
    },
    #[error("winding number is not an integer: total argument change / 2pi = {0}")]
    WindingInconsistent(f64),
    #[error("zero count mismatch: winding number {winding} vs clustered root count {clustered}")]
    ZeroCountMismatch { winding: i64, clustered: i64 },
    #[error("divisibility failure: {0}")]
    DivisibilityFailure(String),
    #[error("verification returned status=fails: {0}")]
    UnexpectedFailure(String),
    #[error("equality case not attained: |slack| = {slack:.3e} exceeds tolerance {tol:.3e}")]
    EqualityNotAttained { slack: f64, tol: f64 },
    #[error("asymptotic check failed: {0}")]
    AsymptoticsViolation(String),
    #[error("non-finite value encountered in {0}")]
    NonFinite(String),
}

/// Stable process exit codes: 0 holds/equality, 2 input error,
/// 3 hypothesis violation, 4 internal inconsistency.
impl Error {
    pub fn exit_code(&self) -> i32 {
        use Error::*;
        match self {
            Json(_) | Io(_) | Schema(_) | InvalidParameter(_) | BadCoefficient(_)
            | BadExpression(_) => 2,
            GcdOfZeros | ZeroPolynomial | NotRelativelyPrime { .. } | TrivialInput
            | LinearlyDependent | ZeroSetsOverlap { .. } | ZeroInGuardBand { .. }
            | ZeroOutsideDomain { .. } | PointOutsideClosure { .. }
            | BoundaryVanishing { .. } | ZeroTooCloseToBoundary { .. } | NonInvertibleAt0
            | AlphaOutOfRange(_) | MixedDomains | UnsupportedDomain => 3,
            QuadratureDiverged { .. } | QuadratureInconsistency { .. }
            | RootsNotConverged { .. } | WindingInconsistent(_) | ZeroCountMismatch { .. }
            | DivisibilityFailure(_) | UnexpectedFailure(_) | EqualityNotAttained { .. }
            | AsymptoticsViolation(_) | NonFinite(_) => 4,
        }
    }
}
