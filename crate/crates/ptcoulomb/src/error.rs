use thiserror::Error;

/// Errors across the special-function, model, pseudo-norm and verification layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PtError {
    #[error("gamma function pole at non-positive integer x = {x}")]
    GammaPole { x: f64 },
    #[error("jet order mismatch: {left} vs {right}")]
    JetOrderMismatch { left: usize, right: usize },
    #[error("hypergeometric parameter c = {c} is a non-positive integer")]
    HypergeometricCPole { c: f64 },
    #[error("hypergeometric series is restricted to |z| < 1, got |z| = {z_abs}")]
    OutsideUnitDisk { z_abs: f64 },
    #[error("hypergeometric series did not converge within {terms} terms")]
    SeriesDivergence { terms: usize },
    #[error("jet composition needs a zero constant term, got {constant}")]
    NonzeroConstantTerm { constant: f64 },
    #[error("invalid model parameters: {reason}")]
    InvalidParams { reason: String },
    #[error(
        "state (q={q}, n={n}) flown away: spectral denominator 2n - 2q*alpha + 1 \
         vanishes at alpha = {alpha}"
    )]
    FlownAway { q: i32, n: u32, alpha: f64 },
    #[error(
        "state (q={q}, n={n}) not normalizable: signed decay scale {gamma_signed} <= 0"
    )]
    NotNormalizable { q: i32, n: u32, gamma_signed: f64 },
    #[error(
        "closed-form pseudo-norm undefined at alpha = 1/2, q = +1 \
         (hypergeometric c-parameter vanishes); use quadrature"
    )]
    ClosedFormOutOfDomain,
    #[error(
        "quadrature did not converge within {max_depth} bisection levels; \
         last two estimates {previous} and {last}"
    )]
    QuadratureNoConvergence {
        max_depth: usize,
        previous: f64,
        last: f64,
    },
    #[error("no sign change of the shooting miss function on bracket [{lo}, {hi}]")]
    NoBracket { lo: f64, hi: f64 },
    #[error(
        "shooting step refinement exhausted at {steps} steps; \
         last two miss values differ by {delta}"
    )]
    StepRefinementExhausted { steps: usize, delta: f64 },
    #[error("residual grid [{x_min}, {x_max}] must stay on one half-line, outside |x| < {exclusion}")]
    GridCrossesOrigin {
        x_min: f64,
        x_max: f64,
        exclusion: f64,
    },
    #[error("invalid grid: {reason}")]
    InvalidGrid { reason: String },
}

pub type Result<T> = std::result::Result<T, PtError>;
