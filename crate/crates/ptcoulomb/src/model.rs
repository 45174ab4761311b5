//! Model parameters, quasi-parity spectrum, contour coordinate, potential,
//! and bound-state wavefunctions of the shifted one-dimensional Coulomb
//! Hamiltonian  H = -d²/dx² + (α² - 1/4)/(x - ic)² + β/|x - ic|.

use num_complex::Complex64;

use crate::error::{PtError, Result};
use crate::special::{eval_laguerre, laguerre_coefficients};

/// Tolerance on the spectral denominator 2n - 2qα + 1 below which a
/// state counts as flown away.
pub const FLOWN_AWAY_TOL: f64 = 1e-12;

/// Model parameters: core strength α ∈ (0, 1), Coulomb coupling β ≠ 0,
/// contour shift c > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    alpha: f64,
    beta: f64,
    c: f64,
}

impl ModelParams {
    pub fn new(alpha: f64, beta: f64, c: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= 0.0 || alpha >= 1.0 {
            return Err(PtError::InvalidParams {
                reason: format!("alpha must lie in (0, 1), got {alpha}"),
            });
        }
        if !beta.is_finite() || beta == 0.0 {
            return Err(PtError::InvalidParams {
                reason: format!("beta must be finite and non-zero, got {beta}"),
            });
        }
        if !c.is_finite() || c <= 0.0 {
            return Err(PtError::InvalidParams {
                reason: format!("contour shift c must be positive, got {c}"),
            });
        }
        Ok(Self { alpha, beta, c })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Core strength G = α² - 1/4 of the centrifugal-like term.
    pub fn core_strength(&self) -> f64 {
        self.alpha * self.alpha - 0.25
    }

    /// Half-width of the excluded zone around x = 0 for residual and
    /// sampling grids (the wavefunction branch jump lives there).
    pub fn origin_exclusion(&self) -> f64 {
        1e-3 * self.c
    }
}

/// Quasi-parity label q = ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuasiParity {
    Plus,
    Minus,
}

impl QuasiParity {
    pub fn sign(self) -> f64 {
        match self {
            QuasiParity::Plus => 1.0,
            QuasiParity::Minus => -1.0,
        }
    }

    pub fn as_int(self) -> i32 {
        match self {
            QuasiParity::Plus => 1,
            QuasiParity::Minus => -1,
        }
    }

    pub fn from_int(q: i32) -> Option<Self> {
        match q {
            1 => Some(QuasiParity::Plus),
            -1 => Some(QuasiParity::Minus),
            _ => None,
        }
    }

    pub const BOTH: [QuasiParity; 2] = [QuasiParity::Plus, QuasiParity::Minus];
}

/// Bound-state label: quasi-parity q and radial index n ≥ 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StateLabel {
    pub q: QuasiParity,
    pub n: u32,
}

impl StateLabel {
    pub fn new(q: QuasiParity, n: u32) -> Self {
        Self { q, n }
    }
}

/// Outcome of the bound-state admissibility test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Admissibility {
    Admissible,
    /// Spectral denominator vanishes; the energy has left the spectrum.
    FlownAway,
    /// The signed decay scale is negative: the candidate solution grows
    /// at infinity instead of decaying.
    NotNormalizable,
}

/// A fully resolved bound state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    pub label: StateLabel,
    pub energy: f64,
    pub gamma: f64,
    pub norm_magnitude: f64,
    /// Phase ν of the normalization coefficient N = |N| e^{iν}; fixed to 0.
    pub phase_nu: f64,
}

/// One row of the spectrum listing: admissible states carry the resolved
/// bound state, excluded labels carry only the admissibility flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumEntry {
    pub label: StateLabel,
    pub admissibility: Admissibility,
    pub state: Option<BoundState>,
}

/// Spectral denominator 2n - 2qα + 1.
pub fn spectral_denominator(params: &ModelParams, label: StateLabel) -> f64 {
    2.0 * label.n as f64 - 2.0 * label.q.sign() * params.alpha() + 1.0
}

/// Signed decay scale γₛ = -2β / (2n - 2qα + 1); a bound state needs γₛ > 0.
pub fn signed_gamma(params: &ModelParams, label: StateLabel) -> f64 {
    -2.0 * params.beta() / spectral_denominator(params, label)
}

/// Classify a label as admissible, flown away, or not normalizable.
pub fn admissibility(params: &ModelParams, label: StateLabel) -> Admissibility {
    let denom = spectral_denominator(params, label);
    if denom.abs() <= FLOWN_AWAY_TOL {
        Admissibility::FlownAway
    } else if -2.0 * params.beta() / denom <= 0.0 {
        Admissibility::NotNormalizable
    } else {
        Admissibility::Admissible
    }
}

fn require_admissible(params: &ModelParams, label: StateLabel) -> Result<f64> {
    let denom = spectral_denominator(params, label);
    if denom.abs() <= FLOWN_AWAY_TOL {
        return Err(PtError::FlownAway {
            q: label.q.as_int(),
            n: label.n,
            alpha: params.alpha(),
        });
    }
    let ratio = params.beta() / denom;
    if -2.0 * ratio <= 0.0 {
        return Err(PtError::NotNormalizable {
            q: label.q.as_int(),
            n: label.n,
            gamma_signed: -2.0 * ratio,
        });
    }
    Ok(ratio)
}

/// Bound-state energy E = -β² / (2n - 2qα + 1)².
pub fn energy(params: &ModelParams, label: StateLabel) -> Result<f64> {
    let ratio = require_admissible(params, label)?;
    Ok(-(ratio * ratio))
}

/// Decay scale γ = -2β / (2n - 2qα + 1) = 2 √|E|.
pub fn gamma_scale(params: &ModelParams, label: StateLabel) -> Result<f64> {
    let ratio = require_admissible(params, label)?;
    Ok(-2.0 * ratio)
}

/// Contour coordinate realizing |x - ic| on the shifted path:
/// u(x) = x - ic for x ≥ 0 and u(x) = -x + ic for x < 0, so that
/// Re u ≥ 0 and u(-x)* = u(x).
pub fn contour_coord(x: f64, c: f64) -> Complex64 {
    if x >= 0.0 {
        Complex64::new(x, -c)
    } else {
        Complex64::new(-x, c)
    }
}

/// Complex potential V(x) = (α² - 1/4)/u(x)² + β/u(x).
pub fn potential(params: &ModelParams, x: f64) -> Complex64 {
    let u = contour_coord(x, params.c());
    params.core_strength() / (u * u) + params.beta() / u
}

/// Precomputed evaluator for one bound state's (unnormalized) wavefunction.
pub(crate) struct StateEvaluator {
    gamma: f64,
    exponent: f64,
    lag_coeffs: Vec<f64>,
    c: f64,
}

impl StateEvaluator {
    pub(crate) fn new(params: &ModelParams, label: StateLabel) -> Result<Self> {
        let ratio = require_admissible(params, label)?;
        let qa = label.q.sign() * params.alpha();
        Ok(Self {
            gamma: -2.0 * ratio,
            exponent: 0.5 - qa,
            lag_coeffs: laguerre_coefficients(label.n, -2.0 * qa),
            c: params.c(),
        })
    }

    pub(crate) fn gamma(&self) -> f64 {
        self.gamma
    }

    /// ψ at real x with N = 1.
    pub(crate) fn eval(&self, x: f64) -> Complex64 {
        self.eval_scaled(self.gamma * contour_coord(x, self.c))
    }

    /// ψ as a function of the scaled coordinate γu (N = 1); valid for
    /// Re(γu) ≥ 0, γu ≠ 0 on the principal branch.
    pub(crate) fn eval_scaled(&self, gu: Complex64) -> Complex64 {
        (-0.5 * gu).exp() * gu.powf(self.exponent) * eval_laguerre(&self.lag_coeffs, gu)
    }
}

/// Bound-state wavefunction ψ(x) = N e^{-γu/2} (γu)^{-qα+1/2} L_n^{-2qα}(γu)
/// with u the contour coordinate.  With `normalized` the coefficient
/// N = |N| comes from the pseudo-norm; otherwise N = 1.
pub fn wavefunction(
    params: &ModelParams,
    label: StateLabel,
    x: f64,
    normalized: bool,
) -> Result<Complex64> {
    let evaluator = StateEvaluator::new(params, label)?;
    let psi = evaluator.eval(x);
    if normalized {
        let norm = crate::pseudonorm::normalization_coefficient(params, label)?;
        Ok(psi * norm)
    } else {
        Ok(psi)
    }
}

/// All states with n ≤ n_max for both quasi-parities.  Admissible entries
/// come first, sorted by energy ascending; excluded labels follow with
/// their admissibility flag, ordered by (n, q).
pub fn list_spectrum(params: &ModelParams, n_max: u32) -> Result<Vec<SpectrumEntry>> {
    let mut admissible = Vec::new();
    let mut excluded = Vec::new();
    for n in 0..=n_max {
        for q in QuasiParity::BOTH {
            let label = StateLabel::new(q, n);
            match admissibility(params, label) {
                Admissibility::Admissible => {
                    let ratio = params.beta() / spectral_denominator(params, label);
                    let norm = crate::pseudonorm::normalization_coefficient(params, label)?;
                    admissible.push(SpectrumEntry {
                        label,
                        admissibility: Admissibility::Admissible,
                        state: Some(BoundState {
                            label,
                            energy: -(ratio * ratio),
                            gamma: -2.0 * ratio,
                            norm_magnitude: norm,
                            phase_nu: 0.0,
                        }),
                    });
                }
                flag => excluded.push(SpectrumEntry {
                    label,
                    admissibility: flag,
                    state: None,
                }),
            }
        }
    }
    admissible.sort_by(|a, b| {
        let ea = a.state.unwrap().energy;
        let eb = b.state.unwrap().energy;
        ea.total_cmp(&eb)
            .then(a.label.n.cmp(&b.label.n))
            .then(b.label.q.as_int().cmp(&a.label.q.as_int()))
    });
    excluded.sort_by(|a, b| {
        a.label
            .n
            .cmp(&b.label.n)
            .then(b.label.q.as_int().cmp(&a.label.q.as_int()))
    });
    admissible.extend(excluded);
    Ok(admissible)
}
