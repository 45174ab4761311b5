//! Independent numerical oracles: PT-symmetry checks, Schrödinger residuals
//! on finite-difference grids, a shooting-method eigensolver for the
//! half-line equation, the Hermitian-limit identity, and α sweeps.

use num_complex::Complex64;

use crate::error::{PtError, Result};
use crate::model::{
    admissibility, energy, potential, Admissibility, ModelParams, QuasiParity, StateEvaluator,
    StateLabel,
};

/// Result of a PT-symmetry check over a sample grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PtCheckResult {
    pub max_deviation: f64,
    /// Phase φ of ψ*(-x) = e^{iφ} ψ(x) estimated from the data; this model
    /// realizes φ = 0.
    pub phase_phi: f64,
}

/// Max |V(-x)* - V(x)| over the sample points (all non-zero).
pub fn check_pt_potential(params: &ModelParams, xs: &[f64]) -> PtCheckResult {
    assert!(xs.iter().all(|&x| x != 0.0), "sample points must exclude x = 0");
    let max_deviation = xs
        .iter()
        .map(|&x| (potential(params, -x).conj() - potential(params, x)).norm())
        .fold(0.0, f64::max);
    PtCheckResult {
        max_deviation,
        phase_phi: 0.0,
    }
}

/// Max |ψ*(-x) - ψ(x)| over the sample points, with the phase estimated
/// as the mean argument of the ratio ψ*(-x)/ψ(x).
pub fn check_pt_wavefunction(
    params: &ModelParams,
    label: StateLabel,
    xs: &[f64],
) -> Result<PtCheckResult> {
    assert!(xs.iter().all(|&x| x != 0.0), "sample points must exclude x = 0");
    let evaluator = StateEvaluator::new(params, label)?;
    let mut max_deviation = 0.0_f64;
    let mut phase_sum = 0.0;
    for &x in xs {
        let reflected = evaluator.eval(-x).conj();
        let direct = evaluator.eval(x);
        max_deviation = max_deviation.max((reflected - direct).norm());
        phase_sum += (reflected / direct).arg();
    }
    Ok(PtCheckResult {
        max_deviation,
        phase_phi: phase_sum / xs.len() as f64,
    })
}

/// Uniform grid for the residual check, confined to one half-line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub step: f64,
}

/// Finite-difference residual of the Schrödinger equation on a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualReport {
    pub grid_step: f64,
    /// max |ψ'' + (E - V)ψ| over the grid, normalized by max |ψ|.
    pub residual_norm: f64,
    /// Estimated from runs at `step` and `step/2`; ≈ 2 for the central stencil.
    pub convergence_order: f64,
}

/// Central-difference residual of ψ'' + (E - V)ψ = 0, evaluated at `step`
/// and `step/2` to estimate the convergence order.
pub fn schrodinger_residual(
    params: &ModelParams,
    label: StateLabel,
    grid: &GridSpec,
) -> Result<ResidualReport> {
    if !(grid.step > 0.0 && grid.step.is_finite())
        || !grid.x_min.is_finite()
        || !grid.x_max.is_finite()
        || grid.x_min >= grid.x_max
    {
        return Err(PtError::InvalidGrid {
            reason: format!(
                "need x_min < x_max and step > 0, got [{}, {}] step {}",
                grid.x_min, grid.x_max, grid.step
            ),
        });
    }
    let exclusion = params.origin_exclusion();
    let on_positive = grid.x_min >= exclusion;
    let on_negative = grid.x_max <= -exclusion;
    if !on_positive && !on_negative {
        return Err(PtError::GridCrossesOrigin {
            x_min: grid.x_min,
            x_max: grid.x_max,
            exclusion,
        });
    }

    let evaluator = StateEvaluator::new(params, label)?;
    let e = energy(params, label)?;
    let coarse = residual_pass(params, &evaluator, e, grid, grid.step);
    let fine = residual_pass(params, &evaluator, e, grid, 0.5 * grid.step);
    Ok(ResidualReport {
        grid_step: grid.step,
        residual_norm: coarse,
        convergence_order: (coarse / fine).log2(),
    })
}

fn residual_pass(
    params: &ModelParams,
    evaluator: &StateEvaluator,
    e: f64,
    grid: &GridSpec,
    h: f64,
) -> f64 {
    let count = ((grid.x_max - grid.x_min) / h).floor() as usize + 1;
    let xs: Vec<f64> = (0..count).map(|i| grid.x_min + i as f64 * h).collect();
    let psi: Vec<Complex64> = xs.iter().map(|&x| evaluator.eval(x)).collect();
    let max_psi = psi.iter().map(|p| p.norm()).fold(0.0, f64::max);
    let mut max_res = 0.0_f64;
    for i in 1..count - 1 {
        let second = (psi[i + 1] - 2.0 * psi[i] + psi[i - 1]) / (h * h);
        let res = second + (e - potential(params, xs[i])) * psi[i];
        max_res = max_res.max(res.norm());
    }
    max_res / max_psi
}

/// Numerical controls for the shooting eigensolver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingConfig {
    /// Inner start of the outward integration.
    pub t_start: f64,
    /// Match point where the log-derivative is compared to -γ/2.
    pub t_match: f64,
    /// Default energy bracket.
    pub e_bracket: (f64, f64),
    /// Absolute tolerance on the returned energy.
    pub tolerance: f64,
}

impl ShootingConfig {
    /// Controls centered on an expected bound-state energy e < 0:
    /// t_start = 1e-6/γ, t_match = 25/γ, ±20% bracket, tolerance 1e-9|e|.
    pub fn for_expected_energy(e: f64) -> Self {
        debug_assert!(e < 0.0);
        let gamma = 2.0 * (-e).sqrt();
        Self {
            t_start: 1e-6 / gamma,
            t_match: 25.0 / gamma,
            e_bracket: (1.2 * e, 0.8 * e),
            tolerance: 1e-9 * e.abs(),
        }
    }
}

/// Log-derivative mismatch at `t_match` between the outward-integrated
/// solution with small-t behavior t^s (1 + βt/2s), s = 1/2 - qα, and the
/// bound-state asymptote -√(-E).
///
/// The integration runs in τ = ln t, where the half-line equation becomes
/// ξ'' - ξ' = (G + βt - Et²) ξ and the 1/t² stiffness at the origin
/// disappears; the integrator is classic fixed-step RK4.
fn shooting_miss(
    params: &ModelParams,
    q: QuasiParity,
    e: f64,
    t_start: f64,
    t_match: f64,
    steps: usize,
) -> f64 {
    let core = params.core_strength();
    let beta = params.beta();
    let s = 0.5 - q.sign() * params.alpha();

    let phi = t_start.powf(s) * (1.0 + beta * t_start / (2.0 * s));
    let dphi = s * t_start.powf(s - 1.0) + (s + 1.0) * beta * t_start.powf(s) / (2.0 * s);
    let mut y = [phi, t_start * dphi];

    let tau0 = t_start.ln();
    let h = (t_match.ln() - tau0) / steps as f64;
    let rhs = |tau: f64, y: [f64; 2]| {
        let t = tau.exp();
        [y[1], y[1] + (core + beta * t - e * t * t) * y[0]]
    };
    let mut tau = tau0;
    for _ in 0..steps {
        let k1 = rhs(tau, y);
        let k2 = rhs(
            tau + 0.5 * h,
            [y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]],
        );
        let k3 = rhs(
            tau + 0.5 * h,
            [y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]],
        );
        let k4 = rhs(tau + h, [y[0] + h * k3[0], y[1] + h * k3[1]]);
        y[0] += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
        y[1] += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
        tau += h;
    }
    y[1] / (t_match * y[0]) + (-e).sqrt()
}

const MISS_AGREEMENT: f64 = 1e-9;
const MAX_STEPS: usize = 1 << 21;

/// Double the RK4 step count until two successive runs agree to 1e-9 in
/// the miss function; returns the converged step count.
fn calibrate_steps(
    params: &ModelParams,
    q: QuasiParity,
    e: f64,
    config: &ShootingConfig,
) -> Result<usize> {
    let mut steps = 8192;
    let mut prev = shooting_miss(params, q, e, config.t_start, config.t_match, steps);
    loop {
        steps *= 2;
        let cur = shooting_miss(params, q, e, config.t_start, config.t_match, steps);
        let delta = (cur - prev).abs();
        if delta <= MISS_AGREEMENT {
            return Ok(steps);
        }
        if steps >= MAX_STEPS {
            return Err(PtError::StepRefinementExhausted { steps, delta });
        }
        prev = cur;
    }
}

/// Shooting eigensolver: locate the energy in `e_bracket` where the miss
/// function changes sign, by bisection then secant.
pub fn shooting_eigensolve(
    params: &ModelParams,
    q: QuasiParity,
    e_bracket: (f64, f64),
    config: &ShootingConfig,
) -> Result<f64> {
    let (mut lo, mut hi) = e_bracket;
    if lo > hi {
        std::mem::swap(&mut lo, &mut hi);
    }
    let steps = calibrate_steps(params, q, 0.5 * (lo + hi), config)?;
    let miss = |e: f64| shooting_miss(params, q, e, config.t_start, config.t_match, steps);

    let mut f_lo = miss(lo);
    let mut f_hi = miss(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(PtError::NoBracket { lo, hi });
    }

    // bisection narrows the bracket, then secant polishes inside it
    for _ in 0..12 {
        let mid = 0.5 * (lo + hi);
        let f_mid = miss(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    let (mut x0, mut f0, mut x1, mut f1) = (lo, f_lo, hi, f_hi);
    for _ in 0..40 {
        if (x1 - x0).abs() <= config.tolerance {
            break;
        }
        let secant = if f1 != f0 {
            x1 - f1 * (x1 - x0) / (f1 - f0)
        } else {
            0.5 * (lo + hi)
        };
        // fall back to bisection when secant leaves the bracket
        let next = if secant > lo && secant < hi {
            secant
        } else {
            0.5 * (lo + hi)
        };
        let f_next = miss(next);
        if f_next == 0.0 {
            return Ok(next);
        }
        if f_next.signum() == f_lo.signum() {
            lo = next;
            f_lo = f_next;
        } else {
            hi = next;
        }
        x0 = x1;
        f0 = f1;
        x1 = next;
        f1 = f_next;
    }
    Ok(x1)
}

/// Whether the miss function changes sign across `e_bracket` (used to
/// demonstrate the absence of an eigenvalue where no bound state exists).
pub fn miss_sign_change(
    params: &ModelParams,
    q: QuasiParity,
    e_bracket: (f64, f64),
    config: &ShootingConfig,
) -> Result<bool> {
    let steps = calibrate_steps(params, q, 0.5 * (e_bracket.0 + e_bracket.1), config)?;
    let f_lo = shooting_miss(params, q, e_bracket.0, config.t_start, config.t_match, steps);
    let f_hi = shooting_miss(params, q, e_bracket.1, config.t_start, config.t_match, steps);
    Ok(f_lo.signum() != f_hi.signum())
}

/// Blind search: scan the miss function over a log-spaced energy grid on
/// [e_min, e_max] (both negative) and resolve every sign change.  Sign
/// changes caused by poles of the log-derivative are discarded by
/// checking the residual miss at the located root.
pub fn shooting_blind_search(
    params: &ModelParams,
    q: QuasiParity,
    e_min: f64,
    e_max: f64,
    grid_points: usize,
) -> Result<Vec<f64>> {
    assert!(e_min < e_max && e_max < 0.0 && grid_points >= 2);
    let log_lo = (-e_max).ln();
    let log_hi = (-e_min).ln();
    // ascending energies (descending magnitude)
    let grid: Vec<f64> = (0..grid_points)
        .map(|i| {
            let f = i as f64 / (grid_points - 1) as f64;
            -(log_hi + f * (log_lo - log_hi)).exp()
        })
        .collect();

    let mut found = Vec::new();
    for pair in grid.windows(2) {
        let mid = 0.5 * (pair[0] + pair[1]);
        let config = ShootingConfig::for_expected_energy(mid);
        let steps = calibrate_steps(params, q, mid, &config)?;
        let f0 = shooting_miss(params, q, pair[0], config.t_start, config.t_match, steps);
        let f1 = shooting_miss(params, q, pair[1], config.t_start, config.t_match, steps);
        if f0.signum() == f1.signum() {
            continue;
        }
        let root = shooting_eigensolve(params, q, (pair[0], pair[1]), &config)?;
        let residual = shooting_miss(params, q, root, config.t_start, config.t_match, steps);
        if residual.abs() < 1e-3 {
            found.push(root);
        }
    }
    Ok(found)
}

/// Comparison of the q = -1 branch with the textbook radial Coulomb
/// spectrum, plus c-independence of the listed energies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianLimitReport {
    /// Max relative |E(q=-1,n) - E_textbook(n, l = α - 1/2)|.
    pub max_relative_discrepancy: f64,
    /// Max relative spread of each energy across contour shifts.
    pub max_c_variation: f64,
}

/// Check E(q=-1, n) = -β²/(2(n + l + 1))² with l = α - 1/2 for n ≤ n_max,
/// and that the energies do not depend on the contour shift c.
pub fn hermitian_limit_check(params: &ModelParams, n_max: u32) -> Result<HermitianLimitReport> {
    let ell = params.alpha() - 0.5;
    let beta = params.beta();
    let mut max_disc = 0.0_f64;
    let mut max_cvar = 0.0_f64;
    for n in 0..=n_max {
        let label = StateLabel::new(QuasiParity::Minus, n);
        let e_model = energy(params, label)?;
        let radial = beta / (2.0 * (n as f64 + ell + 1.0));
        let e_textbook = -(radial * radial);
        max_disc = max_disc.max((e_model - e_textbook).abs() / e_textbook.abs());

        let reference = e_model;
        for c in [0.1, 1.0, 5.0] {
            let shifted = ModelParams::new(params.alpha(), beta, c)?;
            let e_shifted = energy(&shifted, label)?;
            max_cvar = max_cvar.max((e_shifted - reference).abs() / reference.abs());
        }
    }
    Ok(HermitianLimitReport {
        max_relative_discrepancy: max_disc,
        max_c_variation: max_cvar,
    })
}

/// Outcome of one point of an α sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SweepOutcome {
    Energy(f64),
    FlownAway,
    NotNormalizable,
}

/// Tabulate E (or the admissibility flag) for fixed (β, q, n) over a set
/// of α values in (0, 1).
pub fn alpha_sweep(
    beta: f64,
    q: QuasiParity,
    n: u32,
    alphas: &[f64],
) -> Result<Vec<(f64, SweepOutcome)>> {
    let label = StateLabel::new(q, n);
    alphas
        .iter()
        .map(|&alpha| {
            // the spectrum does not involve c; any valid shift will do
            let params = ModelParams::new(alpha, beta, 1.0)?;
            let outcome = match admissibility(&params, label) {
                Admissibility::Admissible => SweepOutcome::Energy(energy(&params, label)?),
                Admissibility::FlownAway => SweepOutcome::FlownAway,
                Admissibility::NotNormalizable => SweepOutcome::NotNormalizable,
            };
            Ok((alpha, outcome))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> ModelParams {
        ModelParams::new(0.25, -1.0, 1.0).unwrap()
    }

    #[test]
    fn potential_pt_check() {
        let xs = [0.3, -0.3, 1.1, -1.1, 4.7, -4.7];
        let out = check_pt_potential(&params(), &xs);
        assert!(out.max_deviation <= 1e-15);
        // real part even, imaginary part odd
        for &x in &[0.3, 1.1, 4.7] {
            let v_plus = potential(&params(), x);
            let v_minus = potential(&params(), -x);
            assert!((v_plus.re - v_minus.re).abs() <= 1e-15);
            assert!((v_plus.im + v_minus.im).abs() <= 1e-15);
        }
    }

    #[test]
    fn wavefunction_pt_check() {
        let xs = [0.3, -0.3, 1.1, -1.1, 4.7, -4.7];
        for (q, n) in [(QuasiParity::Minus, 2), (QuasiParity::Plus, 1)] {
            let out = check_pt_wavefunction(&params(), StateLabel::new(q, n), &xs).unwrap();
            assert!(out.max_deviation <= 1e-12);
            assert!(out.phase_phi.abs() <= 1e-12);
        }
    }

    #[test]
    fn residual_grid_must_not_cross_origin() {
        let grid = GridSpec {
            x_min: -1.0,
            x_max: 1.0,
            step: 1e-2,
        };
        let label = StateLabel::new(QuasiParity::Minus, 0);
        assert!(matches!(
            schrodinger_residual(&params(), label, &grid),
            Err(PtError::GridCrossesOrigin { .. })
        ));
    }

    #[test]
    fn residual_second_order() {
        let grid = GridSpec {
            x_min: 0.1,
            x_max: 15.0,
            step: 1e-3,
        };
        let label = StateLabel::new(QuasiParity::Minus, 0);
        let report = schrodinger_residual(&params(), label, &grid).unwrap();
        assert!(report.residual_norm <= 1e-5, "{report:?}");
        assert!(
            (report.convergence_order - 2.0).abs() <= 0.2,
            "{report:?}"
        );
    }

    #[test]
    fn sweep_flags() {
        let out = alpha_sweep(-1.0, QuasiParity::Plus, 0, &[0.499, 0.5, 0.6]).unwrap();
        match out[0].1 {
            SweepOutcome::Energy(e) => assert!((e + 250_000.0).abs() < 1e-4 * 250_000.0),
            ref other => panic!("expected energy, got {other:?}"),
        }
        assert_eq!(out[1].1, SweepOutcome::FlownAway);
        assert_eq!(out[2].1, SweepOutcome::NotNormalizable);
    }

    #[test]
    fn hermitian_limit_identity() {
        let report = hermitian_limit_check(&params(), 5).unwrap();
        assert_eq!(report.max_relative_discrepancy, 0.0);
        assert_eq!(report.max_c_variation, 0.0);

        let p = ModelParams::new(0.75, -2.0, 1.0).unwrap();
        let report = hermitian_limit_check(&p, 3).unwrap();
        assert_eq!(report.max_relative_discrepancy, 0.0);
    }
}
