//! PT pseudo-inner products and pseudo-norms.
//!
//! The pseudo-norm I of a bound state is computed three ways: a closed
//! form built from jets and the Gauss hypergeometric composition, a
//! half-line quadrature after contour deformation, and a real-line
//! quadrature of the complex piecewise integrand.  All three must agree;
//! the quadrature modes double as independent oracles for the closed form.

use num_complex::Complex64;

use crate::error::{PtError, Result};
use crate::model::{gamma_scale, ModelParams, StateEvaluator, StateLabel};
use crate::quadrature;
use crate::special::{eval_laguerre, gamma, hyp2f1_jet, laguerre_coefficients, Jet};

/// Tolerance below which the closed form's hypergeometric c-parameter
/// 1 - 2qα counts as vanishing (only reachable at α = 1/2, q = +1).
const C_PARAMETER_TOL: f64 = 1e-12;

/// Relative tolerance requested from the adaptive quadrature.
const QUAD_REL_TOL: f64 = 1e-10;

/// How the pseudo-norm was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormMethod {
    ClosedForm,
    HalfLineQuadrature,
    RealLineQuadrature,
}

/// Quadrature route for [`pseudo_norm_quadrature`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadratureMode {
    /// 2 ∫₀^∞ of the deformed (real, positive) integrand.
    HalfLine,
    /// ∫ ψ(x)² dx over the truncated real axis, complex integrand.
    RealLine,
}

/// Pseudo-norm value I with its sign σ and method diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PseudoNormResult {
    pub value: f64,
    pub sigma: i32,
    pub method: NormMethod,
    /// Magnitude of the discarded imaginary part (real-line mode); itself
    /// a PT-symmetry diagnostic.
    pub imag_residual: f64,
    /// Analytic bound on the truncated tail (quadrature modes).
    pub tail_bound: f64,
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

fn closed_form_guard(params: &ModelParams, label: StateLabel) -> Result<()> {
    let c_parameter = 1.0 - 2.0 * label.q.sign() * params.alpha();
    if c_parameter.abs() <= C_PARAMETER_TOL {
        return Err(PtError::ClosedFormOutOfDomain);
    }
    Ok(())
}

/// Pseudo-norm via the general jet route: I is read off the n-th
/// coefficient of
///   g(h) = (1-h) (1+h)^{2qα-2} F(1-qα, 3/2-qα; 1-2qα; 4h/(1+h)²).
pub fn pseudo_norm_jet(params: &ModelParams, label: StateLabel) -> Result<PseudoNormResult> {
    let scale = gamma_scale(params, label)?;
    closed_form_guard(params, label)?;
    let m = -2.0 * label.q.sign() * params.alpha();
    let n = label.n;

    // order n+1; only the n-th coefficient is consumed
    let order = n as usize + 1;
    let w = Jet::variable(order)
        .scale(4.0)
        .product(&Jet::binomial_power(-2.0, order))?;
    let series = hyp2f1_jet(1.0 + 0.5 * m, 1.5 + 0.5 * m, 1.0 + m, &w)?;
    let mut linear = vec![0.0; order + 1];
    linear[0] = 1.0;
    linear[1] = -1.0;
    let g = Jet::new(linear)
        .product(&Jet::binomial_power(-(m + 2.0), order))?
        .product(&series)?;

    let value = 2.0 * (1.0 + m) / scale * gamma(1.0 + m + n as f64)? * g.coeff(n as usize)
        / factorial(n);
    Ok(PseudoNormResult {
        value,
        sigma: if value >= 0.0 { 1 } else { -1 },
        method: NormMethod::ClosedForm,
        imag_residual: 0.0,
        tail_bound: 0.0,
    })
}

/// Closed-form pseudo-norm: the ground and first excited states use the
/// direct expressions I₀ = 2Γ(2-2qα)/γ and I₁ = 2(3-2qα)Γ(2-2qα)/γ; higher
/// states go through the jet route.
pub fn pseudo_norm_closed(params: &ModelParams, label: StateLabel) -> Result<PseudoNormResult> {
    let scale = gamma_scale(params, label)?;
    closed_form_guard(params, label)?;
    let m = -2.0 * label.q.sign() * params.alpha();
    let value = match label.n {
        0 => 2.0 * gamma(m + 2.0)? / scale,
        1 => 2.0 * (m + 3.0) * gamma(m + 2.0)? / scale,
        _ => return pseudo_norm_jet(params, label),
    };
    Ok(PseudoNormResult {
        value,
        sigma: if value >= 0.0 { 1 } else { -1 },
        method: NormMethod::ClosedForm,
        imag_residual: 0.0,
        tail_bound: 0.0,
    })
}

/// Truncation point for the exponential tail: t = (40 + 10n)/γ.
fn truncation(n: u32, scale: f64) -> f64 {
    (40.0 + 10.0 * n as f64) / scale
}

/// e^{-S} S^k / (1 - k/S) bound on ∫_S^∞ e^{-s} s^k ds, valid for S > k.
fn tail_integral_bound(s_cut: f64, k: f64) -> f64 {
    (-s_cut).exp() * s_cut.powf(k) / (1.0 - k / s_cut).max(0.5)
}

/// Pseudo-norm by adaptive quadrature.
///
/// Half-line mode computes 2 ∫₀^∞ e^{-γt} (γt)^{1-2qα} [L_n^{-2qα}(γt)]² dt,
/// splitting at t = 1/γ and substituting t = s^{1/(2-2qα)} on the inner
/// piece so the algebraic endpoint singularity disappears.  Real-line mode
/// integrates ψ(x)² with the complex piecewise integrand over the two
/// half-lines separately and keeps the leftover imaginary magnitude as a
/// diagnostic.
pub fn pseudo_norm_quadrature(
    params: &ModelParams,
    label: StateLabel,
    mode: QuadratureMode,
) -> Result<PseudoNormResult> {
    let scale = gamma_scale(params, label)?;
    let m = -2.0 * label.q.sign() * params.alpha();
    let n = label.n;
    let lag = laguerre_coefficients(n, m);
    let coeff_sum: f64 = lag.iter().map(|c| c.abs()).sum();
    let t_cut = truncation(n, scale);
    let s_cut = scale * t_cut;
    let poly_degree = 2.0 * n as f64 + 1.0 + m;

    match mode {
        QuadratureMode::HalfLine => {
            let lag_sq = |gt: f64| {
                let l = eval_laguerre(&lag, Complex64::new(gt, 0.0)).re;
                l * l
            };
            // Inner piece: t = s^p with p = k/(2-2qα), k the smallest integer
            // making p >= 1.  The algebraic t^{1-2qα} weight turns into the
            // polynomial s^{k-1} and the endpoint singularity is gone.
            let k_weight = (m + 2.0).ceil().max(1.0);
            let p = k_weight / (m + 2.0);
            let s_edge = scale.powf(-1.0 / p);
            let inner = quadrature::integrate(
                |s: f64| {
                    let gt = scale * s.powf(p);
                    s.powi(k_weight as i32 - 1) * (-gt).exp() * lag_sq(gt)
                },
                0.0,
                s_edge,
                QUAD_REL_TOL,
            )?;
            let inner_value = scale.powf(1.0 + m) * p * inner.value;

            let outer = quadrature::integrate(
                |t: f64| {
                    let gt = scale * t;
                    (-gt).exp() * gt.powf(1.0 + m) * lag_sq(gt)
                },
                1.0 / scale,
                t_cut,
                QUAD_REL_TOL,
            )?;

            let value = 2.0 * (inner_value + outer.value);
            let tail_bound =
                2.0 / scale * coeff_sum * coeff_sum * tail_integral_bound(s_cut, poly_degree);
            Ok(PseudoNormResult {
                value,
                sigma: if value >= 0.0 { 1 } else { -1 },
                method: NormMethod::HalfLineQuadrature,
                imag_residual: 0.0,
                tail_bound,
            })
        }
        QuadratureMode::RealLine => {
            let evaluator = StateEvaluator::new(params, label)?;
            let integrand = |x: f64| {
                let psi = evaluator.eval(x);
                psi * psi
            };
            let right = quadrature::integrate(&integrand, 0.0, t_cut, QUAD_REL_TOL)?;
            let left = quadrature::integrate(&integrand, -t_cut, 0.0, QUAD_REL_TOL)?;
            let total = left.value + right.value;
            let widen = (1.0 + (params.c() / t_cut).powi(2)).powf(poly_degree / 2.0);
            let tail_bound = 2.0 / scale
                * coeff_sum
                * coeff_sum
                * widen
                * tail_integral_bound(s_cut, poly_degree);
            Ok(PseudoNormResult {
                value: total.re,
                sigma: if total.re >= 0.0 { 1 } else { -1 },
                method: NormMethod::RealLineQuadrature,
                imag_residual: total.im.abs(),
                tail_bound,
            })
        }
    }
}

/// Normalization magnitude |N| = I^{-1/2}, using the closed form where it
/// exists and half-line quadrature at the α = 1/2, q = +1 degeneracy.
pub fn normalization_coefficient(params: &ModelParams, label: StateLabel) -> Result<f64> {
    let norm = match pseudo_norm_closed(params, label) {
        Ok(result) => result,
        Err(PtError::ClosedFormOutOfDomain) => {
            pseudo_norm_quadrature(params, label, QuadratureMode::HalfLine)?
        }
        Err(other) => return Err(other),
    };
    Ok(1.0 / norm.value.sqrt())
}

/// PT pseudo-inner product ∫ ψ_a*(-x) ψ_b(x) dx of two normalized states,
/// by real-line quadrature over the two half-lines.
pub fn pseudo_inner_product(
    params: &ModelParams,
    a: StateLabel,
    b: StateLabel,
) -> Result<Complex64> {
    let eval_a = StateEvaluator::new(params, a)?;
    let eval_b = StateEvaluator::new(params, b)?;
    let norm_a = normalization_coefficient(params, a)?;
    let norm_b = normalization_coefficient(params, b)?;
    let t_cut = truncation(a.n, eval_a.gamma()).max(truncation(b.n, eval_b.gamma()));
    let integrand = |x: f64| eval_a.eval(-x).conj() * eval_b.eval(x);
    let right = quadrature::integrate(&integrand, 0.0, t_cut, QUAD_REL_TOL)?;
    let left = quadrature::integrate(&integrand, -t_cut, 0.0, QUAD_REL_TOL)?;
    Ok((left.value + right.value) * (norm_a * norm_b))
}
