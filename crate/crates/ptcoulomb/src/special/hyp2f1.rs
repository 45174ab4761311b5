use super::{is_nonpositive_integer, Jet};
use crate::error::{PtError, Result};

const MAX_TERMS: usize = 10_000;
const TERM_TOL: f64 = 1e-14;

/// Gauss hypergeometric series F(a, b; c; z) for real z with |z| < 1,
/// summed until the term drops below `1e-14` relative.  Terminating
/// (polynomial) cases stop exactly.
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if is_nonpositive_integer(c) {
        return Err(PtError::HypergeometricCPole { c });
    }
    if z.abs() >= 1.0 {
        return Err(PtError::OutsideUnitDisk { z_abs: z.abs() });
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
        if term == 0.0 || term.abs() <= TERM_TOL * sum.abs() {
            return Ok(sum);
        }
    }
    Err(PtError::SeriesDivergence { terms: MAX_TERMS })
}

/// Jet of F(a, b; c; w(h)) about h = 0 for a jet `w` with zero constant
/// term.  Since w^k starts at order h^k the composition truncates after
/// `order` series terms.
pub fn hyp2f1_jet(a: f64, b: f64, c: f64, w: &Jet) -> Result<Jet> {
    if is_nonpositive_integer(c) {
        return Err(PtError::HypergeometricCPole { c });
    }
    if w.coeff(0) != 0.0 {
        return Err(PtError::NonzeroConstantTerm { constant: w.coeff(0) });
    }
    let order = w.order();
    let mut sum = Jet::constant(1.0, order);
    let mut w_pow = Jet::constant(1.0, order);
    let mut ratio = 1.0;
    for k in 0..order {
        let kf = k as f64;
        ratio *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0));
        w_pow = w_pow.product(w)?;
        sum = sum.add(&w_pow.scale(ratio))?;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_at_zero_is_one() {
        assert_eq!(hyp2f1(0.3, -1.2, 0.7, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn terminating_case() {
        // F(-1, b; c; z) = 1 - (b/c) z
        assert!((hyp2f1(-1.0, 2.0, 4.0, 0.5).unwrap() - 0.75).abs() < 1e-15);
    }

    #[test]
    fn logarithmic_case() {
        // F(1, 1; 2; z) = -ln(1-z)/z
        let v = hyp2f1(1.0, 1.0, 2.0, 0.5).unwrap();
        assert!((v - 1.386_294_361_119_890_6).abs() < 1e-13);
    }

    #[test]
    fn c_pole_rejected() {
        assert_eq!(
            hyp2f1(1.0, 1.0, 0.0, 0.1),
            Err(PtError::HypergeometricCPole { c: 0.0 })
        );
        assert_eq!(
            hyp2f1(1.0, 1.0, -3.0, 0.1),
            Err(PtError::HypergeometricCPole { c: -3.0 })
        );
    }

    #[test]
    fn unit_disk_enforced() {
        assert!(matches!(
            hyp2f1(0.5, 0.5, 1.5, 1.0),
            Err(PtError::OutsideUnitDisk { .. })
        ));
    }

    #[test]
    fn jet_of_zero_argument() {
        let w = Jet::constant(0.0, 3);
        let f = hyp2f1_jet(0.7, -0.2, 1.9, &w).unwrap();
        assert_eq!(f.coeffs(), &[1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn jet_rejects_nonzero_constant() {
        let w = Jet::constant(0.25, 2);
        assert!(matches!(
            hyp2f1_jet(1.0, 1.0, 2.0, &w),
            Err(PtError::NonzeroConstantTerm { .. })
        ));
    }

    #[test]
    fn jet_matches_scalar_series() {
        // F(a, b; c; w(h)) with w = 4h/(1+h)^2, evaluated at small h0,
        // must agree with the scalar series at z = w(h0) up to the
        // truncation order.
        let (a, b, c) = (0.8, 1.3, 2.4);
        let order = 8;
        let w = Jet::variable(order)
            .scale(4.0)
            .product(&Jet::binomial_power(-2.0, order))
            .unwrap();
        let f = hyp2f1_jet(a, b, c, &w).unwrap();
        let h0 = 0.05_f64;
        let poly: f64 = f
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, ck)| ck * h0.powi(k as i32))
            .sum();
        let z0 = 4.0 * h0 / (1.0 + h0).powi(2);
        let exact = hyp2f1(a, b, c, z0).unwrap();
        assert!((poly - exact).abs() < 1e-10 * exact.abs());
    }
}
