use crate::error::{PtError, Result};

/// Truncated power series in an auxiliary variable `h`: coefficients of
/// `h^0 .. h^K` for a fixed order `K`.  All arithmetic truncates at `K`.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet {
    coeffs: Vec<f64>,
}

impl Jet {
    /// Jet from explicit coefficients `c0..cK`; the order is `len - 1`.
    pub fn new(coeffs: Vec<f64>) -> Self {
        assert!(!coeffs.is_empty(), "a jet has at least the order-0 coefficient");
        Self { coeffs }
    }

    /// Constant jet `value + 0·h + ...` of the given order.
    pub fn constant(value: f64, order: usize) -> Self {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = value;
        Self { coeffs }
    }

    /// The jet of `h` itself.
    pub fn variable(order: usize) -> Self {
        let mut coeffs = vec![0.0; order + 1];
        if order >= 1 {
            coeffs[1] = 1.0;
        }
        Self { coeffs }
    }

    /// The jet of `(1 + h)^p`: coefficients are the generalized binomial
    /// numbers C(p, k) built by a running product.
    pub fn binomial_power(p: f64, order: usize) -> Self {
        let mut coeffs = vec![0.0; order + 1];
        let mut c = 1.0;
        coeffs[0] = c;
        for k in 1..=order {
            c *= (p - (k as f64 - 1.0)) / k as f64;
            coeffs[k] = c;
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `h^k`.
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs[k]
    }

    /// Cauchy product truncated at the common order.
    pub fn product(&self, other: &Jet) -> Result<Jet> {
        if self.order() != other.order() {
            return Err(PtError::JetOrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        let k = self.order();
        let mut coeffs = vec![0.0; k + 1];
        for (i, out) in coeffs.iter_mut().enumerate() {
            let mut acc = 0.0;
            for j in 0..=i {
                acc += self.coeffs[j] * other.coeffs[i - j];
            }
            *out = acc;
        }
        Ok(Jet { coeffs })
    }

    pub fn add(&self, other: &Jet) -> Result<Jet> {
        if self.order() != other.order() {
            return Err(PtError::JetOrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Jet { coeffs })
    }

    pub fn scale(&self, factor: f64) -> Jet {
        Jet {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }
}
