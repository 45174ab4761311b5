//! Real gamma function, associated Laguerre polynomials with arbitrary real
//! upper index, truncated power series (jets), and the Gauss hypergeometric
//! series in both scalar and jet form.

mod gamma;
mod hyp2f1;
mod jet;
mod laguerre;

pub use gamma::gamma;
pub use hyp2f1::{hyp2f1, hyp2f1_jet};
pub use jet::Jet;
pub(crate) use laguerre::eval_laguerre;
pub use laguerre::{laguerre, laguerre_coefficients};

/// Exact test used for gamma poles and hypergeometric c-parameters.
pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}
