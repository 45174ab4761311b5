//! Exactly solvable PT-symmetric one-dimensional Coulomb model.
//!
//! The potential V(x) = (α² - 1/4)/(x - ic)² + β/|x - ic| on the line
//! shifted below the real axis admits a double family of real bound-state
//! energies labeled by a quasi-parity q = ±1.  This crate provides the
//! analytic spectrum, the complex bound-state wavefunctions, PT pseudo-norms
//! in closed form and by quadrature, and independent numerical oracles
//! (finite-difference residuals, a shooting eigensolver, contour-deformation
//! checks) that validate every analytic expression.

pub mod error;
pub mod model;
pub mod pseudonorm;
mod quadrature;
pub mod special;
pub mod verification;

pub use error::{PtError, Result};
pub use model::{
    Admissibility, BoundState, ModelParams, QuasiParity, SpectrumEntry, StateLabel,
};
pub use pseudonorm::{NormMethod, PseudoNormResult, QuadratureMode};
