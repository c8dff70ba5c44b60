//! The shared coefficient ring.
//!
//! Coefficients are Laurent polynomials in the contraction parameters
//! `j1..jn` over Gaussian rationals, with truncated power-series dependence
//! on the deformation parameter `z`. All arithmetic is exact; there are no
//! floating-point numbers anywhere in this ring.
//!
//! Evaluation substitutes each `jk` by `1`, the imaginary unit, or a dual
//! (Study) unit. Dual units are taken as limits: symbolic cancellation
//! happens first (so `j1 * j1^-1` is `1` even when `j1` is dual), then
//! surviving positive dual powers vanish and surviving negative dual powers
//! are singular.

mod eval;
mod gauss;
mod jpoly;
mod series;

pub use eval::{
    epsilon_limit_poly, epsilon_limit_series, DualSemantics, Evaluated, JAssignment, JValue,
    SemanticsWarning, SingularityError,
};
pub use gauss::GaussianRational;
pub use jpoly::{JExponents, JMonomial, JPolynomial};
pub use series::{series_apply, SeriesError, TaylorFunction, ZSeries};
