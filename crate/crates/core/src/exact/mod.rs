//! Exact arithmetic kernel.
//!
//! [`Scalar`] is an arbitrary-precision rational. [`Poly`] is a sparse
//! multivariate Laurent polynomial over named [`Var`]s, [`Expr`] keeps a
//! rational function as a scalar times a product of powers of primitive
//! polynomial factors, and [`UPoly`]/[`URat`] are the dense univariate
//! polynomials and rational functions in `h` used by the toric pipeline.

mod expr;
mod monomial;
mod poly;
mod residue;
mod scalar;
mod upoly;
mod var;

pub use expr::Expr;
pub use monomial::Monomial;
pub use poly::Poly;
pub use residue::{coefficient_of, limit_at, order_at, residue_at, series_coefficient};
pub use scalar::{binomial, binomial_i, int, rat, scalar_to_string, Scalar};
pub use upoly::{UPoly, URat};
pub use var::Var;
