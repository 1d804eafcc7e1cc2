//! Exact Frobenius–Euler numbers and polynomials, the coefficient triangle
//! that links powers of `1/(e^t - u)` to its derivatives, and a harness that
//! checks each sums-of-products identity by two independent routes.

pub mod cli;
pub mod egf_series;
pub mod error;
pub mod exact_arith;
pub mod frobenius;
pub mod stirling;
pub mod verifier;

pub use egf_series::{EgfSeries, Polynomial};
pub use error::{Error, Result};
pub use exact_arith::{rat, Rational};
pub use frobenius::Variant;
