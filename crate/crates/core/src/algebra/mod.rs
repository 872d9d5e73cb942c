//! Exact arithmetic: Laurent polynomials, truncated series and factored
//! rational functions.

pub mod format;
pub mod poly;
pub mod rational;
pub mod series;

pub use poly::{poly_add, poly_mul, Exponent, LaurentPoly};
pub use rational::{divide_exact, expand_rational, rational_add, rational_sum, BinomialFactor, RationalFn};
pub use series::{expand_factor, series_mul, Series};
