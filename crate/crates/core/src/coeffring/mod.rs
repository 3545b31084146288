//! Exact scalar arithmetic: arbitrary-precision rationals, multivariate
//! polynomials and rational functions, plus the coefficient-expression
//! parser.
//!
//! Every coefficient in the engine is a [`RatFunc`]; there is no floating
//! point anywhere. All values are immutable after construction.

mod chart;
mod parse;
mod poly;
mod ratfunc;

pub use chart::Chart;
pub use parse::parse_coeff;
pub use poly::{Monomial, Poly};
pub use ratfunc::RatFunc;

/// Arbitrary-precision rational number, the ground field for everything.
pub type Rational = num_rational::BigRational;

