//! Exact arbitrary-precision rational arithmetic and sparse multivariate
//! Laurent-polynomial / rational-function arithmetic with a canonical text
//! format.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here may be shared freely across threads.

mod factored;
mod gcd;
mod monomial;
mod parse;
mod poly;
mod ratfun;
mod rational;

pub use factored::Factored;
pub use gcd::poly_gcd;
pub use monomial::Monomial;
pub use parse::{parse_polynomial, parse_rational_function};
pub use poly::LaurentPolynomial;
pub use ratfun::RationalFunction;
pub use rational::{rat, rat_int, Rational};
