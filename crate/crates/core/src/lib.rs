//! Exact enumeration and symbolic verification of the counting identities
//! relating alternating sign matrices, Gog (monotone) trapezoids, and Magog
//! trapezoids.
//!
//! The crate is organized in layers:
//!
//! * [`algebra`] — exact rationals, sparse multivariate Laurent polynomials,
//!   rational functions, and the canonical text format.
//! * [`engine`] — constant-term and iterated-residue extraction, both a fast
//!   truncated-series path and a fully general recursive univariate path.
//! * [`group`] — the symmetric group and the group of signed permutations
//!   acting on polynomials and rational functions.
//! * [`kernels`] — constructors for the named kernel polynomials and the
//!   constant-term / residue integrands.
//! * [`comb`] — brute-force generation and counting of ASMs, Gog and Magog
//!   arrays, border counts, and the lattice region predicates.
//! * [`recur`] — shift operators, partial-difference recurrences, and
//!   uniqueness-based tabulation.
//! * [`checks`] — the named verification checks and the runner.

pub mod algebra;
pub mod checks;
pub mod comb;
pub mod engine;
mod error;
pub mod group;
pub mod kernels;
pub mod recur;

pub use algebra::{LaurentPolynomial, Monomial, Rational, RationalFunction};
pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Variables are identified by 0-based index; `x1` in the text format is
/// variable 0.
pub type Var = usize;
