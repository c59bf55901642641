//! Constant-term and residue extraction.
//!
//! Two paths: a fast truncated-multivariate-series path for functions that
//! have a genuine Laurent expansion (`ct_fast`), and a fully general
//! recursive univariate path (`ct_univariate` / `res_univariate` and their
//! iterated forms) whose coefficients are rational functions of the
//! remaining variables. The iterated forms peel variables from the *end*
//! of the order list: `ct_iterated(f, [x1, x2])` evaluates the constant
//! term in `x2` first.

mod admissible;
mod iterated;
mod pole;
mod univariate;

pub use admissible::{admissible_decompose, ct_fast, AdmissibleDecomposition, TruncatedSeries};
pub use iterated::{ct_iterated, ct_iterated_factored, res_iterated, res_iterated_factored};
pub use pole::{pole_coefficient, pole_coefficient_linear};
pub use univariate::{coeff_in_var, ct_univariate, res_univariate};
