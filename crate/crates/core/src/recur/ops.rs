use crate::algebra::{rat_int, LaurentPolynomial, Monomial, Rational};
use crate::{Error, Result};

/// A linear partial recurrence operator with constant coefficients: a
/// Laurent polynomial in the elementary shifts, where the monomial
/// `A_1^{r_1} … A_k^{r_k}` moves the evaluation point by `(r_1, …, r_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftOperator {
    poly: LaurentPolynomial,
}

impl ShiftOperator {
    pub fn identity(k: usize) -> Self {
        ShiftOperator { poly: LaurentPolynomial::one(k) }
    }

    pub fn from_poly(poly: LaurentPolynomial) -> Self {
        ShiftOperator { poly }
    }

    pub fn poly(&self) -> &LaurentPolynomial {
        &self.poly
    }

    /// The shift by `-1` in coordinate `i` (0-based): `A_i^{-1}`.
    pub fn back_shift(k: usize, i: usize) -> Self {
        ShiftOperator {
            poly: LaurentPolynomial::monomial(Monomial::unit(k).with_exp(i, -1), rat_int(1)),
        }
    }

    /// `I - A_i^{-1}`.
    pub fn backward_difference(k: usize, i: usize) -> Self {
        ShiftOperator {
            poly: LaurentPolynomial::one(k).sub(Self::back_shift(k, i).poly()),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        ShiftOperator { poly: self.poly.mul(&other.poly) }
    }

    pub fn add(&self, other: &Self) -> Self {
        ShiftOperator { poly: self.poly.add(&other.poly) }
    }

    /// Substitute `A_i -> A_i^{-1}` for every `i` (exponent negation); the
    /// form the constant-term bridge produces from a Laurent polynomial.
    pub fn invert_shifts(&self) -> Self {
        let nvars = self.poly.nvars();
        let terms: Vec<(Monomial, Rational)> = self
            .poly
            .terms()
            .map(|(m, c)| (m.pow(-1), c.clone()))
            .collect();
        ShiftOperator { poly: LaurentPolynomial::from_terms(nvars, terms) }
    }

    /// Apply to a discrete function at a point:
    /// `sum over terms of coeff * F(point + shift)`. The callback returns
    /// `Err` on out-of-domain access.
    pub fn apply<F>(&self, f: F, point: &[i64]) -> Result<Rational>
    where
        F: Fn(&[i64]) -> Result<Rational>,
    {
        let mut acc = rat_int(0);
        for (m, c) in self.poly.terms() {
            let shifted: Vec<i64> =
                (0..point.len()).map(|v| point[v] + m.exp(v)).collect();
            acc += c * f(&shifted)?;
        }
        Ok(acc)
    }
}

/// The product of backward differences over the strict descents of a
/// non-increasing vector (with the convention `a_{k+1} = 0`, so the last
/// coordinate always contributes when `a_k > 0`).
pub fn p_a_operator(a: &[i64]) -> Result<ShiftOperator> {
    if !a.windows(2).all(|w| w[0] >= w[1]) {
        return Err(Error::Usage("descent operator needs a non-increasing vector".into()));
    }
    let k = a.len();
    let mut op = ShiftOperator::identity(k);
    for i in 0..k {
        let next = if i + 1 < k { a[i + 1] } else { 0 };
        if a[i] - next > 0 {
            op = op.mul(&ShiftOperator::backward_difference(k, i));
        }
    }
    Ok(op)
}
