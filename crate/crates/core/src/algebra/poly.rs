use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::rational::{rat_int, Rational};
use crate::{Error, Result, Var};

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
///
/// Terms are kept in a `BTreeMap` under the graded-lexicographic order, so
/// iteration (and therefore the text format) is canonical: no zero
/// coefficient is ever stored, and two polynomials are equal iff their term
/// maps are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(rat_int(1), nvars)
    }

    pub fn constant(c: Rational, nvars: usize) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(nvars), c);
        }
        LaurentPolynomial { nvars, terms }
    }

    /// The variable `x_{v+1}`.
    pub fn var(v: Var, nvars: usize) -> Self {
        assert!(v < nvars);
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(v, nvars), rat_int(1));
        LaurentPolynomial { nvars, terms }
    }

    /// `1 - x_v`, the bar of a variable.
    pub fn bar(v: Var, nvars: usize) -> Self {
        Self::one(nvars).sub(&Self::var(v, nvars))
    }

    /// `1 - 2 x_v`.
    pub fn one_minus_twice(v: Var, nvars: usize) -> Self {
        Self::one(nvars).sub(&Self::var(v, nvars).scale(&rat_int(2)))
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = LaurentPolynomial::zero(nvars);
        for (m, c) in terms {
            p.add_term(m.padded(nvars), c);
        }
        p
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        Self::from_terms(nvars, [(m, c)])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    /// `Some(c)` iff the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(rat_int(0));
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_unit() {
                return Some(c.clone());
            }
        }
        None
    }

    /// Coefficient of `x1^0 … xk^0`.
    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Monomial::unit(self.nvars)).cloned().unwrap_or_else(|| rat_int(0))
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(&m.padded(self.nvars)).cloned().unwrap_or_else(|| rat_int(0))
    }

    /// `Some((monomial, coeff))` iff the polynomial has exactly one term.
    pub fn as_monomial(&self) -> Option<(Monomial, Rational)> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            Some((m.clone(), c.clone()))
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.exps().iter().all(|&e| e >= 0))
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let m = m.padded(self.nvars);
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn pad_to(&self, nvars: usize) -> Self {
        if nvars <= self.nvars {
            return self.clone();
        }
        LaurentPolynomial {
            nvars,
            terms: self.terms.iter().map(|(m, c)| (m.padded(nvars), c.clone())).collect(),
        }
    }

    fn unified(&self, other: &Self) -> (Self, Self) {
        let n = self.nvars.max(other.nvars);
        (self.pad_to(n), other.pad_to(n))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.unified(other);
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        a
    }

    /// In-place merge; avoids re-cloning a large accumulator.
    pub fn add_assign(&mut self, other: &Self) {
        if other.nvars > self.nvars {
            *self = self.pad_to(other.nvars);
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// `self -= q * c * m`, in place.
    fn sub_assign_scaled(&mut self, q: &Self, m: &Monomial, c: &Rational) {
        for (qm, qc) in &q.terms {
            self.add_term(qm.mul(m), -(qc * c));
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.unified(other);
        let mut out = LaurentPolynomial::zero(a.nvars);
        // iterate over the smaller operand on the outside
        let (small, big) = if a.terms.len() <= b.terms.len() { (&a, &b) } else { (&b, &a) };
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let nvars = self.nvars.max(m.nvars());
        LaurentPolynomial {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.padded(nvars).mul(m), cc * c))
                .collect(),
        }
    }

    /// Nonnegative integer power.
    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Integer power; a negative exponent is exact only for monomials.
    pub fn powi(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            return Ok(self.pow(e as u32));
        }
        match self.as_monomial() {
            Some((m, c)) => {
                let inv = Rational::one() / c;
                Ok(Self::monomial(m.pow(-1), inv).pad_to(self.nvars).pow((-e) as u32))
            }
            None => Err(Error::UnsupportedOperation(format!(
                "negative power {e} of a non-monomial"
            ))),
        }
    }

    /// Highest exponent of `v` appearing in any term; `None` for 0.
    pub fn degree_in(&self, v: Var) -> Option<i64> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    /// Lowest exponent of `v` appearing in any term; `None` for 0.
    pub fn low_degree_in(&self, v: Var) -> Option<i64> {
        self.terms.keys().map(|m| m.exp(v)).min()
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Per-variable minimum exponents (the monomial content of a Laurent
    /// polynomial); zero vector for the zero polynomial.
    pub fn min_exps(&self) -> Vec<i64> {
        let mut out = vec![0; self.nvars];
        if self.terms.is_empty() {
            return out;
        }
        for (v, slot) in out.iter_mut().enumerate() {
            *slot = self.terms.keys().map(|m| m.exp(v)).min().unwrap();
        }
        out
    }

    /// Decompose along one variable: map from exponent of `v` to the
    /// coefficient polynomial in the remaining variables.
    pub fn coeffs_in(&self, v: Var) -> BTreeMap<i64, LaurentPolynomial> {
        let mut out: BTreeMap<i64, LaurentPolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let rest = m.with_exp(v, 0);
            out.entry(e)
                .or_insert_with(|| LaurentPolynomial::zero(self.nvars))
                .add_term(rest, c.clone());
        }
        out
    }

    /// Coefficient (a polynomial in the other variables) of `v^e`.
    pub fn coeff_of_var_exp(&self, v: Var, e: i64) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.exp(v) == e {
                out.add_term(m.with_exp(v, 0), c.clone());
            }
        }
        out
    }

    /// Whether variable `v` occurs in any term.
    pub fn involves(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) != 0)
    }

    /// Rebuild from a decomposition along `v`.
    pub fn from_var_coeffs(nvars: usize, v: Var, coeffs: &BTreeMap<i64, LaurentPolynomial>) -> Self {
        let mut out = LaurentPolynomial::zero(nvars);
        for (e, p) in coeffs {
            let shift = Monomial::unit(nvars).with_exp(v, *e);
            out = out.add(&p.pad_to(nvars).mul_monomial(&shift, &rat_int(1)));
        }
        out
    }

    /// Reindex variables along an injective map: variable `v` becomes
    /// `map[v]`. The target universe is `nvars`.
    pub fn map_vars(&self, map: &[usize], nvars: usize) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps = vec![0i64; nvars];
            for v in 0..self.nvars {
                let e = m.exp(v);
                if e != 0 {
                    exps[map[v]] += e;
                }
            }
            terms.insert(Monomial::new(exps), c.clone());
        }
        LaurentPolynomial { nvars, terms }
    }

    /// Reindex variables: variable `v` becomes `pi[v]`. `pi` must be a
    /// permutation of `0..nvars`.
    pub fn permute_vars(&self, pi: &[usize]) -> Self {
        let nvars = self.nvars.max(pi.len());
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps = vec![0i64; nvars];
            for v in 0..nvars {
                let target = pi.get(v).copied().unwrap_or(v);
                exps[target] += m.exp(v);
            }
            terms.insert(Monomial::new(exps), c.clone());
        }
        LaurentPolynomial { nvars, terms }
    }

    /// Substitute `x_v -> 1 - x_v`. Negative exponents of `v` turn into
    /// denominator powers: the result is `(poly, d)` with the substituted
    /// value equal to `poly / (1 - x_v)^d`.
    pub fn flip_var(&self, v: Var) -> (Self, i64) {
        if !self.involves(v) {
            return (self.clone(), 0);
        }
        let min = self.low_degree_in(v).unwrap();
        let max = self.degree_in(v).unwrap();
        let shift = if min < 0 { -min } else { 0 };
        let bar = Self::bar(v, self.nvars);
        // cache powers of (1 - x_v)
        let mut powers: Vec<LaurentPolynomial> = vec![Self::one(self.nvars)];
        for _ in 0..(max + shift) {
            powers.push(powers.last().unwrap().mul(&bar));
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let base = m.with_exp(v, 0);
            for (bm, bc) in &powers[(e + shift) as usize].terms {
                out.add_term(base.mul(bm), c * bc);
            }
        }
        (out, shift)
    }

    /// Evaluate at a rational point. Negative exponents at a zero
    /// coordinate raise a pole error.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        let mut acc = rat_int(0);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let x = point.get(v).cloned().unwrap_or_else(|| rat_int(0));
                if x.is_zero() {
                    if e < 0 {
                        return Err(Error::Pole(format!("x{} = 0 raised to {}", v + 1, e)));
                    }
                    t = rat_int(0);
                    break;
                }
                let mut p = Rational::one();
                let base = if e > 0 { x.clone() } else { Rational::one() / x };
                for _ in 0..e.unsigned_abs() {
                    p *= &base;
                }
                t *= p;
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitute a constant for one variable, leaving the others symbolic.
    pub fn eval_var(&self, v: Var, value: &Rational) -> Result<Self> {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let factor = if e == 0 {
                rat_int(1)
            } else if value.is_zero() {
                if e < 0 {
                    return Err(Error::Pole(format!("x{} = 0 raised to {}", v + 1, e)));
                }
                rat_int(0)
            } else {
                let base = if e > 0 { value.clone() } else { Rational::one() / value };
                let mut p = Rational::one();
                for _ in 0..e.unsigned_abs() {
                    p *= &base;
                }
                p
            };
            out.add_term(m.with_exp(v, 0), c * factor);
        }
        Ok(out)
    }

    /// Leading term under graded-lex (the maximum of the term order).
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Leading coefficient under graded-lex; zero polynomial gives 0.
    pub fn leading_coefficient(&self) -> Rational {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(|| rat_int(0))
    }

    /// Gcd of all coefficient numerators over lcm of denominators, signed to
    /// match the leading coefficient. `self = content * primitive_part()`.
    pub fn content(&self) -> Rational {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.terms.is_empty() {
            return rat_int(0);
        }
        let mut num_gcd = BigInt::from(0);
        let mut den_lcm = BigInt::from(1);
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if self.leading_coefficient().is_negative() {
            content = -content;
        }
        content
    }

    pub fn primitive_part(&self) -> Self {
        if self.terms.is_empty() {
            return self.clone();
        }
        let c = self.content();
        self.scale(&(Rational::one() / c))
    }

    /// Exact division in the Laurent ring: returns `r` with `self = q * r`,
    /// or `Error::NotDivisible`.
    pub fn exact_div(&self, q: &Self) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::UnsupportedOperation("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars.max(q.nvars)));
        }
        let (p, q) = self.unified(q);
        // strip monomial content so both sides are honest polynomials
        let pm = p.min_exps();
        let qm = q.min_exps();
        let nvars = p.nvars;
        let p0 = p.mul_monomial(&Monomial::new(pm.iter().map(|e| -e).collect()), &rat_int(1));
        let q0 = q.mul_monomial(&Monomial::new(qm.iter().map(|e| -e).collect()), &rat_int(1));

        let mut rem = p0;
        let mut quot = LaurentPolynomial::zero(nvars);
        let (qlm, qlc) = {
            let (m, c) = q0.leading_term().unwrap();
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rlm, rlc) = {
                let (m, c) = rem.leading_term().unwrap();
                (m.clone(), c.clone())
            };
            if !rlm.divisible_by(&qlm) {
                return Err(Error::NotDivisible(format!("{} by {}", self, q)));
            }
            let tm = rlm.div(&qlm);
            let tc = rlc / &qlc;
            quot.add_term(tm.clone(), tc.clone());
            rem.sub_assign_scaled(&q0, &tm, &tc);
        }
        let shift: Vec<i64> = pm.iter().zip(&qm).map(|(a, b)| a - b).collect();
        Ok(quot.mul_monomial(&Monomial::new(shift), &rat_int(1)))
    }

    /// Whether `q` divides `self` exactly.
    pub fn divisible_by(&self, q: &Self) -> bool {
        self.exact_div(q).is_ok()
    }
}

fn coeff_abs_string(c: &Rational) -> String {
    let a = c.abs();
    if a.denom().is_one() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

fn monomial_string(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if e == 1 {
            parts.push(format!("x{}", v + 1));
        } else {
            parts.push(format!("x{}^{}", v + 1, e));
        }
    }
    parts.join("*")
}

/// Canonical text form: terms in ascending graded-lex order joined by
/// " + " / " - ".
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let cs = coeff_abs_string(c);
            let ms = monomial_string(m);
            if ms.is_empty() {
                write!(f, "{cs}")?;
            } else if cs == "1" {
                write!(f, "{ms}")?;
            } else {
                write!(f, "{cs}*{ms}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn x(v: usize, n: usize) -> LaurentPolynomial {
        LaurentPolynomial::var(v, n)
    }

    #[test]
    fn additive_inverse() {
        let p = x(0, 1);
        assert!(p.add(&p.neg()).is_zero());
    }

    #[test]
    fn hand_expansion() {
        // (x2 - x1)(x2 + x1 - 1) = x2^2 - x1^2 - x2 + x1
        let a = x(1, 2).sub(&x(0, 2));
        let b = x(1, 2).add(&x(0, 2)).sub(&LaurentPolynomial::one(2));
        let prod = a.mul(&b);
        let expect = x(1, 2)
            .pow(2)
            .sub(&x(0, 2).pow(2))
            .sub(&x(1, 2))
            .add(&x(0, 2));
        assert_eq!(prod, expect);
    }

    #[test]
    fn binomial_square() {
        // (1 - 2 x1)^2 = 1 - 4 x1 + 4 x1^2
        let p = LaurentPolynomial::one_minus_twice(0, 1).pow(2);
        let expect = LaurentPolynomial::one(1)
            .sub(&x(0, 1).scale(&rat_int(4)))
            .add(&x(0, 1).pow(2).scale(&rat_int(4)));
        assert_eq!(p, expect);
    }

    #[test]
    fn exact_div_difference_of_squares() {
        let p = x(0, 2).pow(2).sub(&x(1, 2).pow(2));
        let q = x(0, 2).sub(&x(1, 2));
        let r = p.exact_div(&q).unwrap();
        assert_eq!(q.mul(&r), p);
    }

    #[test]
    fn exact_div_laurent_quotient() {
        // (x2 - x1) / (x1 x2) = x1^-1 - x2^-1
        let p = x(1, 2).sub(&x(0, 2));
        let q = x(0, 2).mul(&x(1, 2));
        let r = p.exact_div(&q).unwrap();
        let expect = LaurentPolynomial::monomial(Monomial::new(vec![-1, 0]), rat_int(1))
            .sub(&LaurentPolynomial::monomial(Monomial::new(vec![0, -1]), rat_int(1)));
        assert_eq!(r, expect);
        assert_eq!(q.mul(&r), p);
    }

    #[test]
    fn exact_div_failure() {
        let p = x(0, 2).add(&x(1, 2));
        let q = x(0, 2).sub(&x(1, 2));
        assert!(matches!(p.exact_div(&q), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn display_canonical() {
        let p = LaurentPolynomial::one_minus_twice(0, 1);
        assert_eq!(p.to_string(), "1 - 2*x1");
        let q = LaurentPolynomial::monomial(Monomial::new(vec![-1, 0]), rat_int(1))
            .add(&x(1, 2));
        assert_eq!(q.to_string(), "x1^-1 + x2");
        let r = LaurentPolynomial::constant(rat(1, 2), 1).mul(&x(0, 1));
        assert_eq!(r.to_string(), "1/2*x1");
    }

    #[test]
    fn flip_var_involution() {
        let p = x(0, 2).pow(3).add(&x(1, 2)).sub(&LaurentPolynomial::one(2));
        let (q, d) = p.flip_var(0);
        assert_eq!(d, 0);
        let (back, d2) = q.flip_var(0);
        assert_eq!(d2, 0);
        assert_eq!(back, p);
    }

    #[test]
    fn flip_var_laurent() {
        // x1^-1 flips to 1/(1-x1): poly 1 with denominator power 1
        let p = LaurentPolynomial::monomial(Monomial::new(vec![-1]), rat_int(1));
        let (q, d) = p.flip_var(0);
        assert_eq!(d, 1);
        assert!(q.is_one());
    }
}
