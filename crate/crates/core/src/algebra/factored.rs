use std::collections::BTreeMap;

use num_traits::One;

use super::monomial::Monomial;
use super::poly::LaurentPolynomial;
use super::ratfun::RationalFunction;
use super::rational::{rat_int, Rational};
use crate::Var;

/// A rational function kept as a Laurent-polynomial numerator over a
/// product of polynomial factors.
///
/// The reduction paths of the residue engine only ever need to cancel
/// numerators against *known* denominator factors, so keeping the
/// denominator factored sidesteps general multivariate gcd on the hot path.
/// Monomial and scalar content of every factor is folded into the
/// numerator, which is why `num` is Laurent while each factor is a
/// primitive non-monomial polynomial with positive leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factored {
    num: LaurentPolynomial,
    den: BTreeMap<LaurentPolynomial, u32>,
}

impl Factored {
    pub fn zero(nvars: usize) -> Self {
        Factored { num: LaurentPolynomial::zero(nvars), den: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Factored { num: LaurentPolynomial::one(nvars), den: BTreeMap::new() }
    }

    pub fn from_poly(p: LaurentPolynomial) -> Self {
        Factored { num: p, den: BTreeMap::new() }
    }

    pub fn from_ratfun(f: &RationalFunction) -> Self {
        let mut out = Factored::from_poly(f.numerator().clone());
        out.divide_by_factor(f.denominator(), 1);
        out
    }

    /// Build `num / prod factor^e` directly.
    pub fn from_parts(num: LaurentPolynomial, factors: &[(LaurentPolynomial, u32)]) -> Self {
        let mut out = Factored::from_poly(num);
        for (f, e) in factors {
            out.divide_by_factor(f, *e);
        }
        out
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.num
    }

    pub fn factors(&self) -> impl Iterator<Item = (&LaurentPolynomial, u32)> {
        self.den.iter().map(|(f, e)| (f, *e))
    }

    pub(crate) fn into_parts(self) -> (LaurentPolynomial, BTreeMap<LaurentPolynomial, u32>) {
        (self.num, self.den)
    }

    pub(crate) fn from_normalized_parts(
        num: LaurentPolynomial,
        den: BTreeMap<LaurentPolynomial, u32>,
    ) -> Self {
        Factored { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn nvars(&self) -> usize {
        self.den
            .keys()
            .map(|f| f.nvars())
            .chain(std::iter::once(self.num.nvars()))
            .max()
            .unwrap_or(0)
    }

    pub fn involves(&self, v: Var) -> bool {
        self.num.involves(v) || self.den.keys().any(|f| f.involves(v))
    }

    /// Divide by `factor^e`, normalizing the factor first: monomial and
    /// scalar content move to the numerator, so the stored factor is a
    /// primitive non-monomial polynomial. Panics on a zero factor.
    pub fn divide_by_factor(&mut self, factor: &LaurentPolynomial, e: u32) {
        assert!(!factor.is_zero(), "division by zero");
        if e == 0 || self.num.is_zero() {
            return;
        }
        let min = factor.min_exps();
        let shifted =
            factor.mul_monomial(&Monomial::new(min.iter().map(|x| -x).collect()), &rat_int(1));
        let content = shifted.content();
        let core = shifted.scale(&(Rational::one() / &content));
        // pull monomial^e and content^e out of the numerator
        let mut inv_content = Rational::one();
        for _ in 0..e {
            inv_content /= &content;
        }
        let back_shift = Monomial::new(min.iter().map(|x| -x * e as i64).collect());
        self.num = self.num.mul_monomial(&back_shift, &inv_content);
        if !core.is_one() {
            *self.den.entry(core).or_insert(0) += e;
        }
    }

    pub fn mul_poly(&self, p: &LaurentPolynomial) -> Self {
        Factored { num: self.num.mul(p), den: self.den.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Factored { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn neg(&self) -> Self {
        Factored { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut den = self.den.clone();
        for (f, e) in &other.den {
            *den.entry(f.clone()).or_insert(0) += e;
        }
        let out = Factored { num: self.num.mul(&other.num), den };
        if out.num.is_zero() {
            Factored::zero(out.nvars())
        } else {
            out
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // least common denominator, factor by factor
        let mut den: BTreeMap<LaurentPolynomial, u32> = self.den.clone();
        for (f, e) in &other.den {
            let slot = den.entry(f.clone()).or_insert(0);
            *slot = (*slot).max(*e);
        }
        let mut a = self.num.clone();
        let mut b = other.num.clone();
        for (f, e) in &den {
            let ea = self.den.get(f).copied().unwrap_or(0);
            let eb = other.den.get(f).copied().unwrap_or(0);
            if *e > ea {
                a = a.mul(&f.pow(*e - ea));
            }
            if *e > eb {
                b = b.mul(&f.pow(*e - eb));
            }
        }
        let num = a.add(&b);
        if num.is_zero() {
            return Factored::zero(self.nvars().max(other.nvars()));
        }
        Factored { num, den }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Cancel denominator factors that divide the numerator exactly.
    pub fn normalized(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let factors: Vec<LaurentPolynomial> = self.den.keys().cloned().collect();
        for f in factors {
            while self.den.get(&f).copied().unwrap_or(0) > 0 {
                match self.num.exact_div(&f) {
                    Ok(q) => {
                        self.num = q;
                        let e = self.den.get_mut(&f).unwrap();
                        *e -= 1;
                        if *e == 0 {
                            self.den.remove(&f);
                        }
                    }
                    Err(_) => break,
                }
            }
        }
        self
    }

    /// Expand the denominator product.
    pub fn to_ratfun(&self) -> RationalFunction {
        let nvars = self.nvars();
        let mut den = LaurentPolynomial::one(nvars);
        for (f, e) in &self.den {
            den = den.mul(&f.pow(*e));
        }
        RationalFunction::new(self.num.clone(), den).expect("denominator nonzero")
    }

    /// The value as a scalar, when no variables remain.
    pub fn as_rational(&self) -> Option<Rational> {
        if !self.den.is_empty() {
            return None;
        }
        self.num.as_constant()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(v: usize, n: usize) -> LaurentPolynomial {
        LaurentPolynomial::var(v, n)
    }

    #[test]
    fn factor_normalization_moves_content() {
        // dividing by 2*x1^2*(1 - x2) stores only (x2 - 1)-type primitive core
        let f = x(0, 2).pow(2).scale(&rat_int(2)).mul(&LaurentPolynomial::bar(1, 2));
        let mut v = Factored::from_poly(LaurentPolynomial::one(2));
        v.divide_by_factor(&f, 1);
        assert_eq!(v.factors().count(), 1);
        let rf = v.to_ratfun();
        let direct = RationalFunction::new(LaurentPolynomial::one(2), f).unwrap();
        assert_eq!(rf, direct);
    }

    #[test]
    fn add_aligns_shared_factors() {
        // 1/(1-x1) + x1/(1-x1)^2 = (1-x1+x1)/(1-x1)^2 = 1/(1-x1)^2
        let bar = LaurentPolynomial::bar(0, 1);
        let a = Factored::from_parts(LaurentPolynomial::one(1), &[(bar.clone(), 1)]);
        let b = Factored::from_parts(x(0, 1), &[(bar.clone(), 2)]);
        let sum = a.add(&b);
        let expect = Factored::from_parts(LaurentPolynomial::one(1), &[(bar, 2)]);
        assert_eq!(sum.to_ratfun(), expect.to_ratfun());
    }

    #[test]
    fn normalized_cancels() {
        let bar = LaurentPolynomial::bar(0, 1);
        let v = Factored::from_parts(bar.pow(3), &[(bar.clone(), 2)]).normalized();
        assert_eq!(v.numerator(), &bar);
        assert_eq!(v.factors().count(), 0);
    }
}
