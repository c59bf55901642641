use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed};

use super::factored::Factored;
use super::gcd::poly_gcd;
use super::monomial::Monomial;
use super::poly::LaurentPolynomial;
use super::rational::{rat_int, Rational};
use crate::{Error, Result, Var};

/// Quotient of two Laurent polynomials.
///
/// Construction only normalizes the sign of the denominator's leading
/// coefficient; full reduction is an explicit operation (`gcd_reduce`), and
/// equality is decided by cross-multiplication rather than representation.
#[derive(Debug, Clone)]
pub struct RationalFunction {
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

impl RationalFunction {
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::UnsupportedOperation("zero denominator".into()));
        }
        let n = num.nvars().max(den.nvars());
        let mut num = num.pad_to(n);
        let mut den = den.pad_to(n);
        if den.leading_coefficient().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: LaurentPolynomial) -> Self {
        let n = p.nvars();
        RationalFunction { num: p, den: LaurentPolynomial::one(n) }
    }

    pub fn constant(c: Rational, nvars: usize) -> Self {
        Self::from_poly(LaurentPolynomial::constant(c, nvars))
    }

    pub fn var(v: Var, nvars: usize) -> Self {
        Self::from_poly(LaurentPolynomial::var(v, nvars))
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPolynomial {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars().max(self.den.nvars())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn involves(&self, v: Var) -> bool {
        self.num.involves(v) || self.den.involves(v)
    }

    /// `Some(c)` iff the value is the constant `c` (checked after reduction).
    pub fn as_constant(&self) -> Option<Rational> {
        if self.num.is_zero() {
            return Some(rat_int(0));
        }
        if let (Some(n), Some(d)) = (self.num.as_constant(), self.den.as_constant()) {
            return Some(n / d);
        }
        let red = self.gcd_reduce();
        match (red.num.as_constant(), red.den.as_constant()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        RationalFunction::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .expect("nonzero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalFunction::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominators")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::UnsupportedOperation("division by zero".into()));
        }
        RationalFunction::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::UnsupportedOperation("inverse of zero".into()));
        }
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn powi(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.powi(-e);
        }
        Ok(RationalFunction::new(self.num.pow(e as u32), self.den.pow(e as u32))
            .expect("nonzero denominator"))
    }

    /// Value-preserving reduction: numerator and denominator become coprime
    /// as polynomials after clearing monomial content, the denominator a
    /// primitive integer polynomial with positive leading coefficient.
    pub fn gcd_reduce(&self) -> Self {
        if self.num.is_zero() {
            let n = self.nvars();
            return RationalFunction {
                num: LaurentPolynomial::zero(n),
                den: LaurentPolynomial::one(n),
            };
        }
        // split off monomial content; the Laurent shift lives on the numerator
        let nm = self.num.min_exps();
        let dm = self.den.min_exps();
        let n0 = self
            .num
            .mul_monomial(&Monomial::new(nm.iter().map(|e| -e).collect()), &rat_int(1));
        let d0 = self
            .den
            .mul_monomial(&Monomial::new(dm.iter().map(|e| -e).collect()), &rat_int(1));
        let cn = n0.content();
        let cd = d0.content();
        let n1 = n0.scale(&(Rational::one() / &cn));
        let d1 = d0.scale(&(Rational::one() / &cd));
        let g = poly_gcd(&n1, &d1);
        let n2 = n1.exact_div(&g).expect("gcd divides");
        let d2 = d1.exact_div(&g).expect("gcd divides");
        let shift: Vec<i64> = nm.iter().zip(&dm).map(|(a, b)| a - b).collect();
        let num = n2.mul_monomial(&Monomial::new(shift), &(cn / cd));
        RationalFunction::new(num, d2).expect("nonzero denominator")
    }

    /// Simultaneous substitution of rational functions for variables.
    /// Unbound variables stay themselves. Fails with a pole error when the
    /// substituted denominator is identically zero.
    pub fn substitute(&self, bindings: &BTreeMap<Var, RationalFunction>) -> Result<Self> {
        let num = subst_poly(&self.num, bindings)?;
        let den = subst_poly(&self.den, bindings)?;
        if den.is_zero() {
            return Err(Error::Pole("denominator vanishes identically after substitution".into()));
        }
        let num_rf = num.to_ratfun();
        let den_rf = den.to_ratfun();
        num_rf.div(&den_rf)
    }

    /// Substitute a single variable.
    pub fn substitute_var(&self, v: Var, value: &RationalFunction) -> Result<Self> {
        let mut b = BTreeMap::new();
        b.insert(v, value.clone());
        self.substitute(&b)
    }
}

/// Term-by-term image of a Laurent polynomial under a simultaneous
/// substitution. Terms are grouped by their (normalized, factored)
/// denominator with in-place numerator merges, so the accumulation stays
/// linear even for very large polynomials.
fn subst_poly(p: &LaurentPolynomial, bindings: &BTreeMap<Var, RationalFunction>) -> Result<Factored> {
    let nvars = p
        .nvars()
        .max(bindings.values().map(|b| b.nvars()).max().unwrap_or(0));
    // power cache per variable: exponent -> (num^e, den^e)
    let mut cache: BTreeMap<(Var, i64), (LaurentPolynomial, LaurentPolynomial)> = BTreeMap::new();
    let mut groups: BTreeMap<BTreeMap<LaurentPolynomial, u32>, LaurentPolynomial> =
        BTreeMap::new();
    for (m, c) in p.terms() {
        let mut t = Factored::from_poly(LaurentPolynomial::constant(c.clone(), nvars));
        for (v, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            match bindings.get(&v) {
                None => {
                    t = t.mul_poly(&LaurentPolynomial::monomial(
                        Monomial::unit(nvars).with_exp(v, e),
                        rat_int(1),
                    ));
                }
                Some(b) => {
                    if e < 0 && b.is_zero() {
                        return Err(Error::Pole(format!("x{} -> 0 raised to {}", v + 1, e)));
                    }
                    let key = (v, e);
                    cache.entry(key).or_insert_with(|| {
                        let (bn, bd) =
                            if e >= 0 { (b.numerator(), b.denominator()) } else { (b.denominator(), b.numerator()) };
                        let k = e.unsigned_abs() as u32;
                        (bn.pow(k), bd.pow(k))
                    });
                    let (pn, pd) = cache.get(&key).unwrap();
                    t = t.mul_poly(pn);
                    t.divide_by_factor(pd, 1);
                }
            }
        }
        let (num, den) = t.into_parts();
        match groups.entry(den) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(num);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                slot.get_mut().add_assign(&num);
            }
        }
    }
    let mut acc = Factored::zero(nvars);
    for (den, num) in groups {
        acc = acc.add(&Factored::from_normalized_parts(num, den));
    }
    Ok(acc.normalized())
}

/// Cross-multiplication equality; representation-independent.
impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}
impl Eq for RationalFunction {}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(v: usize, n: usize) -> LaurentPolynomial {
        LaurentPolynomial::var(v, n)
    }

    #[test]
    fn bar_substitution_is_involution() {
        // 1 - 2 x1 under x1 -> 1 - x1 gives 2 x1 - 1
        let f = RationalFunction::from_poly(LaurentPolynomial::one_minus_twice(0, 1));
        let bar = RationalFunction::from_poly(LaurentPolynomial::bar(0, 1));
        let g = f.substitute_var(0, &bar).unwrap();
        let expect = RationalFunction::from_poly(
            x(0, 1).scale(&rat_int(2)).sub(&LaurentPolynomial::one(1)),
        );
        assert_eq!(g, expect);
        assert_eq!(g.substitute_var(0, &bar).unwrap(), f);
    }

    #[test]
    fn simultaneous_rotation() {
        // x1 + 2 x2 + 3 x3 under the 3-cycle becomes x2 + 2 x3 + 3 x1
        let f = RationalFunction::from_poly(
            x(0, 3).add(&x(1, 3).scale(&rat_int(2))).add(&x(2, 3).scale(&rat_int(3))),
        );
        let mut b = BTreeMap::new();
        b.insert(0, RationalFunction::var(1, 3));
        b.insert(1, RationalFunction::var(2, 3));
        b.insert(2, RationalFunction::var(0, 3));
        let g = f.substitute(&b).unwrap();
        let expect = RationalFunction::from_poly(
            x(1, 3).add(&x(2, 3).scale(&rat_int(2))).add(&x(0, 3).scale(&rat_int(3))),
        );
        assert_eq!(g, expect);
    }

    #[test]
    fn substitution_pole() {
        // 1/(1 - x1 x2) with x1 -> 1/x2 has identically zero denominator
        let f = RationalFunction::new(
            LaurentPolynomial::one(2),
            LaurentPolynomial::one(2).sub(&x(0, 2).mul(&x(1, 2))),
        )
        .unwrap();
        let inv_x2 = RationalFunction::from_poly(LaurentPolynomial::monomial(
            Monomial::new(vec![0, -1]),
            rat_int(1),
        ));
        assert!(matches!(f.substitute_var(0, &inv_x2), Err(Error::Pole(_))));
    }

    #[test]
    fn gcd_reduce_examples() {
        // (x1^2 - x2^2)/(x1 - x2) -> (x1 + x2)/1
        let f = RationalFunction::new(
            x(0, 2).pow(2).sub(&x(1, 2).pow(2)),
            x(0, 2).sub(&x(1, 2)),
        )
        .unwrap();
        let r = f.gcd_reduce();
        assert_eq!(r.numerator(), &x(0, 2).add(&x(1, 2)));
        assert!(r.denominator().is_one());

        // (x1 x2)/(x1 x2) -> 1
        let g = RationalFunction::new(x(0, 2).mul(&x(1, 2)), x(0, 2).mul(&x(1, 2))).unwrap();
        assert!(g.gcd_reduce().numerator().is_one());

        // (1-2x1)^2/(1-2x1) -> 1-2x1
        let h = RationalFunction::new(
            LaurentPolynomial::one_minus_twice(0, 1).pow(2),
            LaurentPolynomial::one_minus_twice(0, 1),
        )
        .unwrap();
        let hr = h.gcd_reduce();
        assert_eq!(hr.numerator(), &LaurentPolynomial::one_minus_twice(0, 1));
        assert!(hr.denominator().is_one());
    }

    #[test]
    fn reduce_preserves_value() {
        let f = RationalFunction::new(
            x(0, 2).pow(3).mul(&x(1, 2)).add(&x(0, 2).pow(2)),
            x(0, 2).pow(2).mul(&x(1, 2)).sub(&x(0, 2).pow(2)),
        )
        .unwrap();
        let g = f.gcd_reduce();
        assert_eq!(f, g);
    }
}
