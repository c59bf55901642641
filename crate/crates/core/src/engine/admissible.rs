use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{rat_int, LaurentPolynomial, Monomial, Rational, RationalFunction};
use crate::{Error, Result};

/// Witness that `f = P / (x^gamma * Q)` with `Q(0,…,0) != 0`, so `f` has a
/// genuine multivariate Laurent expansion.
#[derive(Debug, Clone)]
pub struct AdmissibleDecomposition {
    pub gamma: Vec<i64>,
    pub p: LaurentPolynomial,
    pub q: LaurentPolynomial,
}

/// Split off the monomial content of the denominator and check the
/// remaining constant term.
pub fn admissible_decompose(f: &RationalFunction) -> Result<AdmissibleDecomposition> {
    let nvars = f.nvars();
    let dm = f.denominator().min_exps();
    let q = f
        .denominator()
        .mul_monomial(&Monomial::new(dm.iter().map(|e| -e).collect()), &rat_int(1));
    if q.constant_term().is_zero() {
        return Err(Error::NotAdmissible(format!(
            "denominator {} has zero constant term after clearing monomial content",
            f.denominator()
        )));
    }
    let nm = f.numerator().min_exps();
    let mut p = f
        .numerator()
        .mul_monomial(&Monomial::new(nm.iter().map(|e| -e).collect()), &rat_int(1));
    let mut q = q;
    if q.constant_term() < rat_int(0) {
        q = q.neg();
        p = p.neg();
    }
    let gamma: Vec<i64> = (0..nvars).map(|v| dm[v] - nm[v]).collect();
    Ok(AdmissibleDecomposition { gamma, p, q })
}

/// A multivariate power series truncated to per-variable exponent caps.
/// Arithmetic discards any monomial exceeding a cap.
#[derive(Debug, Clone)]
pub struct TruncatedSeries {
    caps: Vec<i64>,
    terms: BTreeMap<Monomial, Rational>,
}

impl TruncatedSeries {
    pub fn zero(caps: Vec<i64>) -> Self {
        TruncatedSeries { caps, terms: BTreeMap::new() }
    }

    pub fn from_poly(p: &LaurentPolynomial, caps: Vec<i64>) -> Self {
        let mut s = TruncatedSeries::zero(caps);
        for (m, c) in p.terms() {
            s.add_term(m.clone(), c.clone());
        }
        s
    }

    pub fn caps(&self) -> &[i64] {
        &self.caps
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(|| rat_int(0))
    }

    fn within(&self, m: &Monomial) -> bool {
        (0..self.caps.len()).all(|v| m.exp(v) <= self.caps[v])
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() || !self.within(&m) {
            return;
        }
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

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn mul_poly(&self, p: &LaurentPolynomial) -> Self {
        let mut out = TruncatedSeries::zero(self.caps.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in p.terms() {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = TruncatedSeries::zero(self.caps.clone());
        for (m, k) in &self.terms {
            out.add_term(m.clone(), k * c);
        }
        out
    }
}

/// Truncated inverse of a polynomial with nonzero constant term, computed
/// degree by degree from the linear recurrence the product identity forces.
fn invert_truncated(q: &LaurentPolynomial, caps: &[i64]) -> TruncatedSeries {
    let c = q.constant_term();
    assert!(!c.is_zero());
    let inv_c = Rational::one() / &c;
    // split q by total degree: q = c + sum_{j>=1} q_j
    let mut by_degree: BTreeMap<i64, LaurentPolynomial> = BTreeMap::new();
    for (m, coeff) in q.terms() {
        let d = m.total_degree();
        if d == 0 {
            continue;
        }
        let slot = by_degree.entry(d).or_insert_with(|| LaurentPolynomial::zero(q.nvars()));
        *slot = slot.add(&LaurentPolynomial::monomial(m.clone(), coeff.clone()));
    }
    let max_total: i64 = caps.iter().map(|&c| c.max(0)).sum();
    // s[d] holds the total-degree-d slice of the inverse
    let mut slices: Vec<TruncatedSeries> = Vec::new();
    let mut s0 = TruncatedSeries::zero(caps.to_vec());
    s0.add_term(Monomial::unit(q.nvars()), inv_c.clone());
    slices.push(s0);
    for d in 1..=max_total {
        let mut acc = TruncatedSeries::zero(caps.to_vec());
        for (j, qj) in by_degree.range(1..=d) {
            acc = acc.add(&slices[(d - j) as usize].mul_poly(qj));
        }
        slices.push(acc.scale(&(-&inv_c)));
    }
    let mut total = TruncatedSeries::zero(caps.to_vec());
    for s in slices {
        total = total.add(&s);
    }
    total
}

/// Iterated constant term via one truncated multivariate expansion.
/// Equals the recursive `ct_iterated` on every admissible input, in any
/// variable order.
pub fn ct_fast(f: &RationalFunction) -> Result<Rational> {
    let AdmissibleDecomposition { gamma, p, q } = admissible_decompose(f)?;
    // CT f = coefficient of x^gamma in P * (1/Q); P and 1/Q have only
    // nonnegative exponents, so a negative component means coefficient 0.
    if gamma.iter().any(|&g| g < 0) {
        let reachable = p.terms().any(|(m, _)| {
            (0..gamma.len()).all(|v| gamma[v] - m.exp(v) >= 0)
        });
        if !reachable {
            return Ok(rat_int(0));
        }
    }
    let caps: Vec<i64> = gamma.iter().map(|&g| g.max(0)).collect();
    let inv = invert_truncated(&q, &caps);
    let mut acc = rat_int(0);
    for (m, c) in p.terms() {
        let need = Monomial::new((0..caps.len()).map(|v| gamma[v] - m.exp(v)).collect());
        if need.exps().iter().any(|&e| e < 0) {
            continue;
        }
        acc += c * inv.coefficient(&need);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::ct_iterated;

    fn x(v: usize, n: usize) -> LaurentPolynomial {
        LaurentPolynomial::var(v, n)
    }

    #[test]
    fn decompose_examples() {
        // 1/(x1^2 (1 - x1 x2)) -> gamma=(2,0), P=1, Q=1-x1x2
        let f = RationalFunction::new(
            LaurentPolynomial::one(2),
            x(0, 2).pow(2).mul(&LaurentPolynomial::one(2).sub(&x(0, 2).mul(&x(1, 2)))),
        )
        .unwrap();
        let d = admissible_decompose(&f).unwrap();
        assert_eq!(d.gamma, vec![2, 0]);
        assert!(d.p.is_one());
        assert_eq!(d.q, LaurentPolynomial::one(2).sub(&x(0, 2).mul(&x(1, 2))));

        // x1/(x1+x2) has no Laurent expansion
        let g = RationalFunction::new(x(0, 2), x(0, 2).add(&x(1, 2))).unwrap();
        assert!(matches!(admissible_decompose(&g), Err(Error::NotAdmissible(_))));

        // factoring monomial content out of a structured denominator
        let h = RationalFunction::new(
            crate::kernels::delta_poly(2),
            x(0, 2).mul(&LaurentPolynomial::bar(0, 2).pow(3)),
        )
        .unwrap();
        let d = admissible_decompose(&h).unwrap();
        assert_eq!(d.gamma, vec![1, 0]);
        assert_eq!(d.q, LaurentPolynomial::bar(0, 2).pow(3));
        assert!(d.q.constant_term() == crate::algebra::rat_int(1));
    }

    #[test]
    fn univariate_binomial_values() {
        // CT [1/((1-x) x^2)] = 1
        let f = RationalFunction::new(
            LaurentPolynomial::one(1),
            LaurentPolynomial::bar(0, 1).mul(&x(0, 1).pow(2)),
        )
        .unwrap();
        assert_eq!(ct_fast(&f).unwrap(), rat_int(1));

        // CT [1/((1-x)^{A+1} x^{A-b})] = C(2A-b, A-b) at A=2, b=0 -> 6
        let g = RationalFunction::new(
            LaurentPolynomial::one(1),
            LaurentPolynomial::bar(0, 1).pow(3).mul(&x(0, 1).pow(2)),
        )
        .unwrap();
        assert_eq!(ct_fast(&g).unwrap(), rat_int(6));
    }

    #[test]
    fn agrees_with_recursive_engine() {
        // a small admissible function with several variables
        let den = x(0, 2)
            .pow(2)
            .mul(&LaurentPolynomial::bar(0, 2).pow(3))
            .mul(&LaurentPolynomial::one(2).sub(&x(0, 2).mul(&x(1, 2))))
            .mul(&LaurentPolynomial::bar(1, 2).pow(2))
            .mul(&x(1, 2));
        let num = LaurentPolynomial::one(2).add(&x(0, 2).scale(&rat_int(3)));
        let f = RationalFunction::new(num, den).unwrap();
        assert_eq!(ct_fast(&f).unwrap(), ct_iterated(&f, &[0, 1]).unwrap());
    }
}
