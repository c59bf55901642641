use crate::algebra::{rat_int, Factored, LaurentPolynomial, RationalFunction};
use crate::Var;

/// Coefficient of `v^target` in the formal Laurent expansion of `f` with
/// respect to `v` at `v = 0`, the other variables treated as parameters.
///
/// The expansion exists for every rational function of one variable, so
/// this never fails: write `f = N / (v^m D)` with `D` of nonzero constant
/// coefficient in `v` (a matter of clearing the monomial `v`-content, which
/// the sparse representation guarantees), expand `1/D` by the series
/// recurrence, and read off one coefficient. Denominators stay factored:
/// the coefficients of `1/D` only ever carry powers of the constant
/// `v`-coefficients of the factors of `D`.
pub fn coeff_in_var(f: &Factored, v: Var, target: i64) -> Factored {
    let nvars = f.nvars();
    if f.is_zero() {
        return Factored::zero(nvars);
    }

    // Split denominator factors into those involving v and the rest.
    let mut series_factors: Vec<(LaurentPolynomial, u32)> = Vec::new();
    let mut rest: Vec<(LaurentPolynomial, u32)> = Vec::new();
    let mut pole_shift: i64 = 0;
    for (fac, e) in f.factors() {
        if !fac.involves(v) {
            rest.push((fac.clone(), e));
            continue;
        }
        let mu = fac.low_degree_in(v).unwrap_or(0);
        pole_shift += mu * e as i64;
        let shifted = shift_var(fac, v, -mu);
        if shifted.involves(v) {
            series_factors.push((shifted, e));
        } else {
            rest.push((shifted, e));
        }
    }

    let num_by = f.numerator().coeffs_in(v);
    let d_min = *num_by.keys().next().unwrap();
    let t_needed = target + pole_shift;
    if t_needed < d_min {
        return Factored::zero(nvars);
    }
    let order = (t_needed - d_min) as usize;

    let series = match series_factors.len() {
        0 => None,
        _ => {
            let mut s = invert_series(&series_factors[0].0, v, order, nvars);
            s = series_pow(&s, series_factors[0].1, order);
            for (fac, e) in &series_factors[1..] {
                let s1 = invert_series(fac, v, order, nvars);
                s = series_mul(&s, &series_pow(&s1, *e, order), order);
            }
            Some(s)
        }
    };

    let mut out = Factored::zero(nvars);
    for (d, nd) in &num_by {
        if *d > t_needed {
            break;
        }
        let idx = (t_needed - d) as usize;
        let contrib = match &series {
            None => {
                if idx == 0 {
                    Factored::from_poly(nd.clone())
                } else {
                    continue;
                }
            }
            Some(s) => s[idx].mul_poly(nd),
        };
        out = out.add(&contrib);
    }
    for (fac, e) in &rest {
        out.divide_by_factor(fac, *e);
    }
    out.normalized()
}

/// Multiply by `v^delta`.
fn shift_var(p: &LaurentPolynomial, v: Var, delta: i64) -> LaurentPolynomial {
    let m = crate::algebra::Monomial::unit(p.nvars()).with_exp(v, delta);
    p.mul_monomial(&m, &rat_int(1))
}

/// Series of `1/fhat` in `v` up to `order`, where `fhat` has `v`-low-degree
/// zero (so its constant `v`-coefficient `c0` is a nonzero polynomial in
/// the other variables).
fn invert_series(fhat: &LaurentPolynomial, v: Var, order: usize, nvars: usize) -> Vec<Factored> {
    let coeffs = fhat.coeffs_in(v);
    let c0 = coeffs.get(&0).expect("v-low-degree zero").clone();
    let mut inv_c0 = Factored::one(nvars);
    inv_c0.divide_by_factor(&c0, 1);
    let mut out: Vec<Factored> = Vec::with_capacity(order + 1);
    out.push(inv_c0.clone());
    for t in 1..=order {
        let mut sum = Factored::zero(nvars);
        for (j, cj) in coeffs.range(1..=(t as i64)) {
            sum = sum.add(&out[t - *j as usize].mul_poly(cj));
        }
        out.push(sum.neg().mul(&inv_c0));
    }
    out
}

fn series_mul(a: &[Factored], b: &[Factored], order: usize) -> Vec<Factored> {
    let nvars = a
        .iter()
        .chain(b.iter())
        .map(|f| f.nvars())
        .max()
        .unwrap_or(0);
    let mut out = Vec::with_capacity(order + 1);
    for t in 0..=order {
        let mut c = Factored::zero(nvars);
        for i in 0..=t {
            if i < a.len() && t - i < b.len() {
                c = c.add(&a[i].mul(&b[t - i]));
            }
        }
        out.push(c);
    }
    out
}

fn series_pow(s: &[Factored], e: u32, order: usize) -> Vec<Factored> {
    let nvars = s.iter().map(|f| f.nvars()).max().unwrap_or(0);
    let mut result: Vec<Factored> = vec![Factored::one(nvars)];
    result.resize(order + 1, Factored::zero(nvars));
    let mut base = s.to_vec();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = series_mul(&result, &base, order);
        }
        e >>= 1;
        if e > 0 {
            base = series_mul(&base, &base, order);
        }
    }
    result
}

/// Exact coefficient of `v^0` in the univariate Laurent expansion,
/// coefficients reduced.
pub fn ct_univariate(f: &RationalFunction, v: Var) -> RationalFunction {
    coeff_in_var(&Factored::from_ratfun(f), v, 0).to_ratfun().gcd_reduce()
}

/// Exact coefficient of `v^-1` in the univariate Laurent expansion.
pub fn res_univariate(f: &RationalFunction, v: Var) -> RationalFunction {
    coeff_in_var(&Factored::from_ratfun(f), v, -1).to_ratfun().gcd_reduce()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monomial;

    fn x(v: usize, n: usize) -> LaurentPolynomial {
        LaurentPolynomial::var(v, n)
    }

    fn rf(num: LaurentPolynomial, den: LaurentPolynomial) -> RationalFunction {
        RationalFunction::new(num, den).unwrap()
    }

    #[test]
    fn geometric_expansions() {
        // CT_{x2} [x1/(x1+x2)] = 1 and CT_{x1} [x1/(x1+x2)] = 0
        let f = rf(x(0, 2), x(0, 2).add(&x(1, 2)));
        assert_eq!(ct_univariate(&f, 1), RationalFunction::constant(rat_int(1), 2));
        assert!(ct_univariate(&f, 0).is_zero());
    }

    #[test]
    fn ct_of_inverse_product() {
        // CT_{x1} [1/(1 - x1 x2)] = 1
        let f = rf(
            LaurentPolynomial::one(2),
            LaurentPolynomial::one(2).sub(&x(0, 2).mul(&x(1, 2))),
        );
        assert_eq!(ct_univariate(&f, 0), RationalFunction::constant(rat_int(1), 2));
    }

    #[test]
    fn residues() {
        // Res_{x1} [1/x1] = 1
        let f = rf(LaurentPolynomial::one(1), x(0, 1));
        assert_eq!(res_univariate(&f, 0), RationalFunction::constant(rat_int(1), 1));
        // Res_{x1} [1/(x1^2 (1-x1))] = coefficient of x in 1/(1-x) = 1
        let g = rf(
            LaurentPolynomial::one(1),
            x(0, 1).pow(2).mul(&LaurentPolynomial::bar(0, 1)),
        );
        assert_eq!(res_univariate(&g, 0), RationalFunction::constant(rat_int(1), 1));
    }

    #[test]
    fn laurent_numerators() {
        // Res over each variable of 1/(x1 x2) picks out the x^-1 coefficients
        let f = rf(LaurentPolynomial::one(2), x(0, 2).mul(&x(1, 2)));
        let inner = res_univariate(&f, 1);
        let expect = RationalFunction::from_poly(LaurentPolynomial::monomial(
            Monomial::new(vec![-1, 0]),
            rat_int(1),
        ));
        assert_eq!(inner, expect);
    }
}
