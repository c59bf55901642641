use super::poly::LaurentPolynomial;
use super::rational::rat_int;
use crate::Var;

/// Polynomial gcd of two Laurent polynomials, up to units.
///
/// Monomial and rational content is stripped first, so the result is a
/// primitive polynomial with positive leading coefficient; monomial factors
/// are never reported (they are units of the Laurent ring).
///
/// Strategy: mutual trial division first (which settles almost every call
/// arising from the reduction paths in this crate), then a primitive
/// pseudo-remainder cascade, one variable at a time.
pub fn poly_gcd(a: &LaurentPolynomial, b: &LaurentPolynomial) -> LaurentPolynomial {
    let a = strip(a);
    let b = strip(b);
    if a.is_zero() {
        return if b.is_zero() { LaurentPolynomial::one(0) } else { b };
    }
    if b.is_zero() {
        return a;
    }
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return LaurentPolynomial::one(a.nvars().max(b.nvars()));
    }
    if a == b {
        return a;
    }
    if a.divisible_by(&b) {
        return b;
    }
    if b.divisible_by(&a) {
        return a;
    }
    let nvars = a.nvars().max(b.nvars());
    let common: Vec<Var> = (0..nvars).filter(|&v| a.involves(v) && b.involves(v)).collect();
    if common.is_empty() {
        return LaurentPolynomial::one(nvars);
    }
    // work in the variable where the degrees are smallest; the cascade's
    // cost is driven by the pseudo-remainder chain length
    let v = *common
        .iter()
        .min_by_key(|&&v| {
            a.degree_in(v).unwrap_or(0).min(b.degree_in(v).unwrap_or(0))
        })
        .unwrap();
    prs_gcd(&a, &b, v)
}

/// Strip monomial content and rational content; normalize the leading
/// coefficient positive.
fn strip(p: &LaurentPolynomial) -> LaurentPolynomial {
    if p.is_zero() {
        return p.clone();
    }
    let m = p.min_exps();
    let shifted = p.mul_monomial(
        &super::monomial::Monomial::new(m.iter().map(|e| -e).collect()),
        &rat_int(1),
    );
    shifted.primitive_part()
}

/// Gcd of the coefficient list of `p` along `v`.
fn content_in(p: &LaurentPolynomial, v: Var) -> LaurentPolynomial {
    let mut g = LaurentPolynomial::zero(p.nvars());
    for (_, coeff) in p.coeffs_in(v) {
        g = poly_gcd(&g, &coeff);
        if g.is_one() {
            break;
        }
    }
    g
}

fn prs_gcd(a: &LaurentPolynomial, b: &LaurentPolynomial, v: Var) -> LaurentPolynomial {
    let cont_a = content_in(a, v);
    let cont_b = content_in(b, v);
    let cont = poly_gcd(&cont_a, &cont_b);
    let mut r0 = a.exact_div(&cont_a).expect("content divides");
    let mut r1 = b.exact_div(&cont_b).expect("content divides");
    if r0.degree_in(v) < r1.degree_in(v) {
        std::mem::swap(&mut r0, &mut r1);
    }
    loop {
        let rem = pseudo_rem(&r0, &r1, v);
        if rem.is_zero() {
            let g = strip(&r1);
            // r1 is gcd of the primitive parts only up to its v-content
            let g = g.exact_div(&content_in(&g, v)).expect("content divides");
            let g = cont.mul(&strip(&g));
            debug_assert!(a.divisible_by(&g) && b.divisible_by(&g));
            return g;
        }
        if rem.degree_in(v) == Some(0) || !rem.involves(v) {
            // coprime in v
            return cont;
        }
        r0 = r1;
        // primitive reduction keeps the cascade from swelling
        r1 = rem.exact_div(&content_in(&rem, v)).expect("content divides");
    }
}

/// Fraction-free pseudo-remainder of `a` by `b` with respect to `v`,
/// with rational content stripped after every reduction step to keep the
/// integer coefficients from snowballing.
fn pseudo_rem(a: &LaurentPolynomial, b: &LaurentPolynomial, v: Var) -> LaurentPolynomial {
    use num_traits::One;
    let db = b.degree_in(v).expect("nonzero divisor");
    let lb = b.coeff_of_var_exp(v, db);
    let mut r = a.clone();
    loop {
        let Some(dr) = r.degree_in(v) else { return r };
        if r.is_zero() || dr < db {
            return r;
        }
        let lr = r.coeff_of_var_exp(v, dr);
        let shift =
            super::monomial::Monomial::unit(r.nvars().max(b.nvars())).with_exp(v, dr - db);
        // r <- lb * r - lr * v^(dr-db) * b
        r = r.mul(&lb).sub(&b.mul(&lr).mul_monomial(&shift, &rat_int(1)));
        if !r.is_zero() {
            let c = r.content();
            if !c.is_one() {
                r = r.scale(&(crate::algebra::Rational::one() / c));
            }
        }
    }
}
