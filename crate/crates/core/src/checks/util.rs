use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::algebra::{rat_int, Factored, LaurentPolynomial, Monomial, RationalFunction};

/// Deterministic generator seeded from the check id, so repeated runs give
/// identical results.
pub fn rng_for(id: &str) -> StdRng {
    let mut seed = 0xA5A5_5A5A_u64;
    for b in id.bytes() {
        seed = seed.wrapping_mul(131).wrapping_add(b as u64);
    }
    StdRng::seed_from_u64(seed)
}

/// A random Laurent polynomial: up to `terms` terms, exponents in
/// `[-max_exp, max_exp]`, small integer coefficients.
pub fn random_laurent(rng: &mut StdRng, nvars: usize, terms: usize, max_exp: i64) -> LaurentPolynomial {
    let mut p = LaurentPolynomial::zero(nvars);
    for _ in 0..terms {
        let exps: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-max_exp..=max_exp)).collect();
        let c = rng.gen_range(-3i64..=3);
        p = p.add(&LaurentPolynomial::monomial(Monomial::new(exps), rat_int(c)));
    }
    p
}

/// A random polynomial (nonnegative exponents).
pub fn random_poly(rng: &mut StdRng, nvars: usize, terms: usize, max_exp: i64) -> LaurentPolynomial {
    let mut p = LaurentPolynomial::zero(nvars);
    for _ in 0..terms {
        let exps: Vec<i64> = (0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect();
        let c = rng.gen_range(-3i64..=3);
        p = p.add(&LaurentPolynomial::monomial(Monomial::new(exps), rat_int(c)));
    }
    p
}

/// A random function with a guaranteed multivariate Laurent expansion:
/// a product of factors from `x_i^{±a}`, `(1-x_i)^{±b}`, `(1-x_i x_j)^{-1}`
/// with a small polynomial numerator.
pub fn random_admissible(rng: &mut StdRng, nvars: usize) -> Factored {
    let mut f = Factored::from_poly({
        let mut num = random_poly(rng, nvars, 3, 2);
        if num.is_zero() {
            num = LaurentPolynomial::one(nvars);
        }
        num
    });
    for v in 0..nvars {
        let e = rng.gen_range(-2i64..=2);
        f = f.mul_poly(&LaurentPolynomial::monomial(
            Monomial::unit(nvars).with_exp(v, e),
            rat_int(1),
        ));
        match rng.gen_range(0..3) {
            0 => {}
            1 => f = f.mul_poly(&LaurentPolynomial::bar(v, nvars).pow(rng.gen_range(1..=2))),
            _ => f.divide_by_factor(&LaurentPolynomial::bar(v, nvars), rng.gen_range(1..=2)),
        }
    }
    for i in 0..nvars {
        for j in (i + 1)..nvars {
            if rng.gen_bool(0.5) {
                let cross = LaurentPolynomial::one(nvars)
                    .sub(&LaurentPolynomial::var(i, nvars).mul(&LaurentPolynomial::var(j, nvars)));
                f.divide_by_factor(&cross, 1);
            }
        }
    }
    f
}

/// Split an expanded rational function back into factored form by trial
/// division against known candidate factors; whatever remains of the
/// denominator becomes a single final factor.
pub fn refactor_against(f: &RationalFunction, candidates: &[LaurentPolynomial]) -> Factored {
    let mut out = Factored::from_poly(f.numerator().clone());
    let mut den = f.denominator().clone();
    for c in candidates {
        // monomials are units of the Laurent ring; they land in the
        // numerator anyway
        if c.as_monomial().is_some() {
            continue;
        }
        while let Ok(q) = den.exact_div(c) {
            den = q;
            out.divide_by_factor(c, 1);
        }
    }
    out.divide_by_factor(&den, 1);
    out
}

/// `v1,…,vk` formatting for witnesses.
pub fn fmt_vec(a: &[i64]) -> String {
    let parts: Vec<String> = a.iter().map(|x| x.to_string()).collect();
    parts.join(",")
}
