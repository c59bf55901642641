//! Randomized algebra invariants: ring axioms, involutions, reduction
//! value-preservation, and text round-trips.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use gogmagog::algebra::{
    parse_polynomial, parse_rational_function, rat, LaurentPolynomial, Monomial,
    RationalFunction,
};

fn random_poly(rng: &mut StdRng, nvars: usize, terms: usize, max_exp: i64) -> LaurentPolynomial {
    let mut p = LaurentPolynomial::zero(nvars);
    for _ in 0..terms {
        let exps: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-max_exp..=max_exp)).collect();
        p = p.add(&LaurentPolynomial::monomial(
            Monomial::new(exps),
            rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)),
        ));
    }
    p
}

#[test]
fn ring_axioms_on_a_thousand_triples() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..1000 {
        let nvars = rng.gen_range(1..=3);
        let a = random_poly(&mut rng, nvars, 3, 3);
        let b = random_poly(&mut rng, nvars, 3, 3);
        let c = random_poly(&mut rng, nvars, 3, 3);
        // associativity of both operations and distributivity
        assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        assert_eq!(a.mul(&b), b.mul(&a));
    }
}

#[test]
fn bar_substitution_is_an_involution() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..200 {
        let nvars = rng.gen_range(1..=3);
        let num = random_poly(&mut rng, nvars, 3, 2);
        let den = {
            let mut d = random_poly(&mut rng, nvars, 2, 2);
            if d.is_zero() {
                d = LaurentPolynomial::one(nvars);
            }
            d
        };
        let f = RationalFunction::new(num, den).unwrap();
        for v in 0..nvars {
            let bar = RationalFunction::from_poly(LaurentPolynomial::bar(v, nvars));
            let once = f.substitute_var(v, &bar).unwrap();
            let twice = once.substitute_var(v, &bar).unwrap();
            assert_eq!(twice, f);
        }
    }
}

#[test]
fn reduction_preserves_value() {
    let mut rng = StdRng::seed_from_u64(13);
    for trial in 0..200 {
        // the general-gcd fallback only ever sees small problems; the
        // heavy reduction traffic goes through the factored engine
        let nvars = if trial % 8 == 0 { 3 } else { rng.gen_range(1..=2) };
        let terms = if nvars == 3 { 2 } else { 4 };
        let num = random_poly(&mut rng, nvars, terms, 2);
        let mut den = random_poly(&mut rng, nvars, terms.min(3), 2);
        if den.is_zero() {
            den = LaurentPolynomial::one(nvars);
        }
        let common = random_poly(&mut rng, nvars, 2, 1);
        let (num, den) = if common.is_zero() {
            (num, den)
        } else {
            (num.mul(&common), den.mul(&common))
        };
        let f = RationalFunction::new(num, den).unwrap();
        let g = f.gcd_reduce();
        // cross-multiplied equality is exactly value preservation
        assert_eq!(f, g);
        assert!(g.denominator().is_polynomial());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// parse ∘ serialize is the identity on polynomials with exponents in
    /// [-9, 9] and small rational coefficients.
    #[test]
    fn parse_serialize_roundtrip(
        terms in proptest::collection::vec(
            (
                proptest::collection::vec(-9i64..=9, 1..=3),
                -64i64..=64,
                1i64..=9,
            ),
            0..6,
        )
    ) {
        let nvars = terms.iter().map(|(e, _, _)| e.len()).max().unwrap_or(1);
        let mut p = LaurentPolynomial::zero(nvars);
        for (exps, numer, denom) in terms {
            let mut exps = exps.clone();
            exps.resize(nvars, 0);
            p = p.add(&LaurentPolynomial::monomial(Monomial::new(exps), rat(numer, denom)));
        }
        let text = p.to_string();
        let back = parse_polynomial(&text).unwrap();
        prop_assert_eq!(back.pad_to(nvars), p);
    }

    /// The rational-function form round-trips as a value.
    #[test]
    fn ratfun_roundtrip(numer in -20i64..=20, denom in 1i64..=20, e1 in -3i64..=3) {
        let num = LaurentPolynomial::monomial(Monomial::new(vec![e1, 0]), rat(numer, denom))
            .add(&LaurentPolynomial::var(1, 2));
        let den = LaurentPolynomial::one(2).add(&LaurentPolynomial::var(0, 2));
        let f = RationalFunction::new(num, den).unwrap();
        let back = parse_rational_function(&f.to_string()).unwrap();
        prop_assert_eq!(back, f);
    }
}
