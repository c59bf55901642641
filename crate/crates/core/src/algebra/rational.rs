use num_bigint::BigInt;

/// Exact rational number: arbitrary-precision numerator over a positive
/// arbitrary-precision denominator, always in lowest terms. `Ratio`
/// maintains both invariants on every operation.
pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` as a rational; panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
