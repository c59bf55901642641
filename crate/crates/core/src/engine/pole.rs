use crate::algebra::{rat_int, LaurentPolynomial, Monomial, RationalFunction};
use crate::{Error, Result, Var};

/// Coefficient at a simple pole, under the `(1 - c v)` normalization used
/// by the partial-fraction decompositions: for `f` whose denominator
/// carries a factor `(1 - c v)` vanishing at `point = 1/c`, this returns
/// `((1 - c v) f)|_{v = point}`.
///
/// Fails with `PoleOrder` if the pole is not simple, and with `Usage` for
/// `point = 0` (use `res_univariate` there).
pub fn pole_coefficient(
    f: &RationalFunction,
    v: Var,
    point: &RationalFunction,
) -> Result<RationalFunction> {
    if point.is_zero() {
        return Err(Error::Usage("pole at 0 has no (1 - c v) normalization".into()));
    }
    let linear = pole_coefficient_linear(f, v, point)?;
    // (1 - v/p) = -(v - p)/p
    Ok(linear.mul(&point.inv()?).neg())
}

/// Coefficient at a simple pole with linear normalization:
/// `((v - point) f)|_{v = point}`. Returns 0 when `f` is regular at the
/// point, and `PoleOrder` when the pole has order 2 or more.
pub fn pole_coefficient_linear(
    f: &RationalFunction,
    v: Var,
    point: &RationalFunction,
) -> Result<RationalFunction> {
    if point.involves(v) {
        return Err(Error::Usage(format!("pole location must not involve x{}", v + 1)));
    }
    // clear negative powers of v from both sides; multiplying numerator and
    // denominator by the same v-power leaves the value unchanged, and at a
    // nonzero point it does not affect pole multiplicities
    let shift = f
        .numerator()
        .low_degree_in(v)
        .unwrap_or(0)
        .min(f.denominator().low_degree_in(v).unwrap_or(0))
        .min(0);
    if point.as_constant().map(|c| c == rat_int(0)).unwrap_or(false) && shift < 0 {
        return Err(Error::Usage("use the residue engine for poles at 0".into()));
    }
    let m = Monomial::unit(f.nvars()).with_exp(v, -shift);
    let num = f.numerator().mul_monomial(&m, &rat_int(1));
    let den = f.denominator().mul_monomial(&m, &rat_int(1));

    let (num_mult, num_red) = deflate(&num, v, point);
    let (den_mult, den_red) = deflate(&den, v, point);
    let order = den_mult as i64 - num_mult as i64;
    if order >= 2 {
        return Err(Error::PoleOrder(format!(
            "pole of order {order} in x{} at {point}",
            v + 1
        )));
    }
    if order <= 0 {
        return Ok(RationalFunction::constant(rat_int(0), f.nvars()));
    }
    let n_at = horner(&num_red, point);
    let d_at = horner(&den_red, point);
    Ok(n_at.div(&d_at)?.gcd_reduce())
}

/// Divide out all factors `(v - point)`, returning the multiplicity and
/// the deflated coefficient vector (ascending in `v`, rational functions
/// of the other variables, nonzero at the point).
fn deflate(p: &LaurentPolynomial, v: Var, point: &RationalFunction) -> (u32, Vec<RationalFunction>) {
    let mut coeffs = to_var_coeffs(p, v);
    let mut mult = 0u32;
    while coeffs.len() > 1 {
        let (rem, quot) = synth_div(&coeffs, point);
        if rem.is_zero() {
            coeffs = quot;
            mult += 1;
        } else {
            break;
        }
    }
    (mult, coeffs)
}

fn to_var_coeffs(p: &LaurentPolynomial, v: Var) -> Vec<RationalFunction> {
    let by = p.coeffs_in(v);
    let max = by.keys().next_back().copied().unwrap_or(0);
    debug_assert!(by.keys().next().copied().unwrap_or(0) >= 0);
    let zero = RationalFunction::constant(rat_int(0), p.nvars());
    let mut out = vec![zero; (max + 1) as usize];
    for (e, c) in by {
        out[e as usize] = RationalFunction::from_poly(c);
    }
    out
}

/// Synthetic division by `(v - point)`: returns `(remainder, quotient)`.
fn synth_div(
    coeffs: &[RationalFunction],
    point: &RationalFunction,
) -> (RationalFunction, Vec<RationalFunction>) {
    let nvars = coeffs.iter().map(|c| c.nvars()).max().unwrap_or(0);
    let zero = RationalFunction::constant(rat_int(0), nvars);
    let n = coeffs.len();
    if n == 0 {
        return (zero, Vec::new());
    }
    let mut quot = vec![zero; n - 1];
    let mut carry = coeffs[n - 1].clone();
    for d in (0..n - 1).rev() {
        quot[d] = carry.clone();
        carry = coeffs[d].add(&carry.mul(point)).gcd_reduce();
    }
    (carry, quot)
}

fn horner(coeffs: &[RationalFunction], point: &RationalFunction) -> RationalFunction {
    let nvars = coeffs.iter().map(|c| c.nvars()).max().unwrap_or(0);
    let mut acc = RationalFunction::constant(rat_int(0), nvars);
    for c in coeffs.iter().rev() {
        acc = acc.mul(point).add(c);
    }
    acc.gcd_reduce()
}
