//! Checks for the Gog counting chain: totals, the summed border counts,
//! the descent-product difference equation, and the vanishing and
//! reduction properties of the border constant-term formula.

use super::util::fmt_vec;
use crate::algebra::{rat_int, Factored, LaurentPolynomial, Rational};
use crate::comb::{
    bar_land_of_gog_points, land_of_gog_points, m_brute, tilde_m,
};
use crate::engine::ct_fast;
use crate::kernels::{gog_border, gog_total, jamie_poly, phi_poly, BlockStructure};
use crate::recur::{check_bill, check_howard, check_pde_gog, tabulate_y};
use crate::Result;

fn ct_of(f: &Factored) -> Result<Rational> {
    ct_fast(&f.to_ratfun())
}

/// The constant term of the total integrand counts Gog trapezoids.
pub fn s12(k: usize, n: i64) -> Result<(bool, String)> {
    let ct = ct_of(&gog_total(k, n)?)?;
    let m = m_brute(k, n as usize);
    Ok((ct == rat_int(m), format!("ct={ct} m={m}")))
}

/// The border constant-term formula agrees with the summed border count
/// on the whole extended region.
pub fn s121(k: usize, n: i64) -> Result<(bool, String)> {
    for a in bar_land_of_gog_points(k, n) {
        let h = ct_of(&gog_border(k, n, &a)?)?;
        let t = tilde_m(k, n, &a);
        if h != rat_int(t) {
            return Ok((false, format!("a=({}) ct={h} summed={t}", fmt_vec(&a))));
        }
    }
    Ok((true, format!("all borders at n={n} agree")))
}

/// Neighbor-sum recurrence, clamped-argument identity, descent-product
/// difference equation, and the boundary conditions for the summed count.
pub fn s1211all(k: usize, n: i64) -> Result<(bool, String)> {
    if n > k as i64 {
        for a in land_of_gog_points(k, n) {
            if !check_howard(k, n, &a)? {
                return Ok((false, format!("neighbor sum fails at a=({})", fmt_vec(&a))));
            }
            if !check_bill(k, n, &a)? {
                return Ok((false, format!("clamped identity fails at a=({})", fmt_vec(&a))));
            }
            if !check_pde_gog(k, n, &a)? {
                return Ok((false, format!("difference equation fails at a=({})", fmt_vec(&a))));
            }
        }
    }
    for a in bar_land_of_gog_points(k, n) {
        let v = tilde_m(k, n, &a);
        let on_floor = (0..k).any(|i0| a[i0] == (k - i0 - 1) as i64);
        if on_floor && v != 0 {
            return Ok((false, format!("floor boundary fails at a=({})", fmt_vec(&a))));
        }
        if a[0] == n + 1 && v != 0 {
            return Ok((false, format!("ceiling boundary fails at a=({})", fmt_vec(&a))));
        }
    }
    if n == k as i64 && k >= 2 {
        for a in bar_land_of_gog_points(k, n) {
            if a[0] != k as i64 {
                continue;
            }
            let lhs = tilde_m(k, n, &a);
            let rhs = tilde_m(k - 1, n, &a[1..]);
            if lhs != rhs {
                return Ok((false, format!("corner reduction fails at a=({})", fmt_vec(&a))));
            }
        }
    }
    if k == 1 && tilde_m(1, 1, &[1]) != 1 {
        return Ok((false, "seed value is not 1".into()));
    }
    Ok((true, String::new()))
}

/// The descent-product difference equation for the border constant-term
/// formula, checked both through values and through the vanishing of the
/// two-term-difference constant term.
pub fn s12121all(k: usize, n: i64) -> Result<(bool, String)> {
    if n <= k as i64 {
        return Ok((true, "no interior points at this n".into()));
    }
    let h = |n: i64, a: &[i64]| -> Result<Rational> { ct_of(&gog_border(k, n, a)?) };
    for a in land_of_gog_points(k, n) {
        // left side: expand the descent product
        let descents: Vec<usize> = (0..k)
            .filter(|&i| {
                let next = if i + 1 < k { a[i + 1] } else { 0 };
                a[i] - next > 0
            })
            .collect();
        let mut lhs = rat_int(0);
        for mask in 0u32..(1 << descents.len()) {
            let mut b = a.clone();
            for (bit, &i) in descents.iter().enumerate() {
                if (mask >> bit) & 1 == 1 {
                    b[i] -= 1;
                }
            }
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            lhs += h(n, &b)? * rat_int(sign);
        }
        let mut arg = a.clone();
        for i in 1..k {
            arg[i] = arg[i].min(a[i - 1] - 1);
        }
        let rhs = h(n - 1, &arg)?;
        if lhs != rhs {
            return Ok((false, format!("difference equation fails at a=({})", fmt_vec(&a))));
        }
        // the same statement as one vanishing constant term: the two-term
        // difference in the numerator of the border integrand
        let blocks = BlockStructure::from_vector(&a)?;
        let jam = jamie_poly(&blocks);
        let dave = ct_of(&gog_border(k, n, &a)?.mul_poly(&jam))?;
        if dave != rat_int(0) {
            return Ok((false, format!("two-term-difference ct nonzero at a=({})", fmt_vec(&a))));
        }
    }
    Ok((true, String::new()))
}

/// Floor vanishing of the border constant-term formula.
pub fn s12122(k: usize, n: i64) -> Result<(bool, String)> {
    for a in bar_land_of_gog_points(k, n) {
        if !(0..k).any(|i0| a[i0] == (k - i0 - 1) as i64) {
            continue;
        }
        let v = ct_of(&gog_border(k, n, &a)?)?;
        if v != rat_int(0) {
            return Ok((false, format!("nonzero at a=({}): {v}", fmt_vec(&a))));
        }
    }
    Ok((true, String::new()))
}

/// Ceiling vanishing, including the generalized statement over all
/// unordered exponent vectors below the ceiling.
pub fn s12123(k: usize, n: i64) -> Result<(bool, String)> {
    for a in bar_land_of_gog_points(k, n) {
        if a[0] != n + 1 {
            continue;
        }
        let v = ct_of(&gog_border(k, n, &a)?)?;
        if v != rat_int(0) {
            return Ok((false, format!("nonzero at a=({}): {v}", fmt_vec(&a))));
        }
    }
    // generalized single-variable form: only the cross terms with x1
    // survive in the denominator
    let mut rest = vec![0i64; k - 1];
    loop {
        let mut f = Factored::from_poly(phi_poly(k));
        f.divide_by_factor(&LaurentPolynomial::var(0, k), n as u32);
        f.divide_by_factor(&LaurentPolynomial::bar(0, k), (n + 1) as u32);
        for (idx, &ai) in rest.iter().enumerate() {
            let i = idx + 1;
            let e = ai - 1;
            f = f.mul_poly(&LaurentPolynomial::monomial(
                crate::algebra::Monomial::unit(k).with_exp(i, -e),
                rat_int(1),
            ));
            f.divide_by_factor(
                &LaurentPolynomial::one(k)
                    .sub(&LaurentPolynomial::var(0, k).mul(&LaurentPolynomial::var(i, k))),
                1,
            );
            f.divide_by_factor(
                &LaurentPolynomial::one(k)
                    .sub(&LaurentPolynomial::bar(0, k).mul(&LaurentPolynomial::var(i, k))),
                1,
            );
        }
        let v = ct_of(&f)?;
        if v != rat_int(0) {
            return Ok((false, format!("generalized form nonzero at ({})", fmt_vec(&rest))));
        }
        // advance the odometer over [0, n]^{k-1}
        let mut idx = 0;
        loop {
            if idx == rest.len() {
                return Ok((true, String::new()));
            }
            rest[idx] += 1;
            if rest[idx] > n {
                rest[idx] = 0;
                idx += 1;
            } else {
                break;
            }
        }
    }
}

/// Corner reduction of the border constant-term formula.
pub fn s12124(k: usize) -> Result<(bool, String)> {
    if k < 2 {
        return Ok((true, "nothing to reduce at k=1".into()));
    }
    let n = k as i64;
    for a in bar_land_of_gog_points(k, n) {
        if a[0] != k as i64 {
            continue;
        }
        let lhs = ct_of(&gog_border(k, n, &a)?)?;
        let rhs = ct_of(&gog_border(k - 1, n, &a[1..])?)?;
        if lhs != rhs {
            return Ok((false, format!("a=({}): {lhs} vs {rhs}", fmt_vec(&a))));
        }
    }
    Ok((true, String::new()))
}

/// The tabulated solution of the Gog difference equation agrees with the
/// summed border counts.
pub fn s1213(k: usize, n: i64) -> Result<(bool, String)> {
    let tables = tabulate_y(k, n)?;
    let t = tables.last().unwrap();
    for ((m, a), v) in t.iter() {
        let w = tilde_m(k, *m, a);
        if *v != w {
            return Ok((false, format!("({m}; {}) table {v} summed {w}", fmt_vec(a))));
        }
    }
    Ok((true, format!("{} points agree", t.len())))
}
