//! Checks for the Magog counting chain: totals, prescribed borders, the
//! difference-equation characterization, the single-sum form, and the
//! signed-sum identity behind it.

use super::util::fmt_vec;
use crate::algebra::{rat_int, Factored, LaurentPolynomial};
use crate::comb::{
    b_brute, bar_land_of_magog_points, border_count_magog, land_of_magog_points, m_brute,
};
use crate::engine::{ct_fast, res_iterated_factored};
use crate::group::{act_factored, antisymmetrize_poly, GroupKind, SignedPermutation};
use crate::kernels::{
    border_vanishing_residuand, george, magog_border, magog_total, vandermonde,
};
use crate::recur::{check_ekhad, check_pde_magog, tabulate_x};
use crate::Result;

pub fn ct_of(f: &Factored) -> Result<crate::algebra::Rational> {
    ct_fast(&f.to_ratfun())
}

/// Gog and Magog trapezoid counts agree.
pub fn s1(k: usize, n: i64) -> Result<(bool, String)> {
    let b = b_brute(k, n as usize);
    let m = m_brute(k, n as usize);
    Ok((b == m, format!("b={b} m={m}")))
}

/// The constant term of the total integrand counts Magog trapezoids.
pub fn s11(k: usize, n: i64) -> Result<(bool, String)> {
    let ct = ct_of(&magog_total(k, n)?)?;
    let b = b_brute(k, n as usize);
    Ok((ct == rat_int(b), format!("ct={ct} b={b}")))
}

/// The border constant-term formula agrees with the border count on the
/// whole extended region.
pub fn s111(k: usize, n: i64) -> Result<(bool, String)> {
    for a in bar_land_of_magog_points(k, n) {
        let c = ct_of(&magog_border(k, n, &a)?)?;
        let b = border_count_magog(k, n, &a);
        if c != rat_int(b) {
            return Ok((false, format!("a=({}) ct={c} brute={b}", fmt_vec(&a))));
        }
    }
    Ok((true, format!("all borders at n={n} agree")))
}

/// Neighbor-sum recurrence, full difference equation, and the boundary
/// conditions, all on brute-force tables.
pub fn s1111all(k: usize, n: i64) -> Result<(bool, String)> {
    if n > k as i64 {
        for a in land_of_magog_points(k, n) {
            if !check_ekhad(k, n, &a)? {
                return Ok((false, format!("neighbor sum fails at a=({})", fmt_vec(&a))));
            }
        }
        // the difference equation holds on the larger weakly-decreasing set
        for a in weakly_decreasing(k, n) {
            if !check_pde_magog(k, n, &a)? {
                return Ok((false, format!("difference equation fails at a=({})", fmt_vec(&a))));
            }
        }
    }
    // boundary conditions on the extended region
    for a in bar_land_of_magog_points(k, n) {
        let v = border_count_magog(k, n, &a);
        let broken = (0..k - 1).any(|i| a[i] - a[i + 1] == -1) || a[k - 1] == 0;
        if broken && v != 0 {
            return Ok((false, format!("zero boundary fails at a=({})", fmt_vec(&a))));
        }
        if a[0] == n + 1 && v != 0 {
            return Ok((false, format!("ceiling boundary fails at a=({})", fmt_vec(&a))));
        }
    }
    if n == k as i64 {
        for a in bar_land_of_magog_points(k, n) {
            let lhs = border_count_magog(k, n, &a);
            let rhs = if a[k - 1] == 1 {
                if k == 1 {
                    1
                } else {
                    border_count_magog(k - 1, n, &a[..k - 1])
                }
            } else {
                0
            };
            if lhs != rhs {
                return Ok((false, format!("corner reduction fails at a=({})", fmt_vec(&a))));
            }
        }
    }
    Ok((true, String::new()))
}

fn weakly_decreasing(k: usize, n: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(k: usize, n: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let hi = if cur.is_empty() { n } else { cur[cur.len() - 1] };
        for v in 1..=hi {
            cur.push(v);
            rec(k, n, cur, out);
            cur.pop();
        }
    }
    rec(k, n, &mut cur, &mut out);
    out
}

/// The same conditions for the constant-term side.
pub fn s1112(k: usize, n: i64) -> Result<(bool, String)> {
    let c = |n: i64, a: &[i64]| -> Result<crate::algebra::Rational> {
        ct_of(&magog_border(k, n, a)?)
    };
    if n > k as i64 {
        for a in weakly_decreasing(k, n) {
            // expand prod (I - A_i^{-1}) applied to the border formula
            let mut lhs = rat_int(0);
            for mask in 0u32..(1 << k) {
                let mut b = a.clone();
                for (i, bi) in b.iter_mut().enumerate() {
                    if (mask >> i) & 1 == 1 {
                        *bi -= 1;
                    }
                }
                let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
                lhs += c(n, &b)?.clone() * rat_int(sign);
            }
            let rhs = c(n - 1, &a)?;
            if lhs != rhs {
                return Ok((false, format!("difference equation fails at a=({})", fmt_vec(&a))));
            }
        }
    }
    for a in bar_land_of_magog_points(k, n) {
        let v = c(n, &a)?;
        let broken = (0..k - 1).any(|i| a[i] - a[i + 1] == -1) || a[k - 1] == 0;
        if (broken || a[0] == n + 1) && v != rat_int(0) {
            return Ok((false, format!("boundary fails at a=({}) value {v}", fmt_vec(&a))));
        }
        if n == k as i64 {
            let rhs = if a[k - 1] == 1 {
                if k == 1 {
                    rat_int(1)
                } else {
                    ct_of(&magog_border(k - 1, n, &a[..k - 1])?)?
                }
            } else {
                rat_int(0)
            };
            if v != rhs {
                return Ok((false, format!("corner reduction fails at a=({})", fmt_vec(&a))));
            }
        }
    }
    if k == 1 {
        for a1 in 0..=2i64 {
            let v = c(1, &[a1])?;
            if v != rat_int(i64::from(a1 == 1)) {
                return Ok((false, format!("seed fails at a1={a1}")));
            }
        }
    }
    Ok((true, String::new()))
}

/// The residue of the vanishing-border residuand is invariant under every
/// signed permutation.
pub fn s11121(k: usize, a: &[i64], group: &[SignedPermutation]) -> Result<(bool, String)> {
    let f = border_vanishing_residuand(k, a)?;
    let order: Vec<usize> = (0..k).collect();
    let base = res_iterated_factored(&f, &order)?;
    for g in group {
        let img = act_factored(g, &f);
        let r = res_iterated_factored(&img, &order)?;
        if r != base {
            return Ok((false, format!("g={g:?}: {r} vs {base}")));
        }
    }
    Ok((true, format!("residue {base} for all {} elements", group.len())))
}

/// The full signed-permutation sum of the vanishing-border residuand is
/// identically zero, both through the antisymmetrizer factorization and
/// (at small k) by summing the rational functions directly.
pub fn s11122(k: usize, a: &[i64]) -> Result<(bool, String)> {
    let mut lead = LaurentPolynomial::one(k);
    for (i0, ai) in a.iter().enumerate() {
        let e = k as i64 - ai + i0 as i64 + 1;
        lead = lead.mul(&LaurentPolynomial::monomial(
            crate::algebra::Monomial::unit(k).with_exp(i0, e),
            rat_int(1),
        ));
    }
    let anti = antisymmetrize_poly(&lead, GroupKind::WBk, k);
    if !anti.is_zero() {
        return Ok((false, format!("antisymmetrized numerator nonzero: {anti}")));
    }
    if k <= 2 {
        let f = border_vanishing_residuand(k, a)?;
        let mut sum = Factored::zero(k);
        for g in SignedPermutation::enumerate(k, GroupKind::WBk) {
            sum = sum.add(&act_factored(&g, &f));
        }
        if !sum.is_zero() {
            return Ok((false, "direct sum of group images is nonzero".into()));
        }
    }
    Ok((true, String::new()))
}

/// The tabulated solution of the difference equation agrees with the
/// brute-force border counts everywhere it is defined.
pub fn s1113(k: usize, n: i64) -> Result<(bool, String)> {
    let tables = tabulate_x(k, n)?;
    let t = tables.last().unwrap();
    for ((m, a), v) in t.iter() {
        let b = border_count_magog(k, *m, a);
        if *v != b {
            return Ok((false, format!("({m}; {}) table {v} brute {b}", fmt_vec(a))));
        }
    }
    Ok((true, format!("{} points agree", t.len())))
}

/// The single-sum constant-term form also counts Magog trapezoids.
pub fn s112(k: usize, n: i64) -> Result<(bool, String)> {
    let ct = ct_of(&george(k, n)?)?;
    let b = b_brute(k, n as usize);
    Ok((ct == rat_int(b), format!("ct={ct} b={b}")))
}

/// The signed-sum evaluation of the telescoping product: both sides are
/// compared after clearing the common denominator over all subset
/// products `1 - prod_{i in S} x_i`.
pub fn s113(k: usize) -> Result<(bool, String)> {
    let nv = k;
    let subsets: Vec<Vec<usize>> = (1u32..(1 << k))
        .map(|mask| (0..k).filter(|&i| (mask >> i) & 1 == 1).collect())
        .collect();
    let one_minus = |s: &[usize]| -> LaurentPolynomial {
        let mut m = LaurentPolynomial::one(nv);
        for &i in s {
            m = m.mul(&LaurentPolynomial::var(i, nv));
        }
        LaurentPolynomial::one(nv).sub(&m)
    };
    // LHS * D = sum over permutations of sgn * monomial * complementary products
    let mut lhs = LaurentPolynomial::zero(nv);
    for g in SignedPermutation::enumerate(k, GroupKind::Sk) {
        let pi = g.pi();
        let chain: Vec<Vec<usize>> = (0..k)
            .map(|j| {
                let mut s: Vec<usize> = pi[j..].to_vec();
                s.sort_unstable();
                s
            })
            .collect();
        let mut term = LaurentPolynomial::one(nv);
        // image of x1 x2^2 … xk^k
        for (i, &target) in pi.iter().enumerate() {
            term = term.mul(&LaurentPolynomial::var(target, nv).pow(i as u32 + 1));
        }
        for s in &subsets {
            if !chain.contains(s) {
                term = term.mul(&one_minus(s));
            }
        }
        lhs = if g.sgn() > 0 { lhs.add(&term) } else { lhs.sub(&term) };
    }
    // RHS * D = x1…xk * vandermonde * prod over |S| >= 3 of (1 - x_S)
    let mut rhs = vandermonde(k);
    for i in 0..k {
        rhs = rhs.mul(&LaurentPolynomial::var(i, nv));
    }
    for s in &subsets {
        if s.len() >= 3 {
            rhs = rhs.mul(&one_minus(s));
        }
    }
    let ok = lhs == rhs;
    let witness = if ok {
        String::new()
    } else {
        let diff = lhs.sub(&rhs);
        format!("difference has {} terms", diff.num_terms())
    };
    Ok((ok, witness))
}
