use super::ops::p_a_operator;
use crate::algebra::rat_int;
use crate::comb::{
    border_count_gog, border_count_magog, gog_border_table, in_land_of_gog, in_land_of_magog,
    magog_border_table, tilde_m,
};
use crate::{Error, Result};

fn need(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Usage(format!("point outside the validity region of {what}")))
    }
}

/// The raw neighbor-sum recurrence for Magog border counts
/// (`n > k`, plain region): `B(n; a) = sum of B(n-1; b)` over
/// `a_{i+1} <= b_i <= min(a_i, n-i)` and `1 <= b_k <= min(a_k, n-k)`.
pub fn check_ekhad(k: usize, n: i64, a: &[i64]) -> Result<bool> {
    need(n > k as i64 && in_land_of_magog(k, n, a), "the neighbor-sum recurrence")?;
    let lhs = border_count_magog(k, n, a);
    let table = magog_border_table(k, n - 1);
    let mut rhs = 0i64;
    let mut b = vec![0i64; k];
    fn rec(
        k: usize,
        n: i64,
        a: &[i64],
        i: usize,
        b: &mut Vec<i64>,
        table: &std::collections::BTreeMap<Vec<i64>, i64>,
        acc: &mut i64,
    ) {
        if i == k {
            *acc += table.get(b).copied().unwrap_or(0);
            return;
        }
        let (lo, hi) = if i + 1 < k {
            (a[i + 1], a[i].min(n - i as i64 - 1))
        } else {
            (1, a[k - 1].min(n - k as i64))
        };
        for v in lo.max(1)..=hi {
            b[i] = v;
            rec(k, n, a, i + 1, b, table, acc);
        }
    }
    rec(k, n, a, 0, &mut b, &table, &mut rhs);
    Ok(lhs == rhs)
}

/// The full product of backward differences applied to the extended Magog
/// border count drops `n` by one: valid for `n > k` on every weakly
/// decreasing `a` with `a_k >= 1`.
pub fn check_pde_magog(k: usize, n: i64, a: &[i64]) -> Result<bool> {
    let sorted = a.windows(2).all(|w| w[0] >= w[1]);
    need(
        n > k as i64 && sorted && a[0] <= n && a[k - 1] >= 1,
        "the Magog difference equation",
    )?;
    let mut op = super::ops::ShiftOperator::identity(k);
    for i in 0..k {
        op = op.mul(&super::ops::ShiftOperator::backward_difference(k, i));
    }
    let lhs = op.apply(|p| Ok(rat_int(border_count_magog(k, n, p))), a)?;
    let rhs = rat_int(border_count_magog(k, n - 1, a));
    Ok(lhs == rhs)
}

/// The Gog neighbor-sum recurrence over the clamped box
/// `k-i+1 <= b_i <= min(a_i, a_{i-1} - 1)` (with `a_0` unbounded).
pub fn check_howard(k: usize, n: i64, a: &[i64]) -> Result<bool> {
    need(n > k as i64 && in_land_of_gog(k, n, a), "the Gog neighbor-sum recurrence")?;
    let lhs = border_count_gog(k, n, a);
    let table = gog_border_table(k, n - 1);
    let mut rhs = 0i64;
    let mut b = vec![0i64; k];
    fn rec(
        k: usize,
        n: i64,
        a: &[i64],
        i: usize,
        b: &mut Vec<i64>,
        table: &std::collections::BTreeMap<Vec<i64>, i64>,
        acc: &mut i64,
    ) {
        if i == k {
            *acc += table.get(b).copied().unwrap_or(0);
            return;
        }
        let mut hi = a[i].min(n - 1);
        if i >= 1 {
            hi = hi.min(a[i - 1] - 1).min(b[i - 1]);
        }
        let lo = (k - i) as i64;
        for v in lo..=hi {
            b[i] = v;
            rec(k, n, a, i + 1, b, table, acc);
        }
    }
    rec(k, n, a, 0, &mut b, &table, &mut rhs);
    Ok(lhs == rhs)
}

/// The plain border count agrees with the summed count at the clamped
/// argument: `M(n; a) = Mtilde(n; a_1, min(a_1-1, a_2), …)`, `n > k`.
pub fn check_bill(k: usize, n: i64, a: &[i64]) -> Result<bool> {
    need(n > k as i64 && in_land_of_gog(k, n, a), "the clamped-argument identity")?;
    let lhs = border_count_gog(k, n, a);
    let mut arg = a.to_vec();
    for i in 1..k {
        arg[i] = arg[i].min(a[i - 1] - 1);
    }
    Ok(lhs == tilde_m(k, n, &arg))
}

/// The descent-product recurrence for the summed Gog count, with the
/// min-clamped right side.
pub fn check_pde_gog(k: usize, n: i64, a: &[i64]) -> Result<bool> {
    need(n > k as i64 && in_land_of_gog(k, n, a), "the Gog difference equation")?;
    let op = p_a_operator(a)?;
    let lhs = op.apply(|p| Ok(rat_int(tilde_m(k, n, p))), a)?;
    let mut arg = a.to_vec();
    for i in 1..k {
        arg[i] = arg[i].min(a[i - 1] - 1);
    }
    let rhs = rat_int(tilde_m(k, n - 1, &arg));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comb::land_of_gog_points;

    #[test]
    fn spot_examples() {
        assert!(check_pde_magog(2, 3, &[2, 1]).unwrap());
        assert!(check_bill(2, 3, &[2, 2]).unwrap());
        assert!(check_ekhad(2, 3, &[2, 1]).unwrap());
        assert!(check_howard(2, 3, &[2, 1]).unwrap());
    }

    #[test]
    fn gog_pde_including_ceiling_branch() {
        for n in 3..=4i64 {
            for a in land_of_gog_points(2, n) {
                if n > 2 {
                    assert!(check_pde_gog(2, n, &a).unwrap(), "({n}; {a:?})");
                }
            }
        }
        // the a_1 = n branch is exercised by (3; 3, 2) among others
        assert!(check_pde_gog(2, 3, &[3, 2]).unwrap());
    }
}
