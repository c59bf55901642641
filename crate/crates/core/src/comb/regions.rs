/// A point `(n; a_1, …, a_k)` of the discrete border lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BorderVector {
    pub n: i64,
    pub a: Vec<i64>,
}

impl BorderVector {
    pub fn new(n: i64, a: Vec<i64>) -> Self {
        BorderVector { n, a }
    }
}

/// `n >= k`, `n >= a_1 >= … >= a_k >= 1`, and `a_i <= n - i + 1`.
pub fn in_land_of_magog(k: usize, n: i64, a: &[i64]) -> bool {
    a.len() == k
        && n >= k as i64
        && a.windows(2).all(|w| w[0] >= w[1])
        && a.first().map(|&a1| a1 <= n).unwrap_or(true)
        && a.last().map(|&ak| ak >= 1).unwrap_or(true)
        && a.iter().enumerate().all(|(i0, &ai)| ai <= n - i0 as i64)
}

/// The extension where every consecutive difference (and `n - a_1`) may
/// drop to `-1` and `a_k` to 0.
pub fn in_bar_land_of_magog(k: usize, n: i64, a: &[i64]) -> bool {
    a.len() == k
        && k >= 1
        && n >= k as i64
        && n - a[0] >= -1
        && a.windows(2).all(|w| w[0] - w[1] >= -1)
        && a[k - 1] >= 0
}

/// `n >= k`, `n >= a_1 >= … >= a_k >= 1`, and `a_i >= k - i + 1`.
pub fn in_land_of_gog(k: usize, n: i64, a: &[i64]) -> bool {
    a.len() == k
        && n >= k as i64
        && a.windows(2).all(|w| w[0] >= w[1])
        && a.first().map(|&a1| a1 <= n).unwrap_or(true)
        && a.iter().enumerate().all(|(i0, &ai)| ai >= (k - i0) as i64)
}

/// The extended Gog region: `n - a_1 >= -1`, non-increasing, `a_i >= k - i`,
/// with the side conditions `a_1 = n+1 => a_2 <= n` and
/// `n = k = a_1 => a_2 < k`.
pub fn in_bar_land_of_gog(k: usize, n: i64, a: &[i64]) -> bool {
    if a.len() != k || k < 1 || n < k as i64 {
        return false;
    }
    if n - a[0] < -1 {
        return false;
    }
    if !a.windows(2).all(|w| w[0] >= w[1]) {
        return false;
    }
    if !a.iter().enumerate().all(|(i0, &ai)| ai >= (k - i0 - 1) as i64) {
        return false;
    }
    if k >= 2 {
        if a[0] == n + 1 && a[1] > n {
            return false;
        }
        if n == k as i64 && a[0] == k as i64 && a[1] >= k as i64 {
            return false;
        }
    }
    true
}

fn non_increasing_vectors(k: usize, hi: i64, lo_for: impl Fn(usize) -> i64 + Copy, slack: i64) -> Vec<Vec<i64>> {
    // vectors with a_1 <= hi, each a_{i+1} in [lo_for(i+1), a_i + slack]
    let mut out = Vec::new();
    let mut cur: Vec<i64> = Vec::new();
    fn rec(
        k: usize,
        hi: i64,
        lo_for: &dyn Fn(usize) -> i64,
        slack: i64,
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let i = cur.len();
        let upper = if i == 0 { hi } else { cur[i - 1] + slack };
        let lower = lo_for(i);
        for v in lower..=upper {
            cur.push(v);
            rec(k, hi, lo_for, slack, cur, out);
            cur.pop();
        }
    }
    rec(k, hi, &lo_for, slack, &mut cur, &mut out);
    out
}

/// All border vectors of the plain Magog region for fixed `n`.
pub fn land_of_magog_points(k: usize, n: i64) -> Vec<Vec<i64>> {
    non_increasing_vectors(k, n, |_| 1, 0)
        .into_iter()
        .filter(|a| in_land_of_magog(k, n, a))
        .collect()
}

/// All border vectors of the extended Magog region for fixed `n`.
pub fn bar_land_of_magog_points(k: usize, n: i64) -> Vec<Vec<i64>> {
    non_increasing_vectors(k, n + 1, |_| 0, 1)
        .into_iter()
        .filter(|a| in_bar_land_of_magog(k, n, a))
        .collect()
}

/// All border vectors of the plain Gog region for fixed `n`.
pub fn land_of_gog_points(k: usize, n: i64) -> Vec<Vec<i64>> {
    non_increasing_vectors(k, n, move |i| (k - i) as i64, 0)
        .into_iter()
        .filter(|a| in_land_of_gog(k, n, a))
        .collect()
}

/// All border vectors of the extended Gog region for fixed `n`.
pub fn bar_land_of_gog_points(k: usize, n: i64) -> Vec<Vec<i64>> {
    non_increasing_vectors(k, n + 1, move |i| (k - i) as i64 - 1, 0)
        .into_iter()
        .filter(|a| in_bar_land_of_gog(k, n, a))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn region_examples() {
        assert!(in_land_of_magog(3, 3, &[3, 2, 1]));
        assert!(!in_land_of_magog(3, 3, &[4, 2, 1]));
        assert!(in_bar_land_of_magog(3, 3, &[4, 2, 1]));
    }

    #[test]
    fn gog_chop_clause() {
        // (k; k, k, …) with n = k is excluded from the extended region
        assert!(!in_bar_land_of_gog(3, 3, &[3, 3, 2]));
        assert!(in_bar_land_of_gog(3, 3, &[3, 2, 2]));
        // a_1 = n + 1 requires a_2 <= n
        assert!(!in_bar_land_of_gog(2, 3, &[4, 4]));
        assert!(in_bar_land_of_gog(2, 3, &[4, 3]));
    }

    #[test]
    fn point_enumeration_is_consistent() {
        for k in 1..=3usize {
            for n in k as i64..=5 {
                for a in land_of_magog_points(k, n) {
                    assert!(in_land_of_magog(k, n, &a));
                    assert!(in_bar_land_of_magog(k, n, &a));
                }
                for a in land_of_gog_points(k, n) {
                    assert!(in_land_of_gog(k, n, &a));
                    // the n = k = a_1 = a_2 corner is chopped off the
                    // extended region; everything else embeds
                    let chopped =
                        k >= 2 && n == k as i64 && a[0] == k as i64 && a[1] == k as i64;
                    assert_eq!(in_bar_land_of_gog(k, n, &a), !chopped, "{a:?} n={n}");
                }
                assert!(bar_land_of_magog_points(k, n).len() >= land_of_magog_points(k, n).len());
                assert!(bar_land_of_gog_points(k, n).len() >= land_of_gog_points(k, n).len());
            }
        }
    }
}
