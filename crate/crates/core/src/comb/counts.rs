use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::gelfand::{enumerate_gog, enumerate_magog};
use super::regions::{in_bar_land_of_gog, in_land_of_gog};

/// Number of `n x k` Magog trapezoids, by enumeration.
pub fn b_brute(k: usize, n: usize) -> i64 {
    enumerate_magog(k, n).len() as i64
}

/// Number of `n x k` Gog trapezoids, by enumeration.
pub fn m_brute(k: usize, n: usize) -> i64 {
    enumerate_gog(k, n).len() as i64
}

type BorderTable = Arc<BTreeMap<Vec<i64>, i64>>;

type TableCache = Mutex<HashMap<(&'static str, usize, i64), BorderTable>>;

fn cached_table(
    key: (&'static str, usize, i64),
    build: impl FnOnce() -> BTreeMap<Vec<i64>, i64>,
) -> BorderTable {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let value = Arc::new(build());
    cache.lock().unwrap().entry(key).or_insert(value).clone()
}

/// Histogram of Magog rightmost borders: `a -> B(n; a)`.
pub fn magog_border_table(k: usize, n: i64) -> BorderTable {
    cached_table(("magog", k, n), || {
        let mut out = BTreeMap::new();
        for m in enumerate_magog(k, n as usize) {
            *out.entry(m.magog_border()).or_insert(0) += 1;
        }
        out
    })
}

/// Histogram of Gog borders along the last diagonal: `a -> M(n; a)`.
pub fn gog_border_table(k: usize, n: i64) -> BorderTable {
    cached_table(("gog", k, n), || {
        let mut out = BTreeMap::new();
        for g in enumerate_gog(k, n as usize) {
            *out.entry(g.gog_border()).or_insert(0) += 1;
        }
        out
    })
}

/// `B(n; a)`: Magog trapezoids with prescribed rightmost border. Zero on
/// any border that breaks the rules, which makes the extended region
/// combinatorially meaningful.
pub fn border_count_magog(k: usize, n: i64, a: &[i64]) -> i64 {
    if n < k as i64 || a.len() != k {
        return 0;
    }
    magog_border_table(k, n).get(a).copied().unwrap_or(0)
}

/// `M(n; a)`: Gog trapezoids with prescribed border diagonal.
pub fn border_count_gog(k: usize, n: i64, a: &[i64]) -> i64 {
    if n < k as i64 || a.len() != k {
        return 0;
    }
    gog_border_table(k, n).get(a).copied().unwrap_or(0)
}

/// The summed border count: for `n > k` the sum of `M(n-1; b)` over the box
/// `n-1 >= b_1 >= … >= b_k >= 1`, `k-i+1 <= b_i <= a_i`; at `n = k` defined
/// by peeling the forced first component; zero off the plain region.
pub fn tilde_m(k: usize, n: i64, a: &[i64]) -> i64 {
    if !in_bar_land_of_gog(k, n, a) {
        return 0;
    }
    if !in_land_of_gog(k, n, a) {
        return 0;
    }
    if n == k as i64 {
        if k == 1 {
            return i64::from(a == [1]);
        }
        // here a_1 = k necessarily (a_1 <= n = k and a_1 >= k)
        return tilde_m(k - 1, n, &a[1..]);
    }
    let table = gog_border_table(k, n - 1);
    let mut total = 0;
    let mut b = vec![0i64; k];
    fn rec(
        k: usize,
        n: i64,
        a: &[i64],
        i: usize,
        b: &mut Vec<i64>,
        table: &BTreeMap<Vec<i64>, i64>,
        total: &mut i64,
    ) {
        if i == k {
            *total += table.get(b).copied().unwrap_or(0);
            return;
        }
        let hi = a[i].min(if i == 0 { n - 1 } else { b[i - 1] });
        let lo = (k - i) as i64;
        for v in lo..=hi {
            b[i] = v;
            rec(k, n, a, i + 1, b, table, total);
        }
    }
    rec(k, n, a, 0, &mut b, &table, &mut total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comb::{asm_count_formula, enumerate_asm, land_of_magog_points};
    use num_bigint::BigInt;

    #[test]
    fn magog_border_values() {
        // B_1(1; 1) = 1
        assert_eq!(border_count_magog(1, 1, &[1]), 1);
        // B_1(3; 2) counts (1,1,2) and (1,2,2)
        assert_eq!(border_count_magog(1, 3, &[2]), 2);
        // a_1 > n breaks the rules
        assert_eq!(border_count_magog(2, 3, &[4, 1]), 0);
    }

    #[test]
    fn border_sums_recover_totals() {
        for k in 1..=3usize {
            for n in k as i64..=5 {
                let total: i64 = land_of_magog_points(k, n)
                    .into_iter()
                    .map(|a| border_count_magog(k, n, &a))
                    .sum();
                assert_eq!(total, b_brute(k, n as usize), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn tilde_m_values() {
        // M_1(1; 1) = 1 via the base case
        assert_eq!(tilde_m(1, 1, &[1]), 1);
        // the summed count at (1, 3; 3) is the full 2x1 total
        assert_eq!(tilde_m(1, 3, &[3]), m_brute(1, 2));
    }

    #[test]
    fn tilde_m_top_corner_is_the_total() {
        for k in 1..=3usize {
            for n in k as i64..=4 {
                let a = vec![n + 1; k];
                assert_eq!(tilde_m(k, n + 1, &a), m_brute(k, n as usize), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn equinumeracy_small() {
        for k in 1..=3usize {
            for n in k..=5 {
                assert_eq!(b_brute(k, n), m_brute(k, n), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn asm_equals_triangles() {
        for n in 1..=4usize {
            assert_eq!(
                BigInt::from(enumerate_asm(n).len()),
                asm_count_formula(n),
            );
            assert_eq!(enumerate_asm(n).len() as i64, m_brute(n, n));
        }
    }
}
