use super::table::DiscreteTable;
use crate::comb::{bar_land_of_gog_points, bar_land_of_magog_points, in_land_of_gog};
use crate::{Error, Result};

fn by_weight(mut points: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    points.sort_by_key(|a| (a.iter().sum::<i64>(), a.clone()));
    points
}

/// The unique table on the extended Magog region satisfying the full
/// backward-difference recurrence together with the boundary conditions
/// (zero on broken differences and above the ceiling, the corner
/// reduction at `n = k`, and the one-point seed at `k = n = 1`).
///
/// Returns one table per level `1..=k`; the last is the requested one.
pub fn tabulate_x(k: usize, n_max: i64) -> Result<Vec<DiscreteTable>> {
    if k < 1 {
        return Err(Error::Usage("need k >= 1".into()));
    }
    let top = n_max.max(k as i64);
    let mut tables: Vec<DiscreteTable> = Vec::new();
    for j in 1..=k {
        let mut t = DiscreteTable::new(format!("bar-Land_Of_Magog_{j}"));
        for n in j as i64..=top {
            for a in by_weight(bar_land_of_magog_points(j, n)) {
                let value = x_value(j, n, &a, &t, tables.last())?;
                t.insert(n, a, value);
            }
        }
        tables.push(t);
    }
    Ok(tables)
}

fn x_value(
    j: usize,
    n: i64,
    a: &[i64],
    t: &DiscreteTable,
    prev: Option<&DiscreteTable>,
) -> Result<i64> {
    // zero boundaries: a broken difference or the ceiling
    for i in 0..j - 1 {
        if a[i] - a[i + 1] == -1 {
            return Ok(0);
        }
    }
    if a[j - 1] == 0 {
        return Ok(0);
    }
    if a[0] == n + 1 {
        return Ok(0);
    }
    if n == j as i64 {
        if j == 1 {
            return Ok(i64::from(a[0] == 1));
        }
        // corner reduction: lower level at the same n, last component pinned
        let delta = i64::from(a[j - 1] == 1);
        if delta == 0 {
            return Ok(0);
        }
        let prev = prev.ok_or_else(|| Error::Internal("missing lower-level table".into()))?;
        return Ok(prev.get(n, &a[..j - 1])? * delta);
    }
    // interior: expand the product of backward differences
    let mut value = t.get(n - 1, a)?;
    for mask in 1u32..(1 << j) {
        let mut b = a.to_vec();
        for (i, bi) in b.iter_mut().enumerate() {
            if (mask >> i) & 1 == 1 {
                *bi -= 1;
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        value -= sign * t.get(n, &b)?;
    }
    Ok(value)
}

/// The unique table on the extended Gog region satisfying the
/// descent-product recurrence with min-clamped right side, together with
/// its boundary conditions.
pub fn tabulate_y(k: usize, n_max: i64) -> Result<Vec<DiscreteTable>> {
    if k < 1 {
        return Err(Error::Usage("need k >= 1".into()));
    }
    let top = n_max.max(k as i64);
    let mut tables: Vec<DiscreteTable> = Vec::new();
    for j in 1..=k {
        let mut t = DiscreteTable::new(format!("bar-Land_Of_Gog_{j}"));
        for n in j as i64..=top {
            for a in by_weight(bar_land_of_gog_points(j, n)) {
                let value = y_value(j, n, &a, &t, tables.last())?;
                t.insert(n, a, value);
            }
        }
        tables.push(t);
    }
    Ok(tables)
}

fn y_value(
    j: usize,
    n: i64,
    a: &[i64],
    t: &DiscreteTable,
    prev: Option<&DiscreteTable>,
) -> Result<i64> {
    // zero boundaries: a component on the floor, or above the ceiling
    for (i0, &ai) in a.iter().enumerate() {
        if ai == (j - i0 - 1) as i64 {
            return Ok(0);
        }
    }
    if a[0] == n + 1 {
        return Ok(0);
    }
    if n == j as i64 {
        // here a[0] = j (floor and ceiling cases are gone)
        if j == 1 {
            return Ok(i64::from(a[0] == 1));
        }
        let prev = prev.ok_or_else(|| Error::Internal("missing lower-level table".into()))?;
        return prev.get(n, &a[1..]);
    }
    debug_assert!(in_land_of_gog(j, n, a), "interior point expected: ({n}; {a:?})");
    // right side of the recurrence: clamp every component below its
    // predecessor
    let mut rhs_a = a.to_vec();
    for i in 1..j {
        rhs_a[i] = rhs_a[i].min(a[i - 1] - 1);
    }
    let mut value = t.get(n - 1, &rhs_a)?;
    // descent set, with a_{k+1} = 0
    let descents: Vec<usize> = (0..j)
        .filter(|&i| {
            let next = if i + 1 < j { a[i + 1] } else { 0 };
            a[i] - next > 0
        })
        .collect();
    for mask in 1u32..(1 << descents.len()) {
        let mut b = a.to_vec();
        for (bit, &i) in descents.iter().enumerate() {
            if (mask >> bit) & 1 == 1 {
                b[i] -= 1;
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        value -= sign * t.get(n, &b)?;
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comb::{border_count_magog, tilde_m};

    #[test]
    fn x_seed() {
        let t = tabulate_x(1, 1).unwrap().pop().unwrap();
        assert_eq!(t.get(1, &[1]).unwrap(), 1);
        assert_eq!(t.get(1, &[0]).unwrap(), 0);
        assert_eq!(t.get(1, &[2]).unwrap(), 0);
    }

    #[test]
    fn x_matches_brute_borders() {
        for k in 1..=2usize {
            let tables = tabulate_x(k, 4).unwrap();
            let t = tables.last().unwrap();
            for ((n, a), v) in t.iter() {
                assert_eq!(*v, border_count_magog(k, *n, a), "({n}; {a:?})");
            }
        }
    }

    #[test]
    fn y_matches_summed_borders() {
        for k in 1..=2usize {
            let tables = tabulate_y(k, 4).unwrap();
            let t = tables.last().unwrap();
            for ((n, a), v) in t.iter() {
                assert_eq!(*v, tilde_m(k, *n, a), "({n}; {a:?})");
            }
        }
    }
}
