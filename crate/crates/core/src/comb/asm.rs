use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::gelfand::{GelfandArray, GelfandKind};
use crate::{Error, Result};

/// An alternating sign matrix: entries in `{-1, 0, 1}`, every row and
/// column sums to 1, and the nonzero entries alternate in sign along each
/// row and column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Asm {
    n: usize,
    entries: Vec<Vec<i8>>,
}

impl Asm {
    pub fn new(entries: Vec<Vec<i8>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(Error::Usage("matrix is not square".into()));
        }
        let asm = Asm { n, entries };
        asm.validate()?;
        Ok(asm)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Vec<i8>] {
        &self.entries
    }

    fn validate(&self) -> Result<()> {
        let check_line = |line: Vec<i8>| -> bool {
            let nz: Vec<i8> = line.iter().copied().filter(|&e| e != 0).collect();
            line.iter().all(|e| (-1..=1).contains(e))
                && line.iter().map(|&e| e as i64).sum::<i64>() == 1
                && nz.windows(2).all(|w| w[0] != w[1])
                && nz.first().copied().unwrap_or(0) == 1
        };
        for i in 0..self.n {
            if !check_line(self.entries[i].clone()) {
                return Err(Error::Usage(format!("row {} violates the sign rules", i + 1)));
            }
            let col: Vec<i8> = (0..self.n).map(|r| self.entries[r][i]).collect();
            if !check_line(col) {
                return Err(Error::Usage(format!("column {} violates the sign rules", i + 1)));
            }
        }
        Ok(())
    }
}

/// Rows joined by "/", entries space-separated.
impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// Every alternating sign matrix of order `n`, exactly once, in
/// lexicographic order of the row-major entry list with `-1 < 0 < 1`.
pub fn enumerate_asm(n: usize) -> Vec<Asm> {
    let mut out = Vec::new();
    // column partial sums are always 0 or 1 for a prefix of an ASM
    let mut col = vec![0i8; n];
    let mut rows: Vec<Vec<i8>> = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn extend_row(
        n: usize,
        j: usize,
        row_sum: i8,
        last_sign: i8,
        row: &mut Vec<i8>,
        col: &mut Vec<i8>,
        rows: &mut Vec<Vec<i8>>,
        out: &mut Vec<Asm>,
    ) {
        if j == n {
            if row_sum == 1 && last_sign == 1 {
                rows.push(row.clone());
                fill_rows(n, col, rows, out);
                rows.pop();
            }
            return;
        }
        for e in [-1i8, 0, 1] {
            // nonzero entries alternate starting with +1
            if e != 0 && e != -last_sign && !(e == 1 && last_sign == 0) {
                continue;
            }
            let c = col[j] + e;
            if !(0..=1).contains(&c) {
                continue;
            }
            col[j] = c;
            row.push(e);
            extend_row(n, j + 1, row_sum + e, if e == 0 { last_sign } else { e }, row, col, rows, out);
            row.pop();
            col[j] = c - e;
        }
    }
    fn fill_rows(n: usize, col: &mut Vec<i8>, rows: &mut Vec<Vec<i8>>, out: &mut Vec<Asm>) {
        if rows.len() == n {
            if col.iter().all(|&c| c == 1) {
                out.push(Asm { n, entries: rows.clone() });
            }
            return;
        }
        let mut row = Vec::with_capacity(n);
        extend_row(n, 0, 0, 0, &mut row, col, rows, out);
    }
    fill_rows(n, &mut col, &mut rows, &mut out);
    out
}

/// Partial-sum bijection to monotone (Gog) triangles: triangle row `i`
/// (of length `n - i + 1`) lists, in increasing order, the columns where
/// the first `n - i + 1` matrix rows sum to 1.
pub fn asm_to_monotone(a: &Asm) -> Result<GelfandArray> {
    a.validate()?;
    let n = a.n;
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let depth = n - i + 1;
        let mut row = Vec::new();
        for c in 0..n {
            let s: i64 = (0..depth).map(|r| a.entries[r][c] as i64).sum();
            if s == 1 {
                row.push(c as i64 + 1);
            }
        }
        rows.push(row);
    }
    GelfandArray::new(GelfandKind::GogTriangle, n, n, rows)
}

/// Inverse of `asm_to_monotone`: differences of the indicator vectors of
/// consecutive triangle rows.
pub fn monotone_to_asm(t: &GelfandArray) -> Result<Asm> {
    if t.kind() != GelfandKind::GogTriangle {
        return Err(Error::Usage("expected a Gog triangle".into()));
    }
    t.validate()?;
    let n = t.n();
    let mut entries = Vec::with_capacity(n);
    let mut prev = vec![false; n];
    for depth in 1..=n {
        // triangle row with length `depth` is row index n - depth + 1
        let row = &t.rows()[n - depth];
        let mut ind = vec![false; n];
        for &c in row {
            ind[(c - 1) as usize] = true;
        }
        let asm_row: Vec<i8> =
            (0..n).map(|c| (ind[c] as i8) - (prev[c] as i8)).collect();
        entries.push(asm_row);
        prev = ind;
    }
    Asm::new(entries)
}

/// The product formula `prod_{i=0}^{n-1} (3i+1)!/(n+i)!`.
pub fn asm_count_formula(n: usize) -> BigInt {
    fn factorial(m: usize) -> BigInt {
        let mut f = BigInt::one();
        for i in 2..=m {
            f *= i;
        }
        f
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        num *= factorial(3 * i + 1);
        den *= factorial(n + i);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_the_famous_sequence() {
        let expect = [1usize, 2, 7, 42];
        for (i, &e) in expect.iter().enumerate() {
            let n = i + 1;
            assert_eq!(enumerate_asm(n).len(), e, "n={n}");
            assert_eq!(asm_count_formula(n), BigInt::from(e));
        }
    }

    #[test]
    fn identity_bijection() {
        let id = Asm::new(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let t = asm_to_monotone(&id).unwrap();
        assert_eq!(t.rows(), &[vec![1, 2, 3], vec![1, 2], vec![1]]);
        assert_eq!(monotone_to_asm(&t).unwrap(), id);
    }

    #[test]
    fn roundtrip_up_to_order_five() {
        for n in 1..=5usize {
            for a in enumerate_asm(n) {
                let t = asm_to_monotone(&a).unwrap();
                assert_eq!(monotone_to_asm(&t).unwrap(), a);
            }
        }
    }

    #[test]
    fn worked_triangle_maps_to_valid_asm() {
        let t = GelfandArray::new(
            GelfandKind::GogTriangle,
            5,
            5,
            vec![vec![1, 2, 3, 4, 5], vec![1, 3, 4, 5], vec![2, 4, 5], vec![3, 5], vec![4]],
        )
        .unwrap();
        let a = monotone_to_asm(&t).unwrap();
        assert_eq!(asm_to_monotone(&a).unwrap(), t);
    }

    #[test]
    fn rejects_invalid_matrices() {
        assert!(Asm::new(vec![vec![1, 0], vec![1, 0]]).is_err());
        assert!(Asm::new(vec![vec![-1, 1], vec![1, 0]]).is_err());
    }

    #[test]
    fn text_format() {
        let a = Asm::new(vec![vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]).unwrap();
        assert_eq!(a.to_string(), "0 1 0/1 -1 1/0 1 0");
    }
}
