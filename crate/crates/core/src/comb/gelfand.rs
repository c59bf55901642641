use std::fmt;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GelfandKind {
    GogTriangle,
    GogTrapezoid,
    MagogTriangle,
    MagogTrapezoid,
}

/// A Gog or Magog triangular / trapezoidal integer array.
///
/// Gog arrays follow the row convention of the bijection with alternating
/// sign matrices: row 1 is the longest. `d(i, j)` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GelfandArray {
    kind: GelfandKind,
    n: usize,
    k: usize,
    rows: Vec<Vec<i64>>,
}

impl GelfandArray {
    pub fn new(kind: GelfandKind, n: usize, k: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        let arr = GelfandArray { kind, n, k, rows };
        arr.validate()?;
        Ok(arr)
    }

    pub fn kind(&self) -> GelfandKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    fn entry(&self, i: usize, j: usize) -> Option<i64> {
        self.rows.get(i - 1).and_then(|r| r.get(j - 1)).copied()
    }

    pub fn validate(&self) -> Result<()> {
        let (n, k) = (self.n, self.k);
        if k > n || k == 0 {
            return Err(Error::Usage("need n >= k >= 1".into()));
        }
        match self.kind {
            GelfandKind::GogTriangle | GelfandKind::GogTrapezoid => {
                if self.kind == GelfandKind::GogTriangle && k != n {
                    return Err(Error::Usage("triangle needs k = n".into()));
                }
                if self.rows.len() != n {
                    return Err(Error::Usage("wrong number of rows".into()));
                }
                for i in 1..=n {
                    let want = k.min(n + 1 - i);
                    if self.rows[i - 1].len() != want {
                        return Err(Error::Usage(format!("row {i} has wrong length")));
                    }
                }
                for i in 1..=n {
                    for j in 1..=self.rows[i - 1].len() {
                        let d = self.entry(i, j).unwrap();
                        if d < 1 || d > n as i64 {
                            return Err(Error::Usage(format!("entry ({i},{j}) out of range")));
                        }
                        if i == 1 && d != j as i64 {
                            return Err(Error::Usage("first row must be 1..k".into()));
                        }
                        if let Some(right) = self.entry(i, j + 1) {
                            if d >= right {
                                return Err(Error::Usage(format!(
                                    "row {i} not strictly increasing"
                                )));
                            }
                        }
                        if let Some(below) = self.entry(i + 1, j) {
                            if d > below {
                                return Err(Error::Usage(format!(
                                    "column {j} decreases at row {i}"
                                )));
                            }
                        }
                        if j >= 2 {
                            if let Some(below_left) = self.entry(i + 1, j - 1) {
                                if d < below_left {
                                    return Err(Error::Usage(format!(
                                        "interleaving fails at ({i},{j})"
                                    )));
                                }
                            }
                        }
                        if j == k && d > (i + k - 1) as i64 {
                            return Err(Error::Usage(format!(
                                "last-column bound fails at row {i}"
                            )));
                        }
                    }
                }
            }
            GelfandKind::MagogTriangle | GelfandKind::MagogTrapezoid => {
                if self.kind == GelfandKind::MagogTriangle && k != n {
                    return Err(Error::Usage("triangle needs k = n".into()));
                }
                if self.rows.len() != k {
                    return Err(Error::Usage("wrong number of rows".into()));
                }
                for i in 1..=k {
                    if self.rows[i - 1].len() != n + 1 - i {
                        return Err(Error::Usage(format!("row {i} has wrong length")));
                    }
                }
                for i in 1..=k {
                    for j in 1..=(n + 1 - i) {
                        let c = self.entry(i, j).unwrap();
                        if c < 1 || c > j as i64 {
                            return Err(Error::Usage(format!("entry ({i},{j}) out of range")));
                        }
                        if let Some(right) = self.entry(i, j + 1) {
                            if c > right {
                                return Err(Error::Usage(format!("row {i} decreases")));
                            }
                        }
                        if let Some(below) = self.entry(i + 1, j) {
                            if c < below {
                                return Err(Error::Usage(format!("column {j} increases downward")));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Rightmost border `c(i, n-i+1)` of a Magog array, `i = 1..k`.
    pub fn magog_border(&self) -> Vec<i64> {
        (1..=self.k).map(|i| self.entry(i, self.n - i + 1).unwrap()).collect()
    }

    /// Border `d(n-k+i, k-i+1)` of a Gog array, `i = 1..k`.
    pub fn gog_border(&self) -> Vec<i64> {
        (1..=self.k)
            .map(|i| self.entry(self.n - self.k + i, self.k - i + 1).unwrap())
            .collect()
    }
}

/// Rows joined by "/", entries comma-separated.
impl fmt::Display for GelfandArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// All `n x k` Gog trapezoids (`k = n` gives triangles), in lexicographic
/// order of the row-major entry list.
pub fn enumerate_gog(k: usize, n: usize) -> Vec<GelfandArray> {
    assert!(n >= k && k >= 1, "need n >= k >= 1");
    let kind = if k == n { GelfandKind::GogTriangle } else { GelfandKind::GogTrapezoid };
    let first: Vec<i64> = (1..=k.min(n) as i64).collect();
    let mut rows = vec![first];
    let mut out = Vec::new();
    gog_rec(k, n, &mut rows, &mut out, kind);
    out
}

fn gog_rec(
    k: usize,
    n: usize,
    rows: &mut Vec<Vec<i64>>,
    out: &mut Vec<GelfandArray>,
    kind: GelfandKind,
) {
    let i = rows.len(); // rows 1..=i built
    if i == n {
        out.push(GelfandArray { kind, n, k, rows: rows.clone() });
        return;
    }
    let next_len = k.min(n - i); // length of row i+1
    let mut row: Vec<i64> = Vec::with_capacity(next_len);
    gog_row_rec(k, n, rows, &mut row, next_len, out, kind);
}

fn gog_row_rec(
    k: usize,
    n: usize,
    rows: &mut Vec<Vec<i64>>,
    row: &mut Vec<i64>,
    next_len: usize,
    out: &mut Vec<GelfandArray>,
    kind: GelfandKind,
) {
    if row.len() == next_len {
        rows.push(row.clone());
        gog_rec(k, n, rows, out, kind);
        rows.pop();
        return;
    }
    let i = rows.len(); // current row index (the new row is i+1)
    let j = row.len() + 1; // 1-based position being filled
    let above = rows[i - 1][j - 1]; // d(i, j)
    let mut lo = above;
    if j >= 2 {
        lo = lo.max(row[j - 2] + 1);
    }
    let mut hi = n as i64;
    if j < rows[i - 1].len() {
        hi = hi.min(rows[i - 1][j]); // d(i+1, j) <= d(i, j+1)
    }
    if j == k {
        hi = hi.min((i + 1 + k - 1) as i64);
    }
    for v in lo..=hi {
        row.push(v);
        gog_row_rec(k, n, rows, row, next_len, out, kind);
        row.pop();
    }
}

/// All `n x k` Magog trapezoids, in lexicographic order of the row-major
/// entry list.
pub fn enumerate_magog(k: usize, n: usize) -> Vec<GelfandArray> {
    assert!(n >= k && k >= 1, "need n >= k >= 1");
    let kind = if k == n { GelfandKind::MagogTriangle } else { GelfandKind::MagogTrapezoid };
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut out = Vec::new();
    magog_rec(k, n, &mut rows, &mut out, kind);
    out
}

fn magog_rec(
    k: usize,
    n: usize,
    rows: &mut Vec<Vec<i64>>,
    out: &mut Vec<GelfandArray>,
    kind: GelfandKind,
) {
    let i = rows.len();
    if i == k {
        out.push(GelfandArray { kind, n, k, rows: rows.clone() });
        return;
    }
    let len = n - i; // row i+1 has length n - (i+1) + 1
    let mut row = Vec::with_capacity(len);
    magog_row_rec(k, n, rows, &mut row, len, out, kind);
}

fn magog_row_rec(
    k: usize,
    n: usize,
    rows: &mut Vec<Vec<i64>>,
    row: &mut Vec<i64>,
    len: usize,
    out: &mut Vec<GelfandArray>,
    kind: GelfandKind,
) {
    if row.len() == len {
        rows.push(row.clone());
        magog_rec(k, n, rows, out, kind);
        rows.pop();
        return;
    }
    let i = rows.len(); // the new row is i+1
    let j = row.len() + 1;
    let mut lo = 1i64;
    if j >= 2 {
        lo = lo.max(row[j - 2]);
    }
    let mut hi = j as i64;
    if i >= 1 {
        hi = hi.min(rows[i - 1][j - 1]); // c(i+1, j) <= c(i, j)
    }
    for v in lo..=hi {
        row.push(v);
        magog_row_rec(k, n, rows, row, len, out, kind);
        row.pop();
    }
}
