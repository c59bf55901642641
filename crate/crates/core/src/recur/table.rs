use std::collections::BTreeMap;
use std::fmt;

use crate::{Error, Result};

/// An exact integer table over lattice points `(n; a_1, …, a_k)`, defined
/// exactly on a tagged region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteTable {
    domain: String,
    entries: BTreeMap<(i64, Vec<i64>), i64>,
}

impl DiscreteTable {
    pub fn new(domain: impl Into<String>) -> Self {
        DiscreteTable { domain: domain.into(), entries: BTreeMap::new() }
    }

    pub fn domain(&self) -> &str {
        &self.domain
    }

    pub fn insert(&mut self, n: i64, a: Vec<i64>, value: i64) {
        self.entries.insert((n, a), value);
    }

    pub fn contains(&self, n: i64, a: &[i64]) -> bool {
        self.entries.contains_key(&(n, a.to_vec()))
    }

    pub fn get(&self, n: i64, a: &[i64]) -> Result<i64> {
        self.entries
            .get(&(n, a.to_vec()))
            .copied()
            .ok_or_else(|| Error::Domain(format!("({n}; {a:?}) not in {}", self.domain)))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i64, Vec<i64>), &i64)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// One line per point: `n;a1,…,ak=value`.
impl fmt::Display for DiscreteTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((n, a), v) in &self.entries {
            let a_str: Vec<String> = a.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{n};{}={v}", a_str.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_and_dump() {
        let mut t = DiscreteTable::new("test");
        t.insert(3, vec![2, 1], 7);
        assert_eq!(t.get(3, &[2, 1]).unwrap(), 7);
        assert!(matches!(t.get(3, &[1, 1]), Err(Error::Domain(_))));
        assert_eq!(t.to_string(), "3;2,1=7\n");
    }
}
