use std::cmp::Ordering;

/// A power product `x1^e1 … xk^ek` with integer (possibly negative)
/// exponents. The exponent vector always has the length of the owning
/// polynomial's variable universe; an absent variable has exponent 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<i64>,
}

impl Monomial {
    pub fn new(exps: Vec<i64>) -> Self {
        Monomial { exps }
    }

    pub fn unit(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn var(v: usize, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[v] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, v: usize) -> i64 {
        self.exps.get(v).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> &[i64] {
        &self.exps
    }

    pub fn total_degree(&self) -> i64 {
        self.exps.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Extend the exponent vector with zeros up to `nvars`.
    pub fn padded(&self, nvars: usize) -> Self {
        let mut exps = self.exps.clone();
        exps.resize(nvars.max(exps.len()), 0);
        Monomial { exps }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.exps.len().max(other.exps.len());
        let mut exps = vec![0; n];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exp(i) + other.exp(i);
        }
        Monomial { exps }
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        let n = self.exps.len().max(other.exps.len());
        let mut exps = vec![0; n];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exp(i) - other.exp(i);
        }
        Monomial { exps }
    }

    /// Whether `other` divides `self` with a polynomial quotient
    /// (componentwise `self >= other`).
    pub fn divisible_by(&self, other: &Monomial) -> bool {
        let n = self.exps.len().max(other.exps.len());
        (0..n).all(|i| self.exp(i) >= other.exp(i))
    }

    pub fn pow(&self, e: i64) -> Monomial {
        Monomial { exps: self.exps.iter().map(|x| x * e).collect() }
    }

    pub fn with_exp(&self, v: usize, e: i64) -> Monomial {
        let mut exps = self.exps.clone();
        if exps.len() <= v {
            exps.resize(v + 1, 0);
        }
        exps[v] = e;
        Monomial { exps }
    }
}

/// Graded-lexicographic order: first total degree, ties broken
/// lexicographically on the exponent vector (a larger exponent on an
/// earlier variable sorts first, so `x1` precedes `x2`). Serialization
/// iterates terms in ascending order of this comparison.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                let n = self.exps.len().max(other.exps.len());
                for i in 0..n {
                    match self.exp(i).cmp(&other.exp(i)) {
                        Ordering::Equal => continue,
                        ord => return ord.reverse(),
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let one = Monomial::unit(2);
        let x1 = Monomial::new(vec![1, 0]);
        let x2 = Monomial::new(vec![0, 1]);
        let x1inv = Monomial::new(vec![-1, 0]);
        assert!(x1inv < one);
        assert!(one < x1);
        assert!(x1 < x2);
        // same degree, lex tie-break: higher power of x1 first
        let a = Monomial::new(vec![1, 2]);
        let b = Monomial::new(vec![2, 1]);
        assert!(b < a);
    }
}
