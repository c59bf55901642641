//! The symmetric group `S_k` and the group of signed permutations `W(B_k)`
//! acting on polynomials and rational functions.
//!
//! A signed permutation `(pi, eps)` acts by first replacing `x_i` with
//! `x_{pi(i)}` (simultaneously) and then sending `x_j -> 1 - x_j` wherever
//! `eps_j = -1`. Its sign is `sgn(pi) * (-1)^{number of -1 entries}`.

use crate::algebra::{Factored, LaurentPolynomial, RationalFunction};
use crate::{Error, Result, Var};

/// Which group to sum or test over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    /// Permutations only.
    Sk,
    /// Signed permutations: permutations crossed with bar-flips.
    WBk,
}

/// A pair `(pi, eps)`: `pi` is stored 0-based (`pi[i]` is the image of
/// variable `i`), `eps[i] = false` means `+1`, `true` means a bar-flip.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    pi: Vec<usize>,
    eps: Vec<bool>,
}

impl SignedPermutation {
    pub fn new(pi: Vec<usize>, eps: Vec<bool>) -> Result<Self> {
        let k = pi.len();
        if eps.len() != k {
            return Err(Error::Usage("permutation and sign vector lengths differ".into()));
        }
        let mut seen = vec![false; k];
        for &p in &pi {
            if p >= k || seen[p] {
                return Err(Error::Usage("not a permutation".into()));
            }
            seen[p] = true;
        }
        Ok(SignedPermutation { pi, eps })
    }

    /// Build from 1-based images, e.g. `[2, 3, 1]`, and signs `±1`.
    pub fn from_one_based(pi: &[usize], signs: &[i8]) -> Result<Self> {
        let pi0: Vec<usize> = pi
            .iter()
            .map(|&p| p.checked_sub(1).ok_or_else(|| Error::Usage("1-based image 0".into())))
            .collect::<Result<_>>()?;
        Self::new(pi0, signs.iter().map(|&s| s < 0).collect())
    }

    pub fn identity(k: usize) -> Self {
        SignedPermutation { pi: (0..k).collect(), eps: vec![false; k] }
    }

    /// Adjacent transposition `(i, i+1)` with no flips.
    pub fn transposition(k: usize, i: usize) -> Self {
        let mut pi: Vec<usize> = (0..k).collect();
        pi.swap(i, i + 1);
        SignedPermutation { pi, eps: vec![false; k] }
    }

    /// The bar-flip of a single variable.
    pub fn flip(k: usize, v: usize) -> Self {
        let mut eps = vec![false; k];
        eps[v] = true;
        SignedPermutation { pi: (0..k).collect(), eps }
    }

    pub fn k(&self) -> usize {
        self.pi.len()
    }

    pub fn pi(&self) -> &[usize] {
        &self.pi
    }

    pub fn flips(&self) -> impl Iterator<Item = Var> + '_ {
        self.eps.iter().enumerate().filter(|(_, &e)| e).map(|(v, _)| v)
    }

    pub fn has_flips(&self) -> bool {
        self.eps.iter().any(|&e| e)
    }

    pub fn sgn(&self) -> i64 {
        let mut inv = 0;
        for i in 0..self.pi.len() {
            for j in (i + 1)..self.pi.len() {
                if self.pi[i] > self.pi[j] {
                    inv += 1;
                }
            }
        }
        let flips = self.eps.iter().filter(|&&e| e).count();
        if (inv + flips) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Composition acting as `(g * h) f = g (h f)`.
    pub fn compose(&self, h: &SignedPermutation) -> SignedPermutation {
        let k = self.k();
        assert_eq!(k, h.k());
        let pi: Vec<usize> = (0..k).map(|i| self.pi[h.pi[i]]).collect();
        // inverse of self.pi
        let mut inv = vec![0; k];
        for (i, &p) in self.pi.iter().enumerate() {
            inv[p] = i;
        }
        let mut eps = vec![false; k];
        for (j, slot) in eps.iter_mut().enumerate() {
            *slot = self.eps[j] ^ h.eps[inv[j]];
        }
        SignedPermutation { pi, eps }
    }

    /// All of `S_k` (lexicographic) or `W(B_k)` (permutations lexicographic,
    /// crossed with sign vectors in binary counting order, `eps_1` least
    /// significant).
    pub fn enumerate(k: usize, kind: GroupKind) -> Vec<SignedPermutation> {
        let perms = permutations(k);
        let mut out = Vec::new();
        match kind {
            GroupKind::Sk => {
                for pi in perms {
                    out.push(SignedPermutation { pi, eps: vec![false; k] });
                }
            }
            GroupKind::WBk => {
                for pi in perms {
                    for code in 0..(1u32 << k) {
                        let eps = (0..k).map(|i| (code >> i) & 1 == 1).collect();
                        out.push(SignedPermutation { pi: pi.clone(), eps });
                    }
                }
            }
        }
        out
    }

    /// Image of a variable as a polynomial: `x_i -> z_{pi(i)}` where `z_j`
    /// is `x_j` or `1 - x_j` according to `eps_j`.
    pub fn variable_image(&self, v: Var, nvars: usize) -> LaurentPolynomial {
        let target = self.pi[v];
        if self.eps[target] {
            LaurentPolynomial::bar(target, nvars)
        } else {
            LaurentPolynomial::var(target, nvars)
        }
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    let mut used = vec![false; k];
    fn rec(k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(k, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(k, &mut cur, &mut used, &mut out);
    out
}

/// Image of a Laurent polynomial under `g`. The permutation is exact on
/// exponent vectors; each bar-flip may push a power of `(1 - x_v)` into the
/// denominator when the polynomial has negative exponents in `v`, so the
/// result is returned in factored form.
pub fn act_poly(g: &SignedPermutation, p: &LaurentPolynomial) -> Factored {
    let nvars = p.nvars().max(g.k());
    let permuted = p.pad_to(nvars).permute_vars(g.pi());
    let mut num = permuted;
    let mut out = Factored::one(nvars);
    for v in g.flips() {
        let (flipped, den_pow) = num.flip_var(v);
        num = flipped;
        if den_pow > 0 {
            out.divide_by_factor(&LaurentPolynomial::bar(v, nvars), den_pow as u32);
        }
    }
    out.mul_poly(&num)
}

/// Image of a rational function under `g`.
pub fn act(g: &SignedPermutation, f: &RationalFunction) -> RationalFunction {
    let num = act_poly(g, f.numerator());
    let den = act_poly(g, f.denominator());
    num.to_ratfun().div(&den.to_ratfun()).expect("group image of nonzero denominator")
}

/// Image of a factored rational function under `g`; keeps the denominator
/// factored, which the residue engine depends on.
pub fn act_factored(g: &SignedPermutation, f: &Factored) -> Factored {
    let mut out = act_poly(g, f.numerator());
    for (fac, e) in f.factors() {
        let img = act_poly(g, fac);
        // a factor image is poly / (1-x)^d; dividing swaps the roles
        for _ in 0..e {
            out = out.mul_poly(&bar_power_num(&img));
        }
        out.divide_by_factor(img.numerator(), e);
    }
    out
}

fn bar_power_num(img: &Factored) -> LaurentPolynomial {
    let mut p = LaurentPolynomial::one(img.nvars());
    for (fac, e) in img.factors() {
        p = p.mul(&fac.pow(e));
    }
    p
}

/// `sum over g of sgn(g) * g f`, computed at the polynomial level. The
/// input must be a genuine polynomial (no negative exponents); the summands
/// then stay polynomial.
///
/// Since `eps(pi(f)) = pi(eps'(f))` with the flips carried through the
/// permutation, the double sum factors: antisymmetrize over the flips
/// once, then sum the (cheap) permutation images of the result.
pub fn antisymmetrize_poly(f: &LaurentPolynomial, kind: GroupKind, k: usize) -> LaurentPolynomial {
    assert!(f.is_polynomial(), "antisymmetrize_poly needs nonnegative exponents");
    let nvars = f.nvars().max(k);
    let f = f.pad_to(nvars);
    let flip_sum = match kind {
        GroupKind::Sk => f,
        GroupKind::WBk => {
            let mut acc = LaurentPolynomial::zero(nvars);
            for code in 0..(1u32 << k) {
                let mut img = f.clone();
                let mut flips = 0;
                for v in 0..k {
                    if (code >> v) & 1 == 1 {
                        img = img.flip_var(v).0;
                        flips += 1;
                    }
                }
                if flips % 2 == 1 {
                    img = img.neg();
                }
                acc.add_assign(&img);
            }
            acc
        }
    };
    let mut acc = LaurentPolynomial::zero(nvars);
    for g in SignedPermutation::enumerate(k, GroupKind::Sk) {
        let mut img = flip_sum.permute_vars(g.pi());
        if g.sgn() < 0 {
            img = img.neg();
        }
        acc.add_assign(&img);
    }
    acc
}

/// `sum over g of sgn(g) * g f` for rational functions.
pub fn antisymmetrize(f: &RationalFunction, kind: GroupKind, k: usize) -> RationalFunction {
    let nvars = f.nvars().max(k);
    let mut acc = Factored::zero(nvars);
    for g in SignedPermutation::enumerate(k, kind) {
        let img = act(&g, f);
        let mut t = Factored::from_poly(img.numerator().clone());
        t.divide_by_factor(img.denominator(), 1);
        if g.sgn() < 0 {
            t = t.neg();
        }
        acc = acc.add(&t);
    }
    acc.normalized().to_ratfun().gcd_reduce()
}

/// `g f = sgn(g) f` for the generators: adjacent transpositions, plus the
/// first bar-flip for `W(B_k)`.
pub fn is_antisymmetric(f: &RationalFunction, kind: GroupKind, k: usize) -> bool {
    let mut gens = Vec::new();
    for i in 0..k.saturating_sub(1) {
        gens.push(SignedPermutation::transposition(k, i));
    }
    if kind == GroupKind::WBk && k > 0 {
        gens.push(SignedPermutation::flip(k, 0));
    }
    gens.iter().all(|g| {
        let img = act(g, f);
        let want = if g.sgn() > 0 { f.clone() } else { f.neg() };
        img == want
    })
}

/// Whether the full product of pairwise differences divides `p`.
pub fn divides_vandermonde(p: &LaurentPolynomial, k: usize) -> bool {
    p.divisible_by(&crate::kernels::vandermonde(k))
}

/// Whether the `W(B_k)` discriminant divides `p`.
pub fn divides_delta(p: &LaurentPolynomial, k: usize) -> bool {
    p.divisible_by(&crate::kernels::delta_poly(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int, Monomial};

    fn x(v: usize, n: usize) -> LaurentPolynomial {
        LaurentPolynomial::var(v, n)
    }

    #[test]
    fn action_matches_worked_example() {
        // ([2,3,1], [+1,-1,-1]) applied to x1^2 + 2 x2 + x3^3
        let g = SignedPermutation::from_one_based(&[2, 3, 1], &[1, -1, -1]).unwrap();
        let f = RationalFunction::from_poly(
            x(0, 3).pow(2).add(&x(1, 3).scale(&rat_int(2))).add(&x(2, 3).pow(3)),
        );
        let got = act(&g, &f);
        let expect = RationalFunction::from_poly(
            LaurentPolynomial::bar(1, 3)
                .pow(2)
                .add(&LaurentPolynomial::bar(2, 3).scale(&rat_int(2)))
                .add(&x(0, 3).pow(3)),
        );
        assert_eq!(got, expect);
    }

    #[test]
    fn sign_only_action() {
        // [-1,-1,+1] applied to x1^2 x2^3 x3^4
        let g = SignedPermutation::from_one_based(&[1, 2, 3], &[-1, -1, 1]).unwrap();
        let f = RationalFunction::from_poly(x(0, 3).pow(2).mul(&x(1, 3).pow(3)).mul(&x(2, 3).pow(4)));
        let expect = RationalFunction::from_poly(
            LaurentPolynomial::bar(0, 3)
                .pow(2)
                .mul(&LaurentPolynomial::bar(1, 3).pow(3))
                .mul(&x(2, 3).pow(4)),
        );
        assert_eq!(act(&g, &f), expect);
    }

    #[test]
    fn identity_action() {
        let g = SignedPermutation::identity(2);
        let f = RationalFunction::new(x(0, 2), x(0, 2).add(&x(1, 2))).unwrap();
        assert_eq!(act(&g, &f), f);
    }

    #[test]
    fn signs() {
        assert_eq!(SignedPermutation::from_one_based(&[2, 1], &[1, 1]).unwrap().sgn(), -1);
        assert_eq!(SignedPermutation::from_one_based(&[2, 1], &[-1, 1]).unwrap().sgn(), 1);
        assert_eq!(
            SignedPermutation::from_one_based(&[1, 2, 3], &[-1, -1, -1]).unwrap().sgn(),
            -1
        );
    }

    #[test]
    fn sgn_is_homomorphism_on_wb2() {
        let all = SignedPermutation::enumerate(2, GroupKind::WBk);
        assert_eq!(all.len(), 8);
        for g in &all {
            for h in &all {
                assert_eq!(g.compose(h).sgn(), g.sgn() * h.sgn());
            }
        }
    }

    #[test]
    fn action_is_compatible_with_composition() {
        let f = RationalFunction::new(
            x(0, 2).pow(2).add(&x(1, 2)),
            LaurentPolynomial::one(2).add(&x(0, 2).mul(&x(1, 2))),
        )
        .unwrap();
        let all = SignedPermutation::enumerate(2, GroupKind::WBk);
        for g in &all {
            for h in &all {
                let lhs = act(g, &act(h, &f));
                let rhs = act(&g.compose(h), &f);
                assert_eq!(lhs, rhs, "g={g:?} h={h:?}");
            }
        }
    }

    #[test]
    fn antisymmetrizer_small_cases() {
        // S_2 antisymmetrizer of x2 is x2 - x1
        let got = antisymmetrize_poly(&x(1, 2), GroupKind::Sk, 2);
        assert_eq!(got, x(1, 2).sub(&x(0, 2)));
        // W(B_1) antisymmetrizer of 1 is 0
        let got = antisymmetrize_poly(&LaurentPolynomial::one(1), GroupKind::WBk, 1);
        assert!(got.is_zero());
        // S_2 antisymmetrizer of x1 x2^2 is x1 x2 (x2 - x1)
        let got = antisymmetrize_poly(&x(0, 2).mul(&x(1, 2).pow(2)), GroupKind::Sk, 2);
        let expect = x(0, 2).mul(&x(1, 2)).mul(&x(1, 2).sub(&x(0, 2)));
        assert_eq!(got, expect);
    }

    #[test]
    fn antisymmetry_predicate() {
        let f = RationalFunction::from_poly(x(1, 2).sub(&x(0, 2)));
        assert!(is_antisymmetric(&f, GroupKind::Sk, 2));
        let g = RationalFunction::from_poly(x(0, 2).add(&x(1, 2)));
        assert!(!is_antisymmetric(&g, GroupKind::Sk, 2));
    }

    #[test]
    fn sgn_homomorphism_sampled_on_wb3() {
        let all = SignedPermutation::enumerate(3, GroupKind::WBk);
        for (i, g) in all.iter().enumerate().step_by(7) {
            for (j, h) in all.iter().enumerate().step_by(5) {
                let _ = (i, j);
                assert_eq!(g.compose(h).sgn(), g.sgn() * h.sgn());
            }
        }
    }

    #[test]
    fn divisibility_counterexample_at_k1() {
        // x1 is not divisible by 1 - 2 x1
        assert!(!divides_delta(&x(0, 1), 1));
    }

    #[test]
    fn discriminant_is_antisymmetric_up_to_k4() {
        for k in 1..=4usize {
            let d = RationalFunction::from_poly(crate::kernels::delta_poly(k));
            assert!(is_antisymmetric(&d, GroupKind::WBk, k), "k={k}");
        }
    }

    #[test]
    fn act_preserves_rational_structure() {
        // flips on a function with negative exponents route through (1-x) denominators
        let g = SignedPermutation::from_one_based(&[1], &[-1]).unwrap();
        let f = RationalFunction::from_poly(LaurentPolynomial::monomial(
            Monomial::new(vec![-2]),
            rat(3, 2),
        ));
        let got = act(&g, &f);
        let expect = RationalFunction::new(
            LaurentPolynomial::constant(rat(3, 2), 1),
            LaurentPolynomial::bar(0, 1).pow(2),
        )
        .unwrap();
        assert_eq!(got, expect);
    }
}
