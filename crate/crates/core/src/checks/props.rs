//! Randomized property checks for the expansion and group machinery:
//! vanishing of antisymmetric constant terms, the shift-operator bridge,
//! order invariance on expandable functions, the reflection identity for
//! binomial-type kernels, the constant-term/residue conversion, and the
//! antisymmetrizer divisibility facts. All randomness is seeded from the
//! check id, so results are reproducible.

use rand::Rng;

use super::util::{random_admissible, random_laurent, random_poly, rng_for};
use crate::algebra::{rat_int, Factored, LaurentPolynomial, Monomial, RationalFunction};
use crate::engine::{ct_fast, ct_iterated_factored, res_iterated_factored};
use crate::group::{
    act_factored, antisymmetrize_poly, divides_delta, divides_vandermonde, is_antisymmetric,
    GroupKind, SignedPermutation,
};
use crate::recur::ShiftOperator;
use crate::Result;

const TRIALS: usize = 100;

fn order(k: usize) -> Vec<usize> {
    (0..k).collect()
}

/// Antisymmetry in two variables kills the constant term.
pub fn antisym_kills_ct(k: usize) -> Result<(bool, String)> {
    let mut rng = rng_for("prop-antisym");
    for trial in 0..TRIALS {
        let h = random_admissible(&mut rng, k);
        let i = rng.gen_range(0..k);
        let j = (i + 1 + rng.gen_range(0..k - 1)) % k;
        let mut pi: Vec<usize> = (0..k).collect();
        pi.swap(i, j);
        let swap = SignedPermutation::new(pi, vec![false; k]).unwrap();
        let f = h.add(&act_factored(&swap, &h).neg());
        let ct = ct_iterated_factored(&f, &order(k))?;
        if ct != rat_int(0) {
            return Ok((false, format!("trial {trial}: ct = {ct}")));
        }
    }
    Ok((true, format!("{TRIALS} antisymmetric inputs vanish")))
}

/// Applying a Laurent polynomial in the inverse shifts to the coefficient
/// table equals multiplying the kernel by the same polynomial in the
/// variables.
pub fn shift_operator_bridge(k: usize) -> Result<(bool, String)> {
    let mut rng = rng_for("prop-shift-bridge");
    for trial in 0..TRIALS / 4 {
        let f = random_admissible(&mut rng, k);
        let p = {
            let mut p = random_laurent(&mut rng, k, 3, 1);
            if p.is_zero() {
                p = LaurentPolynomial::one(k);
            }
            p
        };
        let a: Vec<i64> = (0..k).map(|_| rng.gen_range(-1..=2)).collect();
        let table = |point: &[i64]| -> Result<crate::algebra::Rational> {
            let shift = Monomial::new(point.iter().map(|e| -e).collect());
            let shifted = f.mul_poly(&LaurentPolynomial::monomial(shift, rat_int(1)));
            ct_iterated_factored(&shifted, &order(k))
        };
        let op = ShiftOperator::from_poly(p.clone()).invert_shifts();
        let lhs = op.apply(table, &a)?;
        let rhs = {
            let shift = Monomial::new(a.iter().map(|e| -e).collect());
            let g = f
                .mul_poly(&p)
                .mul_poly(&LaurentPolynomial::monomial(shift, rat_int(1)));
            ct_iterated_factored(&g, &order(k))?
        };
        if lhs != rhs {
            return Ok((false, format!("trial {trial}: {lhs} vs {rhs}")));
        }
    }
    Ok((true, String::new()))
}

/// Variable renaming leaves the constant term (residue) of an expandable
/// function alone, in both senses: permuted integrand and permuted order.
pub fn renaming_invariance(k: usize, residue: bool) -> Result<(bool, String)> {
    let mut rng = rng_for(if residue { "prop-renaming-res" } else { "prop-renaming-ct" });
    let perms = SignedPermutation::enumerate(k, GroupKind::Sk);
    let extract = |f: &Factored, ord: &[usize]| -> Result<crate::algebra::Rational> {
        if residue {
            res_iterated_factored(f, ord)
        } else {
            ct_iterated_factored(f, ord)
        }
    };
    for trial in 0..TRIALS {
        let f = if residue {
            // divide by the coordinate product so residues see honest poles
            let mut g = random_admissible(&mut rng, k);
            for v in 0..k {
                g = g.mul_poly(&LaurentPolynomial::monomial(
                    Monomial::unit(k).with_exp(v, -1),
                    rat_int(1),
                ));
            }
            g
        } else {
            random_admissible(&mut rng, k)
        };
        let base = extract(&f, &order(k))?;
        // one random permutation per trial in both senses, plus every
        // permutation on a thinned subset of trials
        let sampled = std::slice::from_ref(&perms[rng.gen_range(0..perms.len())]);
        let all = trial % 10 == 0;
        for pi in if all { &perms[..] } else { sampled } {
            let permuted = extract(&act_factored(pi, &f), &order(k))?;
            if permuted != base {
                return Ok((false, format!("trial {trial}: permuted integrand gives {permuted} vs {base}")));
            }
            let reordered = extract(&f, pi.pi())?;
            if reordered != base {
                return Ok((false, format!("trial {trial}: permuted order gives {reordered} vs {base}")));
            }
        }
    }
    Ok((true, format!("{TRIALS} renamings agree")))
}

/// The reflection identity for the binomial kernel: for Laurent `P` of
/// degree at most `2A`, the constant term against `1/((1-x)^{A+1} x^A)`
/// is symmetric under `P(x) -> P(1-x)`; the residue version uses
/// `x^{A+1}`.
pub fn reflection_identity(residue: bool) -> Result<(bool, String)> {
    let mut rng = rng_for(if residue { "prop-reflection-res" } else { "prop-reflection-ct" });
    for trial in 0..TRIALS {
        let a_param: i64 = rng.gen_range(1..=4);
        // Laurent polynomial of degree <= 2A (low degree may be negative)
        let mut p = LaurentPolynomial::zero(1);
        for _ in 0..4 {
            let e = rng.gen_range(-2..=2 * a_param);
            let c = rng.gen_range(-3i64..=3);
            p = p.add(&LaurentPolynomial::monomial(Monomial::new(vec![e]), rat_int(c)));
        }
        let x_pow = if residue { a_param + 1 } else { a_param };
        let build = |num: &LaurentPolynomial, extra_bar: i64| -> Factored {
            let mut f = Factored::from_poly(num.clone());
            f.divide_by_factor(&LaurentPolynomial::bar(0, 1), (a_param + 1 + extra_bar) as u32);
            f = f.mul_poly(&LaurentPolynomial::monomial(
                Monomial::new(vec![-x_pow]),
                rat_int(1),
            ));
            f
        };
        // P(1-x) may have negative exponents of (1-x): push them into the kernel
        let (flipped, extra) = p.flip_var(0);
        let lhs = if residue {
            res_iterated_factored(&build(&p, 0), &[0])?
        } else {
            ct_iterated_factored(&build(&p, 0), &[0])?
        };
        let rhs = if residue {
            res_iterated_factored(&build(&flipped, extra), &[0])?
        } else {
            ct_iterated_factored(&build(&flipped, extra), &[0])?
        };
        if lhs != rhs {
            return Ok((false, format!("trial {trial}: A={a_param}, {lhs} vs {rhs}")));
        }
    }
    Ok((true, String::new()))
}

/// Constant terms are residues of the function divided by the coordinate
/// product.
pub fn ct_is_res_over_coordinates(k: usize) -> Result<(bool, String)> {
    let mut rng = rng_for("prop-ct-res");
    for trial in 0..TRIALS {
        let f = random_admissible(&mut rng, k);
        let ct = ct_iterated_factored(&f, &order(k))?;
        let mut g = f.clone();
        for v in 0..k {
            g = g.mul_poly(&LaurentPolynomial::monomial(
                Monomial::unit(k).with_exp(v, -1),
                rat_int(1),
            ));
        }
        let res = res_iterated_factored(&g, &order(k))?;
        if ct != res {
            return Ok((false, format!("trial {trial}: ct {ct} vs res {res}")));
        }
    }
    Ok((true, String::new()))
}

/// The signed group sums produce antisymmetric functions.
pub fn antisymmetrizer_output(k: usize, kind: GroupKind) -> Result<(bool, String)> {
    let mut rng = rng_for(if kind == GroupKind::Sk { "prop-antisymmetrizer-sk" } else { "prop-antisymmetrizer-wbk" });
    for trial in 0..TRIALS {
        let p = random_poly(&mut rng, k, 4, 3);
        let s = antisymmetrize_poly(&p, kind, k);
        if !is_antisymmetric(&RationalFunction::from_poly(s), kind, k) {
            return Ok((false, format!("trial {trial}: output not antisymmetric")));
        }
    }
    Ok((true, String::new()))
}

/// Antisymmetric polynomials are divisible by the pairwise-difference
/// product, resp. the full discriminant.
pub fn antisymmetrizer_divisibility(k: usize, kind: GroupKind) -> Result<(bool, String)> {
    let mut rng = rng_for(if kind == GroupKind::Sk { "prop-divisibility-sk" } else { "prop-divisibility-wbk" });
    for trial in 0..TRIALS {
        let p = random_poly(&mut rng, k, 3, 2);
        let s = antisymmetrize_poly(&p, kind, k);
        let ok = match kind {
            GroupKind::Sk => divides_vandermonde(&s, k),
            GroupKind::WBk => divides_delta(&s, k),
        };
        if !ok {
            return Ok((false, format!("trial {trial}: divisibility fails")));
        }
    }
    Ok((true, String::new()))
}

/// The truncated-series path and the recursive path agree on expandable
/// inputs.
pub fn engines(k: usize) -> Result<(bool, String)> {
    let mut rng = rng_for("engines");
    let trials = 200usize.div_ceil(3.min(k).max(1));
    for trial in 0..trials {
        let f = random_admissible(&mut rng, k);
        let fast = ct_fast(&f.to_ratfun())?;
        let slow = ct_iterated_factored(&f, &order(k))?;
        if fast != slow {
            return Ok((false, format!("trial {trial}: fast {fast} vs recursive {slow}")));
        }
    }
    Ok((true, format!("{trials} inputs agree")))
}
