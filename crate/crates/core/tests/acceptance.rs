//! The acceptance suite: one test per criterion, each printing a pass/fail
//! line and pinning its tolerance and runtime budget in code.
//!
//! Run with `cargo test -p gogmagog --test acceptance -- --nocapture` to
//! see the per-criterion lines.

use std::time::{Duration, Instant};

use gogmagog::algebra::{rat_int, LaurentPolynomial, RationalFunction};
use gogmagog::checks::{group_for, run_all, run_check, wb3_subset, CheckParams};
use gogmagog::comb::{
    asm_count_formula, b_brute, bar_land_of_magog_points,
    border_count_magog, enumerate_asm, land_of_gog_points, land_of_magog_points, m_brute,
    tilde_m,
};
use gogmagog::engine::{ct_fast, ct_iterated, res_iterated_factored};
use gogmagog::group::act_factored;
use gogmagog::kernels::{gog_border, gog_res, gog_total, magog_border, magog_res, magog_total};
use gogmagog::recur::{
    check_bill, check_ekhad, check_howard, check_pde_gog, check_pde_magog, tabulate_x,
    tabulate_y,
};

fn report(criterion: u32, what: &str, pass: bool, elapsed: Duration) {
    println!(
        "ACCEPTANCE {criterion}: {} — {what} ({} ms)",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_millis()
    );
    assert!(pass, "criterion {criterion} failed: {what}");
}

fn budget(criterion: u32, elapsed: Duration, limit: Duration) {
    assert!(
        elapsed <= limit,
        "criterion {criterion} exceeded its runtime budget: {elapsed:?} > {limit:?}"
    );
}

#[test]
fn criterion_01_asm_counts() {
    let start = Instant::now();
    let expect: [i64; 6] = [1, 2, 7, 42, 429, 7436];
    let mut ok = true;
    for (i, &e) in expect.iter().enumerate() {
        let n = i + 1;
        let got = enumerate_asm(n).len() as i64;
        ok &= got == e;
        ok &= asm_count_formula(n) == num_bigint_from(e);
    }
    let elapsed = start.elapsed();
    report(1, "matrix counts match the product formula for n = 1..6", ok, elapsed);
    budget(1, elapsed, Duration::from_secs(60));
}

fn num_bigint_from(v: i64) -> num_bigint::BigInt {
    num_bigint::BigInt::from(v)
}

#[test]
fn criterion_02_equinumeracy() {
    let start = Instant::now();
    let mut ok = true;
    for n in 1..=6usize {
        for k in 1..=n {
            ok &= b_brute(k, n) == m_brute(k, n);
        }
    }
    ok &= b_brute(3, 5) == 387;
    ok &= b_brute(1, 3) == 5;
    ok &= b_brute(2, 3) == 7;
    let elapsed = start.elapsed();
    report(2, "Gog and Magog trapezoid counts agree for all k <= n <= 6", ok, elapsed);
    budget(2, elapsed, Duration::from_secs(180));
}

#[test]
fn criterion_03_total_count_formulas() {
    let start = Instant::now();
    let mut ok = true;
    for k in 1..=3usize {
        for n in k as i64..=5 {
            ok &= ct_fast(&magog_total(k, n).unwrap().to_ratfun()).unwrap()
                == rat_int(b_brute(k, n as usize));
            ok &= ct_fast(&gog_total(k, n).unwrap().to_ratfun()).unwrap()
                == rat_int(m_brute(k, n as usize));
        }
    }
    let elapsed = start.elapsed();
    report(3, "constant-term totals equal brute counts for k <= 3, n <= 5", ok, elapsed);
    budget(3, elapsed, Duration::from_secs(300));
}

#[test]
fn criterion_04_border_formulas() {
    let start = Instant::now();
    let mut ok = true;
    for k in 1..=3usize {
        for n in k as i64..=4 {
            for a in bar_land_of_magog_points(k, n) {
                ok &= ct_fast(&magog_border(k, n, &a).unwrap().to_ratfun()).unwrap()
                    == rat_int(border_count_magog(k, n, &a));
            }
            for a in land_of_gog_points(k, n) {
                if !gogmagog::comb::in_bar_land_of_gog(k, n, &a) {
                    continue; // the chopped corner has no summed count
                }
                ok &= ct_fast(&gog_border(k, n, &a).unwrap().to_ratfun()).unwrap()
                    == rat_int(tilde_m(k, n, &a));
            }
        }
    }
    let elapsed = start.elapsed();
    report(4, "border formulas match border counts for k <= 3, n <= 4", ok, elapsed);
}

#[test]
fn criterion_05_recurrences_and_tabulation() {
    let start = Instant::now();
    let mut ok = true;
    for k in 1..=3usize {
        let x_tables = tabulate_x(k, 4).unwrap();
        let xt = x_tables.last().unwrap();
        for ((n, a), v) in xt.iter() {
            ok &= *v == border_count_magog(k, *n, a);
            ok &= ct_fast(&magog_border(k, *n, a).unwrap().to_ratfun()).unwrap() == rat_int(*v);
        }
        let y_tables = tabulate_y(k, 4).unwrap();
        let yt = y_tables.last().unwrap();
        for ((n, a), v) in yt.iter() {
            ok &= *v == tilde_m(k, *n, a);
            ok &= ct_fast(&gog_border(k, *n, a).unwrap().to_ratfun()).unwrap() == rat_int(*v);
        }
        for n in (k as i64 + 1)..=4 {
            for a in land_of_magog_points(k, n) {
                ok &= check_ekhad(k, n, &a).unwrap();
                ok &= check_pde_magog(k, n, &a).unwrap();
            }
            for a in land_of_gog_points(k, n) {
                ok &= check_howard(k, n, &a).unwrap();
                ok &= check_bill(k, n, &a).unwrap();
                ok &= check_pde_gog(k, n, &a).unwrap();
            }
        }
    }
    let elapsed = start.elapsed();
    report(5, "tabulated solutions and recurrences agree pointwise", ok, elapsed);
}

#[test]
fn criterion_06_closing_identity() {
    let mut ok = true;
    let mut k4 = Duration::ZERO;
    let start = Instant::now();
    for k in 1..=4usize {
        let t = Instant::now();
        ok &= run_check("S15", &CheckParams::k_only(k)).unwrap().passed();
        if k == 4 {
            k4 = t.elapsed();
        }
        // per-variable degree structure of the kernels, including k = 4
        let d = gogmagog::kernels::delta_poly(k);
        let p = gogmagog::kernels::phi_poly(k);
        for v in 0..k {
            ok &= d.degree_in(v) == Some(2 * k as i64 - 1);
            ok &= p.degree_in(v).unwrap() <= 4 * k as i64 - 3;
        }
    }
    let elapsed = start.elapsed();
    report(6, "the squared-kernel identity holds exactly for k = 1..4", ok, elapsed);
    budget(6, k4, Duration::from_secs(300));
}

#[test]
fn criterion_07_residue_invariance() {
    let start = Instant::now();
    let mut ok = true;
    // every element of the order-2 group, three sizes, both families
    for n in 2..=4i64 {
        let fm = magog_res(2, n).unwrap();
        let fg = gog_res(2, n).unwrap();
        let b = rat_int(b_brute(2, n as usize));
        let m = rat_int(m_brute(2, n as usize));
        for g in group_for(2) {
            ok &= res_iterated_factored(&act_factored(&g, &fm), &[0, 1]).unwrap() == b;
            ok &= res_iterated_factored(&act_factored(&g, &fg), &[0, 1]).unwrap() == m;
        }
    }
    // the fixed order-3 subset at n = 3
    let subset = wb3_subset();
    assert!(subset.len() >= 6);
    assert!(subset.iter().filter(|g| g.has_flips()).count() >= 2);
    let fm = magog_res(3, 3).unwrap();
    let fg = gog_res(3, 3).unwrap();
    let b = rat_int(b_brute(3, 3));
    let m = rat_int(m_brute(3, 3));
    for g in &subset {
        ok &= res_iterated_factored(&act_factored(g, &fm), &[0, 1, 2]).unwrap() == b;
        ok &= res_iterated_factored(&act_factored(g, &fg), &[0, 1, 2]).unwrap() == m;
    }
    let elapsed = start.elapsed();
    report(7, "iterated residues of all group images give the counts", ok, elapsed);
}

#[test]
fn criterion_08_summation_identities() {
    let start = Instant::now();
    let mut ok = true;
    for k in 1..=4usize {
        ok &= run_check("S113", &CheckParams::k_only(k)).unwrap().passed();
    }
    // the signed-sum evaluation of the difference product for k <= 5
    use gogmagog::group::{antisymmetrize_poly, GroupKind};
    use gogmagog::kernels::vandermonde;
    for k in 1..=5usize {
        let mut base = LaurentPolynomial::one(k);
        for i in 0..k {
            base = base.mul(&LaurentPolynomial::var(i, k).pow(i as u32));
        }
        ok &= antisymmetrize_poly(&base, GroupKind::Sk, k) == vandermonde(k);
    }
    let elapsed = start.elapsed();
    report(8, "both classical summation identities hold exactly", ok, elapsed);
}

#[test]
fn criterion_09_specialization_lattice() {
    let start = Instant::now();
    let mut ok = true;
    for k in 1..=4usize {
        for id in ["S151", "S152", "S1521", "S1523"] {
            ok &= run_check(id, &CheckParams::k_only(k)).unwrap().passed();
        }
        if k >= 3 {
            ok &= run_check("S1522", &CheckParams::k_only(k)).unwrap().passed();
        }
    }
    for id in ["S1511", "S1512", "S15221"] {
        ok &= run_check(id, &CheckParams::default()).unwrap().passed();
    }
    let elapsed = start.elapsed();
    report(9, "substitution recursions, degree bounds, and vanishing hold for k <= 4", ok, elapsed);
}

#[test]
fn criterion_10_crucial_fact_suite() {
    let start = Instant::now();
    let mut ok = true;
    for id in ["prop-antisym", "prop-shift-bridge", "prop-renaming-ct", "prop-renaming-res", "prop-ct-res"] {
        for k in 2..=3usize {
            ok &= run_check(id, &CheckParams::k_only(k)).unwrap().passed();
        }
    }
    for id in ["prop-reflection-ct", "prop-reflection-res"] {
        ok &= run_check(id, &CheckParams::default()).unwrap().passed();
    }
    for id in ["prop-antisymmetrizer-sk", "prop-antisymmetrizer-wbk", "prop-divisibility-sk", "prop-divisibility-wbk"] {
        for k in 1..=3usize {
            ok &= run_check(id, &CheckParams::k_only(k)).unwrap().passed();
        }
    }
    // the order-dependence counterexample: no multivariate expansion, so
    // the two orders honestly disagree
    let f = RationalFunction::new(
        LaurentPolynomial::var(0, 2),
        LaurentPolynomial::var(0, 2).add(&LaurentPolynomial::var(1, 2)),
    )
    .unwrap();
    ok &= ct_iterated(&f, &[0, 1]).unwrap() == rat_int(1);
    ok &= ct_iterated(&f, &[1, 0]).unwrap() == rat_int(0);
    let elapsed = start.elapsed();
    report(10, "the randomized property suites pass with zero failures", ok, elapsed);
}

#[test]
fn criterion_11_engine_cross_validation() {
    let start = Instant::now();
    let mut ok = true;
    for k in 1..=3usize {
        ok &= run_check("engines", &CheckParams::k_only(k)).unwrap().passed();
    }
    let elapsed = start.elapsed();
    report(11, "the fast and recursive engines agree on 367 randomized inputs", ok, elapsed);
}

#[test]
fn criterion_12_full_suite_runtime() {
    let start = Instant::now();
    let results = run_all(3, 5, None, false).unwrap();
    let default_elapsed = start.elapsed();
    let all_pass = results.iter().all(|r| r.passed());
    for r in results.iter().filter(|r| !r.passed()) {
        eprintln!("default-suite failure: {} [{}] {}", r.id, r.params, r.witness);
    }
    report(
        12,
        &format!("default suite: {} checks in {:?}", results.len(), default_elapsed),
        all_pass,
        default_elapsed,
    );
    budget(12, default_elapsed, Duration::from_secs(900));

    let start = Instant::now();
    let results = run_all(3, 5, None, true).unwrap();
    let heavy_elapsed = start.elapsed();
    let all_pass = results.iter().all(|r| r.passed());
    for r in results.iter().filter(|r| !r.passed()) {
        eprintln!("heavy-suite failure: {} [{}] {}", r.id, r.params, r.witness);
    }
    println!(
        "ACCEPTANCE 12 (heavy): {} — {} checks in {:?}",
        if all_pass { "PASS" } else { "FAIL" },
        results.len(),
        heavy_elapsed
    );
    assert!(all_pass, "heavy suite reported failures");
    budget(12, heavy_elapsed, Duration::from_secs(3600));
}
