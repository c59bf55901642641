use std::fmt;
use std::time::Instant;

use super::result::CheckResult;
use super::{closing, gog_chain, invariance, magog_chain, props};
use crate::checks::invariance::Family;
use crate::group::GroupKind;
use crate::{Error, Result};

/// Parameters accepted by `run_check`; each check validates the subset it
/// needs.
#[derive(Debug, Clone, Default)]
pub struct CheckParams {
    pub k: Option<usize>,
    pub n: Option<i64>,
    pub a: Option<Vec<i64>>,
    pub r: Option<usize>,
    pub i: Option<usize>,
}

impl CheckParams {
    pub fn kn(k: usize, n: i64) -> Self {
        CheckParams { k: Some(k), n: Some(n), ..Default::default() }
    }

    pub fn k_only(k: usize) -> Self {
        CheckParams { k: Some(k), ..Default::default() }
    }

    fn need_k(&self) -> Result<usize> {
        self.k.ok_or_else(|| Error::Usage("this check needs k".into()))
    }

    fn need_n(&self) -> Result<i64> {
        self.n.ok_or_else(|| Error::Usage("this check needs n".into()))
    }
}

impl fmt::Display for CheckParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        if let Some(a) = &self.a {
            parts.push(format!("a=({})", super::util::fmt_vec(a)));
        }
        if let Some(r) = self.r {
            parts.push(format!("R={r}"));
        }
        if let Some(i) = self.i {
            parts.push(format!("i={i}"));
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// Registry order; ids before the final group mirror the procedure names
/// used throughout the verification narrative, the rest are the
/// randomized property suites.
pub fn registry_ids() -> &'static [&'static str] {
    &[
        "S1", "S11", "S111", "S1111all", "S1112", "S11121", "S11122", "S1113", "S112", "S113",
        "S12", "S121", "S1211all", "S12121all", "S12122", "S12123", "S12124", "S1213", "S13",
        "S131", "S1311", "S13111", "S1312", "S1313", "S1314", "S14", "S141", "S1411", "S14111",
        "S1412", "S1413", "S1414", "S1415", "S1416", "S15", "S151", "S1511", "S1512", "S152",
        "S1521", "S1522", "S15221", "S1523", "prop-antisym", "prop-shift-bridge", "prop-renaming-ct", "prop-renaming-res", "prop-reflection-ct",
        "prop-reflection-res", "prop-ct-res", "prop-antisymmetrizer-sk", "prop-antisymmetrizer-wbk", "prop-divisibility-sk", "prop-divisibility-wbk", "engines",
    ]
}

fn all_borders(k: usize) -> Vec<Vec<i64>> {
    // k >= a_1 >= … >= a_k >= 2
    let mut out = Vec::new();
    let mut cur: Vec<i64> = Vec::new();
    fn rec(k: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let hi = if cur.is_empty() { k as i64 } else { cur[cur.len() - 1] };
        for v in (2..=hi).rev() {
            cur.push(v);
            rec(k, cur, out);
            cur.pop();
        }
    }
    rec(k, &mut cur, &mut out);
    out
}

fn execute(id: &str, p: &CheckParams) -> Result<(bool, String)> {
    match id {
        "S1" => magog_chain::s1(p.need_k()?, p.need_n()?),
        "S11" => magog_chain::s11(p.need_k()?, p.need_n()?),
        "S111" => magog_chain::s111(p.need_k()?, p.need_n()?),
        "S1111all" => magog_chain::s1111all(p.need_k()?, p.need_n()?),
        "S1112" => magog_chain::s1112(p.need_k()?, p.need_n()?),
        "S11121" => {
            let k = p.need_k()?;
            let group = invariance::group_for(k);
            match &p.a {
                Some(a) => magog_chain::s11121(k, a, &group),
                None => {
                    for a in all_borders(k) {
                        let (ok, w) = magog_chain::s11121(k, &a, &group)?;
                        if !ok {
                            return Ok((false, format!("a=({}): {w}", super::util::fmt_vec(&a))));
                        }
                    }
                    Ok((true, String::new()))
                }
            }
        }
        "S11122" => {
            let k = p.need_k()?;
            match &p.a {
                Some(a) => magog_chain::s11122(k, a),
                None => {
                    for a in all_borders(k) {
                        let (ok, w) = magog_chain::s11122(k, &a)?;
                        if !ok {
                            return Ok((false, format!("a=({}): {w}", super::util::fmt_vec(&a))));
                        }
                    }
                    Ok((true, String::new()))
                }
            }
        }
        "S1113" => magog_chain::s1113(p.need_k()?, p.need_n()?),
        "S112" => magog_chain::s112(p.need_k()?, p.need_n()?),
        "S113" => magog_chain::s113(p.need_k()?),
        "S12" => gog_chain::s12(p.need_k()?, p.need_n()?),
        "S121" => gog_chain::s121(p.need_k()?, p.need_n()?),
        "S1211all" => gog_chain::s1211all(p.need_k()?, p.need_n()?),
        "S12121all" => gog_chain::s12121all(p.need_k()?, p.need_n()?),
        "S12122" => gog_chain::s12122(p.need_k()?, p.need_n()?),
        "S12123" => gog_chain::s12123(p.need_k()?, p.need_n()?),
        "S12124" => gog_chain::s12124(p.need_k()?),
        "S1213" => gog_chain::s1213(p.need_k()?, p.need_n()?),
        "S13" => invariance::invariance(Family::Magog, p.need_k()?, p.need_n()?),
        "S131" => invariance::flip_step(Family::Magog, p.need_k()?, p.need_n()?),
        "S1311" => invariance::tamar_magog(p.need_k()?, p.r.unwrap_or(1)),
        "S13111" => invariance::delta_specialization(p.need_k()?, p.r.unwrap_or(1), p.i.unwrap_or(2)),
        "S1312" => invariance::celia(Family::Magog, p.need_k()?, p.need_n()?),
        "S1313" => invariance::hadas_remainder(Family::Magog, p.need_k()?, p.need_n()?),
        "S1314" => invariance::hadas_category(Family::Magog, 0, p.need_k()?, p.need_n()?),
        "S14" => invariance::invariance(Family::Gog, p.need_k()?, p.need_n()?),
        "S141" => invariance::flip_step(Family::Gog, p.need_k()?, p.need_n()?),
        "S1411" => invariance::tamar_gog(p.need_k()?, p.r.unwrap_or(1)),
        "S14111" => invariance::phi_specialization(p.need_k()?, p.r.unwrap_or(1), p.i.unwrap_or(2)),
        "S1412" => invariance::celia(Family::Gog, p.need_k()?, p.need_n()?),
        "S1413" => invariance::hadas_remainder(Family::Gog, p.need_k()?, p.need_n()?),
        "S1414" => invariance::hadas_category(Family::Gog, 0, p.need_k()?, p.need_n()?),
        "S1415" => invariance::hadas_category(Family::Gog, 1, p.need_k()?, p.need_n()?),
        "S1416" => invariance::hadas_category(Family::Gog, 2, p.need_k()?, p.need_n()?),
        "S15" => closing::s15(p.need_k()?),
        "S151" => closing::s151(p.need_k()?),
        "S1511" => closing::s1511(),
        "S1512" => closing::s1512(),
        "S152" => closing::s152(p.need_k()?),
        "S1521" => closing::s1521(p.need_k()?),
        "S1522" => closing::s1522(p.need_k()?),
        "S15221" => closing::s15221(),
        "S1523" => closing::s1523(p.need_k()?),
        "prop-antisym" => props::antisym_kills_ct(p.need_k()?),
        "prop-shift-bridge" => props::shift_operator_bridge(p.need_k()?),
        "prop-renaming-ct" => props::renaming_invariance(p.need_k()?, false),
        "prop-renaming-res" => props::renaming_invariance(p.need_k()?, true),
        "prop-reflection-ct" => props::reflection_identity(false),
        "prop-reflection-res" => props::reflection_identity(true),
        "prop-ct-res" => props::ct_is_res_over_coordinates(p.need_k()?),
        "prop-antisymmetrizer-sk" => props::antisymmetrizer_output(p.need_k()?, GroupKind::Sk),
        "prop-antisymmetrizer-wbk" => props::antisymmetrizer_output(p.need_k()?, GroupKind::WBk),
        "prop-divisibility-sk" => props::antisymmetrizer_divisibility(p.need_k()?, GroupKind::Sk),
        "prop-divisibility-wbk" => props::antisymmetrizer_divisibility(p.need_k()?, GroupKind::WBk),
        "engines" => props::engines(p.need_k()?),
        _ => Err(Error::Registry(id.into())),
    }
}

/// Run a single check at the given parameters.
pub fn run_check(id: &str, params: &CheckParams) -> Result<CheckResult> {
    if !registry_ids().contains(&id) {
        return Err(Error::Registry(id.into()));
    }
    let start = Instant::now();
    match execute(id, params) {
        Ok((true, witness)) => Ok(CheckResult::pass(id, params.to_string(), witness, start.elapsed())),
        Ok((false, witness)) => Ok(CheckResult::fail(id, params.to_string(), witness, start.elapsed())),
        Err(e @ (Error::Usage(_) | Error::Registry(_))) => Err(e),
        Err(e) => Ok(CheckResult::fail(id, params.to_string(), e.to_string(), start.elapsed())),
    }
}

/// Default parameter grid per check, capped by the caller's bounds; the
/// symbolic residue checks extend to `k = 3` only under `heavy`.
fn grid(id: &str, max_k: usize, max_n: i64, heavy: bool) -> Vec<CheckParams> {
    let kn = |kmax: usize, nmax: i64| -> Vec<CheckParams> {
        let mut out = Vec::new();
        for k in 1..=max_k.min(kmax) {
            for n in k as i64..=max_n.min(nmax) {
                out.push(CheckParams::kn(k, n));
            }
        }
        out
    };
    let ks = |lo: usize, kmax: usize| -> Vec<CheckParams> {
        (lo..=max_k.min(kmax)).map(CheckParams::k_only).collect()
    };
    let residue_kn = || -> Vec<CheckParams> {
        let mut out = Vec::new();
        if max_k >= 2 {
            for n in 2..=max_n.min(4) {
                out.push(CheckParams::kn(2, n));
            }
        }
        if heavy && max_k >= 3 && max_n >= 3 {
            out.push(CheckParams::kn(3, 3));
        }
        out
    };
    match id {
        "S1" | "S11" | "S112" | "S12" => kn(3, 5),
        "S111" | "S1111all" | "S1112" | "S1113" | "S121" | "S1211all" | "S12121all"
        | "S12122" | "S12123" | "S1213" => kn(3, 4),
        "S12124" => ks(2, 3),
        "S11121" | "S11122" => {
            let mut out = ks(2, 2);
            if heavy && max_k >= 3 {
                out.push(CheckParams::k_only(3));
            }
            out
        }
        "S113" => ks(1, 4),
        "S13" | "S131" | "S1312" | "S1313" | "S1314" | "S14" | "S141" | "S1412" | "S1413"
        | "S1414" | "S1415" | "S1416" => residue_kn(),
        "S1311" | "S1411" => {
            let mut out = Vec::new();
            if max_k >= 2 {
                for r in 1..=2usize {
                    out.push(CheckParams { k: Some(2), r: Some(r), ..Default::default() });
                }
            }
            if heavy && max_k >= 3 {
                out.push(CheckParams { k: Some(3), r: Some(1), ..Default::default() });
            }
            out
        }
        "S13111" | "S14111" => {
            let mut out = Vec::new();
            if max_k >= 2 {
                out.push(CheckParams { k: Some(2), r: Some(1), i: Some(2), ..Default::default() });
                out.push(CheckParams { k: Some(2), r: Some(2), i: Some(1), ..Default::default() });
            }
            if heavy && max_k >= 3 {
                for i in [2, 3] {
                    out.push(CheckParams { k: Some(3), r: Some(1), i: Some(i), ..Default::default() });
                }
            }
            out
        }
        "S15" | "S151" | "S152" | "S1521" | "S1523" => ks(1, 4),
        "S1522" => ks(3, 4),
        "S1511" | "S1512" | "S15221" => vec![CheckParams::default()],
        "prop-antisym" | "prop-shift-bridge" | "prop-renaming-ct" | "prop-renaming-res" | "prop-ct-res" => ks(2, 3),
        "prop-reflection-ct" | "prop-reflection-res" => vec![CheckParams::default()],
        "prop-antisymmetrizer-sk" | "prop-antisymmetrizer-wbk" | "prop-divisibility-sk" | "prop-divisibility-wbk" => ks(1, 3),
        "engines" => ks(1, 3),
        _ => Vec::new(),
    }
}

fn filter_matches(filter: Option<&str>, id: &str) -> bool {
    match filter {
        None => true,
        Some(f) => {
            if let Some(prefix) = f.strip_suffix('*') {
                id.starts_with(prefix)
            } else {
                id == f
            }
        }
    }
}

/// Run every registered check over its default grid within the bounds.
/// Execution may fan out over threads; results are merged in registry
/// order, so the output is deterministic.
pub fn run_all(
    max_k: usize,
    max_n: i64,
    filter: Option<&str>,
    heavy: bool,
) -> Result<Vec<CheckResult>> {
    if let Some(f) = filter {
        let matches_any = registry_ids().iter().any(|id| filter_matches(Some(f), id));
        if !matches_any {
            return Err(Error::Registry(f.into()));
        }
    }
    let mut jobs: Vec<(&'static str, CheckParams)> = Vec::new();
    for id in registry_ids() {
        if !filter_matches(filter, id) {
            continue;
        }
        for p in grid(id, max_k, max_n, heavy) {
            jobs.push((id, p));
        }
    }
    let mut results: Vec<Option<CheckResult>> = vec![None; jobs.len()];
    let next = std::sync::atomic::AtomicUsize::new(0);
    let threads = std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1).min(8);
    let results_mutex = std::sync::Mutex::new(&mut results);
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if idx >= jobs.len() {
                    break;
                }
                let (id, p) = &jobs[idx];
                let outcome = run_check(id, p).unwrap_or_else(|e| {
                    CheckResult::fail(id, p.to_string(), e.to_string(), std::time::Duration::ZERO)
                });
                results_mutex.lock().unwrap()[idx] = Some(outcome);
            });
        }
    });
    Ok(results.into_iter().map(|r| r.expect("job completed")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_id_is_rejected() {
        assert!(matches!(run_check("S99", &CheckParams::default()), Err(Error::Registry(_))));
    }

    #[test]
    fn small_checks_pass() {
        for (id, p) in [
            ("S1", CheckParams::kn(2, 3)),
            ("S11", CheckParams::kn(1, 3)),
            ("S15", CheckParams::k_only(1)),
            ("S1511", CheckParams::default()),
            ("S1512", CheckParams::default()),
        ] {
            let r = run_check(id, &p).unwrap();
            assert!(r.passed(), "{id}: {}", r.witness);
        }
    }

    #[test]
    fn corrupted_kernel_is_caught() {
        use crate::algebra::LaurentPolynomial;
        let corrupted = crate::kernels::phi_poly(2).add(&LaurentPolynomial::var(0, 2));
        let (ok, witness) = crate::checks::closing::s15_with_phi(2, &corrupted).unwrap();
        assert!(!ok);
        assert!(!witness.is_empty());
    }

    #[test]
    fn filter_prefix_selects_family() {
        let results = run_all(1, 1, Some("S15*"), false).unwrap();
        assert!(!results.is_empty());
        assert!(results.iter().all(|r| r.id.starts_with("S15")));
        assert!(matches!(run_all(1, 1, Some("S99*"), false), Err(Error::Registry(_))));
    }
}
