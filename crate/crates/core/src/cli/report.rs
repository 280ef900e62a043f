//! The acceptance criteria as executable checks. Every tolerance lives here.

use std::time::Instant;

use rug::{Float, Rational};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::extremal::{
    alpha_w0_closed, alpha_w0_recurrence, components_family, ratio_laws_observed, ratio_laws_predicted,
};
use crate::forms::catalog;
use crate::identities::{self, ints6, verify_lcomb, Status, DEFAULT_ORDER, LCOMB_A};
use crate::lambert::{self, certify_lemma, recheck, CertificateJson, Method, LEMMAS, NON_EXAMPLES};
use crate::numeric::{
    a_w_family_scan, e2_inversion_residual, fmt_float, limit_t0, monotonicity_scan, values_at_i, EvalConfig, GridSpec,
    Verdict, DECREASING_PAIRS, SIGN_CHANGE_PAIRS,
};
use crate::positivity::{ratio_label, signs, x122_doubling_check, y_w2_report};

pub const IDENTITY_BUDGET_S: f64 = 120.0;
pub const LCOMB_CONTROL_MAX_EXPONENT: i64 = 10;
pub const POSITIVITY_ORDER: usize = 2000;
pub const DOUBLING_BOUND: usize = 500;
pub const RATIO_BOUND: usize = 4096;
pub const E2_INVERSION_TOL: f64 = 1e-20;
pub const E6_AT_I_TOL: f64 = 1e-25;
pub const X81_CRITICAL_TOL: f64 = 1e-15;
pub const X101_CLOSED_REL_TOL: f64 = 1e-15;
pub const LIMIT_REL_TOL: f64 = 1e-6;
pub const SCAN_BUDGET_S: f64 = 60.0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Criterion {
    pub id: u32,
    pub title: String,
    pub passed: bool,
    /// One entry per sub-check, `ok` or `FAIL` first.
    pub details: Vec<String>,
    pub elapsed_ms: f64,
}

struct Checks(Vec<(bool, String)>);

impl Checks {
    fn new() -> Self {
        Checks(Vec::new())
    }

    fn add(&mut self, ok: bool, msg: impl Into<String>) {
        self.0.push((ok, msg.into()));
    }

    fn finish(self, id: u32, title: &str, start: Instant) -> Criterion {
        Criterion {
            id,
            title: title.to_string(),
            passed: self.0.iter().all(|(ok, _)| *ok),
            details: self.0.into_iter().map(|(ok, m)| format!("{} {m}", if ok { "ok" } else { "FAIL" })).collect(),
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        }
    }
}

fn guard(id: u32, title: &str, start: Instant, f: impl FnOnce(&mut Checks) -> Result<()>) -> Criterion {
    let mut c = Checks::new();
    if let Err(e) = f(&mut c) {
        c.add(false, format!("error: {e}"));
    }
    c.finish(id, title, start)
}

pub fn identity_suite() -> Criterion {
    let start = Instant::now();
    guard(1, "identity registry exact to order 120 (LFACT to 60)", start, |c| {
        let results = identities::verify_all(DEFAULT_ORDER);
        for r in results.iter().filter(|r| !r.passed()) {
            c.add(false, format!("{} {:?}", r.id, r.status));
        }
        let passed = results.iter().filter(|r| r.passed()).count();
        c.add(passed == results.len(), format!("{passed}/{} identities pass", results.len()));
        let secs = start.elapsed().as_secs_f64();
        c.add(secs < IDENTITY_BUDGET_S, format!("runtime {secs:.1} s < {IDENTITY_BUDGET_S} s"));
        let mut a = ints6(LCOMB_A);
        a[0] += 1;
        let r = verify_lcomb(&a, false, DEFAULT_ORDER)?;
        let ok = match &r.status {
            Status::Fail { exponent, .. } => {
                exponent.parse::<Rational>().is_ok_and(|e| e <= LCOMB_CONTROL_MAX_EXPONENT)
            }
            Status::Pass => false,
        };
        c.add(ok, format!("perturbed LCOMB-A fails early: {:?}", r.status));
        Ok(())
    })
}

pub fn coefficient_laws() -> Criterion {
    let start = Instant::now();
    guard(2, "closed and recurrence constant terms, first-coefficient ratio laws", start, |c| {
        let bad: Vec<u32> =
            (6..=120).step_by(6).filter(|&w| alpha_w0_closed(w).ok() != alpha_w0_recurrence(w).ok()).collect();
        c.add(bad.is_empty(), format!("alpha_w0 closed = recurrence for 6 | w <= 120 (mismatch {bad:?})"));
        let fam = components_family(124, 2);
        let bad: Vec<u32> = (12..=60)
            .step_by(6)
            .filter(|&w| ratio_laws_observed(&fam, w).as_ref() != Some(&ratio_laws_predicted(w)))
            .collect();
        c.add(bad.is_empty(), format!("six ratio laws for 6 | w in [12, 60] (mismatch {bad:?})"));
        let bad: Vec<u32> = fam.values().filter(|d| d.w <= 120 && d.beta(0) != -d.alpha(0)).map(|d| d.w).collect();
        c.add(bad.is_empty(), format!("beta_(w-2,0) = -alpha_(w,0) for even 6 <= w <= 120 (mismatch {bad:?})"));
        Ok(())
    })
}

fn coeffs_match(label: &str, exps: std::ops::RangeInclusive<usize>, want: &[Rational]) -> Result<(bool, String)> {
    let f = catalog::build(label, *exps.end())?;
    let got: Vec<Rational> = exps.clone().map(|k| f.coeff(k)).collect();
    let show = |v: &[Rational]| v.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", ");
    Ok((
        got == want,
        format!("{label} q^{}..q^{}: [{}] vs expected [{}]", exps.start(), exps.end(), show(&got), show(want)),
    ))
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from(x)).collect()
}

pub fn golden_expansions() -> Criterion {
    let start = Instant::now();
    guard(3, "golden expansions of Y_{4,2}, Y_{16,2} and X_{4,2} Delta", start, |c| {
        let (ok, m) = coeffs_match("Y4_2", 1..=5, &ints(&[1, 2, 12, 4, 30]))?;
        c.add(ok, m);
        let (ok, m) = coeffs_match("Y16_2", 5..=5, &[Rational::from((864, 25))])?;
        c.add(ok, m);
        let (ok, m) = coeffs_match("X42Delta", 2..=7, &ints(&[1, -18, 1240, -220, -1620, 11676]))?;
        c.add(ok, m);
        Ok(())
    })
}

fn pattern_mismatch(label: &str, n: usize, rule: impl Fn(usize) -> bool) -> Result<Option<usize>> {
    let f = catalog::build(label, n)?;
    Ok(signs(&f, n)
        .into_iter()
        .enumerate()
        .map(|(k, s)| (k + 1, s))
        .find(|&(k, s)| (s == 1) != rule(k))
        .map(|(k, _)| k))
}

pub fn positivity() -> Criterion {
    let start = Instant::now();
    guard(4, "complete positivity of Y_{w,2}, doubling bound, P1/P2/P3 sign patterns", start, |c| {
        for w in [4, 8, 10, 12] {
            let r = y_w2_report(w, POSITIVITY_ORDER)?;
            c.add(
                r.completely_positive_up_to_order,
                format!("Y{w}_2 completely positive to {POSITIVITY_ORDER} (first negative {:?})", r.first_negative),
            );
        }
        let d = x122_doubling_check(DOUBLING_BOUND)?;
        c.add(
            d.ok && d.ineq1.ok && d.ineq2.ok,
            format!("X12_2 c_2n >= 2^10 c_n to {DOUBLING_BOUND}, inequalities hold"),
        );
        let odd = |n: usize| n % 2 == 1;
        for (label, rule, text) in [
            ("P1", &odd as &dyn Fn(usize) -> bool, "positive iff n odd"),
            ("P3", &odd, "positive iff n odd"),
            ("P2", &|n: usize| n % 4 != 2, "positive iff n != 2 mod 4"),
        ] {
            let bad = pattern_mismatch(label, POSITIVITY_ORDER, rule)?;
            c.add(bad.is_none(), format!("{label} {text} to {POSITIVITY_ORDER} (first mismatch n = {bad:?})"));
        }
        Ok(())
    })
}

pub fn ratio_infima() -> Criterion {
    let start = Instant::now();
    guard(5, "dilation-2 ratio infima of X_{4,2}, X_{8,2}, X_{10,2}", start, |c| {
        let lo = |label: &str| -> Result<(Option<Rational>, Vec<usize>)> {
            let r = ratio_label(label, 2, RATIO_BOUND)?;
            Ok((r.min_ratio.map(|s| s.parse().expect("rational")), r.violations))
        };
        let (m, v) = lo("X4_2")?;
        let ok = v.is_empty() && m.as_ref().is_some_and(|m| *m > 4 && *m <= Rational::from((4002, 1000)));
        c.add(ok, format!("X4_2 min ratio over n <= {RATIO_BOUND} in (4, 4.002]: {m:?}"));
        for (label, bound) in [("X8_2", 64), ("X10_2", 256)] {
            let (m, v) = lo(label)?;
            let ok = v.is_empty() && m.as_ref().is_some_and(|m| *m > bound);
            c.add(ok, format!("{label} min ratio over n <= {RATIO_BOUND} > {bound}: {m:?}"));
        }
        Ok(())
    })
}

pub fn lambert_certificates() -> Criterion {
    let start = Instant::now();
    guard(6, "Lambert monotonicity certificates", start, |c| {
        for name in LEMMAS {
            let cert = certify_lemma(name)?;
            let text = serde_json::to_string(&cert.to_json()).expect("serialize");
            let back: CertificateJson =
                serde_json::from_str(&text).map_err(|e| crate::error::Error::Parse(e.to_string()))?;
            let re = recheck(&back)?;
            c.add(
                cert.is_valid() && re,
                format!("{name} certifies via {:?}, re-verified from JSON: {re}", cert.method),
            );
            if *name == "X101" {
                c.add(cert.method == Method::Taylor, "X101 uses the Taylor method");
                let prefix = cert.c_prefix.clone().unwrap_or_default();
                let c0 = prefix.first().cloned().unwrap_or_default();
                c.add(c0 == 8, format!("X101 c_0 = 8 (computed {c0})"));
                let pos = prefix.len() >= 65 && prefix[1..65].iter().all(|x| *x > 0);
                c.add(pos, "X101 c_1..c_64 > 0");
                c.add(cert.n_star == Some(65), format!("X101 n* = 65 (computed {:?})", cert.n_star));
            }
        }
        for name in NON_EXAMPLES {
            let cert = certify_lemma(name)?;
            let witnesses = match &cert.status {
                lambert::CertStatus::Invalid { witnesses } => witnesses.len(),
                lambert::CertStatus::Valid => 0,
            };
            c.add(!cert.is_valid() && witnesses > 0, format!("{name} fails with {witnesses} witnesses"));
        }
        Ok(())
    })
}

pub fn numerics() -> Criterion {
    let start = Instant::now();
    guard(7, "high-precision values at 128 bits", start, |c| {
        let cfg = EvalConfig::default();
        for t in [0.3, 1.0, 2.5] {
            let r = e2_inversion_residual(t, &cfg)?.abs();
            c.add(r < E2_INVERSION_TOL, format!("E2 inversion residual at t = {t}: {}", fmt_float(&r)));
        }
        let v = values_at_i(&cfg)?;
        let e6 = Float::with_val(128, v.e6.abs_ref());
        c.add(e6 < E6_AT_I_TOL, format!("|E6(i)| = {}", fmt_float(&e6)));
        let crit = Float::with_val(128, v.x81_critical.abs_ref());
        c.add(crit < X81_CRITICAL_TOL, format!("|7 X8_1(i) - 2 pi X8_1'(i)| = {}", fmt_float(&crit)));
        let rel = Float::with_val(128, &v.x101 - &v.x101_closed).abs() / &v.x101_closed;
        c.add(rel < X101_CLOSED_REL_TOL, format!("X10_1(i) vs Gamma(1/4) closed form, rel {}", fmt_float(&rel)));
        let bound = Float::with_val(128, 1) / (Float::with_val(128, rug::float::Constant::Pi) * 120u32);
        c.add(v.x101 > bound, format!("X10_1(i) = {} > 1/(120 pi)", fmt_float(&v.x101)));
        Ok(())
    })
}

pub fn limits() -> Criterion {
    let start = Instant::now();
    guard(8, "limits of t^(w-1) X_{w,1}(it) at 0", start, |c| {
        let cfg = EvalConfig::default();
        for w in [6, 12, 14] {
            let r = limit_t0(w, &cfg)?;
            c.add(
                r.relative_error < LIMIT_REL_TOL,
                format!("w = {w}: measured {} predicted {} (rel {:.1e})", r.measured, r.predicted, r.relative_error),
            );
            if w == 12 {
                let want = 1.0 / (55440.0 * std::f64::consts::PI);
                let p: f64 = r.predicted.parse().unwrap_or(f64::NAN);
                c.add(((p - want) / want).abs() < 1e-12, "w = 12 prediction is 1/(55440 pi)");
            }
        }
        Ok(())
    })
}

pub fn scans() -> Criterion {
    let start = Instant::now();
    guard(9, "monotonicity scans on 60 geometric points of [0.05, 20]", start, |c| {
        let cfg = EvalConfig::default();
        let grid = GridSpec::default();
        for &(label, m) in DECREASING_PAIRS {
            let r = monotonicity_scan(label, m, &grid, &cfg)?;
            c.add(r.verdict == Verdict::MonotoneDecreasingOnGrid, format!("t^{m} {label} decreasing on grid"));
        }
        for &(label, m) in SIGN_CHANGE_PAIRS {
            let r = monotonicity_scan(label, m, &grid, &cfg)?;
            let mut ok = r.verdict == Verdict::SignChangeFound;
            if label == "X8_1" {
                ok &= r.sign_changes.iter().any(|&(a, b)| a < 1.0 && 1.0 < b);
            }
            c.add(ok, format!("t^{m} {label} sign changes {:?}", r.sign_changes));
        }
        let fam = a_w_family_scan(24, &grid, &cfg)?;
        let bad: Vec<&str> =
            fam.iter().filter(|r| r.verdict != Verdict::MonotoneDecreasingOnGrid).map(|r| r.label.as_str()).collect();
        c.add(bad.is_empty(), format!("t^(a_w) X_(w,1) decreasing for w <= 24 (failing {bad:?})"));
        let secs = start.elapsed().as_secs_f64();
        c.add(secs < SCAN_BUDGET_S, format!("runtime {secs:.1} s < {SCAN_BUDGET_S} s"));
        Ok(())
    })
}

pub fn inequality_chain() -> Criterion {
    let start = Instant::now();
    guard(10, "reduction of the X_{12,1} inequality", start, |c| {
        for id in ["E1-A", "E1-B", "X121-DERIV"] {
            let r = identities::verify(id, DEFAULT_ORDER)?;
            c.add(r.passed(), format!("{id} exact to {DEFAULT_ORDER}"));
        }
        let r = monotonicity_scan("X12_1", 11, &GridSpec::default(), &EvalConfig::default())?;
        c.add(r.verdict == Verdict::MonotoneDecreasingOnGrid, "t^11 X12_1 decreasing on grid");
        Ok(())
    })
}

pub fn all_criteria() -> Vec<Criterion> {
    let runs: [fn() -> Criterion; 10] = [
        identity_suite,
        coefficient_laws,
        golden_expansions,
        positivity,
        ratio_infima,
        lambert_certificates,
        numerics,
        limits,
        scans,
        inequality_chain,
    ];
    runs.iter().map(|f| f()).collect()
}

pub fn criterion(id: u32) -> Option<Criterion> {
    let f: fn() -> Criterion = match id {
        1 => identity_suite,
        2 => coefficient_laws,
        3 => golden_expansions,
        4 => positivity,
        5 => ratio_infima,
        6 => lambert_certificates,
        7 => numerics,
        8 => limits,
        9 => scans,
        10 => inequality_chain,
        _ => return None,
    };
    Some(f())
}
