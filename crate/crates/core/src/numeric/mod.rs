//! High-precision evaluation on the imaginary axis, the inversion route for
//! small `t`, monotonicity scans of `t^m F(it)` and the limit checks.
//!
//! A level-one form `F = P(E2, E4, E6)` of weight `w` satisfies
//! `F(i/u) = (-1)^{w/2} Σ_r (-6/π)^r u^{w-r} G_r(iu)` with
//! `G_r = (1/r!) ∂^r P/∂E2^r`, so values at `t < 1` come from rapidly
//! convergent series at `u = 1/t`. Tail estimates are heuristic.

use std::fmt;

use rayon::prelude::*;
use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Rational};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal::{a_w_exponent, x_w1_components, Depth1Components};
use crate::forms::catalog::FormLabel;
use crate::forms::{e2, QPoly, SeriesBank};
use crate::lambert::{self, LambertShape};
use crate::positivity::check_complete_positivity;
use crate::qseries::FourierSeries;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalConfig {
    pub precision_bits: u32,
    /// Truncation is `max(min_order, ⌈order_scale / t⌉)`.
    pub min_order: usize,
    pub order_scale: f64,
    pub tail_safety: u32,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig { precision_bits: 128, min_order: 200, order_scale: 40.0, tail_safety: 10 }
    }
}

impl EvalConfig {
    pub fn with_bits(bits: u32) -> Self {
        EvalConfig { precision_bits: bits, ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.precision_bits < 64 {
            return Err(Error::InvalidInput(format!("precision {} < 64 bits", self.precision_bits)));
        }
        if self.min_order < 16 || self.tail_safety < 1 {
            return Err(Error::InvalidInput("order policy below 16 terms or tail safety < 1".into()));
        }
        Ok(())
    }

    pub fn order_for(&self, t: f64) -> usize {
        self.min_order.max((self.order_scale / t).ceil() as usize)
    }

    fn float(&self, v: f64) -> Float {
        Float::with_val(self.precision_bits, v)
    }

    fn pi(&self) -> Float {
        Float::with_val(self.precision_bits, Constant::Pi)
    }
}

/// Decimal rendering with 25 significant digits.
pub fn fmt_float(x: &Float) -> String {
    x.to_string_radix(10, Some(25))
}

#[derive(Clone, Debug)]
pub struct Evaluation {
    pub value: Float,
    pub tail_estimate: Float,
}

impl fmt::Display for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (tail ≤ {})", fmt_float(&self.value), fmt_float(&self.tail_estimate))
    }
}

/// A series with coefficients rounded once to the working precision.
#[derive(Clone, Debug)]
pub struct NumSeries {
    grain: u32,
    coeffs: Vec<Float>,
}

impl NumSeries {
    pub fn new(f: &FourierSeries, bits: u32) -> Self {
        NumSeries { grain: f.grain(), coeffs: f.coeffs().iter().map(|c| Float::with_val(bits, c)).collect() }
    }

    /// `Σ c_k e^{-2π k t / g}` with the geometric tail estimate.
    pub fn eval(&self, t: &Float, cfg: &EvalConfig) -> Evaluation {
        let bits = cfg.precision_bits;
        let x = Float::with_val(bits, -(cfg.pi() * 2u32 * t) / self.grain).exp();
        let mut acc = Float::with_val(bits, 0);
        for c in self.coeffs.iter().rev() {
            acc *= &x;
            acc += c;
        }
        let n = self.coeffs.len() as u32;
        let last =
            self.coeffs.last().map(|c| Float::with_val(bits, c.abs_ref())).unwrap_or_else(|| Float::with_val(bits, 0));
        let xn = fpow(&x, n as i32 - 1);
        let tail = last * xn * &x * cfg.tail_safety / (Float::with_val(bits, 1) - &x);
        Evaluation { value: acc, tail_estimate: tail }
    }
}

fn fpow(x: &Float, k: i32) -> Float {
    Float::with_val(x.prec(), x.pow(k))
}

fn check_t(t: f64) -> Result<()> {
    if t.is_nan() || t <= 0.0 {
        return Err(Error::NonPositiveT);
    }
    Ok(())
}

/// Direct evaluation of an arbitrary series at `z = it`.
pub fn eval_series(f: &FourierSeries, t: f64, cfg: &EvalConfig) -> Result<Evaluation> {
    check_t(t)?;
    Ok(NumSeries::new(f, cfg.precision_bits).eval(&cfg.float(t), cfg))
}

const SERIES_ORDER_AT_INVERSION: f64 = 1.0;

/// A level-one form prepared for both evaluation routes.
#[derive(Clone, Debug)]
pub struct LevelOneForm {
    pub poly: QPoly,
    pub weight: u32,
    direct: NumSeries,
    taylor: Vec<NumSeries>,
}

impl LevelOneForm {
    pub fn new(poly: &QPoly, cfg: &EvalConfig) -> Result<Self> {
        let weight = poly.weight().ok_or_else(|| Error::InvalidInput("form is not homogeneous".into()))?;
        let order = cfg.order_for(SERIES_ORDER_AT_INVERSION);
        let mut bank = SeriesBank::new(order);
        let bits = cfg.precision_bits;
        let direct = NumSeries::new(&bank.realize(poly), bits);
        let taylor = (0..=poly.depth()).map(|r| NumSeries::new(&bank.realize(&poly.e2_taylor(r)), bits)).collect();
        Ok(LevelOneForm { poly: poly.clone(), weight, direct, taylor })
    }

    pub fn from_label(label: &str, cfg: &EvalConfig) -> Result<Self> {
        let poly = FormLabel::parse(label)?
            .level_one_poly()?
            .ok_or_else(|| Error::InvalidInput(format!("{label} has no level-one polynomial")))?;
        LevelOneForm::new(&poly, cfg)
    }

    pub fn derivative(&self, cfg: &EvalConfig) -> Result<Self> {
        LevelOneForm::new(&self.poly.derivative(), cfg)
    }

    pub fn eval_direct(&self, t: f64, cfg: &EvalConfig) -> Result<Evaluation> {
        check_t(t)?;
        Ok(self.direct.eval(&cfg.float(t), cfg))
    }

    /// `(-1)^{w/2} Σ_r (-6/π)^r u^{w-r} G_r(iu)` at `u = 1/t`.
    pub fn eval_transformed(&self, t: f64, cfg: &EvalConfig) -> Result<Evaluation> {
        check_t(t)?;
        let u = Float::with_val(cfg.precision_bits, 1) / cfg.float(t);
        Ok(inversion_sum(&self.taylor, self.weight as i64, &u, cfg))
    }

    /// Direct series for `t ≥ 1`, inversion below.
    pub fn eval(&self, t: f64, cfg: &EvalConfig) -> Result<Evaluation> {
        if t >= 1.0 {
            self.eval_direct(t, cfg)
        } else {
            self.eval_transformed(t, cfg)
        }
    }
}

/// `(-1)^{w/2} Σ_r c_r u^{w-r} S_r(iu)` with `c_r = (-6/π)^r`.
fn inversion_sum(series: &[NumSeries], w: i64, u: &Float, cfg: &EvalConfig) -> Evaluation {
    let bits = cfg.precision_bits;
    let k = Float::with_val(bits, -6) / cfg.pi();
    let mut value = Float::with_val(bits, 0);
    let mut tail = Float::with_val(bits, 0);
    let mut cr = Float::with_val(bits, 1);
    for (r, s) in series.iter().enumerate() {
        let e = s.eval(u, cfg);
        let up = fpow(u, (w - r as i64) as i32);
        let factor = Float::with_val(bits, &cr * &up);
        value += Float::with_val(bits, &factor * &e.value);
        tail += Float::with_val(bits, factor.abs_ref()) * &e.tail_estimate;
        cr *= &k;
    }
    if (w / 2) % 2 != 0 {
        value = -value;
    }
    Evaluation { value, tail_estimate: tail }
}

/// `s(t) = m F(it) - 2π t F'(it)` for a level-one form, so that
/// `d/dt (t^m F(it)) = t^{m-1} s(t)`.
#[derive(Clone, Debug)]
pub struct ScanPlan {
    pub m: Rational,
    pub form: LevelOneForm,
    pub deriv: LevelOneForm,
    /// `G̃_0` then `H_r = m G_r - 12 G̃_{r+1}`.
    transformed: Vec<NumSeries>,
}

impl ScanPlan {
    pub fn new(poly: &QPoly, m: impl Into<Rational>, cfg: &EvalConfig) -> Result<Self> {
        let m = m.into();
        let form = LevelOneForm::new(poly, cfg)?;
        let dpoly = poly.derivative();
        let deriv = LevelOneForm::new(&dpoly, cfg)?;
        let order = cfg.order_for(SERIES_ORDER_AT_INVERSION);
        let mut bank = SeriesBank::new(order);
        let bits = cfg.precision_bits;
        let mut transformed = vec![NumSeries::new(&bank.realize(&dpoly.e2_taylor(0)), bits)];
        for r in 0..=poly.depth().max(dpoly.depth()) {
            let h = poly.e2_taylor(r).scale(&m).sub(&dpoly.e2_taylor(r + 1).scale(&Rational::from(12)));
            transformed.push(NumSeries::new(&bank.realize(&h), bits));
        }
        Ok(ScanPlan { m, form, deriv, transformed })
    }

    pub fn from_label(label: &str, m: impl Into<Rational>, cfg: &EvalConfig) -> Result<Self> {
        let poly = FormLabel::parse(label)?
            .level_one_poly()?
            .ok_or_else(|| Error::InvalidInput(format!("{label} has no level-one polynomial")))?;
        ScanPlan::new(&poly, m, cfg)
    }

    pub fn s_direct(&self, t: f64, cfg: &EvalConfig) -> Result<Float> {
        let bits = cfg.precision_bits;
        let f = self.form.eval_direct(t, cfg)?.value;
        let fp = self.deriv.eval_direct(t, cfg)?.value;
        Ok(Float::with_val(bits, &self.m) * f - cfg.pi() * 2u32 * cfg.float(t) * fp)
    }

    /// `(-1)^{w/2} [2π u^{w+1} G̃_0(iu) + Σ_r (-6/π)^r u^{w-r} H_r(iu)]`.
    pub fn s_transformed(&self, t: f64, cfg: &EvalConfig) -> Result<Float> {
        check_t(t)?;
        let bits = cfg.precision_bits;
        let w = self.form.weight as i64;
        let u = Float::with_val(bits, 1) / cfg.float(t);
        let head = self.transformed[0].eval(&u, cfg).value * fpow(&u, (w + 1) as i32) * cfg.pi() * 2u32;
        let rest = inversion_sum(&self.transformed[1..], w, &u, cfg).value;
        let head = if (w / 2) % 2 != 0 { -head } else { head };
        Ok(head + rest)
    }

    pub fn s(&self, t: f64, cfg: &EvalConfig) -> Result<Float> {
        if t >= 1.0 {
            self.s_direct(t, cfg)
        } else {
            self.s_transformed(t, cfg)
        }
    }

    /// Scale of the two terms of `s`, for relative tolerances.
    fn magnitude(&self, t: f64, cfg: &EvalConfig) -> Result<Float> {
        let bits = cfg.precision_bits;
        let f = self.form.eval(t, cfg)?.value;
        let fp = self.deriv.eval(t, cfg)?.value;
        Ok(Float::with_val(bits, &self.m) * f.abs() + cfg.pi() * 2u32 * cfg.float(t) * fp.abs())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub t_min: f64,
    pub t_max: f64,
    pub points: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { t_min: 0.05, t_max: 20.0, points: 60 }
    }
}

pub fn geometric_grid(spec: &GridSpec) -> Result<Vec<f64>> {
    check_t(spec.t_min)?;
    if spec.t_max <= spec.t_min || spec.points < 2 {
        return Err(Error::InvalidInput("grid needs t_min < t_max and at least two points".into()));
    }
    let ratio = (spec.t_max / spec.t_min).ln();
    let n = spec.points - 1;
    Ok((0..=n).map(|k| spec.t_min * (ratio * k as f64 / n as f64).exp()).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    MonotoneDecreasingOnGrid,
    SignChangeFound,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub label: String,
    pub m: String,
    pub grid: Vec<f64>,
    pub s_values: Vec<String>,
    pub sign_changes: Vec<(f64, f64)>,
    pub verdict: Verdict,
}

/// Relative slack for calling `s(t)` nonpositive.
fn tolerance(cfg: &EvalConfig) -> Float {
    Float::with_val(cfg.precision_bits, Float::i_exp(1, -(cfg.precision_bits as i32 - 24)))
}

pub fn monotonicity_scan_plan(label: &str, plan: &ScanPlan, spec: &GridSpec, cfg: &EvalConfig) -> Result<ScanReport> {
    cfg.validate()?;
    let grid = geometric_grid(spec)?;
    let tol = tolerance(cfg);
    let values: Vec<(Float, bool)> = grid
        .par_iter()
        .map(|&t| -> Result<(Float, bool)> {
            let s = plan.s(t, cfg)?;
            let slack = plan.magnitude(t, cfg)? * &tol;
            let positive = s > slack;
            Ok((s, positive))
        })
        .collect::<Result<_>>()?;
    let mut sign_changes = Vec::new();
    for k in 1..grid.len() {
        let (a, b) = (&values[k - 1].0, &values[k].0);
        if (a.is_sign_positive() && !a.is_zero()) != (b.is_sign_positive() && !b.is_zero()) {
            sign_changes.push((grid[k - 1], grid[k]));
        }
    }
    let verdict =
        if values.iter().any(|(_, p)| *p) { Verdict::SignChangeFound } else { Verdict::MonotoneDecreasingOnGrid };
    Ok(ScanReport {
        label: label.to_string(),
        m: plan.m.to_string(),
        s_values: values.iter().map(|(s, _)| fmt_float(s)).collect(),
        grid,
        sign_changes,
        verdict,
    })
}

pub fn monotonicity_scan(label: &str, m: impl Into<Rational>, spec: &GridSpec, cfg: &EvalConfig) -> Result<ScanReport> {
    let plan = ScanPlan::from_label(label, m, cfg)?;
    monotonicity_scan_plan(label, &plan, spec, cfg)
}

/// The `(form, m)` pairs expected to scan as decreasing, and those expected
/// to show a sign change.
pub const DECREASING_PAIRS: &[(&str, u32)] = &[
    ("X6_1", 5),
    ("X12_1", 11),
    ("X14_1", 13),
    ("X8_2", 7),
    ("X10_2", 9),
    ("X12_2", 11),
    ("X14_2", 13),
    ("X8_1", 6),
    ("X10_1", 8),
];
pub const SIGN_CHANGE_PAIRS: &[(&str, u32)] = &[("X8_1", 7), ("X10_1", 9)];

/// `t^{a_w} X_{w,1}(it)` scans for even `6 ≤ w ≤ max_w`.
pub fn a_w_family_scan(max_w: u32, spec: &GridSpec, cfg: &EvalConfig) -> Result<Vec<ScanReport>> {
    (6..=max_w)
        .step_by(2)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&w| monotonicity_scan(&format!("X{w}_1"), a_w_exponent(w)?, spec, cfg))
        .collect()
}

/// Evaluation of any catalog label: level-one forms use the hybrid route,
/// everything else the direct series with the order policy.
pub fn eval_label(label: &str, t: f64, cfg: &EvalConfig) -> Result<Evaluation> {
    cfg.validate()?;
    check_t(t)?;
    let parsed = FormLabel::parse(label)?;
    match parsed.level_one_poly()? {
        Some(p) => LevelOneForm::new(&p, cfg)?.eval(t, cfg),
        None => eval_series(&parsed.build(cfg.order_for(t))?, t, cfg),
    }
}

/// `F(it)` and `F'(it)` for `t ≤ 1` from the inversion displays of a
/// depth-one form, evaluated with its `A`, `B` components at `i/t`.
pub fn eval_depth1_transformed(c: &Depth1Components, t: f64, cfg: &EvalConfig) -> Result<(Float, Float)> {
    check_t(t)?;
    let bits = cfg.precision_bits;
    let w = c.w as i64;
    let order = c.a.integer_order();
    let pi = cfg.pi();
    let u = Float::with_val(bits, 1) / cfg.float(t);
    let at = |s: &FourierSeries| NumSeries::new(s, bits).eval(&u, cfg).value;
    let e2s = e2(order);
    let x = c.recompose();
    let xp = x.derivative();
    let b_serre = c.b.derivative().sub(&e2s.mul(&c.b).scale_frac(w - 2, 12));
    let bt = c.a.scale_frac(w, 12).add(&b_serre);
    let (xv, xpv, bv, btv, e2v) = (at(&x), at(&xp), at(&c.b), at(&bt), at(&e2s));
    let upow = |k: i64| fpow(&u, k as i32);
    let sign = if (w / 2) % 2 == 0 { 1 } else { -1 };
    let f = (upow(w) * &xv - upow(w - 1) * Float::with_val(bits, 6) / &pi * &bv) * sign;
    let term1 = upow(w + 2) * &xpv;
    let term2 = upow(w + 1) / &pi * (Float::with_val(bits, -6) * &btv - Float::with_val(bits, w - 1) * &bv * &e2v);
    let term3 = upow(w) / Float::with_val(bits, pi.square_ref()) * Float::with_val(bits, 3 * (w - 1)) * &bv;
    let fp = (term1 + term2 + term3) * (-sign);
    Ok((f, fp))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LimitReport {
    pub w: u32,
    /// `(t, t^{w-1} X_{w,1}(it))` at decreasing `t`.
    pub samples: Vec<(f64, String)>,
    pub measured: String,
    pub predicted: String,
    pub relative_error: f64,
    /// `β_{w-2,0}`.
    pub beta0: String,
}

pub const LIMIT_TS: [f64; 3] = [0.2, 0.1, 0.05];

/// `lim_{t→0} t^{w-1} X_{w,1}(it)` against `-6(-1)^{w/2} β_{w-2,0}/π`.
pub fn limit_t0(w: u32, cfg: &EvalConfig) -> Result<LimitReport> {
    cfg.validate()?;
    let c = x_w1_components(w, cfg.min_order)?;
    let bits = cfg.precision_bits;
    let mut samples = Vec::new();
    let mut last = Float::with_val(bits, 0);
    for &t in &LIMIT_TS {
        let (f, _) = eval_depth1_transformed(&c, t, cfg)?;
        let v = f * fpow(&cfg.float(t), w as i32 - 1);
        samples.push((t, fmt_float(&v)));
        last = v;
    }
    let beta0 = c.beta(0);
    let sign: i64 = if (w / 2).is_multiple_of(2) { 1 } else { -1 };
    let predicted = Float::with_val(bits, &beta0) * (-6 * sign) / cfg.pi();
    let rel = Float::with_val(bits, &last - &predicted).abs() / Float::with_val(bits, predicted.abs_ref());
    Ok(LimitReport {
        w,
        samples,
        measured: fmt_float(&last),
        predicted: fmt_float(&predicted),
        relative_error: rel.to_f64(),
        beta0: beta0.to_string(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TangentReport {
    pub label: String,
    pub m: u32,
    pub f_completely_positive: bool,
    pub fprime_completely_positive: bool,
    /// `(t, F(it) / (t F'(it)))`.
    pub limit_samples: Vec<(f64, String)>,
    pub limit_extrapolated: String,
    pub limit_target: String,
    pub limit_ok: bool,
    pub bracket: String,
    pub bracket_form_positive: bool,
    pub verdict: bool,
}

const TANGENT_ORDER: usize = 500;

/// The three hypotheses for `t^m F(it)` to decrease: positivity of `F` and
/// `F'`, `F/(tF') → 2π/m` at `0`, and `(m+1)F'² - mF''F > 0`.
pub fn tangent_conditions(label: &str, m: u32, cfg: &EvalConfig) -> Result<TangentReport> {
    cfg.validate()?;
    let poly = FormLabel::parse(label)?
        .level_one_poly()?
        .ok_or_else(|| Error::InvalidInput(format!("{label} has no level-one polynomial")))?;
    let fser = poly.to_series(TANGENT_ORDER);
    let f_cp = check_complete_positivity(label, &fser, TANGENT_ORDER).completely_positive_up_to_order;
    let fp_cp = check_complete_positivity(label, &fser.derivative(), TANGENT_ORDER).completely_positive_up_to_order;

    let bits = cfg.precision_bits;
    let form = LevelOneForm::new(&poly, cfg)?;
    let deriv = form.derivative(cfg)?;
    let mut samples = Vec::new();
    let mut ratios = Vec::new();
    for &t in &LIMIT_TS {
        let r = form.eval(t, cfg)?.value / (deriv.eval(t, cfg)?.value * cfg.float(t));
        samples.push((t, fmt_float(&r)));
        ratios.push(r);
    }
    let extrapolated = Float::with_val(bits, &ratios[2] * 2u32) - &ratios[1];
    let target = cfg.pi() * 2u32 / m;
    let rel = Float::with_val(bits, &extrapolated - &target).abs() / &target;
    let limit_ok = rel < 1e-6;

    let (bracket, positive) = bracket_positivity(label, &poly, m, cfg)?;
    Ok(TangentReport {
        label: label.to_string(),
        m,
        f_completely_positive: f_cp,
        fprime_completely_positive: fp_cp,
        limit_samples: samples,
        limit_extrapolated: fmt_float(&extrapolated),
        limit_target: fmt_float(&target),
        limit_ok,
        verdict: f_cp && fp_cp && limit_ok && positive,
        bracket,
        bracket_form_positive: positive,
    })
}

fn bracket_positivity(label: &str, poly: &QPoly, m: u32, cfg: &EvalConfig) -> Result<(String, bool)> {
    use crate::identities::verify;
    let cp = |lbl: &str| -> Result<bool> {
        let s = crate::forms::catalog::build(lbl, TANGENT_ORDER)?;
        Ok(check_complete_positivity(lbl, &s, TANGENT_ORDER).completely_positive_up_to_order)
    };
    let closed = match (label, m) {
        ("X6_1", 5) => Some(("BR-61", "Δ X_{4,2}", "X4_2")),
        ("X14_1", 13) => Some(("BR-141", "4 Δ² X_{8,2}", "X8_2")),
        ("X12_1", 11) => Some(("BR-121", "Δ F / (2^10 3^6 5^2 7^2)", "F")),
        _ => None,
    };
    if let Some((id, text, factor)) = closed {
        let ok = verify(id, 120)?.passed();
        // Δ(it) > 0 from the product; the cofactor is checked below.
        let factor_ok = if factor == "F" {
            let f = LevelOneForm::from_label("F", cfg)?;
            geometric_grid(&GridSpec::default())?
                .iter()
                .map(|&t| f.eval(t, cfg).map(|e| e.value > 0))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .all(|b| b)
        } else {
            cp(factor)?
        };
        let how =
            if factor == "F" { "F(it) > 0 on the scan grid" } else { "cofactor completely positive to order 500" };
        return Ok((format!("{id}: {text}; {how}"), ok && factor_ok));
    }
    let d1 = poly.derivative();
    let d2 = d1.derivative();
    let b = d1.pow(2).scale(&Rational::from(m + 1)).sub(&d2.mul(poly).scale(&Rational::from(m)));
    let s = b.to_series(TANGENT_ORDER);
    let ok = check_complete_positivity("bracket", &s, TANGENT_ORDER).completely_positive_up_to_order;
    Ok(("(m+1)F'^2 - mF''F coefficient scan to order 500".into(), ok))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SmallTReport {
    pub w: u32,
    pub beta1: String,
    pub sign_condition: bool,
    /// `(t, (-1)^{w/2} t^w (-2πt X'(it) + X(it) + 12 B'(it)))`.
    pub samples: Vec<(f64, String)>,
    pub ok: bool,
}

/// `(-1)^{w/2} β_{w-2,1} > 0` exactly, and the transformed expression
/// positive at `t ∈ {5, 10, 20}`.
pub fn small_t_positivity_check(w: u32, cfg: &EvalConfig) -> Result<SmallTReport> {
    cfg.validate()?;
    if w < 12 {
        return Err(Error::BadWeight(w as i64));
    }
    let c = x_w1_components(w, cfg.min_order)?;
    let beta1 = c.beta(1);
    let sign: i64 = if (w / 2).is_multiple_of(2) { 1 } else { -1 };
    let sign_condition = Rational::from(&beta1 * sign) > 0;
    let bits = cfg.precision_bits;
    let x = c.recompose();
    let (xs, xps, bps) =
        (NumSeries::new(&x, bits), NumSeries::new(&x.derivative(), bits), NumSeries::new(&c.b.derivative(), bits));
    let mut samples = Vec::new();
    let mut all = true;
    for t in [5.0, 10.0, 20.0] {
        let tf = cfg.float(t);
        let inner = -(cfg.pi() * 2u32 * &tf * xps.eval(&tf, cfg).value)
            + xs.eval(&tf, cfg).value
            + bps.eval(&tf, cfg).value * 12u32;
        let v = inner * fpow(&tf, w as i32) * sign;
        all &= v > 0;
        samples.push((t, fmt_float(&v)));
    }
    Ok(SmallTReport { w, beta1: beta1.to_string(), sign_condition, samples, ok: sign_condition && all })
}

/// `X_{10,1}(i) = (1/720)(3/π) · 9Γ(1/4)^16/(4096π^12)`.
pub fn x101_at_i_closed_form(bits: u32) -> Float {
    let pi = Float::with_val(bits, Constant::Pi);
    let g = Float::with_val(bits, Float::with_val(bits, 0.25).gamma());
    let e4sq = fpow(&g, 16) * 9u32 / (fpow(&pi, 12) * 4096u32);
    e4sq * 3u32 / (pi * 720u32)
}

/// `E2(i/t) + t² E2(it) - 6t/π`.
pub fn e2_inversion_residual(t: f64, cfg: &EvalConfig) -> Result<Float> {
    check_t(t)?;
    let order = cfg.order_for(t.min(1.0 / t));
    let e = NumSeries::new(&e2(order), cfg.precision_bits);
    let tf = cfg.float(t);
    let inv = Float::with_val(cfg.precision_bits, 1) / &tf;
    let a = e.eval(&inv, cfg).value;
    let b = e.eval(&tf, cfg).value * Float::with_val(cfg.precision_bits, tf.square_ref());
    Ok(a + b - tf * 6u32 / cfg.pi())
}

/// Values at `z = i` used by the checks on `t = 1`.
#[derive(Clone, Debug)]
pub struct ValuesAtI {
    pub e2: Float,
    pub e4: Float,
    pub e6: Float,
    pub x101: Float,
    pub x101_closed: Float,
    /// `7 X_{8,1}(i) - 2π X_{8,1}'(i)`.
    pub x81_critical: Float,
}

pub fn values_at_i(cfg: &EvalConfig) -> Result<ValuesAtI> {
    let ev = |l: &str| eval_label(l, 1.0, cfg).map(|e| e.value);
    let plan = ScanPlan::from_label("X8_1", 7, cfg)?;
    Ok(ValuesAtI {
        e2: ev("E2")?,
        e4: ev("E4")?,
        e6: ev("E6")?,
        x101: ev("X10_1")?,
        x101_closed: x101_at_i_closed_form(cfg.precision_bits),
        x81_critical: plan.s(1.0, cfg)?,
    })
}

/// `g(t) = t^m S(e^{-t})/(1 - e^{-bt})^e` for a Lambert shape.
pub fn lambert_g(sh: &LambertShape, m: u32, t: f64, bits: u32) -> Float {
    let tf = Float::with_val(bits, t);
    let x = Float::with_val(bits, (-Float::with_val(bits, &tf)).exp());
    let s = sh.s.iter().rev().fold(Float::with_val(bits, 0), |acc, c| acc * &x + Float::with_val(bits, c));
    let xb = fpow(&x, sh.b as i32);
    let den = fpow(&(Float::with_val(bits, 1) - xb), sh.e as i32);
    fpow(&tf, m as i32) * s / den
}

/// A named TSV table.
#[derive(Clone, Debug, PartialEq)]
pub struct PlotTable {
    pub name: String,
    pub figure: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl PlotTable {
    pub fn to_tsv(&self) -> String {
        let mut s = format!("# {}\n# {}\n{}\n", self.name, self.figure, self.columns.join("\t"));
        for r in &self.rows {
            s.push_str(&r.join("\t"));
            s.push('\n');
        }
        s
    }
}

fn linear_grid(a: f64, b: f64, points: usize) -> Vec<f64> {
    let points = points.max(2);
    (0..points).map(|k| ((a + (b - a) * k as f64 / (points - 1) as f64) * 1e9).round() / 1e9).collect()
}

fn short(x: &Float) -> String {
    x.to_string_radix(10, Some(17))
}

/// Data behind the four figures: `g_8`, `g_9`; `t^7 X_{8,1}` and
/// `X_{8,1}/X_{8,1}'`; `t^8 X_{10,1}`, `t^9 X_{10,1}`; `t^11 X_{12,1}` and
/// `X_{12,1}/X_{12,1}'`.
pub fn plot_tables(points: usize, cfg: &EvalConfig) -> Result<Vec<PlotTable>> {
    cfg.validate()?;
    let bits = cfg.precision_bits;
    let mut out = Vec::new();

    let sh = lambert::shape("X101")?;
    let rows = linear_grid(2.5, 20.0, points)
        .into_iter()
        .map(|t| vec![format!("{t}"), short(&lambert_g(&sh, 8, t, bits)), short(&lambert_g(&sh, 9, t, bits))])
        .collect();
    out.push(PlotTable {
        name: "lambert_g8_g9".into(),
        figure: "g_8(t) and g_9(t) on 2.5 <= t <= 20, g_m(t) = t^m e^{-t} W_8(e^{-t}) / (1 - e^{-t})^9".into(),
        columns: vec!["t".into(), "g8".into(), "g9".into()],
        rows,
    });

    let pair = |label: &str, w: u32, m: u32, name: &str, figure: &str, lo: f64, hi: f64| -> Result<PlotTable> {
        let f = LevelOneForm::from_label(label, cfg)?;
        let d = f.derivative(cfg)?;
        let rows = linear_grid(lo, hi, points)
            .into_iter()
            .map(|t| -> Result<Vec<String>> {
                let v = f.eval(t, cfg)?.value;
                let dv = d.eval(t, cfg)?.value;
                let tm = fpow(&cfg.float(t), m as i32);
                let ratio = Float::with_val(bits, &v / &dv);
                let asym = cfg.pi() * 2u32 * t / (w - 1);
                Ok(vec![format!("{t}"), short(&(tm * &v)), short(&ratio), short(&asym)])
            })
            .collect::<Result<_>>()?;
        Ok(PlotTable {
            name: name.into(),
            figure: figure.into(),
            columns: vec!["t".into(), format!("t^{m}*{label}"), format!("{label}/{label}'"), "2*pi*t/(w-1)".into()],
            rows,
        })
    };
    out.push(pair(
        "X8_1",
        8,
        7,
        "x81",
        "t^7 X_{8,1}(it) and X_{8,1}(it)/X_{8,1}'(it) with the t -> 0 asymptote",
        0.1,
        5.0,
    )?);

    let f = LevelOneForm::from_label("X10_1", cfg)?;
    let rows = linear_grid(0.1, 5.0, points)
        .into_iter()
        .map(|t| -> Result<Vec<String>> {
            let v = f.eval(t, cfg)?.value;
            let tf = cfg.float(t);
            Ok(vec![format!("{t}"), short(&(fpow(&tf, 8) * &v)), short(&(fpow(&tf, 9) * &v))])
        })
        .collect::<Result<_>>()?;
    out.push(PlotTable {
        name: "x101".into(),
        figure: "t^8 X_{10,1}(it) and t^9 X_{10,1}(it) on 0.1 <= t <= 5".into(),
        columns: vec!["t".into(), "t^8*X10_1".into(), "t^9*X10_1".into()],
        rows,
    });

    out.push(pair(
        "X12_1",
        12,
        11,
        "x121",
        "t^11 X_{12,1}(it) and X_{12,1}(it)/X_{12,1}'(it) with the t -> 0 asymptote (t -> oo limit 1/2)",
        0.1,
        5.0,
    )?);
    Ok(out)
}

/// `F''(it) F(it) - F'(it)^2` at `t`.
pub fn log_convexity_gap(label: &str, t: f64, cfg: &EvalConfig) -> Result<Float> {
    let f = LevelOneForm::from_label(label, cfg)?;
    let d1 = f.derivative(cfg)?;
    let d2 = d1.derivative(cfg)?;
    let (a, b, c) = (f.eval(t, cfg)?.value, d1.eval(t, cfg)?.value, d2.eval(t, cfg)?.value);
    Ok(c * a - Float::with_val(cfg.precision_bits, b.square_ref()))
}

/// `E4` value at `i` squared, `9Γ(1/4)^16/(4096π^12)`.
pub fn e4_at_i_squared(bits: u32) -> Float {
    x101_at_i_closed_form(bits) * 720u32 * Float::with_val(bits, Constant::Pi) / 3u32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn rejects_nonpositive_t() {
        assert_eq!(eval_label("E4", 0.0, &cfg()).unwrap_err(), Error::NonPositiveT);
        assert_eq!(eval_label("E4", -1.0, &cfg()).unwrap_err(), Error::NonPositiveT);
        assert!(EvalConfig::with_bits(32).validate().is_err());
    }

    #[test]
    fn values_at_i_match_closed_forms() {
        let c = cfg();
        let v = values_at_i(&c).unwrap();
        let pi = c.pi();
        assert!((v.e2.clone() - Float::with_val(128, 3) / &pi).abs() < 1e-30);
        assert!(v.e6.clone().abs() < 1e-30);
        assert!((v.e4.clone().square() - e4_at_i_squared(128)).abs() < 1e-28);
        assert!((v.x101.clone() - &v.x101_closed).abs() < 1e-30);
        assert!(v.x101 > Float::with_val(128, 1) / (pi * 120u32));
        assert!(v.x81_critical.abs() < 1e-30);
    }

    #[test]
    fn e2_inversion() {
        for t in [0.3, 1.0, 2.5] {
            assert!(e2_inversion_residual(t, &cfg()).unwrap().abs() < 1e-20, "t = {t}");
        }
    }

    #[test]
    fn routes_agree() {
        let c = cfg();
        for label in ["X12_1", "X8_2", "F", "Delta"] {
            let f = LevelOneForm::from_label(label, &c).unwrap();
            for t in [0.8, 1.0, 1.3] {
                let a = f.eval_direct(t, &c).unwrap().value;
                let b = f.eval_transformed(t, &c).unwrap().value;
                assert!((a.clone() - &b).abs() <= a.abs() * 1e-20, "{label} at {t}");
            }
        }
        let plan = ScanPlan::from_label("X10_1", 9, &c).unwrap();
        for t in [0.7, 1.0, 1.5] {
            let a = plan.s_direct(t, &c).unwrap();
            let b = plan.s_transformed(t, &c).unwrap();
            assert!((a.clone() - &b).abs() <= a.abs() * 1e-20, "s at {t}");
        }
        let comp = x_w1_components(12, 200).unwrap();
        let f = LevelOneForm::from_label("X12_1", &c).unwrap();
        let d = f.derivative(&c).unwrap();
        let (v, dv) = eval_depth1_transformed(&comp, 0.8, &c).unwrap();
        let (a, b) = (f.eval_direct(0.8, &c).unwrap().value, d.eval_direct(0.8, &c).unwrap().value);
        assert!((v - &a).abs() <= a.abs() * 1e-20);
        assert!((dv - &b).abs() <= b.abs() * 1e-20);
    }

    #[test]
    fn grid_shape() {
        let g = geometric_grid(&GridSpec::default()).unwrap();
        assert_eq!(g.len(), 60);
        assert!((g[0] - 0.05).abs() < 1e-15 && (g[59] - 20.0).abs() < 1e-12);
        assert!(!g.iter().any(|&t| (t - 1.0).abs() < 1e-9));
    }

    #[test]
    fn x81_sign_change_brackets_one() {
        let r = monotonicity_scan("X8_1", 7, &GridSpec::default(), &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::SignChangeFound);
        assert!(r.sign_changes.iter().any(|&(a, b)| a < 1.0 && 1.0 < b));
        let r = monotonicity_scan("X8_1", 6, &GridSpec::default(), &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::MonotoneDecreasingOnGrid);
    }

    #[test]
    fn limit_of_x121() {
        let r = limit_t0(12, &cfg()).unwrap();
        assert!(r.relative_error < 1e-10, "{r:?}");
        let p: f64 = r.predicted.parse().unwrap();
        assert!((p - 1.0 / (55440.0 * std::f64::consts::PI)).abs() < 1e-15);
    }

    #[test]
    fn log_convexity_of_x61() {
        for t in [0.5, 1.0, 2.0] {
            assert!(log_convexity_gap("X6_1", t, &cfg()).unwrap() > 0, "t = {t}");
        }
    }

    #[test]
    fn small_t_conditions() {
        for w in [12, 16, 18, 20] {
            assert!(small_t_positivity_check(w, &cfg()).unwrap().ok, "w = {w}");
        }
        assert_eq!(small_t_positivity_check(10, &cfg()).unwrap_err(), Error::BadWeight(10));
    }

    #[test]
    fn lambert_g_matches_block() {
        let sh = lambert::shape("X101").unwrap();
        let g = lambert_g(&sh, 8, 3.0, 128);
        assert!(g > 0);
    }
}
