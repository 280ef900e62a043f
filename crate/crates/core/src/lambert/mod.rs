//! Monotonicity certificates for `t ↦ t^m S(e^{-t}) / (1 - e^{-bt})^e`.
//!
//! The derivative of such a block is a positive multiple of
//! `-(t P(e^t) - Q(e^t))` with integer polynomials `P`, `Q`, `Q(1) = 0`, so
//! monotonicity reduces to `t P(e^t) > Q(e^t)` for `t > 0`. Two mechanical
//! arguments are offered: the shifted-coefficient test on
//! `R = P² - x(Q'P - QP')`, and the Taylor expansion of `t P(e^t) - Q(e^t)`.

use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal::{x_w1, x_w2};
use crate::forms::{e2, e4};
use crate::qseries::{lambert_block, FourierSeries, LambertFlavor};

/// Integer polynomial, coefficient of `x^k` at index `k`.
pub type Poly = Vec<Integer>;

fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last().is_some_and(|c| *c == 0) {
        p.pop();
    }
    if p.is_empty() {
        p.push(Integer::new());
    }
    p
}

pub fn poly(v: &[i64]) -> Poly {
    trim(v.iter().map(|&c| Integer::from(c)).collect())
}

fn poly_add(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|k| {
                let mut c = Integer::new();
                if let Some(x) = a.get(k) {
                    c += x;
                }
                if let Some(x) = b.get(k) {
                    c += x;
                }
                c
            })
            .collect(),
    )
}

fn poly_neg(a: &Poly) -> Poly {
    a.iter().map(|c| Integer::from(-c)).collect()
}

fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    poly_add(a, &poly_neg(b))
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![Integer::new(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += Integer::from(x * y);
        }
    }
    trim(out)
}

fn poly_scale(a: &Poly, c: &Integer) -> Poly {
    trim(a.iter().map(|x| Integer::from(x * c)).collect())
}

fn poly_deriv(a: &Poly) -> Poly {
    if a.len() == 1 {
        return vec![Integer::new()];
    }
    trim(a.iter().enumerate().skip(1).map(|(k, c)| Integer::from(c * k as u64)).collect())
}

/// Multiplies by `x^k`.
fn poly_shift(a: &Poly, k: usize) -> Poly {
    let mut out = vec![Integer::new(); k];
    out.extend(a.iter().cloned());
    trim(out)
}

fn poly_eval_int(a: &Poly, x: i64) -> Integer {
    a.iter().rev().fold(Integer::new(), |acc, c| acc * x + c)
}

/// Coefficients of `p(1 + u)` in `u`.
pub fn taylor_shift_one(p: &Poly) -> Poly {
    let mut c = p.clone();
    let n = c.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = c[j + 1].clone();
            c[j] += t;
        }
    }
    c
}

/// `(1 - x^b)^e`.
pub fn power_form(b: u32, e: u32) -> Poly {
    let base = {
        let mut p = vec![Integer::new(); b as usize + 1];
        p[0] = Integer::from(1);
        p[b as usize] = Integer::from(-1);
        p
    };
    (0..e).fold(vec![Integer::from(1)], |acc, _| poly_mul(&acc, &base))
}

/// Reads `(b, e)` off a polynomial of the form `(1 - x^b)^e`.
pub fn detect_power_form(t: &Poly) -> Result<(u32, u32)> {
    let t = trim(t.clone());
    let bad = || Error::UnsupportedShape("denominator must be a power of (1 - x^b)".into());
    if t[0] != 1 {
        return Err(bad());
    }
    if t.len() == 1 {
        return Ok((1, 0));
    }
    let b = t.iter().skip(1).position(|c| *c != 0).ok_or_else(bad)? + 1;
    let e = Integer::from(-&t[b]).to_u32().filter(|&e| e >= 1).ok_or_else(bad)?;
    if power_form(b as u32, e) != t {
        return Err(bad());
    }
    Ok((b as u32, e))
}

/// Eulerian numerator `W_k` with `Σ_{d≥1} d^k x^d = x W_k(x) / (1 - x)^{k+1}`.
pub fn eulerian_numerator(k: u32) -> Poly {
    assert!(k >= 1);
    let mut row = vec![Integer::from(1)];
    for n in 2..=k {
        let mut next = vec![Integer::new(); n as usize];
        for j in 0..n as usize {
            let mut v = Integer::new();
            if j < row.len() {
                v += Integer::from(&row[j] * (j as u64 + 1));
            }
            if j >= 1 {
                v += Integer::from(&row[j - 1] * (n as u64 - j as u64));
            }
            next[j] = v;
        }
        row = next;
    }
    row
}

/// `(P, Q)` in `y = e^t` for `g(t) = t^m S(e^{-t}) / T(e^{-t})`:
/// `g'(t) = -(positive) · (t P(e^t) - Q(e^t))`.
pub fn derivative_numerator(m: u32, s: &Poly, t: &Poly) -> Result<(Poly, Poly)> {
    let (b, e) = detect_power_form(t)?;
    let one_minus = power_form(b, 1);
    let s = trim(s.clone());
    let u = poly_add(
        &poly_shift(&poly_mul(&poly_deriv(&s), &one_minus), 1),
        &poly_scale(&poly_shift(&s, b as usize), &Integer::from(e * b)),
    );
    let v = poly_scale(&poly_mul(&s, &one_minus), &Integer::from(m));
    let d = u.len().max(v.len()) - 1;
    let reflect = |p: &Poly| -> Poly {
        let mut out = vec![Integer::new(); d + 1];
        for (k, c) in p.iter().enumerate() {
            out[d - k] = c.clone();
        }
        out
    };
    let (mut p, mut q) = (reflect(&u), reflect(&v));
    let low = p.iter().chain(q.iter()).enumerate().fold(
        usize::MAX,
        |acc, (i, c)| {
            if *c != 0 {
                acc.min(i % (d + 1))
            } else {
                acc
            }
        },
    );
    if low != usize::MAX && low > 0 {
        p.drain(..low);
        q.drain(..low);
    }
    let mut g = Integer::new();
    for c in p.iter().chain(q.iter()) {
        g.gcd_mut(c);
    }
    if g > 1 {
        p = p.iter().map(|c| Integer::from(c / &g)).collect();
        q = q.iter().map(|c| Integer::from(c / &g)).collect();
    }
    Ok((trim(p), trim(q)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    RShift,
    Taylor,
}

/// Which argument(s) `certify` may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodChoice {
    Auto,
    Only(Method),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `P(1+u)` has a negative coefficient at `u^index`, or `P(1) = 0`.
    PShift { index: usize, value: String },
    /// `R(1+u)` has a negative coefficient at `u^index` (or `R` vanishes).
    RShift { index: usize, value: String },
    /// `c_n ≤ 0`.
    TaylorCoefficient { n: u32, value: String },
    /// The linear form `n a_k + k b_k` never becomes positive.
    LinearForm { k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "state", rename_all = "snake_case")]
pub enum CertStatus {
    Valid,
    Invalid { witnesses: Vec<Witness> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotonicityCertificate {
    pub m: u32,
    pub p: Poly,
    pub q: Poly,
    pub method: Method,
    pub r: Option<Poly>,
    pub c_prefix: Option<Vec<Integer>>,
    pub n_star: Option<u32>,
    pub status: CertStatus,
}

impl MonotonicityCertificate {
    pub fn is_valid(&self) -> bool {
        self.status == CertStatus::Valid
    }
}

/// `R(x) = P(x)² - x (Q'(x) P(x) - Q(x) P'(x))`.
pub fn r_polynomial(p: &Poly, q: &Poly) -> Poly {
    let wr = poly_sub(&poly_mul(&poly_deriv(q), p), &poly_mul(q, &poly_deriv(p)));
    poly_sub(&poly_mul(p, p), &poly_shift(&wr, 1))
}

fn first_negative(p: &Poly) -> Option<(usize, Integer)> {
    p.iter().enumerate().find(|(_, c)| **c < 0).map(|(i, c)| (i, c.clone()))
}

fn r_shift_check(p: &Poly, q: &Poly) -> (Poly, Option<Witness>) {
    let r = r_polynomial(p, q);
    let ps = taylor_shift_one(p);
    if let Some((index, value)) = first_negative(&ps) {
        return (r, Some(Witness::PShift { index, value: value.to_string() }));
    }
    if ps[0] == 0 {
        return (r, Some(Witness::PShift { index: 0, value: "0".into() }));
    }
    let rs = taylor_shift_one(&r);
    if let Some((index, value)) = first_negative(&rs) {
        return (r, Some(Witness::RShift { index, value: value.to_string() }));
    }
    if rs.iter().all(|c| *c == 0) {
        return (r, Some(Witness::RShift { index: 0, value: "0".into() }));
    }
    (r, None)
}

/// `c_n = Σ_k (n a_k + k b_k) k^{n-1}` for `P = Σ a_k x^k`, `Q = -Σ b_k x^k`;
/// the `k = 0` term contributes `a_0` at `n = 1` only.
pub fn taylor_coefficient(p: &Poly, q: &Poly, n: u32) -> Integer {
    let len = p.len().max(q.len());
    let get = |v: &Poly, k: usize| v.get(k).cloned().unwrap_or_default();
    if n == 0 {
        return -poly_eval_int(q, 1);
    }
    let mut c = Integer::new();
    for k in 0..len {
        let a = get(p, k);
        let b = -get(q, k);
        if k == 0 {
            if n == 1 {
                c += a;
            }
            continue;
        }
        let lin = a * n + b * k as u64;
        c += lin * Integer::from(k).pow(n - 1);
    }
    c
}

/// Smallest `n ≥ 1` with every linear form `n a_k + k b_k` (`k ≥ 1`) positive
/// or identically zero; `Err(k)` names a form that never turns positive.
pub fn n_star(p: &Poly, q: &Poly) -> std::result::Result<u32, usize> {
    let len = p.len().max(q.len());
    let get = |v: &Poly, k: usize| v.get(k).cloned().unwrap_or_default();
    let mut n = 1u32;
    for k in 1..len {
        let a = get(p, k);
        let b = -get(q, k);
        if a == 0 && b == 0 {
            continue;
        }
        if a < 0 || (a == 0 && b < 0) || (a == 0 && b == 0) {
            return Err(k);
        }
        if a == 0 {
            continue;
        }
        // smallest n with n a > -k b
        let bound = -b * k as u64;
        let need = if bound < 0 { Integer::from(1) } else { bound.div_rem_floor(a.clone()).0 + 1 };
        let need = need.to_u32().ok_or(k)?;
        n = n.max(need);
    }
    Ok(n)
}

/// Some `c_n` is positive: in the prefix, or past `n★` through a form with `a_k > 0`.
fn eventually_positive(prefix: &[Integer], p: &Poly) -> bool {
    prefix.iter().any(|c| *c > 0) || p.iter().skip(1).any(|a| *a > 0)
}

/// `f(t) = Σ c_n t^n / n!` is positive on `t > 0` when no `c_n` is negative
/// and one is positive. `c_0 = f(0) = -Q(1)` is always zero.
fn taylor_check(p: &Poly, q: &Poly) -> (Vec<Integer>, Option<u32>, Vec<Witness>) {
    let ns = n_star(p, q);
    let upto = match ns {
        Ok(n) => n.max(2) - 1,
        Err(_) => 64,
    };
    let prefix: Vec<Integer> = (0..=upto).map(|n| taylor_coefficient(p, q, n)).collect();
    let mut witnesses = Vec::new();
    if let Some((n, c)) = prefix.iter().enumerate().find(|(_, c)| **c < 0) {
        witnesses.push(Witness::TaylorCoefficient { n: n as u32, value: c.to_string() });
    } else if !eventually_positive(&prefix, p) {
        witnesses.push(Witness::TaylorCoefficient { n: upto, value: "0".into() });
    }
    if let Err(k) = ns {
        witnesses.push(Witness::LinearForm { k });
    }
    (prefix, ns.ok(), witnesses)
}

/// Certifies `t P(e^t) > Q(e^t)` on `t > 0`.
pub fn certify(m: u32, p: &Poly, q: &Poly, choice: MethodChoice) -> Result<MonotonicityCertificate> {
    if poly_eval_int(q, 1) != 0 {
        return Err(Error::InvalidInput("Q(1) must vanish".into()));
    }
    let (p, q) = (trim(p.clone()), trim(q.clone()));
    let mut witnesses = Vec::new();
    if matches!(choice, MethodChoice::Auto | MethodChoice::Only(Method::RShift)) {
        let (r, w) = r_shift_check(&p, &q);
        match w {
            None => {
                return Ok(MonotonicityCertificate {
                    m,
                    p,
                    q,
                    method: Method::RShift,
                    r: Some(r),
                    c_prefix: None,
                    n_star: None,
                    status: CertStatus::Valid,
                })
            }
            Some(w) => {
                witnesses.push(w);
                if choice == MethodChoice::Only(Method::RShift) {
                    return Ok(MonotonicityCertificate {
                        m,
                        p,
                        q,
                        method: Method::RShift,
                        r: Some(r),
                        c_prefix: None,
                        n_star: None,
                        status: CertStatus::Invalid { witnesses },
                    });
                }
            }
        }
    }
    let (prefix, ns, tw) = taylor_check(&p, &q);
    let status = if tw.is_empty() {
        CertStatus::Valid
    } else {
        witnesses.extend(tw);
        CertStatus::Invalid { witnesses }
    };
    Ok(MonotonicityCertificate { m, p, q, method: Method::Taylor, r: None, c_prefix: Some(prefix), n_star: ns, status })
}

/// `t P(e^t) - Q(e^t)` at working precision `bits`.
pub fn spot_value(cert: &MonotonicityCertificate, t: f64, bits: u32) -> Float {
    let t = Float::with_val(bits, t);
    let y = Float::with_val(bits, t.exp_ref());
    let horner = |p: &Poly| p.iter().rev().fold(Float::with_val(bits, 0), |acc, c| acc * &y + Float::with_val(bits, c));
    t * horner(&cert.p) - horner(&cert.q)
}

/// A Lambert block `t^m S(x)/(1 - x^b)^e`, `x = e^{-t}`, and whether the
/// series sums carry the extra factor `m` (`Σ_m m f(q^m)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambertShape {
    pub name: &'static str,
    pub m: u32,
    pub s: Poly,
    pub b: u32,
    pub e: u32,
    pub with_multiplicity: bool,
}

impl LambertShape {
    pub fn denominator(&self) -> Poly {
        power_form(self.b, self.e)
    }

    pub fn derivative_numerator(&self) -> Result<(Poly, Poly)> {
        derivative_numerator(self.m, &self.s, &self.denominator())
    }

    /// `Σ_{n≥1} w(n) f(q^n)` with `f = S/(1 - x^b)^e` expanded as a power
    /// series, `w(n) = n` or `1`.
    pub fn closed_form_series(&self, order: usize) -> FourierSeries {
        let f = rational_power_series(&self.s, self.b, self.e, order);
        let mut coeffs = vec![Integer::new(); order + 1];
        for n in 1..=order {
            let w = if self.with_multiplicity { n as u64 } else { 1 };
            for (k, c) in f.iter().enumerate() {
                let idx = n * k;
                if idx > order {
                    break;
                }
                if *c != 0 {
                    coeffs[idx] += Integer::from(c * w);
                }
            }
        }
        FourierSeries::from_integers(1, coeffs)
    }

    /// The q-series the block represents (up to the normalizing constant),
    /// built from divisor sums or the extremal forms.
    pub fn target_series(&self, order: usize) -> FourierSeries {
        match self.name {
            "E2" => FourierSeries::one(order).sub(&e2(order)).scale_frac(1, 24),
            "X42" => x_w2(4, order).expect("weight 4"),
            "D2" => e2(order).dilate(2).truncate(order).sub(&e2(order)).scale_frac(1, 24),
            "X81" => x_w1(8, order).expect("weight 8"),
            "X101" => x_w1(10, order).expect("weight 10"),
            "E4m1" => e4(order).sub(&FourierSeries::one(order)).scale_frac(1, 240),
            "X61" => x_w1(6, order).expect("weight 6"),
            _ => unreachable!("shape table"),
        }
    }

    /// Direct double-sum expansion.
    pub fn block_series(&self, order: usize) -> FourierSeries {
        match self.name {
            "E2" => lambert_block(1, 1, order, LambertFlavor::Plain),
            "X42" => lambert_block(2, 1, order, LambertFlavor::WithMultiplicity),
            "D2" => {
                lambert_block(1, 1, order, LambertFlavor::Plain).sub(&lambert_block(1, 2, order, LambertFlavor::Plain))
            }
            "X81" => lambert_block(6, 1, order, LambertFlavor::WithMultiplicity),
            "X101" => lambert_block(8, 1, order, LambertFlavor::WithMultiplicity),
            "E4m1" => lambert_block(3, 1, order, LambertFlavor::Plain),
            "X61" => lambert_block(4, 1, order, LambertFlavor::WithMultiplicity),
            _ => unreachable!("shape table"),
        }
    }
}

/// Power series of `S(x)/(1 - x^b)^e` to `x^order`.
fn rational_power_series(s: &Poly, b: u32, e: u32, order: usize) -> Vec<Integer> {
    // 1/(1 - y)^e = Σ C(j + e - 1, e - 1) y^j
    let mut inv = vec![Integer::new(); order + 1];
    let mut j = 0usize;
    while j * b as usize <= order {
        inv[j * b as usize] = Integer::from(j as u64 + e as u64 - 1).binomial(e.saturating_sub(1));
        j += 1;
    }
    if e == 0 {
        inv = vec![Integer::new(); order + 1];
        inv[0] = Integer::from(1);
    }
    let mut out = vec![Integer::new(); order + 1];
    for (i, c) in s.iter().enumerate() {
        if *c == 0 || i > order {
            continue;
        }
        for k in 0..=order - i {
            if inv[k] != 0 {
                out[i + k] += Integer::from(c * &inv[k]);
            }
        }
    }
    out
}

pub const LEMMAS: &[&str] = &["E2", "X42", "D2", "X81", "X101"];
pub const NON_EXAMPLES: &[&str] = &["E4m1", "X61"];

/// The five lemma blocks and the two non-examples.
pub fn shape(name: &str) -> Result<LambertShape> {
    let xw = |k: u32| poly_shift(&eulerian_numerator(k), 1);
    let sh = |name: &'static str, m: u32, s: Poly, b: u32, e: u32, with_multiplicity: bool| LambertShape {
        name,
        m,
        s,
        b,
        e,
        with_multiplicity,
    };
    Ok(match name {
        "E2" => sh("E2", 2, poly(&[0, 1]), 1, 2, false),
        "X42" => sh("X42", 3, xw(2), 1, 3, true),
        "D2" => sh("D2", 2, poly(&[0, 1, 1, 1]), 2, 2, false),
        "X81" => sh("X81", 6, xw(6), 1, 7, true),
        "X101" => sh("X101", 8, xw(8), 1, 9, true),
        "E4m1" => sh("E4m1", 4, xw(3), 1, 4, false),
        "X61" => sh("X61", 5, xw(4), 1, 5, true),
        _ => return Err(Error::UnknownLabel(name.to_string())),
    })
}

/// End-to-end certificate for one named block. `X101` uses the Taylor
/// argument; everything else tries the shifted test first.
pub fn certify_lemma(name: &str) -> Result<MonotonicityCertificate> {
    let sh = shape(name)?;
    let (p, q) = sh.derivative_numerator()?;
    let choice = if name == "X101" { MethodChoice::Only(Method::Taylor) } else { MethodChoice::Auto };
    certify(sh.m, &p, &q, choice)
}

fn poly_json(p: &Poly) -> Vec<String> {
    p.iter().map(|c| c.to_string()).collect()
}

fn poly_from_json(v: &[String]) -> Result<Poly> {
    v.iter()
        .map(|s| s.parse::<Integer>().map_err(|_| Error::Parse(format!("bad integer `{s}`"))))
        .collect::<Result<Vec<_>>>()
        .map(trim)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaylorJson {
    pub c_prefix: Vec<String>,
    pub n_star: Option<u32>,
}

/// Serialized certificate: `{m, P, Q, method, R | {c_prefix, n_star}, status}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub m: u32,
    #[serde(rename = "P")]
    pub p: Vec<String>,
    #[serde(rename = "Q")]
    pub q: Vec<String>,
    pub method: Method,
    #[serde(rename = "R", skip_serializing_if = "Option::is_none", default)]
    pub r: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub taylor: Option<TaylorJson>,
    pub status: CertStatus,
}

impl MonotonicityCertificate {
    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            m: self.m,
            p: poly_json(&self.p),
            q: poly_json(&self.q),
            method: self.method,
            r: self.r.as_ref().map(poly_json),
            taylor: self
                .c_prefix
                .as_ref()
                .map(|c| TaylorJson { c_prefix: c.iter().map(|x| x.to_string()).collect(), n_star: self.n_star }),
            status: self.status.clone(),
        }
    }
}

/// Re-verifies a serialized certificate from its stated data alone.
/// Returns whether the certificate is internally consistent and valid.
pub fn recheck(j: &CertificateJson) -> Result<bool> {
    let p = poly_from_json(&j.p)?;
    let q = poly_from_json(&j.q)?;
    if poly_eval_int(&q, 1) != 0 {
        return Ok(false);
    }
    let claims_valid = j.status == CertStatus::Valid;
    let ok = match j.method {
        Method::RShift => {
            let r = match &j.r {
                Some(r) => poly_from_json(r)?,
                None => return Ok(false),
            };
            if r != r_polynomial(&p, &q) {
                return Ok(false);
            }
            let ps = taylor_shift_one(&p);
            let rs = taylor_shift_one(&r);
            ps.iter().all(|c| *c >= 0) && ps[0] > 0 && rs.iter().all(|c| *c >= 0) && rs.iter().any(|c| *c > 0)
        }
        Method::Taylor => {
            let t = match &j.taylor {
                Some(t) => t,
                None => return Ok(false),
            };
            let ns = match t.n_star {
                Some(n) => n,
                None => return Ok(!claims_valid),
            };
            let len = p.len().max(q.len());
            let get = |v: &Poly, k: usize| v.get(k).cloned().unwrap_or_default();
            let forms_ok = (1..len).all(|k| {
                let (a, b) = (get(&p, k), -get(&q, k));
                (a == 0 && b == 0) || (a >= 0 && Integer::from(&a * ns) + b * k as u64 > 0)
            });
            let stated: Vec<Integer> = t
                .c_prefix
                .iter()
                .map(|s| s.parse::<Integer>().map_err(|_| Error::Parse(format!("bad integer `{s}`"))))
                .collect::<Result<_>>()?;
            let upto = ns.max(2) - 1;
            if stated.len() != upto as usize + 1 {
                return Ok(false);
            }
            let recomputed: Vec<Integer> = (0..=upto).map(|n| taylor_coefficient(&p, &q, n)).collect();
            if stated != recomputed {
                return Ok(false);
            }
            forms_ok && recomputed.iter().all(|c| *c >= 0) && eventually_positive(&recomputed, &p)
        }
    };
    Ok(ok == claims_valid)
}

/// Limit of `t^m S(e^{-t})/(1 - e^{-bt})^e` at `t → 0` when `m = e`.
pub fn block_limit_at_zero(sh: &LambertShape) -> Option<Rational> {
    if sh.m != sh.e {
        return None;
    }
    let s1 = poly_eval_int(&sh.s, 1);
    Some(Rational::from((s1, Integer::from(sh.b).pow(sh.e))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eulerian_rows() {
        assert_eq!(eulerian_numerator(2), poly(&[1, 1]));
        assert_eq!(eulerian_numerator(6), poly(&[1, 57, 302, 302, 57, 1]));
        assert_eq!(eulerian_numerator(8), poly(&[1, 247, 4293, 15619, 15619, 4293, 247, 1]));
    }

    #[test]
    fn eulerian_matches_direct_expansion() {
        for k in 1..=10u32 {
            let direct: Vec<Integer> = (0..=40u64).map(|d| Integer::from(d).pow(k)).collect();
            let lhs = poly_mul(&direct, &power_form(1, k + 1));
            let rhs = poly_shift(&eulerian_numerator(k), 1);
            assert_eq!(
                &lhs[..=40],
                &{
                    let mut r = rhs.clone();
                    r.resize(41, Integer::new());
                    r
                }[..],
                "k = {k}"
            );
        }
    }

    #[test]
    fn lemma_e2_numerators() {
        let (p, q) = shape("E2").unwrap().derivative_numerator().unwrap();
        assert_eq!((p.clone(), q.clone()), (poly(&[1, 1]), poly(&[-2, 2])));
        let c = certify(2, &p, &q, MethodChoice::Auto).unwrap();
        assert_eq!(c.method, Method::RShift);
        assert_eq!(c.r, Some(poly(&[1, -2, 1])));
    }

    #[test]
    fn lemma_x81_numerators() {
        let (p, q) = shape("X81").unwrap().derivative_numerator().unwrap();
        assert_eq!(p, poly(&[1, 120, 1191, 2416, 1191, 120, 1]));
        assert_eq!(q, poly(&[-6, -336, -1470, 0, 1470, 336, 6]));
    }

    #[test]
    fn lemma_x101_taylor() {
        let (p, q) = shape("X101").unwrap().derivative_numerator().unwrap();
        assert_eq!(p, poly(&[1, 502, 14608, 88234, 156190, 88234, 14608, 502, 1]));
        assert_eq!(q, poly(&[-8, -1968, -32368, -90608, 0, 90608, 32368, 1968, 8]));
        let c = certify_lemma("X101").unwrap();
        assert!(c.is_valid());
        assert_eq!(c.n_star, Some(65));
        assert_eq!(taylor_coefficient(&p, &q, 0), 0);
    }

    #[test]
    fn power_form_detection() {
        assert_eq!(detect_power_form(&power_form(2, 3)).unwrap(), (2, 3));
        assert!(matches!(detect_power_form(&poly(&[1, -1, 1])), Err(Error::UnsupportedShape(_))));
        assert!(matches!(certify(1, &poly(&[1]), &poly(&[1]), MethodChoice::Auto), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn shifted_coefficients() {
        assert_eq!(taylor_shift_one(&poly(&[1, -2, 1])), poly(&[0, 0, 1]));
        assert_eq!(taylor_shift_one(&poly(&[0, 0, 1])), poly(&[1, 2, 1]));
    }

    #[test]
    fn lemmas_and_non_examples() {
        for name in LEMMAS {
            let c = certify_lemma(name).unwrap();
            assert!(c.is_valid(), "{name}");
            assert!(recheck(&c.to_json()).unwrap(), "{name}");
            for t in [0.1, 1.0, 5.0, 20.0] {
                assert!(spot_value(&c, t, 128) > 0, "{name} at {t}");
            }
        }
        for name in NON_EXAMPLES {
            let c = certify_lemma(name).unwrap();
            assert!(!c.is_valid(), "{name}");
            assert!(recheck(&c.to_json()).unwrap(), "{name}");
        }
    }

    #[test]
    fn block_series_agree() {
        for name in LEMMAS.iter().chain(NON_EXAMPLES) {
            let sh = shape(name).unwrap();
            let target = sh.target_series(60);
            assert_eq!(sh.closed_form_series(60), target, "{name}");
            assert_eq!(sh.block_series(60), target, "{name}");
        }
    }
}
