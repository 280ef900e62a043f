//! Registry of q-series identities checked coefficient by coefficient.

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use rug::{Integer, Rational};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal::{components_family, extremal_by_linear_algebra, extremal_poly, x_w1_family, x_w2};
use crate::forms::composite::{self, script_l10_theta_factor};
use crate::forms::{
    delta, delta_from_eisenstein, e2, e4, e6, martin_royer_bracket, serre_derivative, sigma, tau, theta_forms, QPoly,
    SeriesBank,
};
use crate::lambert;
use crate::qseries::FourierSeries;

pub const DEFAULT_ORDER: usize = 120;

/// One side-by-side comparison, checked at exponents `≤ upto`.
pub struct Comparison {
    pub lhs: FourierSeries,
    pub rhs: FourierSeries,
    pub upto: usize,
}

fn cmp(lhs: FourierSeries, rhs: FourierSeries, upto: usize) -> Comparison {
    Comparison { lhs, rhs, upto }
}

type Builder = Box<dyn Fn(usize) -> Result<Vec<Comparison>> + Send + Sync>;

pub struct Case {
    pub id: String,
    pub anchor: String,
    /// Upper bound applied by `verify_all` (grain-2 weight-30 products).
    pub cap: Option<usize>,
    build: Builder,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "state", rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail { exponent: String, residual: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityResult {
    pub id: String,
    pub status: Status,
    pub order: usize,
    pub elapsed_ms: f64,
    pub anchor: String,
}

impl IdentityResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Smallest exponent `≤ upto` where some comparison disagrees.
pub fn first_failure(comparisons: &[Comparison]) -> Result<Option<(Rational, Rational)>> {
    let mut worst: Option<(Rational, Rational)> = None;
    for c in comparisons {
        let need = Rational::from(c.upto as u64);
        if c.lhs.abs_order() < need || c.rhs.abs_order() < need {
            let have = c.lhs.abs_order().min(c.rhs.abs_order());
            let available = have.floor().numer().to_usize().unwrap_or(0);
            return Err(Error::OrderExceeded { requested: c.upto, available });
        }
        if let Some((e, v)) = c.lhs.truncate(c.upto).first_difference(&c.rhs.truncate(c.upto)) {
            if worst.as_ref().is_none_or(|(we, _)| e < *we) {
                worst = Some((e, v));
            }
        }
    }
    Ok(worst)
}

fn run(
    id: &str,
    anchor: &str,
    order: usize,
    build: impl FnOnce(usize) -> Result<Vec<Comparison>>,
) -> Result<IdentityResult> {
    let start = Instant::now();
    let comparisons = build(order)?;
    let status = match first_failure(&comparisons)? {
        None => Status::Pass,
        Some((e, v)) => Status::Fail { exponent: e.to_string(), residual: v.to_string() },
    };
    Ok(IdentityResult {
        id: id.to_string(),
        status,
        order,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        anchor: anchor.to_string(),
    })
}

fn case(
    id: impl Into<String>,
    anchor: impl Into<String>,
    build: impl Fn(usize) -> Result<Vec<Comparison>> + Send + Sync + 'static,
) -> Case {
    Case { id: id.into(), anchor: anchor.into(), cap: None, build: Box::new(build) }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

/// Depth-one extremal forms from linear algebra, one bank per call.
fn la_forms(weights: &[u32], s: u32, order: usize) -> Result<BTreeMap<u32, FourierSeries>> {
    let mut bank = SeriesBank::new(order);
    let mut out = BTreeMap::new();
    for &w in weights {
        out.insert(w, bank.realize(&extremal_poly(w, s)?));
    }
    Ok(out)
}

fn grabner_case(w: u32) -> Case {
    let anchor = "X_{w+2,1} = 12/(w+1) ∂_{w-1} X_{w,1}; X_{w+4,1} = E_4 X_{w,1}; \
                  X_{w+6,1} = (w+6)/(864(w+5)) (E_4 X_{w+2,1} - E_6 X_{w,1})";
    case(format!("GRAB-{w}"), anchor, move |n| {
        let x = la_forms(&[w, w + 2, w + 4, w + 6], 1, n)?;
        let (e4, e6) = (e4(n), e6(n));
        let wi = w as i64;
        Ok(vec![
            cmp(x[&(w + 2)].clone(), serre_derivative(&x[&w], wi - 1).scale(&q(12, wi + 1)), n),
            cmp(x[&(w + 4)].clone(), e4.mul(&x[&w]), n),
            cmp(x[&(w + 6)].clone(), e4.mul(&x[&(w + 2)]).sub(&e6.mul(&x[&w])).scale(&q(wi + 6, 864 * (wi + 5))), n),
        ])
    })
}

fn lee_case(w: u32) -> Case {
    let anchor = "X_{w,1}' = (5w/72) X_{6,1} X_{w-4,1} + (7w/72) X_{8,1} X_{w-6,1} (and the w+2, w+4 companions)";
    case(format!("LEE-{w}"), anchor, move |n| {
        let ws: Vec<u32> = [6, 8, 10, w - 6, w - 4, w - 2, w, w + 2, w + 4].into_iter().collect();
        let x = la_forms(&ws, 1, n)?;
        let (c5, c7) = (q(5 * w as i64, 72), q(7 * w as i64, 72));
        let prod = |a: u32, b: u32, c: &Rational| x[&a].mul(&x[&b]).scale(c);
        Ok(vec![
            cmp(x[&w].derivative(), prod(6, w - 4, &c5).add(&prod(8, w - 6, &c7)), n),
            cmp(x[&(w + 2)].derivative(), prod(6, w - 2, &c5).add(&prod(8, w - 4, &c7)), n),
            cmp(
                x[&(w + 4)].derivative(),
                prod(6, w, &q(240, 1)).add(&prod(8, w - 2, &c7)).add(&prod(10, w - 4, &c5)),
                n,
            ),
        ])
    })
}

fn ab_case(w: u32) -> Case {
    case(format!("AB-{w}"), "X_{w,1} = A_w + E_2 B_{w-2}", move |n| {
        let fam = components_family(w, n);
        let c = &fam[&w];
        let parts = extremal_poly(w, 1)?.e2_parts();
        let mut bank = SeriesBank::new(n);
        Ok(vec![
            cmp(c.recompose(), x_w1_family(w, n).remove(&w).expect("family covers w"), n),
            cmp(c.a.clone(), bank.realize(&parts[0]), n),
            cmp(c.b.clone(), bank.realize(&parts[1]), n),
        ])
    })
}

fn lambert_case(id: &str, shape: &'static str, anchor: &str) -> Case {
    case(id, anchor, move |n| {
        let sh = lambert::shape(shape)?;
        let target = sh.target_series(n);
        Ok(vec![cmp(sh.closed_form_series(n), target.clone(), n), cmp(sh.block_series(n), target, n)])
    })
}

/// `L` against `Σ a_i (basis)_i`; `prime` selects the `Y`-family form.
pub fn lcomb_comparison(a: &[Integer; 6], prime: bool, n: usize) -> Result<Comparison> {
    let th = theta_forms(n);
    let l = composite::l14_from(&th, n);
    let (ab, aa, bb) = (th.a.mul(&th.b), th.a.clone(), th.b.clone());
    let x8 = x_w2(8, n)?;
    let x10 = x_w2(10, n)?;
    let x12 = x_w2(12, n)?;
    let diff = |x: &FourierSeries, w: u32| {
        let e = if prime { w - 2 } else { w - 1 };
        x.sub(&x.dilate(2).scale(&Rational::from(Integer::from(1) << e)))
    };
    let terms = [
        x8.dilate(2).mul(&ab),
        diff(&x8, 8).mul(&ab),
        x10.dilate(2).mul(&aa),
        diff(&x10, 10).mul(&aa),
        x12.dilate(2).mul(&bb),
        diff(&x12, 12).mul(&bb),
    ];
    let mut rhs = FourierSeries::zero(n);
    for (c, t) in a.iter().zip(terms.iter()) {
        rhs = rhs.add(&t.scale(&Rational::from(c)));
    }
    Ok(cmp(l.reduced(), rhs.reduced(), n))
}

pub const LCOMB_A: [i64; 6] = [78278400, 550800, 90823680, 116640, 678813696000, 331776000];
pub const LCOMB_APRIME: [i64; 6] = [43027200, 550800, 60963840, 116640, 339075072000, 331776000];

pub fn ints6(v: [i64; 6]) -> [Integer; 6] {
    v.map(Integer::from)
}

/// Verifies the `L` decomposition with arbitrary coefficients.
pub fn verify_lcomb(a: &[Integer; 6], prime: bool, order: usize) -> Result<IdentityResult> {
    let id = if prime { "LCOMB-APRIME" } else { "LCOMB-A" };
    run(id, LCOMB_ANCHOR, order, |n| Ok(vec![lcomb_comparison(a, prime, n)?]))
}

const LCOMB_ANCHOR: &str =
    "L = a_1 X_{8,2}^{[2]} AB + a_2 Xtilde_{8,2} AB + a_3 X_{10,2}^{[2]} A + a_4 Xtilde_{10,2} A + a_5 X_{12,2}^{[2]} B + a_6 Xtilde_{12,2} B";

fn registry_cases() -> Vec<Case> {
    let mut v = vec![
        case("RAM-1", "E_2' = (E_2^2 - E_4)/12", |n| {
            let (a, b) = (e2(n), e4(n));
            Ok(vec![cmp(a.derivative(), a.square().sub(&b).scale_frac(1, 12), n)])
        }),
        case("RAM-2", "E_4' = (E_2E_4 - E_6)/3", |n| {
            let (a, b, c) = (e2(n), e4(n), e6(n));
            Ok(vec![cmp(b.derivative(), a.mul(&b).sub(&c).scale_frac(1, 3), n)])
        }),
        case("RAM-3", "E_6' = (E_2E_6 - E_4^2)/2", |n| {
            let (a, b, c) = (e2(n), e4(n), e6(n));
            Ok(vec![cmp(c.derivative(), a.mul(&c).sub(&b.square()).scale_frac(1, 2), n)])
        }),
        case("DELTA", "q ∏ (1 - q^n)^24 = (E_4^3 - E_6^2)/1728", |n| {
            Ok(vec![cmp(delta(n), delta_from_eisenstein(n), n)])
        }),
        case("DELTA-DERIV", "Δ' = E_2 Δ", |n| {
            let d = delta(n);
            Ok(vec![cmp(d.derivative(), e2(n).mul(&d), n)])
        }),
        case("E2L2", "6E_2(z) = 4E_2(2z) + E_2(z/2) + E_2((z+1)/2)", |n| {
            let (half, shifted) = composite::e2_half_forms(2 * n);
            let e = e2(n);
            Ok(vec![cmp(e.scale_int(6), e.dilate(2).scale_int(4).add(&half).add(&shifted), n)])
        }),
        lambert_case("LAMBERT-1", "X81", "X_{8,1} = Σ m q^m (1 + 57q^m + 302q^{2m} + 302q^{3m} + 57q^{4m} + q^{5m}) / (1 - q^m)^7"),
        lambert_case("LAMBERT-2", "X101", "X_{10,1} = Σ m q^m (1 + 247q^m + 4293q^{2m} + ... + q^{7m}) / (1 - q^m)^9"),
        lambert_case("LAMBERT-3", "X61", "X_{6,1} = Σ m q^m (1 + 11q^m + 11q^{2m} + q^{3m}) / (1 - q^m)^5"),
        lambert_case("LAMBERT-4", "E4m1", "E_4 - 1 = 240 Σ q^m (1 + 4q^m + q^{2m}) / (1 - q^m)^4"),
        lambert_case("LAMBERT-5", "D2", "E_2(2z) - E_2(z) = 24 Σ (q^n/(1-q^n)^2 - q^{2n}/(1-q^{2n})^2)"),
        lambert_case("LAMBERT-E2", "E2", "1 - E_2 = 24 Σ q^m / (1 - q^m)^2"),
        lambert_case("LAMBERT-X42", "X42", "X_{4,2} = Σ m q^m (1 + q^m) / (1 - q^m)^3"),
        case("BR-61", "6(X_{6,1}')^2 - 5X_{6,1}''X_{6,1} = Δ X_{4,2}", |n| {
            let x = x_w1_family(6, n).remove(&6).expect("w = 6");
            let (d1, d2) = (x.derivative(), x.nth_derivative(2));
            Ok(vec![cmp(d1.square().scale_int(6).sub(&d2.mul(&x).scale_int(5)), delta(n).mul(&x_w2(4, n)?), n)])
        }),
        case("BR-121", "12(X_{12,1}')^2 - 11X_{12,1}''X_{12,1} = ΔF / (2^10 3^6 5^2 7^2)", |n| {
            let x = x_w1_family(12, n).remove(&12).expect("w = 12");
            let (d1, d2) = (x.derivative(), x.nth_derivative(2));
            let rhs = delta(n).mul(&composite::f16(n)).scale_frac(1, 1024 * 729 * 25 * 49);
            Ok(vec![cmp(d1.square().scale_int(12).sub(&d2.mul(&x).scale_int(11)), rhs, n)])
        }),
        case("BR-141", "14(X_{14,1}')^2 - 13X_{14,1}''X_{14,1} = 4Δ^2 X_{8,2}", |n| {
            let x = x_w1_family(14, n).remove(&14).expect("w = 14");
            let (d1, d2) = (x.derivative(), x.nth_derivative(2));
            let rhs = delta(n).square().mul(&x_w2(8, n)?).scale_int(4);
            Ok(vec![cmp(d1.square().scale_int(14).sub(&d2.mul(&x).scale_int(13)), rhs, n)])
        }),
        case("MRB-5", "(m+1)(F')^2 - mF''F = -Φ_{2;w,s;w,s}(F,F)/(m+1), Φ_{2;m,0;m,0}(F,F) = (m+1)mF''F - (m+1)^2(F')^2, m = 5", |n| {
            mrb(6, n)
        }),
        case("MRB-11", "(m+1)(F')^2 - mF''F = -Φ_{2;w,s;w,s}(F,F)/(m+1), Φ_{2;m,0;m,0}(F,F) = (m+1)mF''F - (m+1)^2(F')^2, m = 11", |n| {
            mrb(12, n)
        }),
        case("D2-DERIV-1", "X_{10,2}' = (8/9)X_{4,2}X_{8,1} + (10/9)X_{6,1}^2", |n| {
            let x = x_w1_family(8, n);
            let rhs = x_w2(4, n)?.mul(&x[&8]).scale_frac(8, 9).add(&x[&6].square().scale_frac(10, 9));
            Ok(vec![cmp(x_w2(10, n)?.derivative(), rhs, n)])
        }),
        case("D2-DERIV-2", "X_{12,2}' = 3X_{6,1}X_{8,2}", |n| {
            let x6 = x_w1_family(6, n).remove(&6).expect("w = 6");
            Ok(vec![cmp(x_w2(12, n)?.derivative(), x6.mul(&x_w2(8, n)?).scale_int(3), n)])
        }),
        case("D2-DERIV-3", "X_{8,2}' = 2X_{4,2}X_{6,1}", |n| {
            let x6 = x_w1_family(6, n).remove(&6).expect("w = 6");
            Ok(vec![cmp(x_w2(8, n)?.derivative(), x_w2(4, n)?.mul(&x6).scale_int(2), n)])
        }),
        case("D2-DERIV-4", "X_{14,2}' = 3X_{4,2}X_{12,1}", |n| {
            let x12 = x_w1_family(12, n).remove(&12).expect("w = 12");
            let lhs = extremal_by_linear_algebra(14, 2, n)?.derivative();
            Ok(vec![cmp(lhs, x_w2(4, n)?.mul(&x12).scale_int(3), n)])
        }),
        case("X121-DERIV", "X_{12,1}' = 2X_{6,1}X_{8,1}", |n| {
            let x = x_w1_family(12, n);
            Ok(vec![cmp(x[&12].derivative(), x[&6].mul(&x[&8]).scale_int(2), n)])
        }),
        case("E1-A", "-12E_2E_4E_6 + 5E_4^3 + 7E_6^2 = 3991680 X_{12,1}", |n| {
            let p = QPoly::from_terms([((1, 1, 1), q(-12, 1)), ((0, 3, 0), q(5, 1)), ((0, 0, 2), q(7, 1))]);
            let x = x_w1_family(12, n).remove(&12).expect("w = 12");
            Ok(vec![cmp(p.to_series(n), x.scale_int(3991680), n)])
        }),
        case("E1-B", "(11/3991680)(-E_2^2E_4E_6 + E_2E_4^3 + E_2E_6^2 - E_4^2E_6) = X_{12,1}'", |n| {
            let p = QPoly::from_terms([
                ((2, 1, 1), q(-1, 1)),
                ((1, 3, 0), q(1, 1)),
                ((1, 0, 2), q(1, 1)),
                ((0, 2, 1), q(-1, 1)),
            ])
            .scale(&q(11, 3991680));
            let x = x_w1_family(12, n).remove(&12).expect("w = 12");
            Ok(vec![cmp(p.to_series(n), x.derivative(), n)])
        }),
        Case {
            cap: Some(60),
            ..case("LFACT", "𝓛_{1,0} = (105/8) H_2^5 H_4^2 (H_2 + H_4)^2 L", |n| {
                let th = theta_forms(n);
                let lhs = composite::script_l10_from(&composite::f16(n), &composite::g14_from(&th));
                let rhs = script_l10_theta_factor(&th).mul(&composite::l14_from(&th, n)).scale_frac(105, 8);
                Ok(vec![cmp(lhs, rhs, n)])
            })
        },
        Case {
            cap: Some(60),
            ..case("LFACT-DIV", "𝓛_{1,0} / (H_2^5 H_4^2 (H_2 + H_4)^2) = (105/8) L", |n| {
                let th = theta_forms(n);
                let lhs = composite::script_l10_from(&composite::f16(n), &composite::g14_from(&th));
                let factor = script_l10_theta_factor(&th);
                let v = factor.leading_exponent().expect("nonzero divisor");
                let quot = lhs.divide(&factor)?;
                let upto = n.saturating_sub(v.ceil().numer().to_usize().unwrap_or(n));
                Ok(vec![cmp(quot, composite::l14_from(&th, n).scale_frac(105, 8), upto)])
            })
        },
        case("LCOMB-A", LCOMB_ANCHOR, |n| Ok(vec![lcomb_comparison(&ints6(LCOMB_A), false, n)?])),
        case(
            "LCOMB-APRIME",
            "L = a_1' X_{8,2}^{[2]} AB + a_2' Y_{8,2} AB + a_3' X_{10,2}^{[2]} A + a_4' Y_{10,2} A + a_5' X_{12,2}^{[2]} B + a_6' Y_{12,2} B",
            |n| Ok(vec![lcomb_comparison(&ints6(LCOMB_APRIME), true, n)?]),
        ),
        case("SERRE-CROSS", "F'G - FG' = (∂_14 F)G - F(∂_14 G)", |n| {
            let (f, g) = (composite::f16(n), composite::g14(n));
            let rhs = serre_derivative(&f, 14).mul(&g).sub(&f.mul(&serre_derivative(&g, 14)));
            Ok(vec![cmp(composite::script_l10_from(&f, &g), rhs, n)])
        }),
        case("X42D", "X_{4,2}Δ = (E_4Δ - Δ'')/312", |n| {
            Ok(vec![cmp(composite::x42_delta(n), composite::x42_delta_closed(n), n)])
        }),
        case(
            "XW2-COEFF",
            "X_{8,2} = Σ (nσ_5(n) - n^2σ_3(n))/30 q^n, X_{10,2} = Σ (nσ_7(n) - n^2σ_5(n))/126 q^n, \
             X_{12,2} = Σ (17τ(n)/21 + 6nσ_9(n)/7 - 5n^2σ_7(n)/3)/18000 q^n",
            |n| {
                let f8 = FourierSeries::from_fn(n, |k| {
                    let k64 = k as u64;
                    Rational::from((sigma(5, k64) * k64 - sigma(3, k64) * k64 * k64, 30))
                });
                let f10 = FourierSeries::from_fn(n, |k| {
                    let k64 = k as u64;
                    Rational::from((sigma(7, k64) * k64 - sigma(5, k64) * k64 * k64, 126))
                });
                let f12 = FourierSeries::from_fn(n, |k| {
                    if k == 0 {
                        return Rational::new();
                    }
                    let k64 = k as u64;
                    q(17, 21) * tau(k64) + q(6, 7) * sigma(9, k64) * k64 - q(5, 3) * sigma(7, k64) * k64 * k64
                });
                Ok(vec![
                    cmp(x_w2(8, n)?, f8, n),
                    cmp(x_w2(10, n)?, f10, n),
                    cmp(x_w2(12, n)?, f12.scale_frac(1, 18000), n),
                ])
            },
        ),
        case("P4-COEFF", "X_{12,1}(z) - 2^11 X_{12,1}(2z) in divisor sums and τ", |n| {
            let oracle = FourierSeries::from_fn(n, |k| if k == 0 { Rational::new() } else { composite::p4_coefficient_oracle(k as u64) });
            let x = x_w1_family(12, n).remove(&12).expect("w = 12");
            Ok(vec![cmp(x.sub(&x.dilate(2).scale_int(2048)), oracle, n)])
        }),
        case("X121-E10", "X_{12,1} = -E_10'/277200 - Δ/1050", |n| {
            Ok(vec![cmp(x_w1_family(12, n).remove(&12).expect("w = 12"), composite::x121_direct(n), n)])
        }),
        case("E2-ODD", "(E_2(z + 1/2) - E_2(z))/48 = Σ_{n odd} σ_1(n) q^n", |n| {
            let odd = FourierSeries::from_fn(n, |k| if k % 2 == 1 { Rational::from(sigma(1, k as u64)) } else { Rational::new() });
            Ok(vec![cmp(composite::e2_odd_part(n), odd, n)])
        }),
    ];
    for w in (6..=42).step_by(6) {
        v.push(grabner_case(w));
    }
    for w in (12..=48).step_by(6) {
        v.push(lee_case(w));
        v.push(ab_case(w));
    }
    v.sort_by(|a, b| a.id.cmp(&b.id));
    v
}

fn mrb(w: u32, n: usize) -> Result<Vec<Comparison>> {
    let x = x_w1_family(w, n).remove(&w).expect("family covers w");
    let m = w as i64 - 1;
    let (d1, d2) = (x.derivative(), x.nth_derivative(2));
    let tangent = d1.square().scale_int(m + 1).sub(&d2.mul(&x).scale_int(m));
    let phi_w = martin_royer_bracket(&x, &x, 2, w as i64, 1, w as i64, 1)?;
    let phi_m = martin_royer_bracket(&x, &x, 2, m, 0, m, 0)?;
    let closed = d2.mul(&x).scale_int((m + 1) * m).sub(&d1.square().scale_int((m + 1) * (m + 1)));
    Ok(vec![cmp(tangent, phi_w.scale(&q(-1, m + 1)), n), cmp(phi_m, closed, n)])
}

fn registry() -> &'static [Case] {
    static REG: OnceLock<Vec<Case>> = OnceLock::new();
    REG.get_or_init(registry_cases)
}

pub fn ids() -> Vec<&'static str> {
    registry().iter().map(|c| c.id.as_str()).collect()
}

pub fn anchor(id: &str) -> Option<&'static str> {
    registry().iter().find(|c| c.id == id).map(|c| c.anchor.as_str())
}

pub fn verify(id: &str, order: usize) -> Result<IdentityResult> {
    let c = registry().iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
    run(&c.id, &c.anchor, order, |n| (c.build)(n))
}

/// Runs every entry whose id passes `filter`, capped orders applied, sorted by id.
pub fn verify_filtered(order: usize, filter: impl Fn(&str) -> bool + Sync) -> Vec<IdentityResult> {
    let mut out: Vec<IdentityResult> = registry()
        .par_iter()
        .filter(|c| filter(&c.id))
        .map(|c| {
            let n = c.cap.map_or(order, |cap| order.min(cap));
            run(&c.id, &c.anchor, n, |n| (c.build)(n)).unwrap_or_else(|e| IdentityResult {
                id: c.id.clone(),
                status: Status::Fail { exponent: "error".into(), residual: e.to_string() },
                order: n,
                elapsed_ms: 0.0,
                anchor: c.anchor.clone(),
            })
        })
        .collect();
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

pub fn verify_all(order: usize) -> Vec<IdentityResult> {
    verify_filtered(order, |_| true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whole_registry_low_order() {
        for r in verify_all(12) {
            assert!(r.passed(), "{} {:?}", r.id, r.status);
        }
    }

    #[test]
    fn unknown_id() {
        assert!(matches!(verify("NOPE", 5), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn perturbed_lcomb_fails_early() {
        let mut a = ints6(LCOMB_A);
        a[0] += 1;
        let r = verify_lcomb(&a, false, 20).unwrap();
        match r.status {
            Status::Fail { exponent, .. } => assert!(exponent.parse::<Rational>().unwrap() <= 10),
            Status::Pass => panic!("perturbation went unnoticed"),
        }
    }

    #[test]
    fn literal_e2_level2_display_fails() {
        let (half, shifted) = composite::e2_half_forms(20);
        let e = e2(10);
        let c = cmp(e.dilate(2).scale_int(6), e.dilate(2).scale_int(4).add(&half).add(&shifted), 10);
        let (exp, _) = first_failure(&[c]).unwrap().unwrap();
        assert!(exp > 0);
    }
}
