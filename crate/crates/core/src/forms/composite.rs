//! Composite forms: the weight-16 form `F`, the theta form `G`, the
//! `K`-forms and `L`, the level-2 positive forms `P_1..P_4`, and `X_{4,2} Δ`.

use rug::Rational;

use crate::extremal::{x_w1, x_w2};
use crate::forms::{delta, e2, e4, e6, theta_forms, ThetaForms};
use crate::qseries::FourierSeries;

/// `49 E2² E4³ - 25 E2² E6² - 48 E2 E4² E6 - 25 E4⁴ + 49 E4 E6²`.
pub fn f16(order: usize) -> FourierSeries {
    let (e2, e4, e6) = (e2(order), e4(order), e6(order));
    let e2sq = e2.square();
    let e4sq = e4.square();
    let e6sq = e6.square();
    e2sq.mul(&e4sq.mul(&e4))
        .scale_int(49)
        .sub(&e2sq.mul(&e6sq).scale_int(25))
        .sub(&e2.mul(&e4sq).mul(&e6).scale_int(48))
        .sub(&e4sq.square().scale_int(25))
        .add(&e4.mul(&e6sq).scale_int(49))
}

/// Homogeneous polynomial `Σ c_i H2^{deg-i} H4^i` (coefficients listed from
/// the pure `H2` power down).
fn theta_poly(th: &ThetaForms, coeffs: &[i64]) -> FourierSeries {
    let deg = coeffs.len() - 1;
    let p2: Vec<FourierSeries> = pow_list(&th.h2, deg);
    let p4: Vec<FourierSeries> = pow_list(&th.h4, deg);
    let mut acc: Option<FourierSeries> = None;
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let term = p2[deg - i].mul(&p4[i]).scale_int(c);
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    acc.expect("nonzero polynomial")
}

fn pow_list(base: &FourierSeries, n: usize) -> Vec<FourierSeries> {
    let one = FourierSeries::one(base.integer_order()).regrain(base.grain()).truncate_index(base.order());
    let mut v = vec![one];
    for _ in 0..n {
        let next = v.last().expect("nonempty").mul(base);
        v.push(next);
    }
    v
}

/// `G = H2⁵ (2 H2² + 7 H2 H4 + 7 H4²)`, grain 2.
pub fn g14_from(th: &ThetaForms) -> FourierSeries {
    th.h2.pow(5).mul(&theta_poly(th, &[2, 7, 7]))
}

pub fn g14(order: usize) -> FourierSeries {
    g14_from(&theta_forms(order))
}

pub fn k10_from(th: &ThetaForms) -> FourierSeries {
    theta_poly(th, &[23, 46, 54, 16, 8]).mul(&theta_poly(th, &[1, 2])).scale_int(-2)
}

pub fn k12_from(th: &ThetaForms) -> FourierSeries {
    theta_poly(th, &[10, 35, 3, -64, -32]).mul(&theta_poly(th, &[1, 1, 1])).scale_int(-2)
}

pub fn k14_from(th: &ThetaForms) -> FourierSeries {
    theta_poly(th, &[26, 78, 177, 182, 51, -48, -16]).mul(&theta_poly(th, &[1, 2]))
}

/// `L = K10 E2² + K12 E2 + K14`.
pub fn l14_from(th: &ThetaForms, order: usize) -> FourierSeries {
    let e2 = e2(order);
    k10_from(th).mul(&e2.square()).add(&k12_from(th).mul(&e2)).add(&k14_from(th))
}

pub fn l14(order: usize) -> FourierSeries {
    l14_from(&theta_forms(order), order)
}

/// `𝓛_{1,0} = F' G - F G'`.
pub fn script_l10_from(f: &FourierSeries, g: &FourierSeries) -> FourierSeries {
    f.derivative().mul(g).sub(&f.mul(&g.derivative()))
}

pub fn script_l10(order: usize) -> FourierSeries {
    let f = f16(order);
    let g = g14(order);
    script_l10_from(&f, &g)
}

/// `H2⁵ H4² (H2 + H4)²`, the theta factor of `𝓛_{1,0}`.
pub fn script_l10_theta_factor(th: &ThetaForms) -> FourierSeries {
    th.h2.pow(5).mul(&th.h4.square()).mul(&th.h2.add(&th.h4).square())
}

/// `X_{4,2} = Σ n σ1(n) q^n`.
pub fn x42(order: usize) -> FourierSeries {
    x_w2(4, order).expect("weight 4 is supported")
}

/// `P_1 = X_{4,2}(z) - 8 X_{4,2}(2z)`.
pub fn p1(order: usize) -> FourierSeries {
    let x = x42(order);
    x.sub(&x.dilate(2).scale_int(8))
}

/// `P_2 = (-E2(z) + 5 E2(2z) - 4 E2(4z)) / 24`.
pub fn p2(order: usize) -> FourierSeries {
    let e = e2(order);
    e.neg().add(&e.dilate(2).scale_int(5)).sub(&e.dilate(4).scale_int(4)).scale_frac(1, 24)
}

/// `P_3 = X_{6,1}(z) - 32 X_{6,1}(2z)`.
pub fn p3(order: usize) -> FourierSeries {
    let x = x_w1(6, order).expect("weight 6 is supported");
    x.sub(&x.dilate(2).scale_int(32))
}

/// `X_{12,1} = -E10'/277200 - Δ/1050`, cheap at large orders.
pub fn x121_direct(order: usize) -> FourierSeries {
    let e10 = crate::forms::divisor_eisenstein(-264, 9, order);
    e10.derivative().scale_frac(-1, 277200).sub(&delta(order).scale_frac(1, 1050))
}

/// `P_4 = X_{12,1}(z) - 2^{11} X_{12,1}(2z)`.
pub fn p4(order: usize) -> FourierSeries {
    let x = x121_direct(order);
    x.sub(&x.dilate(2).scale_int(2048))
}

/// `X_{4,2} Δ`.
pub fn x42_delta(order: usize) -> FourierSeries {
    x42(order).mul(&delta(order))
}

/// `(E4 Δ - Δ'') / 312`.
pub fn x42_delta_closed(order: usize) -> FourierSeries {
    let d = delta(order);
    e4(order).mul(&d).sub(&d.nth_derivative(2)).scale_frac(1, 312)
}

/// `-F(z + 1/2)` for an integer-exponent form.
pub fn negated_half_shift(f: &FourierSeries) -> FourierSeries {
    f.half_shift().expect("integer exponents").neg()
}

/// `(-E2(z) + E2(z + 1/2)) / 48`.
pub fn e2_odd_part(order: usize) -> FourierSeries {
    let e = e2(order);
    e.half_shift().expect("integer exponents").sub(&e).scale_frac(1, 48)
}

/// `(6 E2(4z) - 5 E2(2z) - E2(z)) / 24`.
pub fn e2_level4_combo(order: usize) -> FourierSeries {
    let e = e2(order);
    e.dilate(4).scale_int(6).sub(&e.dilate(2).scale_int(5)).sub(&e).scale_frac(1, 24)
}

/// `E2(z/2)` and `E2((z+1)/2)` as grain-2 series.
pub fn e2_half_forms(order: usize) -> (FourierSeries, FourierSeries) {
    let e = e2(order);
    let half = e.contract(2);
    let shifted = e.half_shift().expect("integer exponents").contract(2);
    (half, shifted)
}

/// Every composite form at one order.
#[derive(Clone, Debug)]
pub struct CompositeForms {
    pub f: FourierSeries,
    pub g: FourierSeries,
    pub k10: FourierSeries,
    pub k12: FourierSeries,
    pub k14: FourierSeries,
    pub l: FourierSeries,
    pub script_l10: FourierSeries,
    pub p1: FourierSeries,
    pub p2: FourierSeries,
    pub p3: FourierSeries,
    pub p4: FourierSeries,
    pub x42_delta: FourierSeries,
}

pub fn composite_forms(order: usize) -> CompositeForms {
    let th = theta_forms(order);
    let f = f16(order);
    let g = g14_from(&th);
    let script_l10 = script_l10_from(&f, &g);
    CompositeForms {
        k10: k10_from(&th),
        k12: k12_from(&th),
        k14: k14_from(&th),
        l: l14_from(&th, order),
        script_l10,
        f,
        g,
        p1: p1(order),
        p2: p2(order),
        p3: p3(order),
        p4: p4(order),
        x42_delta: x42_delta(order),
    }
}

/// Closed-form `n`-th coefficient of `P_4` from divisor sums and `τ`.
pub fn p4_coefficient_oracle(n: u64) -> Rational {
    use crate::forms::{sigma, tau};
    let mut v = sigma(9, n) * n - tau(n);
    if n.is_multiple_of(2) {
        let m = n / 2;
        v -= sigma(9, m) * 1024u32 * n;
        v += tau(m) * 2048u32;
    }
    Rational::from((v, 1050))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x42_delta_display() {
        let s = x42_delta(7);
        let v: Vec<i64> = (2..=7).map(|n| s.coeff(n).to_f64() as i64).collect();
        assert_eq!(v, vec![1, -18, 120, -220, -1620, 11676]);
        assert_eq!(s, x42_delta_closed(7));
    }

    #[test]
    fn p4_matches_oracle() {
        let p = p4(40);
        for n in 1..=40u64 {
            assert_eq!(p.coeff(n as usize), p4_coefficient_oracle(n), "n = {n}");
        }
        assert_eq!(p.coeff(2), 1);
    }

    #[test]
    fn p1_coefficient_two() {
        assert_eq!(p1(5).coeff(2), -2);
    }

    #[test]
    fn k_forms_have_integer_exponents() {
        let th = theta_forms(30);
        assert!(k10_from(&th).has_integer_exponents());
        assert!(k12_from(&th).has_integer_exponents());
        assert!(k14_from(&th).has_integer_exponents());
    }

    #[test]
    fn e2_combinations() {
        let odd = e2_odd_part(30);
        for n in 0..=30u64 {
            let want = if n % 2 == 1 { crate::forms::sigma(1, n) } else { 0.into() };
            assert_eq!(odd.coeff(n as usize), want);
        }
    }
}
