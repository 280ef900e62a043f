//! Extremal quasimodular forms of depth one and two, the `(A_w, B_{w-2})`
//! split of depth-one forms and the dilation families built from them.

mod linalg;

use std::collections::BTreeMap;

use rug::ops::Pow;
use rug::{Integer, Rational};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{delta, e2, e4, e6, eisenstein, Eisenstein};
use crate::qseries::{FourierSeries, SeriesJson};

pub use linalg::{extremal_by_linear_algebra, extremal_poly, quasimodular_basis, BasisMonomial};

fn frac(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

fn check_depth1_weight(w: u32) -> Result<()> {
    if w < 6 || w % 2 == 1 {
        return Err(Error::BadWeight(w as i64));
    }
    Ok(())
}

/// Generators shared by a recurrence run.
struct Gens {
    e2: FourierSeries,
    e4: FourierSeries,
    e6: FourierSeries,
}

impl Gens {
    fn new(order: usize) -> Self {
        Gens { e2: e2(order), e4: e4(order), e6: e6(order) }
    }

    fn serre(&self, f: &FourierSeries, k: i64) -> FourierSeries {
        f.derivative().sub(&self.e2.mul(f).scale_frac(k, 12))
    }
}

/// `X_{6,1} = (E2 E4 - E6)/720`.
pub fn x61(order: usize) -> FourierSeries {
    let g = Gens::new(order);
    g.e2.mul(&g.e4).sub(&g.e6).scale_frac(1, 720)
}

/// All `X_{w,1}` for even `6 ≤ w ≤ max_w` by Grabner's three recurrences.
pub fn x_w1_family(max_w: u32, order: usize) -> BTreeMap<u32, FourierSeries> {
    let g = Gens::new(order);
    let mut x = BTreeMap::new();
    x.insert(6, g.e2.mul(&g.e4).sub(&g.e6).scale_frac(1, 720));
    let mut w = 6u32;
    while w + 2 <= max_w {
        let xw = x[&w].clone();
        let xw2 = g.serre(&xw, w as i64 - 1).scale_frac(12, w as i64 + 1);
        x.insert(w + 2, xw2.clone());
        if w + 4 <= max_w {
            x.insert(w + 4, g.e4.mul(&xw));
        }
        if w + 6 <= max_w {
            let c = frac(w as i64 + 6, 864 * (w as i64 + 5));
            x.insert(w + 6, g.e4.mul(&xw2).sub(&g.e6.mul(&xw)).scale(&c));
        }
        w += 6;
    }
    x
}

/// Normalized extremal form `X_{w,1}` (Grabner chain).
pub fn x_w1(w: u32, order: usize) -> Result<FourierSeries> {
    check_depth1_weight(w)?;
    Ok(x_w1_family(w, order).remove(&w).expect("family covers w"))
}

/// Lee's derivative recurrences: the `6 | w` chain and its two companions,
/// integrated with zero constant term from the `w = 6, 8, 10` seeds.
pub fn x_w1_family_lee(max_w: u32, order: usize) -> BTreeMap<u32, FourierSeries> {
    let mut x = x_w1_family(10.min(max_w.max(6)), order);
    let mut w = 12u32;
    while w <= max_w {
        let wi = w as i64;
        let c5 = frac(5 * wi, 72);
        let c7 = frac(7 * wi, 72);
        let (x6, x8, x10) = (x[&6].clone(), x[&8].clone(), x[&10].clone());
        let d0 = x6.mul(&x[&(w - 4)]).scale(&c5).add(&x8.mul(&x[&(w - 6)]).scale(&c7));
        x.insert(w, d0.integrate().expect("cuspidal derivative"));
        if w + 2 <= max_w {
            let d2 = x6.mul(&x[&(w - 2)]).scale(&c5).add(&x8.mul(&x[&(w - 4)]).scale(&c7));
            x.insert(w + 2, d2.integrate().expect("cuspidal derivative"));
        }
        if w + 4 <= max_w {
            let d4 = x6
                .mul(&x[&w])
                .scale_int(240)
                .add(&x8.mul(&x[&(w - 2)]).scale(&c7))
                .add(&x10.mul(&x[&(w - 4)]).scale(&c5));
            x.insert(w + 4, d4.integrate().expect("cuspidal derivative"));
        }
        w += 6;
    }
    x
}

/// `X_{w,1} = A_w + E2 B_{w-2}` with `A_w`, `B_{w-2}` modular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Depth1Components {
    pub w: u32,
    pub a: FourierSeries,
    pub b: FourierSeries,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComponentsJson {
    pub w: u32,
    #[serde(rename = "A")]
    pub a: SeriesJson,
    #[serde(rename = "B")]
    pub b: SeriesJson,
}

impl Depth1Components {
    /// `α_{w,n}`.
    pub fn alpha(&self, n: usize) -> Rational {
        self.a.coeff(n)
    }

    /// `β_{w-2,n}`.
    pub fn beta(&self, n: usize) -> Rational {
        self.b.coeff(n)
    }

    pub fn recompose(&self) -> FourierSeries {
        let e2 = e2(self.a.integer_order());
        self.a.add(&e2.mul(&self.b))
    }

    pub fn to_json(&self) -> ComponentsJson {
        ComponentsJson { w: self.w, a: self.a.to_json(), b: self.b.to_json() }
    }
}

/// Components for all even `6 ≤ w ≤ max_w`.
///
/// `w = 6, 8, 10` are read off the explicit E2-polynomials; `w = 12, 14, 16`
/// are seeded from their closed forms and every heavier weight comes from the
/// `A`/`B` recurrences.
pub fn components_family(max_w: u32, order: usize) -> BTreeMap<u32, Depth1Components> {
    let g = Gens::new(order);
    let (e4, e6) = (&g.e4, &g.e6);
    let e4sq = e4.square();
    let e4e6 = e4.mul(e6);
    let e4cube = e4sq.mul(e4);
    let e6sq = e6.square();
    let mut seeds: Vec<(u32, FourierSeries, FourierSeries)> = vec![
        (6, e6.scale_frac(-1, 720), e4.scale_frac(1, 720)),
        (8, e4sq.scale_frac(1, 1008), e6.scale_frac(-1, 1008)),
        (10, e4e6.scale_frac(-1, 720), e4sq.scale_frac(1, 720)),
    ];
    let a12 = e4cube.scale_int(5).add(&e6sq.scale_int(7)).scale_frac(1, 3991680);
    seeds.push((12, a12.clone(), e4e6.scale_frac(-1, 332640)));
    seeds.push((
        14,
        e4sq.mul(e6).scale_frac(-1, 393120),
        e4cube.scale_int(7).add(&e6sq.scale_int(5)).scale_frac(1, 4717440),
    ));
    seeds.push((16, e4.mul(&a12), e4sq.mul(e6).scale_frac(-1, 332640)));

    let mut out = BTreeMap::new();
    for (w, a, b) in seeds {
        if w <= max_w {
            out.insert(w, Depth1Components { w, a, b });
        }
    }
    let mut w = 12u32;
    while w + 6 <= max_w {
        let c = frac(w as i64 + 6, 864 * (w as i64 + 5));
        let (aw, bw) = (&out[&w].a, &out[&w].b);
        let (aw2, bw2) = (&out[&(w + 2)].a, &out[&(w + 2)].b);
        let a6 = e4.mul(aw2).sub(&e6.mul(aw)).scale(&c);
        let b6 = e4.mul(bw2).sub(&e6.mul(bw)).scale(&c);
        let n = w + 6;
        out.insert(n, Depth1Components { w: n, a: a6.clone(), b: b6.clone() });
        if n + 2 <= max_w {
            let k = frac(12, n as i64 + 1);
            let a8 = g.serre(&a6, n as i64).sub(&e4.mul(&b6).scale_frac(1, 12)).scale(&k);
            let b8 = a6.scale_frac(1, 12).add(&g.serre(&b6, n as i64 - 2)).scale(&k);
            out.insert(n + 2, Depth1Components { w: n + 2, a: a8, b: b8 });
        }
        if n + 4 <= max_w {
            out.insert(n + 4, Depth1Components { w: n + 4, a: e4.mul(&a6), b: e4.mul(&b6) });
        }
        w += 6;
    }
    out
}

pub fn x_w1_components(w: u32, order: usize) -> Result<Depth1Components> {
    check_depth1_weight(w)?;
    Ok(components_family(w, order).remove(&w).expect("family covers w"))
}

/// `(-1)^{w/6} (w/6)! (w/3)! (w/2)! / (2w · w!)`.
pub fn alpha_w0_closed(w: u32) -> Result<Rational> {
    if w < 6 || !w.is_multiple_of(6) {
        return Err(Error::BadWeight(w as i64));
    }
    let f = |n: u32| Integer::from(Integer::factorial(n));
    let num = f(w / 6) * f(w / 3) * f(w / 2);
    let den = f(w) * (2 * w);
    let mut r = Rational::from((num, den));
    if (w / 6) % 2 == 1 {
        r = -r;
    }
    Ok(r)
}

/// `α_{w,0}` for `6 | w` by the constant-term recurrence from `α_{6,0} = -1/720`.
pub fn alpha_w0_recurrence(w: u32) -> Result<Rational> {
    if w < 6 || !w.is_multiple_of(6) {
        return Err(Error::BadWeight(w as i64));
    }
    let mut a = frac(-1, 720);
    let mut k = 6i64;
    while (k as u32) < w {
        a *= Rational::from((-k * (k + 6), 432 * (k + 1) * (k + 5)));
        k += 6;
    }
    Ok(a)
}

/// The six first-coefficient ratio laws at `w` (`6 | w`, `w ≥ 12`), in the
/// order `α_w, α_{w+2}, α_{w+4}, β_{w-2}, β_w, β_{w+2}`.
pub fn ratio_laws_predicted(w: u32) -> [Rational; 6] {
    let w = w as i64;
    let d = w - 6;
    [
        frac(-12 * (w - 3) * (w + 4), d),
        frac(-12 * (w * w - 9 * w - 24), d),
        frac(-12 * (w * w - 19 * w + 108), d),
        frac(-12 * (w - 1) * w, d),
        frac(-12 * (w - 12) * (w + 1), d),
        frac(-12 * (w * w - 21 * w + 120), d),
    ]
}

/// Observed ratios `coeff_1 / coeff_0` in the same order as
/// [`ratio_laws_predicted`].
pub fn ratio_laws_observed(family: &BTreeMap<u32, Depth1Components>, w: u32) -> Option<[Rational; 6]> {
    let r = |s: &FourierSeries| {
        let c0 = s.coeff(0);
        if c0 == 0 {
            None
        } else {
            Some(s.coeff(1) / c0)
        }
    };
    let (c0, c2, c4) = (family.get(&w)?, family.get(&(w + 2))?, family.get(&(w + 4))?);
    Some([r(&c0.a)?, r(&c2.a)?, r(&c4.a)?, r(&c0.b)?, r(&c2.b)?, r(&c4.b)?])
}

/// Explicit depth-two extremal forms for `w ∈ {4, 8, 10, 12, 14}`; other
/// even weights fall back to the linear-algebra construction.
pub fn x_w2(w: u32, order: usize) -> Result<FourierSeries> {
    match w {
        4 => Ok(e2(order).derivative().scale_frac(-1, 24)),
        8 => {
            let t1 = e6(order).derivative().scale_frac(-1, 15120);
            let t2 = e4(order).nth_derivative(2).scale_frac(-1, 7200);
            Ok(t1.add(&t2))
        }
        10 => {
            let t1 = eisenstein(Eisenstein::E8, order).derivative().scale_frac(1, 60480);
            let t2 = e6(order).nth_derivative(2).scale_frac(1, 63504);
            Ok(t1.add(&t2))
        }
        12 => {
            let d = delta(order).scale_frac(17, 21);
            let t1 = eisenstein(Eisenstein::E10, order).derivative().scale_frac(1, 308);
            let t2 = eisenstein(Eisenstein::E8, order).nth_derivative(2).scale_frac(1, 288);
            Ok(d.sub(&t1).sub(&t2).scale_frac(1, 18000))
        }
        14 => {
            let d = x_w2(4, order)?.mul(&x_w1(12, order)?).scale_int(3);
            d.integrate()
        }
        w if w >= 4 && w % 2 == 0 && w != 6 => extremal_by_linear_algebra(w, 2, order),
        _ => Err(Error::BadWeight(w as i64)),
    }
}

/// The three dilation-difference families attached to a weight.
#[derive(Clone, Debug)]
pub struct Level2Families {
    /// `X_{w,2}(z) - 2^{w-1} X_{w,2}(2z)`.
    pub xtilde_w2: FourierSeries,
    /// `X_{w,2}(z) - 2^{w-2} X_{w,2}(2z)`.
    pub y_w2: FourierSeries,
    /// `X_{w,1}(z) - N^{w - ⌈w/6⌉} X_{w,1}(Nz)`; absent for `w < 6`.
    pub y_w1_style: Option<FourierSeries>,
}

/// `F(z) - c F(Nz)`.
pub fn dilation_difference(f: &FourierSeries, n: u32, c: &Rational) -> FourierSeries {
    f.sub(&f.dilate(n).scale(c))
}

pub fn pow_rational(base: u32, e: u32) -> Rational {
    Rational::from(Integer::from(base).pow(e))
}

pub fn xtilde_w2(w: u32, order: usize) -> Result<FourierSeries> {
    Ok(dilation_difference(&x_w2(w, order)?, 2, &pow_rational(2, w - 1)))
}

pub fn y_w2(w: u32, order: usize) -> Result<FourierSeries> {
    Ok(dilation_difference(&x_w2(w, order)?, 2, &pow_rational(2, w - 2)))
}

pub fn y_w1_style(w: u32, n: u32, order: usize) -> Result<FourierSeries> {
    let a = a_w_exponent(w)?;
    Ok(dilation_difference(&x_w1(w, order)?, n, &pow_rational(n, a)))
}

pub fn level2_families(w: u32, n: u32, order: usize) -> Result<Level2Families> {
    let x = x_w2(w, order)?;
    let y_w1_style = if w >= 6 { Some(y_w1_style(w, n, order)?) } else { None };
    Ok(Level2Families {
        xtilde_w2: dilation_difference(&x, 2, &pow_rational(2, w - 1)),
        y_w2: dilation_difference(&x, 2, &pow_rational(2, w - 2)),
        y_w1_style,
    })
}

/// `a_w = w - ⌈w/6⌉`.
pub fn a_w_exponent(w: u32) -> Result<u32> {
    check_depth1_weight(w)?;
    Ok(w - w.div_ceil(6))
}

/// The three min-recurrences for `a_w` at `6 | w`, `w ≥ 12`.
pub fn a_w_recurrences_hold(w: u32) -> bool {
    let a = |k: u32| a_w_exponent(k).expect("even weight >= 6");
    a(w) == (a(w - 4) + 4).min(a(w - 6) + 5)
        && a(w + 2) == (a(w - 2) + 4).min(a(w - 4) + 5)
        && a(w + 4) == (a(w) + 4).min(a(w - 2) + 5).min(a(w - 4) + 7)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::sigma;

    fn ints(s: &FourierSeries, upto: usize) -> Vec<Rational> {
        (0..=upto).map(|n| s.coeff(n)).collect()
    }

    #[test]
    fn x61_is_n_sigma3() {
        let x = x_w1(6, 30).unwrap();
        for n in 1..=30u64 {
            assert_eq!(x.coeff(n as usize), (sigma(3, n) * n));
        }
        assert_eq!(ints(&x, 3), vec![frac(0, 1), frac(1, 1), frac(18, 1), frac(84, 1)]);
    }

    #[test]
    fn x121_matches_tau_formula() {
        let x = x_w1(12, 40).unwrap();
        for n in 1..=40u64 {
            let v = Rational::from((sigma(9, n) * n - crate::forms::tau(n), 1050));
            assert_eq!(x.coeff(n as usize), v);
        }
        assert_eq!(x.coeff(2), 1);
        assert_eq!(x.coeff(3), 56);
    }

    #[test]
    fn grabner_and_lee_agree() {
        let a = x_w1_family(48, 40);
        let b = x_w1_family_lee(48, 40);
        for w in (6..=48).step_by(2) {
            assert_eq!(a[&w], b[&w], "w = {w}");
        }
    }

    #[test]
    fn components_recompose() {
        let fam = components_family(40, 30);
        let xs = x_w1_family(40, 30);
        for (w, c) in &fam {
            assert_eq!(c.recompose(), xs[w], "w = {w}");
            assert_eq!(c.beta(0), -c.alpha(0));
        }
        assert_eq!(fam[&12].alpha(0), frac(1, 332640));
        assert_eq!(fam[&12].alpha(1), frac(-1, 1155));
        assert_eq!(fam[&12].beta(0), frac(-1, 332640));
        assert_eq!(fam[&12].beta(1), frac(1, 1260));
        assert_eq!(fam[&12].alpha(1) / fam[&12].alpha(0), -288);
    }

    #[test]
    fn alpha_closed_vs_recurrence() {
        assert_eq!(alpha_w0_closed(6).unwrap(), frac(-1, 720));
        assert_eq!(alpha_w0_closed(12).unwrap(), frac(1, 332640));
        for w in (6..=120).step_by(6) {
            assert_eq!(alpha_w0_closed(w).unwrap(), alpha_w0_recurrence(w).unwrap());
        }
        assert!(matches!(alpha_w0_closed(8), Err(Error::BadWeight(8))));
    }

    #[test]
    fn depth_two_coefficients() {
        let x4 = x_w2(4, 5).unwrap();
        assert_eq!(ints(&x4, 3), vec![frac(0, 1), frac(1, 1), frac(6, 1), frac(12, 1)]);
        let x8 = x_w2(8, 30).unwrap();
        let x10 = x_w2(10, 30).unwrap();
        for n in 1..=30u64 {
            let a8 = Rational::from((sigma(5, n) * n - sigma(3, n) * n * n, 30));
            let a10 = Rational::from((sigma(7, n) * n - sigma(5, n) * n * n, 126));
            assert_eq!(x8.coeff(n as usize), a8);
            assert_eq!(x10.coeff(n as usize), a10);
        }
        assert_eq!(x8.coeff(3), 16);
        let x14 = x_w2(14, 20).unwrap();
        assert_eq!(x14.valuation(), Some(3));
        assert_eq!(x14.coeff(3), 1);
    }

    #[test]
    fn linear_algebra_matches_explicit() {
        for w in [8u32, 10, 12, 14] {
            let explicit = x_w2(w, 25).unwrap();
            assert_eq!(extremal_by_linear_algebra(w, 2, 25).unwrap(), explicit, "w = {w}");
        }
        for w in [6u32, 12, 18, 20] {
            assert_eq!(extremal_by_linear_algebra(w, 1, 25).unwrap(), x_w1(w, 25).unwrap(), "w = {w}");
        }
    }

    #[test]
    fn y_tables() {
        let y4 = y_w2(4, 6).unwrap();
        assert_eq!(ints(&y4, 5)[1..].to_vec(), vec![frac(1, 1), frac(2, 1), frac(12, 1), frac(4, 1), frac(30, 1)]);
        assert_eq!(y_w2(8, 6).unwrap().coeff(4), 38);
        assert_eq!(y_w2(16, 8).unwrap().coeff(5), frac(864, 25));
    }

    #[test]
    fn a_w_values() {
        assert_eq!(a_w_exponent(6).unwrap(), 5);
        assert_eq!(a_w_exponent(12).unwrap(), 10);
        for k in 1..=100 {
            assert_eq!(a_w_exponent(6 * k).unwrap(), 5 * k);
        }
        for w in (12..=600).step_by(6) {
            assert!(a_w_recurrences_hold(w));
        }
        assert!(a_w_exponent(5).is_err());
    }
}
