//! Truncated Fourier series in `q^{1/g}` with exact rational coefficients.
//!
//! A [`FourierSeries`] stores the coefficients of `q^{k/g}` for
//! `k = 0..=order`. Precision is tracked by absolute exponent: combining a
//! series known to `q^{5}` with one known to `q^{9/2}` yields a result known to
//! `q^{9/2}`, whatever the grains involved.

mod kronecker;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::ops::Pow;
use rug::{Integer, Rational};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use kronecker::{mul_truncated as integer_product, schoolbook as integer_product_schoolbook};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourierSeries {
    grain: u32,
    coeffs: Vec<Rational>,
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    a / gcd_u32(a, b) * b
}

impl FourierSeries {
    /// Builds a series of the given grain from coefficients `c_0..=c_K`.
    ///
    /// Panics if `grain == 0` or `coeffs` is empty.
    pub fn new(grain: u32, coeffs: Vec<Rational>) -> Self {
        assert!(grain >= 1, "grain must be positive");
        assert!(!coeffs.is_empty(), "a series stores at least its constant term");
        FourierSeries { grain, coeffs }
    }

    /// Integer-exponent series `Σ_{n ≤ order} f(n) q^n`.
    pub fn from_fn<F>(order: usize, f: F) -> Self
    where
        F: FnMut(usize) -> Rational,
    {
        FourierSeries::new(1, (0..=order).map(f).collect())
    }

    pub fn from_integers<I, T>(grain: u32, coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        Integer: From<T>,
    {
        FourierSeries::new(grain, coeffs.into_iter().map(|c| Rational::from(Integer::from(c))).collect())
    }

    pub fn zero(order: usize) -> Self {
        FourierSeries::new(1, vec![Rational::new(); order + 1])
    }

    pub fn constant(c: impl Into<Rational>, order: usize) -> Self {
        let mut coeffs = vec![Rational::new(); order + 1];
        coeffs[0] = c.into();
        FourierSeries::new(1, coeffs)
    }

    pub fn one(order: usize) -> Self {
        FourierSeries::constant(1, order)
    }

    /// `c q^{n}` with integer exponent, truncated at `order`.
    pub fn monomial(c: impl Into<Rational>, n: usize, order: usize) -> Self {
        let mut s = FourierSeries::zero(order);
        if n <= order {
            s.coeffs[n] = c.into();
        }
        s
    }

    pub fn grain(&self) -> u32 {
        self.grain
    }

    /// Index of the last stored coefficient (exponent `order / grain`).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Largest exponent up to which the series is known, `order / grain`.
    pub fn abs_order(&self) -> Rational {
        Rational::from((self.order() as u64, self.grain as u64))
    }

    /// Largest integer exponent covered by the stored coefficients.
    pub fn integer_order(&self) -> usize {
        self.order() / self.grain as usize
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient at index `k` (exponent `k / grain`); zero past the order.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Coefficient of `q^n` for integer `n`; `None` when `n` exceeds the order.
    pub fn coeff_int(&self, n: usize) -> Option<&Rational> {
        self.coeffs.get(n * self.grain as usize)
    }

    /// Coefficient at an arbitrary rational exponent; `None` past the order
    /// and zero when the exponent does not lie on this series' grain.
    pub fn coeff_at(&self, exponent: &Rational) -> Option<Rational> {
        if *exponent < 0 || *exponent > self.abs_order() {
            return None;
        }
        let scaled = Rational::from(exponent * self.grain);
        if *scaled.denom() != 1 {
            return Some(Rational::new());
        }
        let k = scaled.numer().to_usize().expect("index fits");
        Some(self.coeffs[k].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| *c != 0)
    }

    /// Exponent of the first nonzero coefficient.
    pub fn leading_exponent(&self) -> Option<Rational> {
        self.valuation().map(|k| Rational::from((k as u64, self.grain as u64)))
    }

    pub fn has_integer_exponents(&self) -> bool {
        let g = self.grain as usize;
        g == 1 || self.coeffs.iter().enumerate().all(|(k, c)| k % g == 0 || *c == 0)
    }

    /// Re-expresses the series at a grain that is a multiple of the current one.
    pub fn regrain(&self, grain: u32) -> Self {
        assert!(grain.is_multiple_of(self.grain), "new grain must be a multiple of {}", self.grain);
        let step = (grain / self.grain) as usize;
        if step == 1 {
            return self.clone();
        }
        let mut coeffs = vec![Rational::new(); self.order() * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * step] = c.clone();
        }
        FourierSeries::new(grain, coeffs)
    }

    /// Smallest grain that represents the same coefficients, dropping any
    /// trailing partial step of precision.
    pub fn reduced(&self) -> Self {
        let mut g = self.grain;
        for (k, c) in self.coeffs.iter().enumerate() {
            if *c != 0 {
                g = gcd_u32(g, k as u32);
            }
        }
        if g <= 1 {
            return self.clone();
        }
        let step = g as usize;
        let coeffs = self.coeffs.iter().step_by(step).cloned().collect();
        FourierSeries::new(self.grain / g, coeffs)
    }

    /// Lossless move to grain 1; fails on genuine fractional exponents.
    pub fn to_integer_grain(&self) -> Result<Self> {
        if !self.has_integer_exponents() {
            return Err(Error::NonIntegerGrain);
        }
        let g = self.grain as usize;
        Ok(FourierSeries::new(1, self.coeffs.iter().step_by(g).cloned().collect()))
    }

    /// Keeps exponents up to the integer `n` (no-op if already shorter).
    pub fn truncate(&self, n: usize) -> Self {
        let keep = (n * self.grain as usize).min(self.order());
        FourierSeries::new(self.grain, self.coeffs[..=keep].to_vec())
    }

    /// Keeps coefficients with index `≤ k` at the current grain.
    pub fn truncate_index(&self, k: usize) -> Self {
        let keep = k.min(self.order());
        FourierSeries::new(self.grain, self.coeffs[..=keep].to_vec())
    }

    fn aligned(&self, other: &Self) -> (u32, Self, Self, usize) {
        let g = lcm_u32(self.grain, other.grain);
        let a = self.regrain(g);
        let b = other.regrain(g);
        let order = a.order().min(b.order());
        (g, a, b, order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (g, a, b, order) = self.aligned(other);
        let coeffs = (0..=order).map(|k| Rational::from(&a.coeffs[k] + &b.coeffs[k])).collect();
        FourierSeries::new(g, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (g, a, b, order) = self.aligned(other);
        let coeffs = (0..=order).map(|k| Rational::from(&a.coeffs[k] - &b.coeffs[k])).collect();
        FourierSeries::new(g, coeffs)
    }

    pub fn neg(&self) -> Self {
        FourierSeries::new(self.grain, self.coeffs.iter().map(|c| Rational::from(-c)).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        FourierSeries::new(self.grain, self.coeffs.iter().map(|x| Rational::from(x * c)).collect())
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&Rational::from(c))
    }

    pub fn scale_frac(&self, num: i64, den: i64) -> Self {
        self.scale(&Rational::from((num, den)))
    }

    /// Common-denominator integer form: `self = ints / den`.
    pub fn integer_form(&self) -> (Vec<Integer>, Integer) {
        let mut den = Integer::from(1);
        for c in &self.coeffs {
            if *c.denom() != 1 {
                den.lcm_mut(c.denom());
            }
        }
        let ints = self
            .coeffs
            .iter()
            .map(|c| {
                let mut v = Integer::from(&den / c.denom());
                v *= c.numer();
                v
            })
            .collect();
        (ints, den)
    }

    /// Cauchy product after grain alignment, truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let (g, a, b, order) = self.aligned(other);
        let (ia, da) = a.truncate_index(order).integer_form();
        let (ib, db) = b.truncate_index(order).integer_form();
        let prod = kronecker::mul_truncated(&ia, &ib, order);
        let den = da * db;
        let coeffs = prod.into_iter().map(|n| Rational::from((n, den.clone()))).collect();
        FourierSeries::new(g, coeffs)
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = FourierSeries::one(self.integer_order()).regrain(self.grain).truncate_index(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        result
    }

    /// `D = q d/dq`: the coefficient at exponent `r` is multiplied by `r`.
    pub fn derivative(&self) -> Self {
        let g = Rational::from(self.grain);
        let coeffs = self.coeffs.iter().enumerate().map(|(k, c)| (c * Rational::from(k)) / &g).collect();
        FourierSeries::new(self.grain, coeffs)
    }

    pub fn nth_derivative(&self, n: u32) -> Self {
        (0..n).fold(self.clone(), |acc, _| acc.derivative())
    }

    /// Antiderivative for `D` with zero constant term.
    pub fn integrate(&self) -> Result<Self> {
        if self.coeffs[0] != 0 {
            return Err(Error::InvalidInput("cannot integrate a series with nonzero constant term".into()));
        }
        let g = Rational::from(self.grain);
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k == 0 { Rational::new() } else { Rational::from(c * &g) / Rational::from(k) })
            .collect();
        Ok(FourierSeries::new(self.grain, coeffs))
    }

    /// `F(Nz)`: exponent `r ↦ N r`, valid to `N` times the input's order.
    pub fn dilate(&self, n: u32) -> Self {
        assert!(n >= 1);
        let d = gcd_u32(n, self.grain);
        let grain = self.grain / d;
        let step = (n / d) as usize;
        let mut coeffs = vec![Rational::new(); self.order() * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * step] = c.clone();
        }
        FourierSeries::new(grain, coeffs)
    }

    /// `F(z/N)`: exponent `r ↦ r / N`, realized by raising the grain.
    pub fn contract(&self, n: u32) -> Self {
        assert!(n >= 1);
        FourierSeries::new(self.grain * n, self.coeffs.clone()).reduced_keep_order()
    }

    fn reduced_keep_order(&self) -> Self {
        let g = self.grain;
        let mut d = g;
        for (k, c) in self.coeffs.iter().enumerate() {
            if *c != 0 {
                d = gcd_u32(d, k as u32);
            }
        }
        d = gcd_u32(d, self.order() as u32);
        if d <= 1 {
            return self.clone();
        }
        FourierSeries::new(g / d, self.coeffs.iter().step_by(d as usize).cloned().collect())
    }

    /// `F(z + 1/2)`: multiplies the coefficient of `q^n` by `(-1)^n`.
    pub fn half_shift(&self) -> Result<Self> {
        let s = self.to_integer_grain()?;
        let coeffs =
            s.coeffs.iter().enumerate().map(|(n, c)| if n % 2 == 1 { Rational::from(-c) } else { c.clone() }).collect();
        Ok(FourierSeries::new(1, coeffs))
    }

    /// Exact quotient `self / divisor`.
    ///
    /// The divisor's leading exponent `v` must not exceed the dividend's; the
    /// quotient is valid to `min(order_self, order_divisor) - v`.
    pub fn divide(&self, divisor: &Self) -> Result<Self> {
        let (g, a, b, order) = self.aligned(divisor);
        let v = b.valuation().ok_or_else(|| Error::InvalidInput("division by the zero series".into()))?;
        if a.coeffs[..v.min(order + 1)].iter().any(|c| *c != 0) {
            return Err(Error::InvalidInput("dividend vanishes to lower order than divisor".into()));
        }
        if v > order {
            return Err(Error::InvalidInput("divisor's leading term lies beyond the known order".into()));
        }
        let len = order - v;
        let lead = b.coeffs[v].clone();
        let mut quot: Vec<Rational> = Vec::with_capacity(len + 1);
        for k in 0..=len {
            let mut acc = a.coeffs[k + v].clone();
            for j in 1..=k {
                let bj = &b.coeffs[v + j];
                if *bj != 0 {
                    acc -= Rational::from(bj * &quot[k - j]);
                }
            }
            quot.push(acc / &lead);
        }
        Ok(FourierSeries::new(g, quot))
    }

    /// First exponent (up to the common order) where the two series differ,
    /// with the value of `self - other` there.
    pub fn first_difference(&self, other: &Self) -> Option<(Rational, Rational)> {
        let diff = self.sub(other);
        diff.valuation().map(|k| (Rational::from((k as u64, diff.grain as u64)), diff.coeffs[k].clone()))
    }

    /// Agreement of all coefficients at exponents `≤ upto` (and within both orders).
    pub fn equal_up_to(&self, other: &Self, upto: usize) -> bool {
        let diff = self.sub(other).truncate(upto);
        diff.is_zero()
    }

    /// Evaluates Σ c_r x^r for a real `x` in double precision (used only for
    /// quick diagnostics; high precision lives in `numeric`).
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64()).collect()
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            grain: self.grain,
            order: self.order(),
            coeffs: self.coeffs.iter().map(|c| [c.numer().to_string(), c.denom().to_string()]).collect(),
        }
    }

    pub fn from_json(j: &SeriesJson) -> Result<Self> {
        if j.grain == 0 || j.coeffs.len() != j.order + 1 {
            return Err(Error::Parse(
                "series JSON: grain must be positive and coeffs must have order+1 entries".into(),
            ));
        }
        let coeffs = j
            .coeffs
            .iter()
            .map(|[n, d]| {
                let n: Integer = n.parse().map_err(|_| Error::Parse(format!("bad numerator {n}")))?;
                let d: Integer = d.parse().map_err(|_| Error::Parse(format!("bad denominator {d}")))?;
                if d == 0 {
                    return Err(Error::Parse("zero denominator".into()));
                }
                Ok(Rational::from((n, d)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FourierSeries::new(j.grain, coeffs))
    }
}

/// JSON shape of a series; integers are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub grain: u32,
    pub order: usize,
    pub coeffs: Vec<[String; 2]>,
}

impl fmt::Display for FourierSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let exp = Rational::from((k as u64, self.grain as u64));
            let mag = Rational::from(c.abs_ref());
            let negative = *c < 0;
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let coeff = if *mag.denom() == 1 { mag.numer().to_string() } else { format!("({mag})") };
            if exp == 0 {
                write!(f, "{coeff}")?;
                continue;
            }
            if mag != 1 {
                f.write_str(&coeff)?;
            }
            f.write_str("q")?;
            if exp != 1 {
                if *exp.denom() == 1 {
                    write!(f, "^{}", exp.numer())?;
                } else {
                    write!(f, "^{{{exp}}}")?;
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Add for &FourierSeries {
    type Output = FourierSeries;
    fn add(self, rhs: &FourierSeries) -> FourierSeries {
        FourierSeries::add(self, rhs)
    }
}

impl Sub for &FourierSeries {
    type Output = FourierSeries;
    fn sub(self, rhs: &FourierSeries) -> FourierSeries {
        FourierSeries::sub(self, rhs)
    }
}

impl Mul for &FourierSeries {
    type Output = FourierSeries;
    fn mul(self, rhs: &FourierSeries) -> FourierSeries {
        FourierSeries::mul(self, rhs)
    }
}

impl Neg for &FourierSeries {
    type Output = FourierSeries;
    fn neg(self) -> FourierSeries {
        FourierSeries::neg(self)
    }
}

/// Which of the two Lambert families to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LambertFlavor {
    /// `Σ_{m,d ≥ 1} d^k m q^{b d m}`: coefficient of `q^{bn}` is `Σ_{d|n} d^k (n/d)`.
    WithMultiplicity,
    /// `Σ_{m,d ≥ 1} d^k q^{b d m}`: coefficient of `q^{bn}` is `σ_k(n)`.
    Plain,
}

/// Lambert block expanded by direct double summation over `(m, d)`.
///
/// This deliberately avoids the closed rational forms so that it can serve as
/// an independent check on them.
pub fn lambert_block(k: u32, scale: usize, order: usize, flavor: LambertFlavor) -> FourierSeries {
    assert!(scale >= 1);
    let mut coeffs = vec![Integer::new(); order + 1];
    let max_n = order / scale;
    for d in 1..=max_n {
        let dk = Integer::from(d).pow(k);
        for m in 1..=max_n / d {
            let idx = scale * d * m;
            match flavor {
                LambertFlavor::WithMultiplicity => coeffs[idx] += Integer::from(&dk * m),
                LambertFlavor::Plain => coeffs[idx] += &dk,
            }
        }
    }
    FourierSeries::from_integers(1, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(grain: u32, v: &[i64]) -> FourierSeries {
        FourierSeries::from_integers(grain, v.iter().copied())
    }

    #[test]
    fn add_cancels() {
        let r = s(1, &[1, 1]).add(&s(1, &[2, -1, 5]));
        assert_eq!(r, s(1, &[3, 0]));
    }

    #[test]
    fn mixed_grain_sum() {
        let r = s(1, &[1, 1]).add(&s(2, &[0, 1, 0]));
        assert_eq!(r, s(2, &[1, 1, 1]));
        assert_eq!(r.to_string(), "1 + q^{1/2} + q");
    }

    #[test]
    fn product_difference_of_squares() {
        assert_eq!(s(1, &[1, 1, 0]).mul(&s(1, &[1, -1, 0])), s(1, &[1, 0, -1]));
    }

    #[test]
    fn derivative_of_half_integral_exponent() {
        let d = s(2, &[5, 4, 2]).derivative();
        assert_eq!(d.coeffs()[1], Rational::from((2, 1)));
        assert_eq!(d.coeffs()[2], Rational::from(2));
        assert_eq!(d.coeffs()[0], 0);
    }

    #[test]
    fn dilate_and_contract() {
        assert_eq!(s(1, &[0, 1]).dilate(2), s(1, &[0, 0, 1]));
        let half = s(2, &[0, 3, 0, 7, 0]);
        assert_eq!(half.dilate(2), s(1, &[0, 3, 0, 7, 0]));
        assert_eq!(s(1, &[1, 2, 3]).contract(2), s(2, &[1, 2, 3]));
    }

    #[test]
    fn half_shift_signs_and_error() {
        assert_eq!(s(1, &[1, 1, 1]).half_shift().unwrap(), s(1, &[1, -1, 1]));
        assert!(matches!(s(2, &[0, 1, 0]).half_shift(), Err(Error::NonIntegerGrain)));
        assert_eq!(s(2, &[1, 0, 4]).half_shift().unwrap(), s(1, &[1, -4]));
    }

    #[test]
    fn division_recovers_factor() {
        let a = s(1, &[0, 1, 3, 5, 2, 0, 0]);
        let b = s(1, &[0, 1, 1, 0, 0, 0, 0]);
        let p = a.mul(&b);
        let q = p.divide(&b).unwrap();
        assert!(q.equal_up_to(&a, 5));
    }

    #[test]
    fn display_formats() {
        assert_eq!(s(1, &[0, 1, 2, -12]).to_string(), "q + 2q^2 - 12q^3");
        let r = FourierSeries::new(1, vec![Rational::new(), Rational::from((864, 25))]);
        assert_eq!(r.to_string(), "(864/25)q");
        assert_eq!(FourierSeries::zero(3).to_string(), "0");
    }

    #[test]
    fn lambert_plain_is_sigma() {
        let b = lambert_block(1, 1, 6, LambertFlavor::Plain);
        assert_eq!(b, s(1, &[0, 1, 3, 4, 7, 6, 12]));
        let x61 = lambert_block(4, 1, 3, LambertFlavor::WithMultiplicity);
        assert_eq!(x61, s(1, &[0, 1, 18, 84]));
        let x81 = lambert_block(6, 1, 3, LambertFlavor::WithMultiplicity);
        assert_eq!(x81, s(1, &[0, 1, 66, 732]));
        let scaled = lambert_block(1, 2, 6, LambertFlavor::Plain);
        assert_eq!(scaled, s(1, &[0, 0, 1, 0, 3, 0, 4]));
    }

    #[test]
    fn json_roundtrip() {
        let r = FourierSeries::new(2, vec![Rational::from((1, 3)), Rational::from(-5), Rational::new()]);
        let j = serde_json::to_string(&r.to_json()).unwrap();
        let back: SeriesJson = serde_json::from_str(&j).unwrap();
        assert_eq!(FourierSeries::from_json(&back).unwrap(), r);
    }
}
