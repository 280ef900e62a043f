//! Coefficient-sign analytics: complete positivity, sign patterns and
//! densities, dilation-ratio infima and the exact coefficient inequalities
//! behind the complete positivity of `Y_{12,2}`.

use rayon::prelude::*;
use rug::ops::Pow;
use rug::{Integer, Rational};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::extremal::x_w2;
use crate::forms::catalog;
use crate::forms::sigma_table;
use crate::qseries::FourierSeries;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeCoefficient {
    pub exponent: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityReport {
    pub label: String,
    pub order: usize,
    pub first_negative: Option<NegativeCoefficient>,
    pub completely_positive_up_to_order: bool,
}

/// Exact scan of every stored coefficient with exponent `≤ order`.
pub fn check_complete_positivity(label: &str, f: &FourierSeries, order: usize) -> PositivityReport {
    let f = f.truncate(order);
    let g = f.grain() as u64;
    let first = f.coeffs().par_iter().enumerate().find_first(|(_, c)| **c < 0).map(|(k, c)| NegativeCoefficient {
        exponent: Rational::from((k as u64, g)).to_string(),
        value: c.to_string(),
    });
    PositivityReport {
        label: label.to_string(),
        order,
        completely_positive_up_to_order: first.is_none(),
        first_negative: first,
    }
}

/// Builds a catalog form and scans it.
pub fn check_label(label: &str, order: usize) -> Result<PositivityReport> {
    let f = catalog::build(label, order)?;
    Ok(check_complete_positivity(label, &f, order))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityReport {
    pub label: String,
    pub n: usize,
    pub count_positive: usize,
    pub density: f64,
    pub predicted: Option<String>,
}

/// Density of `{1 ≤ n ≤ N : a_n > 0}` over integer exponents.
pub fn sign_pattern(label: &str, f: &FourierSeries, n: usize) -> DensityReport {
    let count = (1..=n).into_par_iter().filter(|&k| f.coeff_int(k).is_some_and(|c| *c > 0)).count();
    DensityReport {
        label: label.to_string(),
        n,
        count_positive: count,
        density: count as f64 / n as f64,
        predicted: predicted_density(label).map(|r| r.to_string()),
    }
}

/// Densities stated in the source for the positive forms of level two.
pub fn predicted_density(label: &str) -> Option<Rational> {
    match label {
        "P1" | "P3" | "P4" | "X42Delta" => Some(Rational::from((1, 2))),
        "P2" => Some(Rational::from((3, 4))),
        _ => None,
    }
}

pub fn density_label(label: &str, n: usize) -> Result<DensityReport> {
    let f = catalog::build(label, n)?;
    Ok(sign_pattern(label, &f, n))
}

/// Sign of `a_n` for `1 ≤ n ≤ N`: `1`, `0` or `-1`.
pub fn signs(f: &FourierSeries, n: usize) -> Vec<i8> {
    (1..=n)
        .map(|k| match f.coeff_int(k) {
            Some(c) if *c > 0 => 1,
            Some(c) if *c < 0 => -1,
            _ => 0,
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioReport {
    pub dilate: u32,
    pub bound: usize,
    pub min_ratio: Option<String>,
    pub min_ratio_approx: Option<String>,
    pub argmin: Option<usize>,
    /// `n` with `a_n ≤ 0`, where the ratio is undefined or meaningless.
    pub violations: Vec<usize>,
}

/// Exact `min a_{Nn}/a_n` over `1 ≤ n ≤ bound` with `a_n > 0`. Zero
/// coefficients below the first nonzero one are skipped.
pub fn ratio_infimum(f: &FourierSeries, dilate: u32, bound: usize) -> RatioReport {
    let d = dilate as usize;
    let mut best: Option<(Rational, usize)> = None;
    let mut violations = Vec::new();
    let mut started = false;
    for n in 1..=bound {
        let (Some(a), Some(b)) = (f.coeff_int(n), f.coeff_int(d * n)) else {
            break;
        };
        started |= *a != 0;
        if !started {
            continue;
        }
        if *a <= 0 {
            violations.push(n);
            continue;
        }
        let r = Rational::from(b / a);
        if best.as_ref().is_none_or(|(m, _)| r < *m) {
            best = Some((r, n));
        }
    }
    RatioReport {
        dilate,
        bound,
        min_ratio_approx: best.as_ref().map(|(r, _)| format!("{:.12}", r.to_f64())),
        min_ratio: best.as_ref().map(|(r, _)| r.to_string()),
        argmin: best.map(|(_, n)| n),
        violations,
    }
}

pub fn ratio_label(label: &str, dilate: u32, bound: usize) -> Result<RatioReport> {
    let f = catalog::build(label, dilate as usize * bound)?;
    Ok(ratio_infimum(&f, dilate, bound))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityCheck {
    pub ok: bool,
    /// Parameters where the exact lower bound is not positive.
    pub failures: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoublingReport {
    pub bound: usize,
    pub exponent: u32,
    pub ok: bool,
    pub witness: Option<usize>,
    pub ineq1: InequalityCheck,
    pub ineq2: InequalityCheck,
}

/// `c_{2n} ≥ 2^e c_n` for `2 ≤ n ≤ bound`, `c_n` the coefficients of `X_{12,2}`.
pub fn doubling_witness(bound: usize, exponent: u32) -> Result<Option<usize>> {
    let x = x_w2(12, 2 * bound)?;
    let factor = Rational::from(Integer::from(1) << exponent);
    Ok((2..=bound).find(|&n| x.coeff(2 * n) < Rational::from(&factor * &x.coeff(n))))
}

pub fn x122_doubling_check(bound: usize) -> Result<DoublingReport> {
    x122_doubling_check_with(bound, 10)
}

pub fn x122_doubling_check_with(bound: usize, exponent: u32) -> Result<DoublingReport> {
    let witness = doubling_witness(bound, exponent)?;
    Ok(DoublingReport {
        bound,
        exponent,
        ok: witness.is_none(),
        witness,
        ineq1: appendix_ineq1(),
        ineq2: appendix_ineq2(50),
    })
}

/// Smallest integer `≥ √m`.
fn sqrt_ceil(m: u64) -> Integer {
    let s = Integer::from(m).sqrt();
    if Integer::from(&s * &s) == m {
        s
    } else {
        s + 1
    }
}

/// `2520/3 m^9 - 18224/21 σ0(m) m^{11/2} + 12/7 m^{10} > 0` for odd `3 ≤ m ≤ 99`,
/// with `√m` replaced by an integer upper bound.
pub fn appendix_ineq1() -> InequalityCheck {
    let s0 = sigma_table(0, 100);
    let failures: Vec<u32> = (3..=99u64)
        .step_by(2)
        .filter(|&m| {
            let mi = Integer::from(m);
            let m5 = Integer::from((&mi).pow(5u32));
            let lhs = Rational::from((2520, 3)) * Integer::from((&mi).pow(9u32))
                - Rational::from((18224, 21)) * Integer::from(&s0[m as usize] * &m5) * sqrt_ceil(m)
                + Rational::from((12, 7)) * Integer::from((&mi).pow(10u32));
            lhs <= 0
        })
        .map(|m| m as u32)
        .collect();
    InequalityCheck { ok: failures.is_empty(), failures }
}

/// Rational upper bound for `2^{11/2}`.
pub fn two_pow_11_2_upper() -> Rational {
    Rational::from((11586, 256))
}

/// Rational upper bound for `2^{13/2}`.
pub fn two_pow_13_2_upper() -> Rational {
    Rational::from((11586, 128))
}

/// Upper bound for `2^{11k/2}`, exact for even `k`.
fn two_pow_11k_2_upper(k: u32) -> Rational {
    let base = Rational::from(Integer::from(1) << (11 * (k / 2)));
    if k.is_multiple_of(2) {
        base
    } else {
        base * two_pow_11_2_upper()
    }
}

/// `(2560/3) 2^{9k} - (40/3) 2^{2k} - (17/21)((2^{11/2} + 1048)k + (2^{13/2} + 1048)) 2^{11k/2} > 0`
/// for `1 ≤ k ≤ kmax`, all irrational powers bounded above.
pub fn appendix_ineq2(kmax: u32) -> InequalityCheck {
    let failures: Vec<u32> = (1..=kmax)
        .filter(|&k| {
            let two = Integer::from(2);
            let a = Rational::from((2560, 3)) * Integer::from((&two).pow(9 * k));
            let b = Rational::from((40, 3)) * Integer::from((&two).pow(2 * k));
            let lin = (two_pow_11_2_upper() + 1048) * k + two_pow_13_2_upper() + 1048;
            let c = Rational::from((17, 21)) * lin * two_pow_11k_2_upper(k);
            a - b - c <= 0
        })
        .collect();
    InequalityCheck { ok: failures.is_empty(), failures }
}

/// `Y_{w,2}(z) = X_{w,2}(z) - 2^{w-2} X_{w,2}(2z)`.
pub fn y_w2_report(w: u32, order: usize) -> Result<PositivityReport> {
    let y = crate::extremal::y_w2(w, order)?;
    Ok(check_complete_positivity(&format!("Y{w}_2"), &y, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::composite::{p1, p2, p3};

    #[test]
    fn p1_first_negative() {
        let r = check_complete_positivity("P1", &p1(200), 200);
        let neg = r.first_negative.unwrap();
        assert_eq!((neg.exponent.as_str(), neg.value.as_str()), ("2", "-2"));
    }

    #[test]
    fn odd_even_patterns() {
        for f in [p1(300), p3(300)] {
            for (k, s) in signs(&f, 300).into_iter().enumerate() {
                let n = k + 1;
                assert_eq!(s, if n % 2 == 1 { 1 } else { -1 }, "n = {n}");
            }
        }
    }

    #[test]
    fn p2_positive_exactly_at_odd_n() {
        for (k, s) in signs(&p2(300), 300).into_iter().enumerate() {
            let n = k + 1;
            assert_eq!(s, if n % 2 == 1 { 1 } else { -1 }, "n = {n}");
        }
    }

    #[test]
    fn ratio_of_x42() {
        let x = x_w2(4, 256).unwrap();
        let r = ratio_infimum(&x, 2, 128);
        assert!(r.violations.is_empty());
        let m: Rational = r.min_ratio.unwrap().parse().unwrap();
        assert_eq!(m, Rational::from((1022, 255)));
        assert_eq!(r.argmin, Some(128));
        let single = FourierSeries::from_integers(1, [0, 1, 0]);
        let r = ratio_infimum(&single, 2, 1);
        assert_eq!(r.min_ratio.as_deref(), Some("0"));
    }

    #[test]
    fn doubling_and_inequalities() {
        assert!(appendix_ineq1().ok);
        assert!(appendix_ineq2(50).ok);
        assert_eq!(doubling_witness(60, 10).unwrap(), None);
        assert!(doubling_witness(60, 11).unwrap().is_some());
        assert!(two_pow_11_2_upper().to_f64() >= 2f64.powf(5.5));
        assert!(two_pow_13_2_upper().to_f64() >= 2f64.powf(6.5));
    }

    #[test]
    fn doubling_n_two_instance() {
        use crate::forms::{sigma, tau};
        let c = |n: u64| {
            (Rational::from((17, 21)) * tau(n) + Rational::from((6, 7)) * sigma(9, n) * n
                - Rational::from((5, 3)) * sigma(7, n) * n * n)
                / 18000
        };
        let x = x_w2(12, 4).unwrap();
        assert_eq!(x.coeff(2), c(2));
        assert_eq!(x.coeff(4), c(4));
        assert!(c(4) >= c(2) * 1024);
    }
}
