//! Stable string labels for every constructible form.
//!
//! Fixed labels: `E2 E4 E6 E8 E10 Delta F G H2 H4 A B K10 K12 K14 L
//! script_L10 P1 P2 P3 P4 X42Delta P1shift P3shift E2odd E2combo`.
//! Parametric labels: `Xw_1` (even `w ≥ 6`), `Xw_2` (even `w ≥ 4`, `w ≠ 6`),
//! `Yw_2`, `Xtildew_2`, and `Ww_1` for `X_{w,1}(z) - 2^{a_w} X_{w,1}(2z)`.
//! A trailing `'` applies `q d/dq`, e.g. `X12_1'`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremal::{a_w_exponent, dilation_difference, extremal_poly, pow_rational, x_w1, x_w2, xtilde_w2, y_w2};
use crate::forms::composite::{self, e2_level4_combo, e2_odd_part, negated_half_shift};
use crate::forms::{delta, eisenstein, theta_forms, Eisenstein, QPoly};
use crate::qseries::FourierSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Level {
    SL2Z,
    Gamma0_2,
    Gamma0_4,
    #[serde(rename = "Gamma_2")]
    Gamma2,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Level::SL2Z => "SL2Z",
            Level::Gamma0_2 => "Gamma0_2",
            Level::Gamma0_4 => "Gamma0_4",
            Level::Gamma2 => "Gamma_2",
        };
        f.write_str(s)
    }
}

pub const FIXED_LABELS: &[&str] = &[
    "E2",
    "E4",
    "E6",
    "E8",
    "E10",
    "Delta",
    "F",
    "G",
    "H2",
    "H4",
    "A",
    "B",
    "K10",
    "K12",
    "K14",
    "L",
    "script_L10",
    "P1",
    "P2",
    "P3",
    "P4",
    "X42Delta",
    "P1shift",
    "P3shift",
    "E2odd",
    "E2combo",
];

#[derive(Clone, Debug, PartialEq, Eq)]
enum Base {
    Fixed(&'static str),
    Xw1(u32),
    Xw2(u32),
    Yw2(u32),
    Xtilde(u32),
    Ww1(u32),
}

/// Parsed label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormLabel {
    base: Base,
    derivatives: u32,
}

/// Metadata carried with a label; level tags are not verified.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FormDescriptor {
    pub label: String,
    pub weight: u32,
    pub depth: u32,
    pub level: Level,
}

fn parse_weighted(s: &str, prefix: &str, suffix: &str) -> Option<u32> {
    let w = s.strip_prefix(prefix)?.strip_suffix(suffix)?;
    if w.is_empty() || !w.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    w.parse().ok()
}

impl FormLabel {
    pub fn parse(s: &str) -> Result<Self> {
        let trimmed = s.trim_end_matches('\'');
        let derivatives = (s.len() - trimmed.len()) as u32;
        let unknown = || Error::UnknownLabel(s.to_string());
        let base = if let Some(f) = FIXED_LABELS.iter().find(|&&f| f == trimmed) {
            Base::Fixed(f)
        } else if let Some(w) = parse_weighted(trimmed, "Xtilde", "_2") {
            Base::Xtilde(w)
        } else if let Some(w) = parse_weighted(trimmed, "X", "_1") {
            Base::Xw1(w)
        } else if let Some(w) = parse_weighted(trimmed, "X", "_2") {
            Base::Xw2(w)
        } else if let Some(w) = parse_weighted(trimmed, "Y", "_2") {
            Base::Yw2(w)
        } else if let Some(w) = parse_weighted(trimmed, "W", "_1") {
            Base::Ww1(w)
        } else {
            return Err(unknown());
        };
        let ok = match base {
            Base::Xw1(w) | Base::Ww1(w) => w >= 6 && w % 2 == 0,
            Base::Xw2(w) | Base::Yw2(w) | Base::Xtilde(w) => w >= 4 && w % 2 == 0 && w != 6,
            Base::Fixed(_) => true,
        };
        if !ok {
            return Err(unknown());
        }
        Ok(FormLabel { base, derivatives })
    }

    pub fn descriptor(&self) -> FormDescriptor {
        use Level::*;
        let (weight, depth, level) = match &self.base {
            Base::Fixed(f) => match *f {
                "E2" => (2, 1, SL2Z),
                "E4" => (4, 0, SL2Z),
                "E6" => (6, 0, SL2Z),
                "E8" => (8, 0, SL2Z),
                "E10" => (10, 0, SL2Z),
                "Delta" => (12, 0, SL2Z),
                "F" => (16, 2, SL2Z),
                "G" => (14, 0, Gamma2),
                "H2" | "H4" => (2, 0, Gamma2),
                "A" => (4, 0, Gamma0_2),
                "B" => (2, 0, Gamma0_2),
                "K10" => (10, 0, Gamma0_2),
                "K12" => (12, 0, Gamma0_2),
                "K14" => (14, 0, Gamma0_2),
                "L" => (14, 2, Gamma2),
                "script_L10" => (32, 2, Gamma2),
                "P1" => (4, 2, Gamma0_2),
                "P2" => (2, 1, Gamma0_4),
                "P3" => (6, 1, Gamma0_2),
                "P4" => (12, 1, Gamma0_2),
                "X42Delta" => (16, 2, SL2Z),
                "P1shift" => (4, 2, Gamma0_4),
                "P3shift" => (6, 1, Gamma0_4),
                "E2odd" | "E2combo" => (2, 1, Gamma0_4),
                _ => unreachable!("fixed label table"),
            },
            Base::Xw1(w) => (*w, 1, SL2Z),
            Base::Xw2(w) => (*w, 2, SL2Z),
            Base::Yw2(w) | Base::Xtilde(w) => (*w, 2, Gamma0_2),
            Base::Ww1(w) => (*w, 1, Gamma0_2),
        };
        let k = self.derivatives;
        FormDescriptor { label: self.to_string(), weight: weight + 2 * k, depth: depth + k, level }
    }

    pub fn build(&self, order: usize) -> Result<FourierSeries> {
        let base = self.build_base(order)?;
        Ok(base.nth_derivative(self.derivatives))
    }

    fn build_base(&self, order: usize) -> Result<FourierSeries> {
        Ok(match &self.base {
            Base::Fixed(f) => match *f {
                "E2" => eisenstein(Eisenstein::E2, order),
                "E4" => eisenstein(Eisenstein::E4, order),
                "E6" => eisenstein(Eisenstein::E6, order),
                "E8" => eisenstein(Eisenstein::E8, order),
                "E10" => eisenstein(Eisenstein::E10, order),
                "Delta" => delta(order),
                "F" => composite::f16(order),
                "G" => composite::g14(order),
                "H2" => theta_forms(order).h2,
                "H4" => theta_forms(order).h4,
                "A" => theta_forms(order).a,
                "B" => theta_forms(order).b,
                "K10" => composite::k10_from(&theta_forms(order)).reduced(),
                "K12" => composite::k12_from(&theta_forms(order)).reduced(),
                "K14" => composite::k14_from(&theta_forms(order)).reduced(),
                "L" => composite::l14(order),
                "script_L10" => composite::script_l10(order),
                "P1" => composite::p1(order),
                "P2" => composite::p2(order),
                "P3" => composite::p3(order),
                "P4" => composite::p4(order),
                "X42Delta" => composite::x42_delta(order),
                "P1shift" => negated_half_shift(&composite::p1(order)),
                "P3shift" => negated_half_shift(&composite::p3(order)),
                "E2odd" => e2_odd_part(order),
                "E2combo" => e2_level4_combo(order),
                _ => unreachable!("fixed label table"),
            },
            Base::Xw1(w) => x_w1(*w, order)?,
            Base::Xw2(w) => x_w2(*w, order)?,
            Base::Yw2(w) => y_w2(*w, order)?,
            Base::Xtilde(w) => xtilde_w2(*w, order)?,
            Base::Ww1(w) => dilation_difference(&x_w1(*w, order)?, 2, &pow_rational(2, a_w_exponent(*w)?)),
        })
    }

    /// The form as a polynomial in `E2`, `E4`, `E6` when it has level one.
    pub fn level_one_poly(&self) -> Result<Option<QPoly>> {
        let e2 = QPoly::e2();
        let e4 = QPoly::e4();
        let e6 = QPoly::e6();
        let base = match &self.base {
            Base::Fixed(f) => match *f {
                "E2" => Some(e2),
                "E4" => Some(e4),
                "E6" => Some(e6),
                "E8" => Some(e4.pow(2)),
                "E10" => Some(e4.mul(&e6)),
                "Delta" => Some(QPoly::delta()),
                "F" => Some(f16_poly()),
                "X42Delta" => Some(extremal_poly(4, 2)?.mul(&QPoly::delta())),
                _ => None,
            },
            Base::Xw1(w) => Some(extremal_poly(*w, 1)?),
            Base::Xw2(w) => Some(extremal_poly(*w, 2)?),
            _ => None,
        };
        Ok(base.map(|p| (0..self.derivatives).fold(p, |acc, _| acc.derivative())))
    }
}

/// `49 E2² E4³ - 25 E2² E6² - 48 E2 E4² E6 - 25 E4⁴ + 49 E4 E6²`.
pub fn f16_poly() -> QPoly {
    QPoly::from_terms([
        ((2, 3, 0), 49.into()),
        ((2, 0, 2), (-25).into()),
        ((1, 2, 1), (-48).into()),
        ((0, 4, 0), (-25).into()),
        ((0, 1, 2), 49.into()),
    ])
}

impl fmt::Display for FormLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.base {
            Base::Fixed(s) => write!(f, "{s}")?,
            Base::Xw1(w) => write!(f, "X{w}_1")?,
            Base::Xw2(w) => write!(f, "X{w}_2")?,
            Base::Yw2(w) => write!(f, "Y{w}_2")?,
            Base::Xtilde(w) => write!(f, "Xtilde{w}_2")?,
            Base::Ww1(w) => write!(f, "W{w}_1")?,
        }
        for _ in 0..self.derivatives {
            write!(f, "'")?;
        }
        Ok(())
    }
}

/// Parses and builds in one step.
pub fn build(label: &str, order: usize) -> Result<FourierSeries> {
    FormLabel::parse(label)?.build(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_roundtrip() {
        for s in ["X12_1", "X8_2", "Y16_2", "Xtilde8_2", "W12_1", "P2", "script_L10", "X12_1''"] {
            assert_eq!(FormLabel::parse(s).unwrap().to_string(), s);
        }
        for s in ["X7_1", "X6_2", "Q", "X_1", "Y6_2", ""] {
            assert!(matches!(FormLabel::parse(s), Err(Error::UnknownLabel(_))), "{s}");
        }
    }

    #[test]
    fn polys_match_series() {
        for s in ["E2", "Delta", "F", "X42Delta", "X12_1", "X8_2", "X14_2", "X10_1'"] {
            let l = FormLabel::parse(s).unwrap();
            let p = l.level_one_poly().unwrap().unwrap();
            assert_eq!(p.to_series(30), l.build(30).unwrap(), "{s}");
        }
    }

    #[test]
    fn descriptors() {
        let d = FormLabel::parse("X12_1'").unwrap().descriptor();
        assert_eq!((d.weight, d.depth, d.level), (14, 2, Level::SL2Z));
        assert_eq!(FormLabel::parse("P2").unwrap().descriptor().level, Level::Gamma0_4);
    }

    #[test]
    fn cuspidal_forms() {
        for s in ["Delta", "X12_1", "X8_2", "X14_2"] {
            assert_eq!(build(s, 5).unwrap().coeff(0), 0, "{s}");
        }
    }
}
