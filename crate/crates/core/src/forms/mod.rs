//! Named forms: Eisenstein series, `Δ`, derivatives and brackets, the theta
//! generators of level two, and the composite forms built from them.

pub mod arith;
pub mod catalog;
pub mod composite;
pub mod qpoly;

use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::qseries::FourierSeries;

pub use arith::{r4, r4_table, sigma, sigma_table, tau, tau_table};
pub use composite::{composite_forms, CompositeForms};
pub use qpoly::{QPoly, SeriesBank};

/// `τ(n)` with an explicit ceiling on the precomputed range.
pub fn tau_within(n: u64, limit: usize) -> Result<Integer> {
    if n as usize > limit {
        return Err(Error::OrderExceeded { requested: n as usize, available: limit });
    }
    Ok(tau(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Eisenstein {
    E2,
    E4,
    E6,
    E8,
    E10,
}

impl Eisenstein {
    pub fn weight(self) -> u32 {
        match self {
            Eisenstein::E2 => 2,
            Eisenstein::E4 => 4,
            Eisenstein::E6 => 6,
            Eisenstein::E8 => 8,
            Eisenstein::E10 => 10,
        }
    }
}

/// `1 + c Σ σ_{k-1}(n) q^n`.
pub fn divisor_eisenstein(c: i64, k_minus_1: u32, order: usize) -> FourierSeries {
    let table = sigma_table(k_minus_1, order);
    FourierSeries::from_fn(
        order,
        |n| {
            if n == 0 {
                Rational::from(1)
            } else {
                Rational::from(Integer::from(&table[n] * c))
            }
        },
    )
}

/// Eisenstein series to integer order `order`. `E8` and `E10` are formed as
/// `E4²` and `E4 E6`.
pub fn eisenstein(which: Eisenstein, order: usize) -> FourierSeries {
    match which {
        Eisenstein::E2 => divisor_eisenstein(-24, 1, order),
        Eisenstein::E4 => divisor_eisenstein(240, 3, order),
        Eisenstein::E6 => divisor_eisenstein(-504, 5, order),
        Eisenstein::E8 => eisenstein(Eisenstein::E4, order).square(),
        Eisenstein::E10 => eisenstein(Eisenstein::E4, order).mul(&eisenstein(Eisenstein::E6, order)),
    }
}

pub fn e2(order: usize) -> FourierSeries {
    eisenstein(Eisenstein::E2, order)
}

pub fn e4(order: usize) -> FourierSeries {
    eisenstein(Eisenstein::E4, order)
}

pub fn e6(order: usize) -> FourierSeries {
    eisenstein(Eisenstein::E6, order)
}

/// `Δ = q Π (1 - q^n)^{24} = Σ τ(n) q^n`.
pub fn delta(order: usize) -> FourierSeries {
    let t = tau_table(order);
    FourierSeries::from_fn(order, |n| Rational::from(&t[n]))
}

/// `Δ` by the other route, `(E4³ - E6²)/1728`.
pub fn delta_from_eisenstein(order: usize) -> FourierSeries {
    let e4 = e4(order);
    let e6 = e6(order);
    e4.pow(3).sub(&e6.square()).scale_frac(1, 1728)
}

/// Serre derivative `∂_k F = F' - (k/12) E2 F`.
pub fn serre_derivative(f: &FourierSeries, k: i64) -> FourierSeries {
    let e2 = e2(f.integer_order() + 1);
    f.derivative().sub(&e2.mul(f).scale_frac(k, 12))
}

/// Martin–Royer bracket
/// `Φ_{n;k,s;l,t}(F, G) = Σ_{r=0}^{n} (-1)^r C(k-s+n-1, n-r) C(l-t+n-1, r) (D^r F)(D^{n-r} G)`.
pub fn martin_royer_bracket(
    f: &FourierSeries,
    g: &FourierSeries,
    n: u32,
    k: i64,
    s: i64,
    l: i64,
    t: i64,
) -> Result<FourierSeries> {
    if s < 0 || 2 * s > k || t < 0 || 2 * t > l {
        return Err(Error::ParameterRange(format!(
            "need 0 <= s <= k/2 and 0 <= t <= l/2 (got k={k}, s={s}, l={l}, t={t})"
        )));
    }
    let top_f = Integer::from(k - s + n as i64 - 1);
    let top_g = Integer::from(l - t + n as i64 - 1);
    let f_derivs: Vec<FourierSeries> =
        std::iter::successors(Some(f.clone()), |x| Some(x.derivative())).take(n as usize + 1).collect();
    let g_derivs: Vec<FourierSeries> =
        std::iter::successors(Some(g.clone()), |x| Some(x.derivative())).take(n as usize + 1).collect();
    let mut total: Option<FourierSeries> = None;
    for r in 0..=n {
        let c1 = top_f.clone().binomial(n - r);
        let c2 = top_g.clone().binomial(r);
        let mut c = Rational::from(c1 * c2);
        if r % 2 == 1 {
            c = -c;
        }
        let term = f_derivs[r as usize].mul(&g_derivs[(n - r) as usize]).scale(&c);
        total = Some(match total {
            None => term,
            Some(acc) => acc.add(&term),
        });
    }
    Ok(total.expect("n >= 0 gives at least one term"))
}

/// Theta-based generators of level two.
#[derive(Clone, Debug)]
pub struct ThetaForms {
    /// `Θ_2^4 = 2 Σ_{n odd} r_4(n) q^{n/2}` (grain 2).
    pub h2: FourierSeries,
    /// `Θ_4^4 = Σ (-1)^n r_4(n) q^{n/2}` (grain 2).
    pub h4: FourierSeries,
    /// `H_2²`, integer exponents.
    pub a: FourierSeries,
    /// `H_2 + 2 H_4`, integer exponents.
    pub b: FourierSeries,
}

pub fn theta_forms(order: usize) -> ThetaForms {
    let len = 2 * order;
    let r4 = r4_table(len);
    let h2 = FourierSeries::new(
        2,
        (0..=len)
            .map(|k| if k % 2 == 1 { Rational::from(Integer::from(&r4[k] * 2)) } else { Rational::new() })
            .collect(),
    );
    let h4 = FourierSeries::new(
        2,
        (0..=len)
            .map(|k| {
                let v = Rational::from(&r4[k]);
                if k % 2 == 1 {
                    -v
                } else {
                    v
                }
            })
            .collect(),
    );
    let a = h2.square().reduced();
    let b = h2.add(&h4.scale_int(2)).reduced();
    ThetaForms { h2, h4, a, b }
}

/// `Θ_3^4 = Σ r_4(n) q^{n/2}`.
pub fn theta3_fourth(order: usize) -> FourierSeries {
    let len = 2 * order;
    let r4 = r4_table(len);
    FourierSeries::new(2, r4.iter().map(Rational::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eisenstein_leading() {
        let e2 = e2(4);
        let v: Vec<i64> = e2.coeffs().iter().map(|c| c.to_f64() as i64).collect();
        assert_eq!(v, vec![1, -24, -72, -96, -168]);
        assert_eq!(*e4(1).coeff_int(1).unwrap(), 240);
        assert_eq!(*eisenstein(Eisenstein::E8, 1).coeff_int(1).unwrap(), 480);
    }

    #[test]
    fn e8_e10_match_divisor_forms() {
        assert_eq!(eisenstein(Eisenstein::E8, 40), divisor_eisenstein(480, 7, 40));
        assert_eq!(eisenstein(Eisenstein::E10, 40), divisor_eisenstein(-264, 9, 40));
    }

    #[test]
    fn delta_two_routes() {
        assert_eq!(delta(60), delta_from_eisenstein(60));
    }

    #[test]
    fn serre_of_constant() {
        assert!(serre_derivative(&FourierSeries::one(10), 0).is_zero());
    }

    #[test]
    fn bracket_order_zero_is_product() {
        let f = e4(10);
        let g = e6(10);
        assert_eq!(martin_royer_bracket(&f, &g, 0, 4, 0, 6, 0).unwrap(), f.mul(&g));
        assert!(matches!(martin_royer_bracket(&f, &g, 1, 4, 3, 6, 0), Err(Error::ParameterRange(_))));
    }

    #[test]
    fn theta_generators() {
        let th = theta_forms(10);
        assert_eq!(th.b.grain(), 1);
        assert_eq!(th.a.grain(), 1);
        assert_eq!(*th.b.coeff_int(0).unwrap(), 2);
        assert_eq!(*th.b.coeff_int(1).unwrap(), 48);
        assert_eq!(*th.a.coeff_int(1).unwrap(), 256);
        let sum = th.h2.add(&th.h4);
        assert_eq!(sum, theta3_fourth(10));
        assert_eq!(sum.coeff(1), 8);
    }

    #[test]
    fn tau_bound_error() {
        assert!(matches!(tau_within(50, 10), Err(Error::OrderExceeded { .. })));
        assert_eq!(tau_within(2, 10).unwrap(), -24);
    }
}
