//! Extremal forms straight from the definition: among all `E2^j E4^a E6^b`
//! combinations of weight `w` and depth `≤ s`, the one vanishing to the
//! highest order at infinity, leading coefficient 1.

use rug::Rational;

use crate::error::{Error, Result};
use crate::forms::{e2, e4, e6, QPoly};
use crate::qseries::FourierSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisMonomial {
    pub e2: u32,
    pub e4: u32,
    pub e6: u32,
}

/// Monomials `E2^j E4^a E6^b` with `2j + 4a + 6b = w`, `j ≤ s`.
pub fn quasimodular_basis(w: u32, s: u32) -> Vec<BasisMonomial> {
    let mut out = Vec::new();
    for j in 0..=s.min(w / 2) {
        let rest = w - 2 * j;
        for b in 0..=rest / 6 {
            let r = rest - 6 * b;
            if r.is_multiple_of(4) {
                out.push(BasisMonomial { e2: j, e4: r / 4, e6: b });
            }
        }
    }
    out
}

fn powers(base: &FourierSeries, n: u32) -> Vec<FourierSeries> {
    let mut v = vec![FourierSeries::one(base.integer_order())];
    for _ in 0..n {
        let next = v.last().expect("nonempty").mul(base);
        v.push(next);
    }
    v
}

/// Solves `M x = rhs` over the rationals; `None` if `M` is singular.
fn solve(mut m: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = rhs.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| m[r][col] != 0)?;
        m.swap(col, piv);
        rhs.swap(col, piv);
        let pivot = m[col].clone();
        for r in 0..n {
            if r != col && m[r][col] != 0 {
                let f = Rational::from(&m[r][col] / &pivot[col]);
                for (x, p) in m[r].iter_mut().zip(&pivot).skip(col) {
                    *x -= Rational::from(&f * p);
                }
                let t = Rational::from(&f * &rhs[col]);
                rhs[r] -= t;
            }
        }
    }
    Some((0..n).map(|i| Rational::from(&rhs[i] / &m[i][i])).collect())
}

/// The normalized extremal form of weight `w` and depth `s` as a polynomial
/// in `E2`, `E4`, `E6`.
pub fn extremal_poly(w: u32, s: u32) -> Result<QPoly> {
    if w % 2 == 1 || w == 0 {
        return Err(Error::BadWeight(w as i64));
    }
    let basis = quasimodular_basis(w, s);
    let d = basis.len();
    if d == 0 {
        return Err(Error::BadWeight(w as i64));
    }
    let n = d;
    let (p2, p4, p6) = (powers(&e2(n), s.min(w / 2)), powers(&e4(n), w / 4), powers(&e6(n), w / 6));
    let series: Vec<FourierSeries> =
        basis.iter().map(|m| p2[m.e2 as usize].mul(&p4[m.e4 as usize]).mul(&p6[m.e6 as usize])).collect();
    let rows: Vec<Vec<Rational>> = (0..d).map(|k| series.iter().map(|f| f.coeff(k)).collect()).collect();
    let mut rhs = vec![Rational::new(); d];
    rhs[d - 1] = Rational::from(1);
    let x = solve(rows, rhs)
        .ok_or_else(|| Error::InvalidInput(format!("no form of weight {w}, depth {s} vanishes to order {}", d - 1)))?;
    Ok(QPoly::from_terms(basis.iter().zip(x).map(|(m, c)| ((m.e2, m.e4, m.e6), c))))
}

/// The normalized extremal form of weight `w` and depth `s`.
pub fn extremal_by_linear_algebra(w: u32, s: u32, order: usize) -> Result<FourierSeries> {
    Ok(extremal_poly(w, s)?.to_series(order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_sizes() {
        assert_eq!(quasimodular_basis(6, 1).len(), 2);
        assert_eq!(quasimodular_basis(16, 2).len(), 5);
        assert_eq!(quasimodular_basis(14, 2).len(), 4);
    }

    #[test]
    fn delta_is_extremal_weight_12_depth_0() {
        let d = extremal_by_linear_algebra(12, 0, 20).unwrap();
        assert_eq!(d, crate::forms::delta(20));
    }

    #[test]
    fn x121_poly() {
        let p = extremal_poly(12, 1).unwrap();
        let want = QPoly::from_terms([
            ((1, 1, 1), Rational::from((-12, 3991680))),
            ((0, 3, 0), Rational::from((5, 3991680))),
            ((0, 0, 2), Rational::from((7, 3991680))),
        ]);
        assert_eq!(p, want);
    }
}
