//! Level-one quasimodular forms as polynomials in `E2`, `E4`, `E6`.

use std::collections::BTreeMap;
use std::fmt;

use rug::{Integer, Rational};

use crate::forms::{e2, e4, e6};
use crate::qseries::FourierSeries;

/// Exponents of `E2`, `E4`, `E6`.
pub type Monomial = (u32, u32, u32);

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        QPoly::monomial(c, (0, 0, 0))
    }

    pub fn monomial(c: impl Into<Rational>, m: Monomial) -> Self {
        let mut p = QPoly::zero();
        p.push(m, c.into());
        p
    }

    pub fn e2() -> Self {
        QPoly::monomial(1, (1, 0, 0))
    }

    pub fn e4() -> Self {
        QPoly::monomial(1, (0, 1, 0))
    }

    pub fn e6() -> Self {
        QPoly::monomial(1, (0, 0, 1))
    }

    /// `Δ = (E4³ - E6²)/1728`.
    pub fn delta() -> Self {
        QPoly::e4().pow(3).sub(&QPoly::e6().pow(2)).scale(&Rational::from((1, 1728)))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut p = QPoly::zero();
        for (m, c) in it {
            p.push(m, c);
        }
        p
    }

    fn push(&mut self, m: Monomial, c: Rational) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Weight if homogeneous.
    pub fn weight(&self) -> Option<u32> {
        let mut ws = self.terms.keys().map(|&(a, b, c)| 2 * a + 4 * b + 6 * c);
        let w = ws.next()?;
        ws.all(|x| x == w).then_some(w)
    }

    /// Highest power of `E2`.
    pub fn depth(&self) -> u32 {
        self.terms.keys().map(|m| m.0).max().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.push(*m, c.clone());
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        QPoly { terms: self.terms.iter().map(|(m, c)| (*m, Rational::from(-c))).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QPoly::from_terms(self.terms.iter().map(|(m, x)| (*m, Rational::from(x * c))))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = QPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                p.push((m1.0 + m2.0, m1.1 + m2.1, m1.2 + m2.2), Rational::from(c1 * c2));
            }
        }
        p
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(QPoly::constant(1), |acc, _| acc.mul(self))
    }

    /// `q d/dq` through Ramanujan's system.
    pub fn derivative(&self) -> Self {
        let d2 = QPoly::e2().pow(2).sub(&QPoly::e4()).scale(&Rational::from((1, 12)));
        let d4 = QPoly::e2().mul(&QPoly::e4()).sub(&QPoly::e6()).scale(&Rational::from((1, 3)));
        let d6 = QPoly::e2().mul(&QPoly::e6()).sub(&QPoly::e4().pow(2)).scale(&Rational::from((1, 2)));
        let mut out = QPoly::zero();
        for (&(a, b, c), coef) in &self.terms {
            let parts = [
                (a, (a.saturating_sub(1), b, c), &d2),
                (b, (a, b.saturating_sub(1), c), &d4),
                (c, (a, b, c.saturating_sub(1)), &d6),
            ];
            for (k, rest, d) in parts {
                if k == 0 {
                    continue;
                }
                let base = QPoly::monomial(Rational::from(coef * k), rest);
                out = out.add(&base.mul(d));
            }
        }
        out
    }

    /// `(1/r!) ∂^r/∂E2^r`.
    pub fn e2_taylor(&self, r: u32) -> Self {
        QPoly::from_terms(self.terms.iter().filter(|(m, _)| m.0 >= r).map(|(&(a, b, c), x)| {
            let binom = Integer::from(a).binomial(r);
            ((a - r, b, c), Rational::from(x * binom))
        }))
    }

    /// Modular parts `M_j` with `F = Σ E2^j M_j`.
    pub fn e2_parts(&self) -> Vec<QPoly> {
        (0..=self.depth())
            .map(|j| {
                QPoly::from_terms(
                    self.terms.iter().filter(|(m, _)| m.0 == j).map(|(&(_, b, c), x)| ((0, b, c), x.clone())),
                )
            })
            .collect()
    }

    pub fn to_series(&self, order: usize) -> FourierSeries {
        SeriesBank::new(order).realize(self)
    }
}

/// Powers of the generators cached at one order.
pub struct SeriesBank {
    order: usize,
    p2: Vec<FourierSeries>,
    p4: Vec<FourierSeries>,
    p6: Vec<FourierSeries>,
}

impl SeriesBank {
    pub fn new(order: usize) -> Self {
        let one = FourierSeries::one(order);
        SeriesBank { order, p2: vec![one.clone()], p4: vec![one.clone()], p6: vec![one] }
    }

    fn ensure(list: &mut Vec<FourierSeries>, n: u32, base: impl Fn() -> FourierSeries) {
        if list.len() > n as usize {
            return;
        }
        let b = base();
        while list.len() <= n as usize {
            let next = list.last().expect("nonempty").mul(&b);
            list.push(next);
        }
    }

    pub fn realize(&mut self, p: &QPoly) -> FourierSeries {
        let order = self.order;
        let mut acc = FourierSeries::zero(order);
        for (&(a, b, c), coef) in &p.terms {
            SeriesBank::ensure(&mut self.p2, a, || e2(order));
            SeriesBank::ensure(&mut self.p4, b, || e4(order));
            SeriesBank::ensure(&mut self.p6, c, || e6(order));
            let term = self.p2[a as usize].mul(&self.p4[b as usize]).mul(&self.p6[c as usize]);
            acc = acc.add(&term.scale(coef));
        }
        acc
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b, c), x) in &self.terms {
            let neg = *x < 0;
            let mag = Rational::from(x.abs_ref());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            for (name, e) in [("E2", a), ("E4", b), ("E6", c)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            if mag != 1 || factors.is_empty() {
                factors.insert(0, mag.to_string());
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::delta;

    #[test]
    fn ramanujan_derivative_matches_series() {
        let f = QPoly::e2().mul(&QPoly::e4()).sub(&QPoly::e6()).scale(&Rational::from((1, 720)));
        assert_eq!(f.derivative().to_series(40), f.to_series(40).derivative());
        assert_eq!(f.weight(), Some(6));
        assert_eq!(f.derivative().weight(), Some(8));
    }

    #[test]
    fn delta_poly() {
        assert_eq!(QPoly::delta().to_series(30), delta(30));
        assert!(QPoly::delta().derivative().sub(&QPoly::e2().mul(&QPoly::delta())).is_zero());
    }

    #[test]
    fn taylor_in_e2() {
        let f = QPoly::e2().pow(2).mul(&QPoly::e4());
        assert_eq!(f.e2_taylor(1), QPoly::e2().mul(&QPoly::e4()).scale(&Rational::from(2)));
        assert_eq!(f.e2_parts().len(), 3);
        assert_eq!(format!("{}", f.scale(&Rational::from((-1, 2)))), "-1/2*E2^2*E4");
    }
}
