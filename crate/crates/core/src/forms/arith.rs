//! Arithmetic functions feeding the q-expansions: divisor power sums, `r_4`
//! and Ramanujan's `τ`.

use std::sync::{Arc, RwLock};

use rug::ops::Pow;
use rug::Integer;

/// `σ_a(n) = Σ_{d | n} d^a`, by direct divisor enumeration. `σ_a(0) = 0`.
pub fn sigma(a: u32, n: u64) -> Integer {
    let mut total = Integer::new();
    if n == 0 {
        return total;
    }
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += Integer::from(d).pow(a);
            let e = n / d;
            if e != d {
                total += Integer::from(e).pow(a);
            }
        }
        d += 1;
    }
    total
}

/// `σ_a(n)` for `n = 0..=len` by sieving; entry 0 is 0.
pub fn sigma_table(a: u32, len: usize) -> Vec<Integer> {
    let mut table = vec![Integer::new(); len + 1];
    for d in 1..=len {
        let p = Integer::from(d).pow(a);
        for m in (d..=len).step_by(d) {
            table[m] += &p;
        }
    }
    table
}

/// Number of ways to write `n` as an ordered sum of four squares (Jacobi).
pub fn r4(n: u64) -> Integer {
    if n == 0 {
        return Integer::from(1);
    }
    let mut total = Integer::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            if !d.is_multiple_of(4) {
                total += d;
            }
            let e = n / d;
            if e != d && !e.is_multiple_of(4) {
                total += e;
            }
        }
        d += 1;
    }
    total * 8
}

/// `r_4(n)` for `n = 0..=len`.
pub fn r4_table(len: usize) -> Vec<Integer> {
    let mut table = vec![Integer::new(); len + 1];
    table[0] = Integer::from(1);
    for d in (1..=len).filter(|d| d % 4 != 0) {
        for m in (d..=len).step_by(d) {
            table[m] += 8 * d as u64;
        }
    }
    table
}

/// Exponents and signs of Euler's pentagonal series `Π (1 - q^n)` up to `len`.
fn pentagonal_terms(len: usize) -> Vec<(usize, i32)> {
    let mut terms = vec![(0usize, 1i32)];
    let mut k = 1i64;
    loop {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let a = (k * (3 * k - 1) / 2) as usize;
        let b = (k * (3 * k + 1) / 2) as usize;
        if a > len {
            break;
        }
        terms.push((a, sign));
        if b <= len {
            terms.push((b, sign));
        }
        k += 1;
    }
    terms.sort_unstable();
    terms
}

/// Coefficients of `Π_{n ≥ 1} (1 - q^n)^{24}` up to `q^len`, by 24 successive
/// multiplications with the sparse pentagonal series.
fn eta24_coefficients(len: usize) -> Vec<Integer> {
    let pent = pentagonal_terms(len);
    let mut acc = vec![Integer::new(); len + 1];
    acc[0] = Integer::from(1);
    for _ in 0..24 {
        let mut next = vec![Integer::new(); len + 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(e, sign) in &pent {
                let idx = i + e;
                if idx > len {
                    break;
                }
                if sign > 0 {
                    next[idx] += a;
                } else {
                    next[idx] -= a;
                }
            }
        }
        acc = next;
    }
    acc
}

static TAU_CACHE: RwLock<Option<Arc<Vec<Integer>>>> = RwLock::new(None);

/// `τ(0..=len)` (with `τ(0) = 0`), memoized behind a lock.
pub fn tau_table(len: usize) -> Arc<Vec<Integer>> {
    if let Some(t) = TAU_CACHE.read().expect("tau cache poisoned").as_ref() {
        if t.len() > len {
            return Arc::clone(t);
        }
    }
    let mut guard = TAU_CACHE.write().expect("tau cache poisoned");
    if let Some(t) = guard.as_ref() {
        if t.len() > len {
            return Arc::clone(t);
        }
    }
    // Grow geometrically so repeated small extensions stay cheap.
    let target = guard.as_ref().map_or(len, |t| len.max(2 * t.len()));
    let eta = eta24_coefficients(target.saturating_sub(1));
    let mut tau = Vec::with_capacity(target + 1);
    tau.push(Integer::new());
    tau.extend(eta);
    let arc = Arc::new(tau);
    *guard = Some(Arc::clone(&arc));
    arc
}

/// Ramanujan's `τ(n)`, the coefficient of `q^n` in `q Π (1 - q^k)^{24}`.
pub fn tau(n: u64) -> Integer {
    tau_table(n as usize)[n as usize].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(1, 6), 12);
        assert_eq!(sigma(0, 1), 1);
        assert_eq!(sigma(9, 2), 513);
        let t = sigma_table(3, 30);
        for n in 1..=30u64 {
            assert_eq!(t[n as usize], sigma(3, n));
        }
    }

    #[test]
    fn r4_small() {
        assert_eq!(r4(0), 1);
        assert_eq!(r4(1), 8);
        assert_eq!(r4(2), 24);
        let t = r4_table(50);
        for n in 0..=50u64 {
            assert_eq!(t[n as usize], r4(n));
        }
    }

    #[test]
    fn tau_small() {
        assert_eq!(tau(1), 1);
        assert_eq!(tau(2), -24);
        assert_eq!(tau(3), 252);
        assert_eq!(tau(4), -1472);
        assert_eq!(tau(5), 4830);
    }
}
