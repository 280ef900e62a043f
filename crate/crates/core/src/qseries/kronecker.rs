//! Integer polynomial products by Kronecker substitution.
//!
//! Both operands are packed into a single big integer (one fixed-width slot
//! per coefficient), multiplied with GMP, and unpacked again. Slots are a
//! whole number of 64-bit limbs so that packing is a plain limb copy.

use rug::integer::Order;
use rug::{Assign, Integer};

/// Products with fewer than this many coefficient pairs use the schoolbook loop.
const SCHOOLBOOK_LIMIT: usize = 48 * 48;

/// Product of two integer polynomials, keeping coefficients `0..=keep`.
pub fn mul_truncated(a: &[Integer], b: &[Integer], keep: usize) -> Vec<Integer> {
    let a = &a[..a.len().min(keep + 1)];
    let b = &b[..b.len().min(keep + 1)];
    if a.is_empty() || b.is_empty() {
        return vec![Integer::new(); keep + 1];
    }
    if a.len().saturating_mul(b.len()) <= SCHOOLBOOK_LIMIT {
        return schoolbook(a, b, keep);
    }
    let max_a = a.iter().map(|x| x.significant_bits()).max().unwrap_or(0);
    let max_b = b.iter().map(|x| x.significant_bits()).max().unwrap_or(0);
    if max_a == 0 || max_b == 0 {
        return vec![Integer::new(); keep + 1];
    }
    let terms = a.len().min(b.len()) as u64;
    let len_bits = 64 - terms.leading_zeros();
    let needed = max_a + max_b + len_bits + 2;
    let limbs = needed.div_ceil(64) as usize;

    let pa = pack(a, limbs);
    let pb = pack(b, limbs);
    let prod = Integer::from(&pa * &pb);
    let mut out = unpack(&prod, limbs, a.len() + b.len() - 1);
    out.resize(keep + 1, Integer::new());
    out.truncate(keep + 1);
    out
}

/// Reference quadratic product; also the oracle for the packed route in tests.
pub fn schoolbook(a: &[Integer], b: &[Integer], keep: usize) -> Vec<Integer> {
    let mut out = vec![Integer::new(); keep + 1];
    let mut tmp = Integer::new();
    for (i, x) in a.iter().enumerate() {
        if i > keep || x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(keep + 1 - i) {
            if y.is_zero() {
                continue;
            }
            tmp.assign(x * y);
            out[i + j] += &tmp;
        }
    }
    out
}

fn pack(coeffs: &[Integer], limbs: usize) -> Integer {
    let mut pos = vec![0u64; coeffs.len() * limbs];
    let mut neg = vec![0u64; coeffs.len() * limbs];
    let mut any_neg = false;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let digits = c.as_abs().to_digits::<u64>(Order::Lsf);
        let slot = if c.is_negative() {
            any_neg = true;
            &mut neg[i * limbs..(i + 1) * limbs]
        } else {
            &mut pos[i * limbs..(i + 1) * limbs]
        };
        slot[..digits.len()].copy_from_slice(&digits);
    }
    let mut value = Integer::from_digits(&pos, Order::Lsf);
    if any_neg {
        value -= Integer::from_digits(&neg, Order::Lsf);
    }
    value
}

fn unpack(value: &Integer, limbs: usize, count: usize) -> Vec<Integer> {
    let negative = value.is_negative();
    let digits = value.as_abs().to_digits::<u64>(Order::Lsf);
    let slot_bits = (limbs * 64) as u32;
    let half = Integer::from(1) << (slot_bits - 1);
    let full = Integer::from(1) << slot_bits;
    let mut out = Vec::with_capacity(count);
    let mut carry = false;
    for k in 0..count {
        let lo = (k * limbs).min(digits.len());
        let hi = ((k + 1) * limbs).min(digits.len());
        let mut v = Integer::from_digits(&digits[lo..hi], Order::Lsf);
        if carry {
            v += 1;
        }
        if v >= half {
            v -= &full;
            carry = true;
        } else {
            carry = false;
        }
        if negative {
            v = -v;
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    #[test]
    fn packed_matches_schoolbook_with_signs() {
        let a: Vec<Integer> = (0..120).map(|i| Integer::from((i * 37 % 91) - 45) * Integer::from(1u64 << 40)).collect();
        let b: Vec<Integer> = (0..90).map(|i| Integer::from(-(i * 13 % 17) + 8)).collect();
        assert_eq!(mul_truncated(&a, &b, 150), schoolbook(&a, &b, 150));
        let neg_a: Vec<Integer> = a.iter().map(|x| Integer::from(-x)).collect();
        assert_eq!(mul_truncated(&neg_a, &b, 209), schoolbook(&neg_a, &b, 209));
    }

    #[test]
    fn small_products() {
        assert_eq!(mul_truncated(&ints(&[1, 1]), &ints(&[1, -1]), 2), ints(&[1, 0, -1]));
        assert_eq!(mul_truncated(&ints(&[0, 0]), &ints(&[3]), 1), ints(&[0, 0]));
    }
}
