//! Thin helpers over `num_rational::BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

/// `n/d` as a rational; panics on `d == 0` (callers pass literals).
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Integer power with negative exponents allowed (errors nowhere: 0^-k is the
/// caller's bug and panics).
pub fn pow_i(r: &Rat, e: i64) -> Rat {
    if e == 0 {
        return Rat::one();
    }
    let mut base = if e < 0 {
        assert!(!r.is_zero(), "inverting zero");
        r.recip()
    } else {
        r.clone()
    };
    let mut n = e.unsigned_abs();
    let mut acc = Rat::one();
    while n > 0 {
        if n & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        n >>= 1;
    }
    acc
}

/// Exact `n`-th root if one exists.
pub fn nth_root_exact(r: &Rat, n: u32) -> Option<Rat> {
    if n == 0 {
        return None;
    }
    if r.is_negative() && n % 2 == 0 {
        return None;
    }
    let root_of = |x: &BigInt| -> Option<BigInt> {
        let neg = x.is_negative();
        let mag = x.abs();
        let root = mag.nth_root(n);
        if num_traits::pow(root.clone(), n as usize) == mag {
            Some(if neg { -root } else { root })
        } else {
            None
        }
    };
    let num = root_of(r.numer())?;
    let den = root_of(r.denom())?;
    Some(Rat::new(num, den))
}

/// Exact rational power `r^(p/q)` when it exists.
pub fn pow_rational(r: &Rat, e: &Rat) -> Option<Rat> {
    let p = e.numer();
    let q = e.denom(); // > 0 by normalization
    let q_u32 = q.to_u32()?;
    let root = nth_root_exact(r, q_u32)?;
    let p_i64 = p.to_i64()?;
    Some(pow_i(&root, p_i64))
}

/// Decimal rendering with up to `digits` fractional places, trailing zeros
/// trimmed. Exact long division, no float round-trip.
pub fn decimal_string(r: &Rat, digits: usize) -> String {
    let neg = r.is_negative();
    let a = r.abs();
    let int_part = a.to_integer();
    let mut rem = (&a - Rat::from_integer(int_part.clone())).numer().clone();
    let den = a.denom().clone();
    let mut frac = String::new();
    for _ in 0..digits {
        if rem.is_zero() {
            break;
        }
        rem *= BigInt::from(10);
        let (digit, next) = rem.div_rem(&den);
        frac.push_str(&digit.to_string());
        rem = next;
    }
    while frac.ends_with('0') {
        frac.pop();
    }
    let sign = if neg && (!int_part.is_zero() || !frac.is_empty()) {
        "-"
    } else {
        ""
    };
    if frac.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_i_handles_negative_exponents() {
        assert_eq!(pow_i(&rat(2, 3), -2), rat(9, 4));
        assert_eq!(pow_i(&rat(5, 1), 0), rat_i(1));
        assert_eq!(pow_i(&rat(-2, 1), 3), rat_i(-8));
    }

    #[test]
    fn nth_root_exact_detects_perfect_powers() {
        assert_eq!(nth_root_exact(&rat(27, 8), 3), Some(rat(3, 2)));
        assert_eq!(nth_root_exact(&rat(2, 1), 2), None);
        assert_eq!(nth_root_exact(&rat(-8, 27), 3), Some(rat(-2, 3)));
        assert_eq!(nth_root_exact(&rat(-4, 1), 2), None);
    }

    #[test]
    fn pow_rational_exact_cases() {
        assert_eq!(pow_rational(&rat(4, 9), &rat(3, 2)), Some(rat(8, 27)));
        assert_eq!(pow_rational(&rat(2, 1), &rat(1, 2)), None);
        assert_eq!(pow_rational(&rat(64, 1), &rat(-2, 3)), Some(rat(1, 16)));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat(1, 2), 12), "0.5");
        assert_eq!(decimal_string(&rat(-7, 3), 6), "-2.333333");
        assert_eq!(decimal_string(&rat_i(14), 12), "14");
        assert_eq!(decimal_string(&rat(35, 8), 12), "4.375");
    }
}
