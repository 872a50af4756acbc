//! Precision-tracked binary floating-point values for the height and
//! regulator numerics. Backed by `dashu_float::FBig` in base 2 with
//! truncating rounding; every producer states its working precision and the
//! callers carry explicit error budgets alongside the values.

use super::rational::Rat;
use dashu_base::Abs;
use dashu_float::round::mode::Zero as RoundZero;
use dashu_float::FBig;
use dashu_int::{IBig, Sign, UBig};
use num_bigint::BigInt;
use num_traits::Signed as _;

pub type Real = FBig<RoundZero, 2>;

/// Minimum working precision the crate accepts.
pub const MIN_PRECISION: usize = 64;

pub fn ibig(n: &BigInt) -> IBig {
    let (sign, bytes) = n.to_bytes_le();
    let mag = UBig::from_le_bytes(&bytes);
    match sign {
        num_bigint::Sign::Minus => IBig::from_parts(Sign::Negative, mag),
        _ => IBig::from_parts(Sign::Positive, mag),
    }
}

pub fn real_zero(prec: usize) -> Real {
    Real::ZERO.with_precision(prec).value()
}

pub fn real_from_i64(n: i64, prec: usize) -> Real {
    Real::from(n).with_precision(prec).value()
}

pub fn real_from_bigint(n: &BigInt, prec: usize) -> Real {
    Real::from(ibig(n)).with_precision(prec).value()
}

pub fn real_from_rat(q: &Rat, prec: usize) -> Real {
    let n = real_from_bigint(q.numer(), prec);
    let d = real_from_bigint(q.denom(), prec);
    n / d
}

/// Natural logarithm; requires a positive argument.
pub fn real_ln(x: &Real) -> Real {
    debug_assert!(x.repr().sign() == Sign::Positive && !x.repr().is_zero());
    x.ln()
}

/// `ln` of a big integer at the given precision.
pub fn ln_bigint(n: &BigInt, prec: usize) -> Real {
    real_ln(&real_from_bigint(&n.abs(), prec))
}

/// `x · 2^k` without precision loss.
pub fn ldexp(x: &Real, k: isize) -> Real {
    if k >= 0 {
        x.clone() << k
    } else {
        x.clone() >> (-k)
    }
}

pub fn real_abs(x: &Real) -> Real {
    x.clone().abs()
}

pub fn real_max(a: Real, b: Real) -> Real {
    if a >= b {
        a
    } else {
        b
    }
}

/// Decimal rendering with `sig` significant digits, scientific notation for
/// magnitudes far from 1. Deterministic: used for all report serialization.
pub fn to_decimal_string(x: &Real, sig: usize) -> String {
    if x.repr().is_zero() {
        return "0".to_string();
    }
    let sig = sig.max(1);
    let neg = x.repr().sign() == Sign::Negative;
    let ax = x.clone().abs();

    // decimal exponent e10 with 10^e10 ≤ ax < 10^(e10+1)
    let ten = Real::from(10).with_precision(ax.precision().max(64)).value();
    let l10 = ax.clone().ln() / ten.clone().ln();
    let mut e10 = l10.to_f64().value().floor() as i64;
    // guard against boundary rounding
    loop {
        let lo = pow10(e10, ax.precision().max(64) + 32);
        let hi = pow10(e10 + 1, ax.precision().max(64) + 32);
        if ax < lo {
            e10 -= 1;
        } else if ax >= hi {
            e10 += 1;
        } else {
            break;
        }
    }

    // digits = round(ax · 10^(sig−1−e10))
    let shift = sig as i64 - 1 - e10;
    let scaled = if shift >= 0 {
        ax.clone() * pow10_int(shift as u64, ax.precision() + 64)
    } else {
        ax.clone() / pow10_int((-shift) as u64, ax.precision() + 64)
    };
    let p = scaled.precision().max(64);
    let half = Real::from(1).with_precision(p).value() / Real::from(2).with_precision(p).value();
    let mut digits = (scaled + half).trunc().to_int().value().to_string();
    // rounding may carry over an extra digit
    let mut e10 = e10;
    if digits.len() > sig {
        e10 += (digits.len() - sig) as i64;
        digits.truncate(sig);
    }
    while digits.len() < sig {
        digits.push('0');
    }

    let sign = if neg { "-" } else { "" };
    let body = if e10 >= 0 && (e10 as usize) < sig.max(1) + 5 && e10 < 18 {
        let int_len = e10 as usize + 1;
        if int_len >= digits.len() {
            format!("{}{}", &digits, "0".repeat(int_len - digits.len()))
        } else {
            format!("{}.{}", &digits[..int_len], &digits[int_len..])
        }
    } else if e10 < 0 && e10 > -6 {
        format!("0.{}{}", "0".repeat((-e10 - 1) as usize), digits)
    } else {
        if digits.len() > 1 {
            format!("{}.{}e{}", &digits[..1], &digits[1..], e10)
        } else {
            format!("{}e{}", digits, e10)
        }
    };
    let body = trim_trailing_zeros(body);
    format!("{}{}", sign, body)
}

fn trim_trailing_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    if let Some(epos) = s.find('e') {
        let (m, e) = s.split_at(epos);
        let m = m.trim_end_matches('0').trim_end_matches('.');
        return format!("{}{}", m, e);
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

fn pow10(e: i64, prec: usize) -> Real {
    if e >= 0 {
        pow10_int(e as u64, prec)
    } else {
        Real::from(1).with_precision(prec).value() / pow10_int((-e) as u64, prec)
    }
}

fn pow10_int(e: u64, prec: usize) -> Real {
    let mut acc = Real::from(1).with_precision(prec).value();
    let mut base = Real::from(10).with_precision(prec).value();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base.clone();
        }
        e >>= 1;
        if e > 0 {
            base = base.clone() * base;
        }
    }
    acc
}
