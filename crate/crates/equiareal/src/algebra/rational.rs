//! Exact rational scalars.
//!
//! `Rat` is `num_rational::BigRational`: reduced, positive denominator,
//! canonical zero `0/1`. Everything downstream (parameters, coordinates,
//! polynomial coefficients) lives on this type.

use super::AlgebraError;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// `n/d` as a `Rat`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a `Rat`.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parse `"a"` or `"a/b"` (signs allowed) into a reduced rational.
pub fn parse_rat(s: &str) -> Result<Rat, AlgebraError> {
    let s = s.trim();
    let err = || AlgebraError::ParseRational(s.to_string());
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| err())?;
            Ok(Rat::from_integer(n))
        }
        Some((a, b)) => {
            let n: BigInt = a.trim().parse().map_err(|_| err())?;
            let d: BigInt = b.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Exact integer square root if `n` is a perfect square, `None` otherwise.
/// `n` must be nonnegative.
pub fn integer_sqrt(n: &BigInt) -> Option<BigInt> {
    debug_assert!(!n.is_negative());
    let u: BigUint = n.magnitude().clone();
    let r = u.sqrt();
    if &r * &r == u {
        Some(BigInt::from(r))
    } else {
        None
    }
}

/// The nonnegative rational square root of `q`, when `q` is the square of a
/// rational; `None` otherwise. Works on the reduced numerator and denominator
/// separately, so no factorization is involved.
pub fn is_perfect_square(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let n = integer_sqrt(q.numer())?;
    let d = integer_sqrt(q.denom())?;
    Some(Rat::new(n, d))
}

impl super::Ring for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rat(q: &Rat) -> Self {
        q.clone()
    }
}

impl super::Field for Rat {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}
