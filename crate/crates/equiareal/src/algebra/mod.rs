//! Exact arithmetic substrate: rationals, polynomials, rational functions,
//! multivariate polynomials, integer matrices, factorization, and
//! precision-tracked reals.

pub mod factor;
pub mod matrix;
pub mod mpoly;
pub mod quartic;
pub mod ratfunc;
pub mod rational;
pub mod real;
pub mod upoly;

pub use factor::{factor_integer, factor_integer_with_hints, is_probable_prime, IntFactorization};
pub use matrix::IMat;
pub use mpoly::MPoly;
pub use quartic::{factor_quartic, QuarticFactorization};
pub use ratfunc::RatFunc;
pub use rational::{is_perfect_square, parse_rat, rat, rat_int, Rat};
pub use real::Real;
pub use upoly::UPoly;

use std::fmt;

/// Commutative ℚ-algebra: the interface shared by every coefficient domain
/// the octic form and the curve constructions are evaluated over.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rat(q: &Rat) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rat(&rat_int(n))
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// A [`Ring`] in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|i| self.mul(&i))
    }

    /// Division by a nonzero element, panicking on zero. Group-law code uses
    /// this only after explicitly handling the vanishing-denominator cases.
    fn div_exact(&self, rhs: &Self) -> Self {
        self.div(rhs).expect("division by zero")
    }
}

/// Errors from the algebra layer.
#[derive(Debug, thiserror::Error)]
pub enum AlgebraError {
    #[error("cannot parse `{0}` as a rational (expected `a` or `a/b`)")]
    ParseRational(String),
    #[error("factorization gave up: composite cofactor {0} survived the configured effort")]
    FactorGiveUp(num_bigint::BigInt),
    #[error("cannot factor zero")]
    FactorZero,
    #[error("{0}")]
    Domain(String),
}
