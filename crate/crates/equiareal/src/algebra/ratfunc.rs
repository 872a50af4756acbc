//! The field ℚ(t) of rational functions: quotients of [`UPoly`] kept in the
//! canonical form `num/den` with `gcd(num, den) = 1` and `den` monic.

use super::rational::Rat;
use super::upoly::UPoly;

use num_traits::Zero;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: UPoly,
    den: UPoly,
}

impl RatFunc {
    /// Build `num/den`, reducing to canonical form. Panics if `den` is zero.
    pub fn new(num: UPoly, den: UPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc {
                num: UPoly::zero(),
                den: UPoly::one(),
            };
        }
        let g = UPoly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.divrem(&g).0, den.divrem(&g).0)
        };
        let lead = den.leading().unwrap().clone();
        let inv = lead.recip();
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: UPoly) -> Self {
        RatFunc {
            num: p,
            den: UPoly::one(),
        }
    }

    pub fn from_rat(q: Rat) -> Self {
        Self::from_poly(UPoly::constant(q))
    }

    /// The coordinate function `t`.
    pub fn var() -> Self {
        Self::from_poly(UPoly::var())
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&UPoly> {
        if self.is_poly() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        RatFunc::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        RatFunc::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RatFunc::new(self.den.clone(), self.num.clone()))
        }
    }

    pub fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|i| self.mul(&i))
    }

    /// Evaluate at `t = t0`; `None` at a pole.
    pub fn eval(&self, t0: &Rat) -> Option<Rat> {
        let d = self.den.eval(t0);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(t0) / d)
    }

    /// Exact fourth root, if one exists, with positive leading coefficient.
    pub fn fourth_root(&self) -> Option<Self> {
        let n = self.num.fourth_root()?;
        let d = self.den.fourth_root()?;
        Some(RatFunc::new(n, d))
    }
}

impl super::Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(UPoly::zero())
    }
    fn one() -> Self {
        RatFunc::from_poly(UPoly::one())
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        RatFunc::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        RatFunc::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        RatFunc::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn from_rat(q: &Rat) -> Self {
        RatFunc::from_rat(q.clone())
    }
}

impl super::Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        RatFunc::inv(self)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(UPoly::from_i64(n), UPoly::from_i64(d))
    }

    #[test]
    fn canonical_form() {
        // (t²−1)/(2t−2) = (t+1)/2 with monic denominator: num (t+1)/2, den 1
        let f = rf(&[-1, 0, 1], &[-2, 2]);
        assert!(f.is_poly());
        assert_eq!(f.num().coeff(1), crate::algebra::rational::rat(1, 2));

        let g = rf(&[1], &[0, 2]);
        assert!(g.den().is_monic());
    }

    #[test]
    fn eval_and_poles() {
        let f = rf(&[1], &[0, 1]); // 1/t
        assert_eq!(f.eval(&crate::algebra::rational::rat_int(2)),
                   Some(crate::algebra::rational::rat(1, 2)));
        assert_eq!(f.eval(&crate::algebra::rational::rat_int(0)), None);
    }

    #[test]
    fn fourth_root_of_model_ratio() {
        // 16/t⁸ → 2/t²
        let f = rf(&[16], &[0, 0, 0, 0, 0, 0, 0, 0, 1]);
        let r = f.fourth_root().unwrap();
        assert_eq!(r, rf(&[2], &[0, 0, 1]));
        assert!(rf(&[2], &[1]).fourth_root().is_none());
    }

    fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
        (
            proptest::collection::vec(-6i64..6, 1..4),
            proptest::collection::vec(-6i64..6, 1..4),
        )
            .prop_filter_map("nonzero denominator", |(n, d)| {
                let den = UPoly::from_i64(&d);
                if den.is_zero() {
                    None
                } else {
                    Some(RatFunc::new(UPoly::from_i64(&n), den))
                }
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn field_axioms(a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            if !a.is_zero() {
                prop_assert_eq!(a.mul(&a.inv().unwrap()), <RatFunc as crate::algebra::Ring>::one());
            }
        }
    }
}
