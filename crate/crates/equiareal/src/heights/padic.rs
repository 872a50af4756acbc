//! p-adic values with explicit relative-precision bookkeeping, enough to
//! follow the x-coordinate of a point through repeated duplication and read
//! off valuations of the duplication numerator and denominator. Precision
//! exhaustion is an error the caller handles by restarting with a larger
//! working modulus.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Working modulus `p^k`.
#[derive(Clone, Debug)]
pub struct PadicCtx {
    pub p: BigInt,
    pub k: usize,
    pk: BigInt,
}

#[derive(Debug)]
pub struct PrecisionLoss;

impl PadicCtx {
    pub fn new(p: BigInt, k: usize) -> Self {
        let pk = p.pow(k as u32);
        PadicCtx { p, k, pk }
    }

    fn pow(&self, e: usize) -> BigInt {
        self.p.pow(e as u32)
    }

    /// Exact rational into a tracked value. The denominator must be coprime
    /// to p or the numerator must absorb the valuation (reduced fractions
    /// have one or the other).
    pub fn from_rat(&self, q: &crate::algebra::Rat) -> Qp {
        if q.is_zero() {
            return Qp::Zero;
        }
        let (vn, un) = split_val(q.numer(), &self.p);
        let (vd, ud) = split_val(q.denom(), &self.p);
        let inv = mod_inverse(&ud, &self.pk);
        Qp::Unit {
            val: vn - vd,
            unit: (un * inv).mod_floor(&self.pk),
            prec: self.k,
        }
    }

    pub fn from_i64(&self, n: i64) -> Qp {
        self.from_rat(&crate::algebra::rational::rat_int(n))
    }

    pub fn mul(&self, a: &Qp, b: &Qp) -> Qp {
        match (a, b) {
            (Qp::Zero, _) | (_, Qp::Zero) => Qp::Zero,
            (Qp::Small { bound }, Qp::Small { bound: b2 }) => Qp::Small { bound: bound + b2 },
            (Qp::Small { bound }, Qp::Unit { val, .. })
            | (Qp::Unit { val, .. }, Qp::Small { bound }) => Qp::Small { bound: bound + val },
            (
                Qp::Unit { val, unit, prec },
                Qp::Unit {
                    val: v2,
                    unit: u2,
                    prec: p2,
                },
            ) => {
                let prec = (*prec).min(*p2);
                let m = self.pow(prec);
                Qp::Unit {
                    val: val + v2,
                    unit: (unit * u2).mod_floor(&m),
                    prec,
                }
            }
        }
    }

    pub fn add(&self, a: &Qp, b: &Qp) -> Qp {
        match (a, b) {
            (Qp::Zero, x) | (x, Qp::Zero) => x.clone(),
            (Qp::Small { bound }, Qp::Small { bound: b2 }) => Qp::Small {
                bound: (*bound).min(*b2),
            },
            (Qp::Small { bound }, u @ Qp::Unit { .. })
            | (u @ Qp::Unit { .. }, Qp::Small { bound }) => {
                let (val, unit, prec) = match u {
                    Qp::Unit { val, unit, prec } => (*val, unit.clone(), *prec),
                    _ => unreachable!(),
                };
                if *bound <= val {
                    return Qp::Small {
                        bound: (*bound).min(val),
                    };
                }
                // digits beyond bound are unknown
                let known = ((bound - val) as usize).min(prec);
                if known == 0 {
                    return Qp::Small { bound: val };
                }
                Qp::Unit {
                    val,
                    unit: unit.mod_floor(&self.pow(known)),
                    prec: known,
                }
            }
            (
                Qp::Unit { val, unit, prec },
                Qp::Unit {
                    val: v2,
                    unit: u2,
                    prec: p2,
                },
            ) => {
                let v = (*val).min(*v2);
                // absolute precision of each term, then of the sum
                let abs = (val + *prec as i64).min(v2 + *p2 as i64);
                let rel = (abs - v) as usize;
                if rel == 0 {
                    return Qp::Small { bound: abs };
                }
                let m = self.pow(rel);
                let t1 = shifted(unit, (val - v) as usize, &self.p, &m);
                let t2 = shifted(u2, (v2 - v) as usize, &self.p, &m);
                let sum = (t1 + t2).mod_floor(&m);
                if sum.is_zero() {
                    return Qp::Small { bound: abs };
                }
                // sum ≠ 0 mod p^rel, so its valuation is < rel
                let (s, stripped) = split_val(&sum, &self.p);
                let s = s as usize;
                Qp::Unit {
                    val: v + s as i64,
                    unit: stripped,
                    prec: rel - s,
                }
            }
        }
    }

    pub fn neg(&self, a: &Qp) -> Qp {
        match a {
            Qp::Zero => Qp::Zero,
            Qp::Small { bound } => Qp::Small { bound: *bound },
            Qp::Unit { val, unit, prec } => {
                let m = self.pow(*prec);
                Qp::Unit {
                    val: *val,
                    unit: (&m - unit).mod_floor(&m),
                    prec: *prec,
                }
            }
        }
    }

    /// Division; the denominator must have a certified leading digit.
    pub fn div(&self, a: &Qp, b: &Qp) -> Result<Qp, PrecisionLoss> {
        let (vb, ub, pb) = match b {
            Qp::Unit { val, unit, prec } => (*val, unit.clone(), *prec),
            _ => return Err(PrecisionLoss),
        };
        Ok(match a {
            Qp::Zero => Qp::Zero,
            Qp::Small { bound } => Qp::Small { bound: bound - vb },
            Qp::Unit { val, unit, prec } => {
                let prec = (*prec).min(pb);
                let m = self.pow(prec);
                let inv = mod_inverse(&ub.mod_floor(&m), &m);
                Qp::Unit {
                    val: val - vb,
                    unit: (unit * inv).mod_floor(&m),
                    prec,
                }
            }
        })
    }

    /// Exact valuation, when certified.
    pub fn val(&self, a: &Qp) -> Result<i64, PrecisionLoss> {
        match a {
            Qp::Unit { val, .. } => Ok(*val),
            _ => Err(PrecisionLoss),
        }
    }

    /// `min(ord(a), ord(b))`, certified also when one side is only bounded
    /// below but the bound already reaches the other's exact valuation.
    pub fn min_val(&self, a: &Qp, b: &Qp) -> Result<i64, PrecisionLoss> {
        match (a, b) {
            (Qp::Unit { val, .. }, Qp::Unit { val: v2, .. }) => Ok(*val.min(v2)),
            (Qp::Unit { val, .. }, Qp::Small { bound })
            | (Qp::Small { bound }, Qp::Unit { val, .. })
                if bound >= val =>
            {
                Ok(*val)
            }
            (Qp::Unit { val, .. }, Qp::Zero) | (Qp::Zero, Qp::Unit { val, .. }) => Ok(*val),
            _ => Err(PrecisionLoss),
        }
    }
}

/// A tracked p-adic value.
#[derive(Clone, Debug)]
pub enum Qp {
    /// `p^val · unit` with `unit` known modulo `p^prec`, `p ∤ unit`,
    /// `prec ≥ 1`.
    Unit { val: i64, unit: BigInt, prec: usize },
    /// Only known to be `O(p^bound)`.
    Small { bound: i64 },
    /// Exactly zero.
    Zero,
}

fn split_val(n: &BigInt, p: &BigInt) -> (i64, BigInt) {
    assert!(!n.is_zero());
    let mut v = 0i64;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return (v, m);
        }
        m = q;
        v += 1;
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "unit expected mod p^k");
    e.x.mod_floor(m)
}

fn shifted(unit: &BigInt, by: usize, p: &BigInt, m: &BigInt) -> BigInt {
    (unit * p.pow(by as u32)).mod_floor(m)
}
