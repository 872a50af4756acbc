//! Dense univariate polynomials over ℚ in one variable `t`.
//!
//! Coefficients are stored in ascending degree order; the vector is empty for
//! the zero polynomial and otherwise ends with a nonzero leading coefficient.

use super::rational::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UPoly {
    coeffs: Vec<Rat>,
}

impl UPoly {
    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = UPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    /// The indeterminate `t`.
    pub fn var() -> Self {
        UPoly {
            coeffs: vec![Rat::zero(), Rat::one()],
        }
    }

    pub fn monomial(c: Rat, deg: usize) -> Self {
        if c.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        UPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = UPoly { coeffs };
        p.normalize();
        p
    }

    /// Ascending-degree integer coefficients.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rat::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        UPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        super::Ring::pow(self, e)
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Evaluate with coefficients mapped into any ℚ-algebra.
    pub fn eval_in<R: super::Ring>(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&R::from_rat(c));
        }
        acc
    }

    /// Quotient and remainder with `deg r < deg d`. Panics if `d` is zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let dl = d.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quo = vec![
            Rat::zero();
            self.coeffs.len().saturating_sub(d.coeffs.len()) + 1
        ];
        while let Some(rdeg) = rem.degree() {
            if rdeg < dd {
                break;
            }
            let c = rem.leading().unwrap() / &dl;
            let k = rdeg - dd;
            quo[k] = c.clone();
            // rem -= c t^k d
            for (i, dc) in d.coeffs.iter().enumerate() {
                let v = rem.coeff(i + k) - &c * dc;
                if i + k < rem.coeffs.len() {
                    rem.coeffs[i + k] = v;
                }
            }
            rem.normalize();
        }
        (UPoly::from_coeffs(quo), rem)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => UPoly::zero(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    /// Content (gcd of numerators / lcm of denominators, sign of the leading
    /// coefficient) and the primitive integer part, so that
    /// `self = content · primitive` with primitive in ℤ[t], positive leading
    /// coefficient and coefficient gcd 1.
    pub fn content_primitive(&self) -> (Rat, Vec<BigInt>) {
        if self.is_zero() {
            return (Rat::zero(), Vec::new());
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim: Vec<BigInt> = ints.iter().map(|v| v / &g).collect();
        (Rat::new(g, den_lcm), prim)
    }

    /// Monic greatest common divisor over ℚ. Works on the primitive integer
    /// parts with a modular (CRT-reconstructed) gcd, falling back to the
    /// subresultant pseudo-remainder sequence if the prime pool runs dry.
    pub fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        let (_, pa) = a.content_primitive();
        let (_, pb) = b.content_primitive();
        let g = modular::int_poly_gcd_modular(&pa, &pb)
            .unwrap_or_else(|| int_poly_gcd(pa, pb));
        UPoly::from_coeffs(g.into_iter().map(Rat::from_integer).collect()).monic()
    }

    /// Exact square root in ℚ[t], if one exists, normalized to positive
    /// leading coefficient.
    pub fn sqrt(&self) -> Option<UPoly> {
        if self.is_zero() {
            return Some(UPoly::zero());
        }
        let deg = self.degree().unwrap();
        if deg % 2 != 0 {
            return None;
        }
        let m = deg / 2;
        let lead = self.leading().unwrap();
        let rlead = rat_sqrt(lead)?;
        let mut r = vec![Rat::zero(); m + 1];
        r[m] = rlead;
        let two_lead = &r[m] + &r[m];
        for j in (0..m).rev() {
            // matching the t^(m+j) coefficient of r²: the only term with r_j
            // is 2·r_j·r_m, every other pair (i, m+j−i) has both indices > j
            let mut acc = Rat::zero();
            for i in (j + 1)..m {
                let k = m + j - i;
                if k > j && k < m {
                    acc += &r[i] * &r[k];
                }
            }
            r[j] = (self.coeff(m + j) - acc) / &two_lead;
        }
        let cand = UPoly::from_coeffs(r);
        if &cand.mul(&cand) == self {
            Some(cand)
        } else {
            None
        }
    }

    /// Exact fourth root in ℚ[t], if one exists.
    pub fn fourth_root(&self) -> Option<UPoly> {
        self.sqrt().and_then(|s| s.sqrt())
    }

    /// Formal derivative.
    pub fn derivative(&self) -> UPoly {
        if self.coeffs.len() <= 1 {
            return UPoly::zero();
        }
        UPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
                .collect(),
        )
    }
}

/// Nonnegative rational square root, if exact.
fn rat_sqrt(q: &Rat) -> Option<Rat> {
    super::rational::is_perfect_square(q)
}

/// Primitive gcd of two primitive integer polynomials (ascending coeffs),
/// via the subresultant PRS (Cohen, Alg. 3.3.1). Output is primitive with
/// positive leading coefficient.
fn int_poly_gcd(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    fn deg(p: &[BigInt]) -> isize {
        p.len() as isize - 1
    }
    fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
        while p.last().map_or(false, |c| c.is_zero()) {
            p.pop();
        }
        p
    }
    fn primitive(p: Vec<BigInt>) -> Vec<BigInt> {
        if p.is_empty() {
            return p;
        }
        let mut g = BigInt::zero();
        for c in &p {
            g = g.gcd(c);
        }
        if p.last().unwrap().is_negative() {
            g = -g;
        }
        p.into_iter().map(|c| c / &g).collect()
    }
    /// lc(b)^(δ+1) · a  mod  b, with δ = deg a − deg b. The scaling must be
    /// exactly lb^(δ+1) for the subresultant divisions to stay exact, so the
    /// remainder is topped up when cancellation skips reduction passes.
    fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let db = deg(b);
        let delta = deg(a) - db;
        let lb = b.last().unwrap().clone();
        let mut r: Vec<BigInt> = a.to_vec();
        let mut passes: isize = 0;
        while deg(&r) >= db {
            let dr = deg(&r) as usize;
            let lr = r.last().unwrap().clone();
            let k = dr - db as usize;
            for c in r.iter_mut() {
                *c *= &lb;
            }
            passes += 1;
            for (i, bc) in b.iter().enumerate() {
                r[i + k] -= &lr * bc;
            }
            r = trim(r);
            if r.is_empty() {
                break;
            }
        }
        for _ in passes..delta + 1 {
            for c in r.iter_mut() {
                *c *= &lb;
            }
        }
        r
    }

    let (mut a, mut b) = (trim(a), trim(b));
    if deg(&a) < deg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    if b.is_empty() {
        return primitive(a);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = (deg(&a) - deg(&b)) as u32;
        let r = prem(&a, &b);
        if r.is_empty() {
            return primitive(b);
        }
        if deg(&r) == 0 {
            return vec![BigInt::one()];
        }
        a = b;
        let divisor = &g * h.pow(delta);
        b = r.into_iter().map(|c| c / &divisor).collect();
        b = trim(b);
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h.clone()
        } else {
            let gp = g.pow(delta);
            let hp = h.pow(delta - 1);
            if delta == 1 {
                gp
            } else {
                &gp / &hp
            }
        };
    }
}

/// Modular gcd for primitive integer polynomials: images over word-size
/// prime fields, degree filtering for unlucky primes, CRT reconstruction of
/// `gcd(lc_a, lc_b)·(monic gcd)`, and an exact trial-division certificate.
mod modular {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Signed, ToPrimitive, Zero};
    use std::sync::OnceLock;

    const PRIME_BITS: u64 = 62;
    const MAX_PRIMES: usize = 96;

    fn primes() -> &'static Vec<u64> {
        static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
        PRIMES.get_or_init(|| {
            let mut out = Vec::with_capacity(MAX_PRIMES);
            let mut cand = (1u64 << PRIME_BITS) + 1;
            while out.len() < MAX_PRIMES {
                if crate::algebra::factor::is_probable_prime(&BigInt::from(cand), 32) {
                    out.push(cand);
                }
                cand += 2;
            }
            out
        })
    }

    fn mulmod(a: u64, b: u64, p: u64) -> u64 {
        ((a as u128 * b as u128) % p as u128) as u64
    }

    fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, a, p);
            }
            a = mulmod(a, a, p);
            e >>= 1;
        }
        acc
    }

    fn reduce_mod(c: &BigInt, p: u64) -> u64 {
        let r = c.mod_floor(&BigInt::from(p));
        r.to_u64().expect("residue fits u64")
    }

    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    /// Monic gcd in GF(p)[t]; coefficients ascending.
    fn gcd_mod_p(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            // a mod b
            let db = b.len() - 1;
            let lb_inv = powmod(b[db], p - 2, p);
            while a.len() > db {
                let la = *a.last().unwrap();
                if la != 0 {
                    let f = mulmod(la, lb_inv, p);
                    let k = a.len() - 1 - db;
                    for i in 0..=db {
                        let sub = mulmod(f, b[i], p);
                        let idx = i + k;
                        a[idx] = (a[idx] + p - sub) % p;
                    }
                }
                a.pop();
                trim(&mut a);
                if a.is_empty() {
                    break;
                }
            }
            std::mem::swap(&mut a, &mut b);
        }
        if let Some(&lc) = a.last() {
            let inv = powmod(lc, p - 2, p);
            for c in a.iter_mut() {
                *c = mulmod(*c, inv, p);
            }
        }
        a
    }

    /// Symmetric representative of `r mod m` in `(−m/2, m/2]`.
    fn symmetric(r: &BigInt, m: &BigInt) -> BigInt {
        let r = r.mod_floor(m);
        if &r + &r > *m {
            r - m
        } else {
            r
        }
    }

    /// Exact divisibility of integer polynomials (ascending coefficients).
    fn divides(num: &[BigInt], den: &[BigInt]) -> bool {
        let mut rem: Vec<BigInt> = num.to_vec();
        let dd = den.len() - 1;
        let lb = den.last().unwrap();
        while rem.iter().any(|c| !c.is_zero()) {
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
            if rem.is_empty() {
                return true;
            }
            if rem.len() - 1 < dd {
                return false;
            }
            let lr = rem.last().unwrap().clone();
            let (q, r) = lr.div_rem(lb);
            if !r.is_zero() {
                return false;
            }
            let k = rem.len() - 1 - dd;
            for i in 0..=dd {
                let v = &rem[i + k] - &q * &den[i];
                rem[i + k] = v;
            }
        }
        true
    }

    fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
        let mut g = BigInt::zero();
        for c in &v {
            g = g.gcd(c);
        }
        if v.last().map_or(false, |c| c.is_negative()) {
            g = -g;
        }
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
        v
    }

    /// `Some(primitive gcd)` or `None` when the prime pool is exhausted
    /// (then the caller falls back to the subresultant route).
    pub(super) fn int_poly_gcd_modular(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
        if a.is_empty() || b.is_empty() {
            return None;
        }
        let lc_gcd: BigInt = a.last().unwrap().gcd(b.last().unwrap());

        let mut crt_mod = BigInt::one();
        let mut crt: Vec<BigInt> = Vec::new();
        let mut cur_deg = usize::MAX;
        let mut stable = false;

        for &p in primes() {
            let pb = BigInt::from(p);
            if (a.last().unwrap() % &pb).is_zero() || (b.last().unwrap() % &pb).is_zero() {
                continue;
            }
            let am: Vec<u64> = a.iter().map(|c| reduce_mod(c, p)).collect();
            let bm: Vec<u64> = b.iter().map(|c| reduce_mod(c, p)).collect();
            let g = gcd_mod_p(am, bm, p);
            let d = g.len().saturating_sub(1);
            if g.len() <= 1 {
                return Some(vec![BigInt::one()]);
            }
            if d > cur_deg {
                continue; // unlucky prime
            }
            let scale = reduce_mod(&lc_gcd, p);
            let image: Vec<BigInt> = g
                .iter()
                .map(|&c| BigInt::from(mulmod(c, scale, p)))
                .collect();
            if d < cur_deg {
                cur_deg = d;
                crt_mod = pb.clone();
                crt = image;
                stable = false;
                continue;
            }
            // combine with the existing residue by CRT
            let inv = crt_mod.extended_gcd(&pb).x.mod_floor(&pb);
            let mut next = Vec::with_capacity(crt.len());
            let new_mod = &crt_mod * &pb;
            for (old, im) in crt.iter().zip(image.iter()) {
                // next ≡ old (mod crt_mod), next ≡ im (mod p)
                let diff = (im - old).mod_floor(&pb);
                let k = (&diff * &inv).mod_floor(&pb);
                next.push(symmetric(&(old + &crt_mod * k), &new_mod));
            }
            let was = crt.clone();
            crt = next;
            crt_mod = new_mod;
            if crt == was {
                if stable {
                    let cand = primitive(crt.clone());
                    if divides(a, &cand) && divides(b, &cand) {
                        return Some(cand);
                    }
                    stable = false;
                } else {
                    stable = true;
                }
            } else {
                stable = false;
            }
        }
        None
    }
}

impl super::Ring for UPoly {
    fn zero() -> Self {
        UPoly::zero()
    }
    fn one() -> Self {
        UPoly::one()
    }
    fn is_zero(&self) -> bool {
        UPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        UPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        UPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        UPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        UPoly::neg(self)
    }
    fn from_rat(q: &Rat) -> Self {
        UPoly::constant(q.clone())
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            if i > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "t")?;
                if i > 1 {
                    write!(f, "^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, rat_int};

    fn p(coeffs: &[i64]) -> UPoly {
        UPoly::from_i64(coeffs)
    }

    #[test]
    fn arithmetic_and_eval() {
        let f = p(&[1, 2, 1]); // (t+1)²
        let g = p(&[1, 1]);
        assert_eq!(g.mul(&g), f);
        assert_eq!(f.eval(&rat_int(3)), rat_int(16));
        assert_eq!(f.degree(), Some(2));
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn divrem_exact_and_remainder() {
        let f = p(&[-1, 0, 1]); // t²−1
        let d = p(&[-1, 1]); // t−1
        let (q, r) = f.divrem(&d);
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());

        let (q2, r2) = p(&[1, 0, 0, 1]).divrem(&p(&[1, 1]));
        assert_eq!(q2.mul(&p(&[1, 1])).add(&r2), p(&[1, 0, 0, 1]));
    }

    #[test]
    fn gcd_examples() {
        // (t²−1, t−1) → t−1
        assert_eq!(UPoly::gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])), p(&[-1, 1]));
        // (t, t+1) → 1
        assert_eq!(UPoly::gcd(&p(&[0, 1]), &p(&[1, 1])), UPoly::one());
        // (h1·h2, h2) → monic h2, against plain division as oracle
        let h1 = p(&[-2, 0, -3, 0, 1]);
        let h2 = p(&[2, 0, 3, 0, 2]);
        let g = UPoly::gcd(&h1.mul(&h2), &h2);
        assert_eq!(g, h2.monic());
        let (_, r) = h1.mul(&h2).divrem(&g);
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_with_rational_coefficients() {
        let f = p(&[1, 1]).scale(&rat(1, 3)).mul(&p(&[2, 1]));
        let g = p(&[1, 1]).scale(&rat(5, 7));
        assert_eq!(UPoly::gcd(&f, &g), p(&[1, 1]));
    }

    #[test]
    fn sqrt_and_fourth_root() {
        let f = p(&[1, 2, 1]);
        assert_eq!(f.sqrt(), Some(p(&[1, 1])));
        assert_eq!(p(&[0, 0, 0, 0, 16]).fourth_root(), Some(p(&[0, 2])));
        assert_eq!(p(&[1, 1]).sqrt(), None);
        assert_eq!(p(&[2, 0, 0, 0]).sqrt(), None);
        // non-square leading coefficient
        assert_eq!(p(&[0, 0, 3]).sqrt(), None);
        // square coefficients but not a square polynomial
        assert_eq!(p(&[4, 0, 0, 0, 9]).sqrt(), None);
    }

    #[test]
    fn content_primitive_round_trip() {
        let f = UPoly::from_coeffs(vec![rat(4, 3), rat(2, 3), rat(-2, 9)]);
        let (c, prim) = f.content_primitive();
        // primitive part has positive lead: content carries the sign
        assert_eq!(prim.last().unwrap(), &BigInt::from(1));
        let rebuilt = UPoly::from_coeffs(
            prim.iter()
                .map(|v| Rat::from_integer(v.clone()) * &c)
                .collect(),
        );
        assert_eq!(rebuilt, f);
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(p(&[-2, 0, -3, 0, 1]).to_string(), "t^4 - 3*t^2 - 2");
        assert_eq!(UPoly::zero().to_string(), "0");
    }
}
