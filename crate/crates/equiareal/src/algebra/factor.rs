//! Integer factorization: trial division to 10⁶, Miller–Rabin primality with
//! 64 random bases (error < 2⁻¹²⁸), and Pollard rho with Brent cycling for
//! splitting. Sized for discriminants whose algebraic structure already
//! splits them into pieces of ≲ 20 digits.

use super::AlgebraError;
use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

const TRIAL_LIMIT: u64 = 1_000_000;
const RHO_MAX_ITERS: u64 = 1 << 26;

/// Sign and multiset of prime factors, primes ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntFactorization {
    pub sign: i8,
    pub factors: Vec<(BigInt, u32)>,
}

impl IntFactorization {
    /// Multiply the factorization back together.
    pub fn value(&self) -> BigInt {
        let mut v = BigInt::from(self.sign);
        for (p, e) in &self.factors {
            v *= p.pow(*e);
        }
        v
    }

    /// Exponent of `p` in the factorization (0 if absent).
    pub fn ord(&self, p: &BigInt) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    /// All positive squarefree divisors (product over any subset of the
    /// distinct primes). Only sensible for small factorizations.
    pub fn squarefree_divisors(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::one()];
        for (p, _) in &self.factors {
            let mut next = Vec::with_capacity(out.len() * 2);
            for d in &out {
                next.push(d.clone());
                next.push(d * p);
            }
            out = next;
        }
        out.sort();
        out
    }
}

fn small_primes() -> &'static Vec<u64> {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut sieve = vec![true; n + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2usize;
        while i * i <= n {
            if sieve[i] {
                let mut j = i * i;
                while j <= n {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        (2..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
    })
}

/// Miller–Rabin. Deterministic small-prime witnesses plus `rounds` random
/// bases from a RNG seeded by `n` itself, so results are reproducible.
/// Error probability for a composite declared prime is < 4^(-rounds).
pub fn is_probable_prime(n: &BigInt, rounds: u32) -> bool {
    if n.is_negative() {
        return false;
    }
    let n = n.magnitude().clone();
    let two = BigUint::from(2u32);
    if n < two {
        return false;
    }
    for &p in &[2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigUint::from(p);
        if n == p {
            return true;
        }
        if (&n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = &n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;

    let witness = |a: &BigUint| -> bool {
        // true = composite witnessed
        let mut x = a.modpow(&d, &n);
        if x.is_one() || x == n_minus_1 {
            return false;
        }
        for _ in 1..s {
            x = (&x * &x) % &n;
            if x == n_minus_1 {
                return false;
            }
        }
        true
    };

    for &p in &[2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if witness(&BigUint::from(p)) {
            return false;
        }
    }
    let mut seed = [0u8; 32];
    for (i, b) in n.to_bytes_le().into_iter().take(32).enumerate() {
        seed[i] = b;
    }
    let mut rng = ChaCha8Rng::from_seed(seed);
    let hi = &n - 2u32;
    for _ in 0..rounds {
        let a = rng.gen_biguint_range(&two, &hi);
        if witness(&a) {
            return false;
        }
    }
    true
}

/// Pollard rho with Brent's cycle detection and batched gcds.
/// Returns a nontrivial factor of composite odd `n`, or `None` if the
/// iteration budget runs out for every tried offset.
fn pollard_rho_brent(n: &BigUint) -> Option<BigUint> {
    for c in 1u32..=8 {
        let c = BigUint::from(c);
        let mut y = BigUint::from(2u32);
        let mut iters: u64 = 0;
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let f = |v: &BigUint| (v * v + &c) % n;
        'outer: while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k: u64 = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let m = 128.min(r - k);
                for _ in 0..m {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (&q * &diff) % n;
                }
                g = q.gcd(n);
                k += m;
                iters += m;
                if iters > RHO_MAX_ITERS {
                    break 'outer;
                }
            }
            r *= 2;
        }
        if g == *n {
            // backtrack one step at a time
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && g != *n {
            return Some(g);
        }
    }
    None
}

fn factor_magnitude(n: &BigUint, out: &mut Vec<(BigInt, u32)>) -> Result<(), AlgebraError> {
    let mut rest = n.clone();
    if rest.is_one() {
        return Ok(());
    }
    for &p in small_primes() {
        if rest.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut e = 0u32;
        while (&rest % &pb).is_zero() {
            rest /= &pb;
            e += 1;
        }
        if e > 0 {
            out.push((BigInt::from(p), e));
        }
    }
    if rest.is_one() {
        return Ok(());
    }
    if rest.to_u64().map(|v| v < TRIAL_LIMIT * TRIAL_LIMIT).unwrap_or(false)
        || is_probable_prime(&BigInt::from(rest.clone()), 64)
    {
        // below the trial bound squared a survivor is prime
        out.push((BigInt::from(rest), 1));
        return Ok(());
    }
    // composite: split with rho and recurse
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&BigInt::from(m.clone()), 64) {
            out.push((BigInt::from(m), 1));
            continue;
        }
        match pollard_rho_brent(&m) {
            Some(d) => {
                stack.push(&m / &d);
                stack.push(d);
            }
            None => return Err(AlgebraError::FactorGiveUp(BigInt::from(m))),
        }
    }
    Ok(())
}

fn normalize(mut factors: Vec<(BigInt, u32)>) -> Vec<(BigInt, u32)> {
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    let mut merged: Vec<(BigInt, u32)> = Vec::with_capacity(factors.len());
    for (p, e) in factors {
        match merged.last_mut() {
            Some((q, f)) if *q == p => *f += e,
            _ => merged.push((p, e)),
        }
    }
    merged
}

/// Factor a nonzero integer into sign × prime powers.
pub fn factor_integer(n: &BigInt) -> Result<IntFactorization, AlgebraError> {
    factor_integer_with_hints(n, &[])
}

/// Like [`factor_integer`], but first splits `n` along the provided hint
/// divisors (gcds are taken, so hints need not divide `n` exactly). Used when
/// a discriminant is known to split through smaller algebraic factors.
pub fn factor_integer_with_hints(
    n: &BigInt,
    hints: &[BigInt],
) -> Result<IntFactorization, AlgebraError> {
    if n.is_zero() {
        return Err(AlgebraError::FactorZero);
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut pieces: Vec<BigUint> = vec![n.magnitude().clone()];
    for h in hints {
        let h = h.magnitude();
        if h.is_zero() || h.is_one() {
            continue;
        }
        let mut next = Vec::with_capacity(pieces.len() * 2);
        for m in pieces {
            let mut m = m;
            let mut g = m.gcd(h);
            while !g.is_one() && g != m {
                m /= &g;
                next.push(g.clone());
                g = m.gcd(&g);
            }
            next.push(m);
        }
        pieces = next;
    }
    let mut factors = Vec::new();
    for m in &pieces {
        factor_magnitude(m, &mut factors)?;
    }
    let fz = IntFactorization {
        sign,
        factors: normalize(factors),
    };
    debug_assert_eq!(&fz.value(), n);
    Ok(fz)
}

/// p-adic valuation of a nonzero integer.
pub fn ord_p(n: &BigInt, p: &BigInt) -> u32 {
    assert!(!n.is_zero());
    let mut e = 0u32;
    let mut m = n.magnitude().clone();
    let pm = p.magnitude();
    loop {
        let (q, r) = m.div_rem(pm);
        if !r.is_zero() {
            return e;
        }
        m = q;
        e += 1;
    }
}
