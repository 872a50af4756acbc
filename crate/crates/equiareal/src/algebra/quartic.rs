//! Factorization of polynomials of degree ≤ 4 over ℚ by elementary bounded
//! search: rational-root enumeration for linear factors, a discriminant test
//! for quadratics, and an integer-coefficient search for 2+2 splittings.

use super::factor::factor_integer;
use super::rational::Rat;
use super::upoly::UPoly;
use super::AlgebraError;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// `content · ∏ factors`, each factor irreducible and primitive in ℤ[t] with
/// positive leading coefficient, sorted by (degree, coefficients).
#[derive(Clone, Debug, PartialEq)]
pub struct QuarticFactorization {
    pub content: Rat,
    pub factors: Vec<UPoly>,
}

impl QuarticFactorization {
    pub fn value(&self) -> UPoly {
        let mut p = UPoly::constant(self.content.clone());
        for f in &self.factors {
            p = p.mul(f);
        }
        p
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1
    }
}

fn poly_from_int(coeffs: &[BigInt]) -> UPoly {
    UPoly::from_coeffs(coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect())
}

/// Signed divisors of `n` (positive divisors and their negatives).
fn signed_divisors(n: &BigInt) -> Result<Vec<BigInt>, AlgebraError> {
    let f = factor_integer(n)?;
    let mut divs = vec![BigInt::one()];
    for (p, e) in &f.factors {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=*e {
                next.push(d * &pk);
                pk *= p;
            }
        }
        divs = next;
    }
    let mut out = Vec::with_capacity(divs.len() * 2);
    for d in divs {
        out.push(-&d);
        out.push(d);
    }
    Ok(out)
}

/// Strip rational roots from a primitive integer polynomial, returning the
/// linear factors (primitive, positive lead) and the remaining cofactor.
fn strip_rational_roots(p: &UPoly) -> Result<(Vec<UPoly>, UPoly), AlgebraError> {
    let mut rest = p.clone();
    let mut linear = Vec::new();
    'outer: loop {
        let deg = match rest.degree() {
            None | Some(0) => break,
            Some(d) => d,
        };
        if deg == 1 {
            let (_, prim) = rest.content_primitive();
            linear.push(poly_from_int(&prim));
            rest = UPoly::one();
            break;
        }
        let (_, prim) = rest.content_primitive();
        let a0 = prim[0].clone();
        let an = prim.last().unwrap().clone();
        if a0.is_zero() {
            // t divides
            linear.push(UPoly::from_i64(&[0, 1]));
            rest = rest.divrem(&UPoly::from_i64(&[0, 1])).0;
            continue;
        }
        for num in signed_divisors(&a0)? {
            for den in signed_divisors(&an)? {
                if den.is_negative() {
                    continue;
                }
                let cand = Rat::new(num.clone(), den.clone());
                if rest.eval(&cand).is_zero() {
                    // root num/den → factor den·t − num
                    let lin = poly_from_int(&[-&num, den.clone()]);
                    let (_, lin_prim) = lin.content_primitive();
                    let lin = poly_from_int(&lin_prim);
                    linear.push(lin.clone());
                    rest = rest.divrem(&lin).0;
                    continue 'outer;
                }
            }
        }
        break;
    }
    Ok((linear, rest))
}

/// Try to split a primitive integer quartic with no rational roots into two
/// integer quadratics `(a t² + b t + c)(d t² + e t + f)`.
fn split_quartic(prim: &[BigInt]) -> Result<Option<(UPoly, UPoly)>, AlgebraError> {
    let (p0, p1, p2, p3, p4) = (
        prim[0].clone(),
        prim[1].clone(),
        prim[2].clone(),
        prim[3].clone(),
        prim[4].clone(),
    );
    for a in signed_divisors(&p4)? {
        if a.is_negative() {
            continue; // fix sign of the first factor's lead
        }
        let d = &p4 / &a;
        for c in signed_divisors(&p0)? {
            if (&p0 % &c) != BigInt::zero() {
                continue;
            }
            let f = &p0 / &c;
            // unknowns b, e:
            //   a e + b d = p3
            //   b f + c e = p1
            //   a f + b e + c d = p2
            let det = &c * &d - &a * &f;
            if !det.is_zero() {
                // unique candidate from the two linear equations
                let b_num = &c * &p3 - &a * &p1;
                let e_num = &d * &p1 - &f * &p3;
                if (&b_num % &det) != BigInt::zero() || (&e_num % &det) != BigInt::zero() {
                    continue;
                }
                let b = b_num / &det;
                let e = e_num / &det;
                if &a * &f + &b * &e + &c * &d == p2 {
                    return Ok(Some((
                        poly_from_int(&[c, b, a]),
                        poly_from_int(&[f, e, d]),
                    )));
                }
            } else {
                // degenerate system: enumerate b over a coefficient bound
                let bound = coeff_bound(prim);
                let mut b = -&bound;
                while b <= bound {
                    // a e = p3 − b d determines e
                    let rhs = &p3 - &b * &d;
                    if (&rhs % &a).is_zero() {
                        let e = &rhs / &a;
                        if &b * &f + &c * &e == p1 && &a * &f + &b * &e + &c * &d == p2 {
                            return Ok(Some((
                                poly_from_int(&[c.clone(), b.clone(), a.clone()]),
                                poly_from_int(&[f.clone(), e, d.clone()]),
                            )));
                        }
                    }
                    b += 1;
                }
            }
        }
    }
    Ok(None)
}

/// Crude bound on the coefficients of any monic-scaled integer factor of a
/// quartic: 2⁴ · (1 + Σ|cᵢ|) is far above the Mignotte bound at this degree.
fn coeff_bound(prim: &[BigInt]) -> BigInt {
    let sum: BigInt = prim.iter().map(|c| c.abs()).sum();
    (sum + BigInt::one()) * BigInt::from(16)
}

/// Factor a polynomial of degree ≤ 4 over ℚ into content × irreducible
/// primitive integer factors.
pub fn factor_quartic(f: &UPoly) -> Result<QuarticFactorization, AlgebraError> {
    let deg = match f.degree() {
        None => {
            return Err(AlgebraError::Domain(
                "cannot factor the zero polynomial".into(),
            ))
        }
        Some(d) => d,
    };
    assert!(deg <= 4, "factor_quartic only handles degree ≤ 4");
    let (content, prim_vec) = f.content_primitive();
    let prim = poly_from_int(&prim_vec);
    if deg == 0 {
        return Ok(QuarticFactorization {
            content,
            factors: vec![],
        });
    }

    let (mut factors, rest) = strip_rational_roots(&prim)?;
    match rest.degree() {
        None | Some(0) => {}
        Some(1) => {
            let (_, p) = rest.content_primitive();
            factors.push(poly_from_int(&p));
        }
        Some(2) | Some(3) => {
            // no rational roots survive, so degree 2 and 3 are irreducible
            let (_, p) = rest.content_primitive();
            factors.push(poly_from_int(&p));
        }
        Some(4) => {
            let (_, p) = rest.content_primitive();
            match split_quartic(&p)? {
                Some((g, h)) => {
                    // each quadratic has no rational root here, hence irreducible
                    factors.push(g);
                    factors.push(h);
                }
                None => factors.push(poly_from_int(&p)),
            }
        }
        _ => unreachable!(),
    }

    factors.sort_by(|a, b| {
        a.degree().cmp(&b.degree()).then_with(|| {
            let d = a.degree().unwrap_or(0);
            (0..=d)
                .map(|i| (a.coeff(i), b.coeff(i)))
                .find_map(|(x, y)| if x != y { Some(x.cmp(&y)) } else { None })
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    });
    let fz = QuarticFactorization { content, factors };
    debug_assert_eq!(fz.value(), *f);
    Ok(fz)
}
