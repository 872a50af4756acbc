//! The octic form `x₁⁸+x₂⁸+x₃⁸−2x₁⁴x₂⁴−2x₁⁴x₃⁴−2x₂⁴x₃⁴`, its quadratic
//! factorization, the two parametric solution families of the equation
//! `form(x) = form(y)`, and construction of pairs of equal-area triangles
//! whose sides are perfect squares.
//!
//! Everything here is exact. The form is (−16)·Area² of the triangle with
//! sides `x₁², x₂², x₃²`, which is what ties the Diophantine layer to the
//! triangle geometry and, through `X³ + (form/4)·X`, to the elliptic layer.

use crate::algebra::mpoly::{vars, VarSet};
use crate::algebra::rational::{integer_sqrt, Rat};
use crate::algebra::{is_perfect_square, MPoly, Ring, UPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, thiserror::Error)]
pub enum OcticError {
    #[error("degenerate solution at {at}: {what}")]
    Degenerate { at: String, what: String },
    #[error("squared sides do not form a triangle at {at}: {what}")]
    NotATriangle { at: String, what: String },
    #[error("cannot scale the zero solution")]
    ZeroSolution,
}

/// `x₁⁸+x₂⁸+x₃⁸−2x₁⁴x₂⁴−2x₁⁴x₃⁴−2x₂⁴x₃⁴` over any ℚ-algebra.
pub fn octic_form<R: Ring>(t: &[R; 3]) -> R {
    let [a, b, c] = t;
    let (a4, b4, c4) = (a.pow(4), b.pow(4), c.pow(4));
    let two = R::from_i64(2);
    a4.pow(2)
        .add(&b4.pow(2))
        .add(&c4.pow(2))
        .sub(&two.mul(&a4).mul(&b4))
        .sub(&two.mul(&a4).mul(&c4))
        .sub(&two.mul(&b4).mul(&c4))
}

/// The four quadratic factors
/// `(x₁²−x₂²−x₃², x₁²−x₂²+x₃², x₁²+x₂²−x₃², x₁²+x₂²+x₃²)`;
/// their product is [`octic_form`].
pub fn octic_form_factors<R: Ring>(t: &[R; 3]) -> [R; 4] {
    let [a, b, c] = t;
    let (a2, b2, c2) = (a.mul(a), b.mul(b), c.mul(c));
    [
        a2.sub(&b2).sub(&c2),
        a2.sub(&b2).add(&c2),
        a2.add(&b2).sub(&c2),
        a2.add(&b2).add(&c2),
    ]
}

/// `(4·Area)²` of the triangle with side lengths `a, b, c`:
/// `−(a⁴+b⁴+c⁴−2a²b²−2a²c²−2b²c²)`. For squared sides `a = x₁²` etc. this is
/// `−octic_form(x₁, x₂, x₃)`.
pub fn sixteen_area_sq<R: Ring>(a: &R, b: &R, c: &R) -> R {
    let (a2, b2, c2) = (a.mul(a), b.mul(b), c.mul(c));
    let two = R::from_i64(2);
    a2.pow(2)
        .add(&b2.pow(2))
        .add(&c2.pow(2))
        .sub(&two.mul(&a2).mul(&b2))
        .sub(&two.mul(&a2).mul(&c2))
        .sub(&two.mul(&b2).mul(&c2))
        .neg()
}

/// Strict triangle inequalities for positive side lengths.
pub fn triangle_check(a: &Rat, b: &Rat, c: &Rat) -> bool {
    assert!(
        a.is_positive() && b.is_positive() && c.is_positive(),
        "triangle_check needs positive sides"
    );
    &(a + b) > c && &(a + c) > b && &(b + c) > a
}

/// A pair of triples over the same coefficient domain with
/// `octic_form(x) = octic_form(y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionPair<R: Ring> {
    pub x: [R; 3],
    pub y: [R; 3],
}

impl<R: Ring> SolutionPair<R> {
    /// Exact check of the defining equation.
    pub fn holds(&self) -> bool {
        octic_form(&self.x) == octic_form(&self.y)
    }

    pub fn entries(&self) -> [&R; 6] {
        [
            &self.x[0], &self.x[1], &self.x[2], &self.y[0], &self.y[1], &self.y[2],
        ]
    }
}

/// The two parametric solution families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolutionFamily {
    Sol1,
    Sol2,
}

impl SolutionFamily {
    pub fn name(&self) -> &'static str {
        match self {
            SolutionFamily::Sol1 => "sol1",
            SolutionFamily::Sol2 => "sol2",
        }
    }
}

impl std::str::FromStr for SolutionFamily {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sol1" => Ok(SolutionFamily::Sol1),
            "sol2" => Ok(SolutionFamily::Sol2),
            other => Err(format!("unknown solution family `{other}`")),
        }
    }
}

fn up(coeffs: &[i64]) -> UPoly {
    UPoly::from_i64(coeffs)
}

/// First parametric solution, six polynomials of degree ≤ 8 in `t`.
pub fn sol1_poly() -> SolutionPair<UPoly> {
    let t2m3 = up(&[-3, 0, 1]);
    let t2p3 = up(&[3, 0, 1]);
    let t2p9 = up(&[9, 0, 1]);
    let t2p1 = up(&[1, 0, 1]);
    let quad_plus = up(&[3, 2, 1]);
    let quad_minus = up(&[3, -2, 1]);
    let c16t2 = up(&[0, 0, 16]);
    let c4t = up(&[0, 4]);

    SolutionPair {
        x: [
            c16t2.mul(&t2m3).mul(&t2p3),
            t2m3.mul(&t2m3).mul(&t2p9).mul(&t2p1),
            c16t2.mul(&quad_plus).mul(&quad_minus),
        ],
        y: [
            up(&[81, 0, 36, 0, 86, 0, 4, 0, 1]),
            c4t.mul(&t2m3).mul(&quad_plus).mul(&quad_minus),
            c4t.mul(&t2m3).mul(&t2p9).mul(&t2p1),
        ],
    }
}

/// Second parametric solution, six polynomials of degree ≤ 5 in `t`.
pub fn sol2_poly() -> SolutionPair<UPoly> {
    SolutionPair {
        x: [
            up(&[0, -1, 3, 3, 3, 2]),
            up(&[0, 2, 3, 3, 3, 2]),
            up(&[0, 3, 3, 3]),
        ],
        y: [
            up(&[-2, -3, -3, -3, 1]),
            up(&[0, 0, 3, 3, 3]),
            up(&[2, 3, 3, 3, 2]),
        ],
    }
}

pub fn solution_poly(family: SolutionFamily) -> SolutionPair<UPoly> {
    match family {
        SolutionFamily::Sol1 => sol1_poly(),
        SolutionFamily::Sol2 => sol2_poly(),
    }
}

/// Specialize a solution family at a rational parameter value.
pub fn solution_at(family: SolutionFamily, t: &Rat) -> SolutionPair<Rat> {
    let p = solution_poly(family);
    SolutionPair {
        x: [p.x[0].eval(t), p.x[1].eval(t), p.x[2].eval(t)],
        y: [p.y[0].eval(t), p.y[1].eval(t), p.y[2].eval(t)],
    }
}

/// Data for the product identity `(p⁴+q⁴)(u⁴+v⁴) = x₁⁴+y₁⁴` in ℚ[t].
#[derive(Clone, Debug)]
pub struct Fac1Solution {
    pub p: UPoly,
    pub q: UPoly,
    pub u: UPoly,
    pub v: UPoly,
    pub x1: UPoly,
    pub y1: UPoly,
}

impl Fac1Solution {
    /// `(p⁴+q⁴)(u⁴+v⁴) − (x₁⁴+y₁⁴)`; zero iff the identity holds.
    pub fn residual(&self) -> UPoly {
        let lhs = self
            .p
            .pow(4)
            .add(&self.q.pow(4))
            .mul(&self.u.pow(4).add(&self.v.pow(4)));
        let rhs = self.x1.pow(4).add(&self.y1.pow(4));
        lhs.sub(&rhs)
    }

    pub fn holds(&self) -> bool {
        self.residual().is_zero()
    }

    pub fn eval(&self, t: &Rat) -> [Rat; 6] {
        [
            self.p.eval(t),
            self.q.eval(t),
            self.u.eval(t),
            self.v.eval(t),
            self.x1.eval(t),
            self.y1.eval(t),
        ]
    }
}

/// The known one-parameter solution of the product identity.
pub fn cbj_fac1() -> Fac1Solution {
    let t2m3 = up(&[-3, 0, 1]);
    Fac1Solution {
        p: t2m3.clone(),
        q: up(&[0, 4]),
        u: t2m3.mul(&up(&[9, 0, 1])).mul(&up(&[1, 0, 1])),
        v: up(&[0, 4]).mul(&up(&[3, 2, 1])).mul(&up(&[3, -2, 1])),
        x1: up(&[0, 0, 16]).mul(&t2m3).mul(&up(&[3, 0, 1])),
        y1: up(&[81, 0, 36, 0, 86, 0, 4, 0, 1]),
    }
}

/// Data for the twisted identity `x₁⁴ + h·v⁴ = y₁⁴ + h·u⁴` with `h = p⁴−q⁴`,
/// as polynomials in the two parameters `p, q`.
#[derive(Clone, Debug)]
pub struct Fac2Solution {
    pub vars: VarSet,
    pub x1: MPoly,
    pub y1: MPoly,
    pub u: MPoly,
    pub v: MPoly,
    pub h: MPoly,
}

impl Fac2Solution {
    /// `x₁⁴ + h v⁴ − y₁⁴ − h u⁴`; zero iff the identity holds.
    pub fn residual(&self) -> MPoly {
        self.x1
            .pow(4)
            .add(&self.h.mul(&self.v.pow(4)))
            .sub(&self.y1.pow(4))
            .sub(&self.h.mul(&self.u.pow(4)))
    }

    pub fn holds(&self) -> bool {
        self.residual().is_zero()
    }

    /// Specialize at rational `(p, q)`, returning `(x₁, y₁, u, v, h)`.
    pub fn eval(&self, p: &Rat, q: &Rat) -> (Rat, Rat, Rat, Rat, Rat) {
        let at = [p.clone(), q.clone()];
        (
            self.x1.eval(&at),
            self.y1.eval(&at),
            self.u.eval(&at),
            self.v.eval(&at),
            self.h.eval(&at),
        )
    }

    /// Substitute `p = t, q = 1`, collapsing to univariate polynomials
    /// `(x₁, y₁, u, v)`.
    pub fn on_line(&self) -> (UPoly, UPoly, UPoly, UPoly) {
        let lift = |m: &MPoly| -> UPoly {
            let mut acc = UPoly::zero();
            for (exp, c) in m.terms() {
                acc = acc.add(&UPoly::monomial(c.clone(), exp[0] as usize));
            }
            acc
        };
        (
            lift(&self.x1),
            lift(&self.y1),
            lift(&self.u),
            lift(&self.v),
        )
    }
}

/// The solution of the twisted identity obtained from the seed
/// `(x₁, y₁, u, v) = (p, q, 1, 0)`.
pub fn choudhry_fac2() -> Fac2Solution {
    let vs = vars(&["p", "q"]);
    let p = MPoly::var(&vs, 0);
    let q = MPoly::var(&vs, 1);
    let c = |n: i64| MPoly::constant(Rat::from_integer(BigInt::from(n)));

    // 3p³q + 3p²q² + 3pq³, the middle block shared by x₁, y₁ and u
    let core = c(3)
        .mul(&p.pow(3))
        .mul(&q)
        .add(&c(3).mul(&p.pow(2)).mul(&q.pow(2)))
        .add(&c(3).mul(&p).mul(&q.pow(3)));

    let x1 = p.mul(&c(2).mul(&p.pow(4)).add(&core).sub(&q.pow(4)));
    let y1 = q.mul(&p.pow(4).sub(&core).sub(&c(2).mul(&q.pow(4))));
    let u = c(2).mul(&p.pow(4)).add(&core).add(&c(2).mul(&q.pow(4)));
    let v = c(3)
        .mul(&p)
        .mul(&q)
        .mul(&p.pow(2).add(&p.mul(&q)).add(&q.pow(2)));
    let h = p.pow(4).sub(&q.pow(4));
    Fac2Solution {
        vars: vs,
        x1,
        y1,
        u,
        v,
        h,
    }
}

/// The substitution `x₂ = pu, x₃ = qv, y₂ = pv, y₃ = qu` assembling a
/// candidate pair from parameters; always forces `x₂x₃ = y₂y₃`.
pub fn substitute_pquv<R: Ring>(p: &R, q: &R, u: &R, v: &R, x1: &R, y1: &R) -> SolutionPair<R> {
    SolutionPair {
        x: [x1.clone(), p.mul(u), q.mul(v)],
        y: [y1.clone(), p.mul(v), q.mul(u)],
    }
}

/// Result of expanding `form(x₁,pu,qv) − form(y₁,pv,qu)` against the product
/// `{x₁⁴+y₁⁴−(p⁴+q⁴)(u⁴+v⁴)}·{x₁⁴−y₁⁴−(p⁴−q⁴)(u⁴−v⁴)}` in six variables.
#[derive(Clone, Debug)]
pub struct ReductionIdentity {
    /// Sign `ε` with `difference = ε · product`; the expansion determines it
    /// (0 if neither sign works, which would falsify the identity).
    pub epsilon: i8,
    /// `difference − ε·product`; must be the zero polynomial.
    pub residual: MPoly,
}

pub fn reduction_identity_check() -> ReductionIdentity {
    let vs = vars(&["x1", "y1", "p", "q", "u", "v"]);
    let x1 = MPoly::var(&vs, 0);
    let y1 = MPoly::var(&vs, 1);
    let p = MPoly::var(&vs, 2);
    let q = MPoly::var(&vs, 3);
    let u = MPoly::var(&vs, 4);
    let v = MPoly::var(&vs, 5);

    let s = substitute_pquv(&p, &q, &u, &v, &x1, &y1);
    let difference = octic_form(&s.x).sub(&octic_form(&s.y));

    let f1 = x1
        .pow(4)
        .add(&y1.pow(4))
        .sub(&p.pow(4).add(&q.pow(4)).mul(&u.pow(4).add(&v.pow(4))));
    let f2 = x1
        .pow(4)
        .sub(&y1.pow(4))
        .sub(&p.pow(4).sub(&q.pow(4)).mul(&u.pow(4).sub(&v.pow(4))));
    let product = f1.mul(&f2);

    let plus = difference.sub(&product);
    if plus.is_zero() {
        return ReductionIdentity {
            epsilon: 1,
            residual: plus,
        };
    }
    let minus = difference.add(&product);
    if minus.is_zero() {
        return ReductionIdentity {
            epsilon: -1,
            residual: minus,
        };
    }
    ReductionIdentity {
        epsilon: 0,
        residual: plus,
    }
}

/// A solution is trivial when `{|y₁|,|y₂|,|y₃|}` is a permutation of
/// `{|x₁|,|x₂|,|x₃|}`: signs are invisible to the even-degree form.
pub fn is_trivial(s: &SolutionPair<Rat>) -> bool {
    let mut xs: Vec<Rat> = s.x.iter().map(|v| v.abs()).collect();
    let mut ys: Vec<Rat> = s.y.iter().map(|v| v.abs()).collect();
    xs.sort();
    ys.sort();
    xs == ys
}

/// Scale all six entries by one positive rational so they become integers
/// with overall gcd 1. The form is homogeneous of degree 8, so the solution
/// property is preserved.
pub fn scale_to_primitive(s: &SolutionPair<Rat>) -> Result<SolutionPair<Rat>, OcticError> {
    let entries = s.entries();
    if entries.iter().all(|e| Zero::is_zero(*e)) {
        return Err(OcticError::ZeroSolution);
    }
    let mut den_lcm = BigInt::one();
    for e in &entries {
        den_lcm = den_lcm.lcm(e.denom());
    }
    let mut num_gcd = BigInt::zero();
    for e in &entries {
        num_gcd = num_gcd.gcd(&(e.numer() * (&den_lcm / e.denom())));
    }
    let lambda = Rat::new(den_lcm, num_gcd);
    let sc = |v: &Rat| v * &lambda;
    Ok(SolutionPair {
        x: [sc(&s.x[0]), sc(&s.x[1]), sc(&s.x[2])],
        y: [sc(&s.y[0]), sc(&s.y[1]), sc(&s.y[2])],
    })
}

/// Two equal-area triangles whose sides are the perfect squares `xᵢ²`, `yᵢ²`
/// of a primitive integer solution.
#[derive(Clone, Debug, PartialEq)]
pub struct TrianglePair {
    /// Squared sides of the first triangle (each a perfect square).
    pub sides_x: [BigInt; 3],
    /// Squared sides of the second triangle.
    pub sides_y: [BigInt; 3],
    /// `16·Area²`, identical for both triangles.
    pub sixteen_area_sq: BigInt,
    /// Whether the underlying integer solution has overall gcd 1.
    pub primitive: bool,
    /// Whether the common area is itself rational.
    pub area_rational: bool,
}

impl TrianglePair {
    /// Side roots: the integers whose squares are the sides.
    pub fn roots_x(&self) -> [BigInt; 3] {
        self.sides_x
            .clone()
            .map(|s| integer_sqrt(&s).expect("sides are perfect squares"))
    }

    pub fn roots_y(&self) -> [BigInt; 3] {
        self.sides_y
            .clone()
            .map(|s| integer_sqrt(&s).expect("sides are perfect squares"))
    }
}

/// Build the equal-area triangle pair for a solution family at `t`.
pub fn triangle_pair(family: SolutionFamily, t: &Rat) -> Result<TrianglePair, OcticError> {
    let at = format!("{}, t = {}", family.name(), t);
    let sol = solution_at(family, t);
    if sol.entries().iter().any(|e| Zero::is_zero(*e)) {
        return Err(OcticError::Degenerate {
            at,
            what: "a solution entry vanishes, so a squared side would be zero".into(),
        });
    }
    let form = octic_form(&sol.x);
    if Zero::is_zero(&form) {
        return Err(OcticError::Degenerate {
            at,
            what: "the octic form vanishes (degenerate triangles, no curve)".into(),
        });
    }
    let prim = scale_to_primitive(&sol)?;
    debug_assert!(prim.holds());
    let sides = |triple: &[Rat; 3]| -> [Rat; 3] {
        [
            &triple[0] * &triple[0],
            &triple[1] * &triple[1],
            &triple[2] * &triple[2],
        ]
    };
    let sx = sides(&prim.x);
    let sy = sides(&prim.y);
    for (label, s) in [("x", &sx), ("y", &sy)] {
        if !triangle_check(&s[0], &s[1], &s[2]) {
            return Err(OcticError::NotATriangle {
                at: at.clone(),
                what: format!(
                    "squared sides from the {label}-triple violate a strict triangle inequality"
                ),
            });
        }
    }
    let area_sq_16 = sixteen_area_sq(&sx[0], &sx[1], &sx[2]);
    debug_assert_eq!(area_sq_16, sixteen_area_sq(&sy[0], &sy[1], &sy[2]));
    debug_assert_eq!(area_sq_16, Ring::neg(&octic_form(&prim.x)));
    let area_rational =
        is_perfect_square(&(&area_sq_16 / Rat::from_integer(16.into()))).is_some();
    Ok(TrianglePair {
        sides_x: sx.map(|v| v.to_integer()),
        sides_y: sy.map(|v| v.to_integer()),
        sixteen_area_sq: area_sq_16.to_integer(),
        primitive: true,
        area_rational,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, rat_int};
    use proptest::prelude::*;

    fn tri_rat(a: i64, b: i64, c: i64) -> [Rat; 3] {
        [rat_int(a), rat_int(b), rat_int(c)]
    }

    #[test]
    fn form_examples() {
        assert_eq!(octic_form(&tri_rat(1, 0, 0)), rat_int(1));
        assert_eq!(octic_form(&tri_rat(3, 4, 5)), rat_int(0));
        // derived: product of the four factor values (−888)(−6)(10664)(11546)
        let t = tri_rat(73, 76, 21);
        let f = octic_form_factors(&t);
        assert_eq!(
            f,
            [rat_int(-888), rat_int(-6), rat_int(10664), rat_int(11546)]
        );
        let product = f.iter().fold(rat_int(1), |acc, v| acc * v);
        assert_eq!(product, rat_int(656018226432));
        assert_eq!(octic_form(&t), rat_int(656018226432));
    }

    #[test]
    fn factor_examples() {
        assert_eq!(
            octic_form_factors(&tri_rat(1, 0, 0)),
            [rat_int(1), rat_int(1), rat_int(1), rat_int(1)]
        );
        assert_eq!(
            octic_form_factors(&tri_rat(3, 4, 5)),
            [rat_int(-32), rat_int(18), rat_int(0), rat_int(50)]
        );
    }

    #[test]
    fn area_examples() {
        assert_eq!(
            sixteen_area_sq(&rat_int(3), &rat_int(4), &rat_int(5)),
            rat_int(576)
        );
        assert_eq!(
            sixteen_area_sq(&rat_int(1), &rat_int(1), &rat_int(2)),
            rat_int(0)
        );
        // 16·Area² for the squared sides 63232², 71825², 76032²
        let s = [
            rat_int(63232) * rat_int(63232),
            rat_int(71825) * rat_int(71825),
            rat_int(76032) * rat_int(76032),
        ];
        let a16 = sixteen_area_sq(&s[0], &s[1], &s[2]);
        assert_eq!(
            a16.to_integer().to_string(),
            "1617508083022593897795364438996422549375"
        );
    }

    #[test]
    fn area_equals_negated_form_symbolically() {
        let vs = vars(&["x1", "x2", "x3"]);
        let x1 = MPoly::var(&vs, 0);
        let x2 = MPoly::var(&vs, 1);
        let x3 = MPoly::var(&vs, 2);
        let lhs = sixteen_area_sq(&x1.mul(&x1), &x2.mul(&x2), &x3.mul(&x3));
        let rhs = octic_form(&[x1, x2, x3]).neg();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn four_factor_split_symbolically() {
        let vs = vars(&["x1", "x2", "x3"]);
        let t = [MPoly::var(&vs, 0), MPoly::var(&vs, 1), MPoly::var(&vs, 2)];
        let factors = octic_form_factors(&t);
        let product = factors
            .iter()
            .fold(<MPoly as Ring>::one(), |acc, f| acc.mul(f));
        assert_eq!(product, octic_form(&t));
    }

    #[test]
    fn triangle_inequality_examples() {
        assert!(triangle_check(&rat_int(3), &rat_int(4), &rat_int(5)));
        assert!(!triangle_check(&rat_int(1), &rat_int(1), &rat_int(2)));
        // squared sides at sol2, t = 2: 73² + 21² < 76²
        assert!(!triangle_check(
            &rat_int(73 * 73),
            &rat_int(76 * 76),
            &rat_int(21 * 21)
        ));
    }

    #[test]
    fn sol1_values() {
        let s = solution_at(SolutionFamily::Sol1, &rat_int(4));
        assert_eq!(s.x, tri_rat(63232, 71825, 76032));
        assert_eq!(s.y, tri_rat(104593, 61776, 88400));
        assert!(s.holds());

        // t = 0 degenerates: first and third entries vanish
        let z = solution_at(SolutionFamily::Sol1, &rat_int(0));
        assert!(Zero::is_zero(&z.x[0]) && Zero::is_zero(&z.x[2]));
        assert_eq!(z.x[1], rat_int(81));
    }

    #[test]
    fn sol1_symbolic_identity() {
        assert!(sol1_poly().holds());
    }

    #[test]
    fn sol2_values() {
        let s = solution_at(SolutionFamily::Sol2, &rat_int(2));
        assert_eq!(s.x, tri_rat(146, 152, 42));
        assert_eq!(s.y, tri_rat(-28, 84, 76));
        assert!(s.holds());

        let p = scale_to_primitive(&s).unwrap();
        assert_eq!(p.x, tri_rat(73, 76, 21));
        assert_eq!(p.y, tri_rat(-14, 42, 38));

        let t1 = solution_at(SolutionFamily::Sol2, &rat_int(1));
        assert_eq!(t1.x, tri_rat(10, 13, 9));
        assert_eq!(t1.y, tri_rat(-10, 9, 13));
        assert!(is_trivial(&t1));
        assert!(!is_trivial(&s));
    }

    #[test]
    fn sol2_symbolic_identity() {
        assert!(sol2_poly().holds());
    }

    #[test]
    fn cbj_identity_and_values() {
        let f = cbj_fac1();
        assert!(f.holds());

        let at1 = f.eval(&rat_int(1));
        assert_eq!(
            at1,
            [
                rat_int(-2),
                rat_int(4),
                rat_int(-40),
                rat_int(48),
                rat_int(-128),
                rat_int(208)
            ]
        );
        let p4 = |v: &Rat| Ring::pow(v, 4);
        let lhs = (p4(&at1[0]) + p4(&at1[1])) * (p4(&at1[2]) + p4(&at1[3]));
        assert_eq!(lhs, rat_int(2140209152));
        assert_eq!(p4(&at1[4]) + p4(&at1[5]), rat_int(2140209152));

        let at0 = f.eval(&rat_int(0));
        assert_eq!(
            at0,
            [
                rat_int(-3),
                rat_int(0),
                rat_int(-27),
                rat_int(0),
                rat_int(0),
                rat_int(81)
            ]
        );
        assert_eq!(Ring::pow(&at0[5], 4), Ring::pow(&rat_int(81), 4));
    }

    #[test]
    fn sol1_is_the_substituted_product_solution() {
        let f = cbj_fac1();
        let s = substitute_pquv(&f.p, &f.q, &f.u, &f.v, &f.x1, &f.y1);
        assert_eq!(s, sol1_poly());
    }

    #[test]
    fn fac2_identity_and_values() {
        let f = choudhry_fac2();
        assert!(f.holds());

        let seed = f.eval(&rat_int(1), &rat_int(0));
        assert_eq!(
            seed,
            (rat_int(2), rat_int(0), rat_int(2), rat_int(0), rat_int(1))
        );

        let (x1, y1, u, v, h) = f.eval(&rat_int(1), &rat_int(1));
        assert_eq!(
            (x1.clone(), y1.clone(), u, v, h),
            (
                rat_int(10),
                rat_int(-10),
                rat_int(13),
                rat_int(9),
                rat_int(0)
            )
        );
        assert_eq!(Ring::pow(&x1, 4), Ring::pow(&y1, 4));
    }

    #[test]
    fn sol2_is_fac2_substituted_on_the_line() {
        let f = choudhry_fac2();
        let (x1, y1, u, v) = f.on_line();
        let t = UPoly::var();
        let one = UPoly::one();
        let sub = substitute_pquv(&t, &one, &u, &v, &x1, &y1);
        assert_eq!(sub, sol2_poly());
    }

    #[test]
    fn reduction_identity_holds_with_positive_sign() {
        let r = reduction_identity_check();
        assert_eq!(r.epsilon, 1);
        assert!(r.residual.is_zero());
    }

    #[test]
    fn reduction_identity_spot_values() {
        // both sides agree at the all-ones point and on a coincident pair
        let one = rat_int(1);
        let s = substitute_pquv(&one, &one, &one, &one, &one, &one);
        assert_eq!(octic_form(&s.x), octic_form(&s.y));

        let s2 = substitute_pquv(&rat_int(2), &rat_int(5), &rat_int(3), &rat_int(3), &rat_int(7), &rat_int(7));
        assert_eq!(octic_form(&s2.x), octic_form(&s2.y));
    }

    #[test]
    fn trivial_solutions() {
        let s = SolutionPair {
            x: tri_rat(1, 2, 3),
            y: tri_rat(3, -1, 2),
        };
        assert!(is_trivial(&s));
    }

    #[test]
    fn scaling_examples() {
        let s = solution_at(SolutionFamily::Sol2, &rat(3, 2));
        assert_eq!(s.x[0], rat(183, 4));
        assert_eq!(s.x[1], rat(201, 4));
        assert_eq!(s.x[2], rat(171, 8));
        assert_eq!(s.y[0], rat(-293, 16));
        let p = scale_to_primitive(&s).unwrap();
        assert_eq!(p.x, tri_rat(732, 804, 342));
        assert_eq!(p.y, tri_rat(-293, 513, 536));

        // already primitive stays put
        let q = scale_to_primitive(&p).unwrap();
        assert_eq!(q, p);

        // common factors come out
        let doubled = SolutionPair {
            x: tri_rat(2, 4, 6),
            y: tri_rat(4, 2, 6),
        };
        let r = scale_to_primitive(&doubled).unwrap();
        assert_eq!(r.x, tri_rat(1, 2, 3));

        let zero = SolutionPair {
            x: tri_rat(0, 0, 0),
            y: tri_rat(0, 0, 0),
        };
        assert!(matches!(
            scale_to_primitive(&zero),
            Err(OcticError::ZeroSolution)
        ));
    }

    #[test]
    fn triangle_pairs_from_both_families() {
        let t4 = triangle_pair(SolutionFamily::Sol1, &rat_int(4)).unwrap();
        assert_eq!(
            t4.roots_x(),
            [
                BigInt::from(63232),
                BigInt::from(71825),
                BigInt::from(76032)
            ]
        );
        assert_eq!(
            t4.roots_y(),
            [
                BigInt::from(104593),
                BigInt::from(61776),
                BigInt::from(88400)
            ]
        );
        assert_eq!(
            t4.sixteen_area_sq.to_string(),
            "1617508083022593897795364438996422549375"
        );
        assert!(!t4.area_rational);

        let t32 = triangle_pair(SolutionFamily::Sol2, &rat(3, 2)).unwrap();
        assert_eq!(
            t32.roots_x(),
            [BigInt::from(732), BigInt::from(804), BigInt::from(342)]
        );
        assert_eq!(
            t32.roots_y(),
            [BigInt::from(293), BigInt::from(513), BigInt::from(536)]
        );

        match triangle_pair(SolutionFamily::Sol2, &rat_int(2)) {
            Err(OcticError::NotATriangle { .. }) => {}
            other => panic!("expected a triangle-inequality rejection, got {other:?}"),
        }
        match triangle_pair(SolutionFamily::Sol1, &rat_int(0)) {
            Err(OcticError::Degenerate { .. }) => {}
            other => panic!("expected a degeneracy rejection, got {other:?}"),
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]
        #[test]
        fn families_solve_for_random_parameters(n in -40i64..40, d in 1i64..12) {
            let t = rat(n, d);
            prop_assert!(solution_at(SolutionFamily::Sol1, &t).holds());
            prop_assert!(solution_at(SolutionFamily::Sol2, &t).holds());
        }

        #[test]
        fn factor_product_matches_form(a in -30i64..30, b in -30i64..30, c in -30i64..30,
                                       d in 1i64..8) {
            let t = [rat(a, d), rat(b, d), rat(c, d)];
            let factors = octic_form_factors(&t);
            let product = factors.iter().fold(rat_int(1), |acc, f| acc * f);
            prop_assert_eq!(product, octic_form(&t));
        }

        #[test]
        fn form_is_homogeneous_of_degree_eight(a in -9i64..9, b in -9i64..9, c in -9i64..9,
                                               ln in -6i64..6, ld in 1i64..5) {
            prop_assume!(ln != 0);
            let lam = rat(ln, ld);
            let t = [rat_int(a), rat_int(b), rat_int(c)];
            let scaled = [&t[0] * &lam, &t[1] * &lam, &t[2] * &lam];
            prop_assert_eq!(octic_form(&scaled), octic_form(&t) * Ring::pow(&lam, 8));
        }

        #[test]
        fn substitution_cross_product_always(p in -9i64..9, q in -9i64..9,
                                             u in -9i64..9, v in -9i64..9) {
            let s = substitute_pquv(
                &rat_int(p), &rat_int(q), &rat_int(u), &rat_int(v),
                &rat_int(1), &rat_int(2),
            );
            prop_assert_eq!(&s.x[1] * &s.x[2], &s.y[1] * &s.y[2]);
        }
    }
}
