//! From octic solutions to elliptic curves: the curve `Y² = X³ + (form/4)·X`
//! with its five rational points, and the one-parameter family
//! `V² = U³ + 36∏hᵢ(t)·U` obtained from the second solution family by a
//! model rescaling, together with its five points, two closed-form
//! generators, and the reference specialization at `t = 2`.

use super::{specialize_point, Curve, EllipticError, Point};
use crate::algebra::rational::{rat_int, Rat};
use crate::algebra::{Field, RatFunc, Ring, UPoly};
use crate::octic::{octic_form, sol2_poly, SolutionPair};

/// Curve `Y² = X³ + (form/4)·X` attached to a solution pair, with the five
/// distinct points whose abscissae are `x₁²x₂², x₁²x₃², x₂²x₃², y₁²y₂²,
/// y₁²y₃²` (the sixth abscissa `y₂²y₃²` repeats `x₂²x₃²` because the
/// substitution construction forces `x₂x₃ = y₂y₃`).
pub fn curve_from_solution<K: Field>(
    s: &SolutionPair<K>,
) -> Result<(Curve<K>, [Point<K>; 5]), EllipticError> {
    let form = octic_form(&s.x);
    if form.is_zero() {
        return Err(EllipticError::Degenerate(
            "the octic form vanishes, so the quartic twist is singular".into(),
        ));
    }
    let quarter = K::from_rat(&crate::algebra::rational::rat(1, 4));
    let a4 = form.mul(&quarter);
    let curve = Curve::new(a4, K::zero())?;

    let half = K::from_rat(&crate::algebra::rational::rat(1, 2));
    // (a²b², ab(±a⁴±b⁴±c⁴)/2) with the sign pattern of the first coordinate
    // of the triple carried positive
    let point = |a: &K, b: &K, sum: K| -> Point<K> {
        let x = a.pow(2).mul(&b.pow(2));
        let y = a.mul(b).mul(&sum).mul(&half);
        Point::Affine(x, y)
    };
    let [x1, x2, x3] = &s.x;
    let [y1, y2, y3] = &s.y;
    let (q1, q2, q3) = (x1.pow(4), x2.pow(4), x3.pow(4));
    let (r1, r2, r3) = (y1.pow(4), y2.pow(4), y3.pow(4));
    let points = [
        point(x1, x2, q1.add(&q2).sub(&q3)),
        point(x1, x3, q1.sub(&q2).add(&q3)),
        point(x2, x3, q1.sub(&q2).sub(&q3)),
        point(y1, y2, r1.add(&r2).sub(&r3)),
        point(y1, y3, r1.sub(&r2).add(&r3)),
    ];
    for p in &points {
        if !curve.contains(p) {
            return Err(EllipticError::NotOnCurve {
                x: format!("{}", p.x().unwrap()),
                y: format!("{}", p.y().unwrap()),
            });
        }
    }
    Ok((curve, points))
}

fn up(coeffs: &[i64]) -> UPoly {
    UPoly::from_i64(coeffs)
}

/// The six quartics `h₁..h₆` whose product scaled by 36 is the family
/// coefficient `A₄(t)`.
pub fn family_quartics() -> [UPoly; 6] {
    [
        up(&[-2, 0, -3, 0, 1]),
        up(&[2, 0, 3, 0, 2]),
        up(&[-1, 0, 3, 0, 2]),
        up(&[4, 12, 15, 12, 4]),
        up(&[7, 12, 15, 12, 4]),
        up(&[4, 12, 15, 12, 7]),
    ]
}

/// `A₄(t) = 36·∏ hᵢ(t)`, a degree-24 integer polynomial.
pub fn family_a4_poly() -> UPoly {
    family_quartics()
        .iter()
        .fold(UPoly::constant(rat_int(36)), |acc, h| acc.mul(h))
}

/// Derive the model scaling `m(t)` with `(U, V) = (m²X, m³Y)` carrying
/// `Y² = X³ + (form/4)X` onto `V² = U³ + A₄(t)U`: the rational-function
/// fourth root of `A₄ / (form/4)`. `None` would mean the family data is
/// inconsistent.
pub fn model_scaling() -> Option<RatFunc> {
    let sol = sol2_ratfunc();
    let form = octic_form(&sol.x);
    let a4_target = RatFunc::from_poly(family_a4_poly());
    let quarter = RatFunc::from_rat(crate::algebra::rational::rat(1, 4));
    let ratio = a4_target.div(&form.mul(&quarter))?;
    ratio.fourth_root()
}

fn sol2_ratfunc() -> SolutionPair<RatFunc> {
    let s = sol2_poly();
    SolutionPair {
        x: s.x.map(RatFunc::from_poly),
        y: s.y.map(RatFunc::from_poly),
    }
}

/// The family `V² = U³ + 36∏hᵢ(t)·U` with its five points and the two
/// closed-form generators.
#[derive(Clone, Debug)]
pub struct CurveFamily {
    pub quartics: [UPoly; 6],
    pub a4_poly: UPoly,
    /// Model scaling `m(t)` applied as `(m²X, m³Y)`.
    pub m: RatFunc,
    pub points: [Point<RatFunc>; 5],
    pub g1: Point<RatFunc>,
    pub g2: Point<RatFunc>,
}

impl CurveFamily {
    pub fn new() -> Self {
        let quartics = family_quartics();
        let a4_poly = family_a4_poly();
        let m = model_scaling().expect("the family model scaling has a rational fourth root");
        let (_, raw_points) = curve_from_solution(&sol2_ratfunc())
            .expect("the generic solution gives a nonsingular curve");
        let m2 = m.mul(&m);
        let m3 = m2.mul(&m);
        let scale = |p: &Point<RatFunc>| match p {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => Point::Affine(m2.mul(x), m3.mul(y)),
        };
        let points = [
            scale(&raw_points[0]),
            scale(&raw_points[1]),
            scale(&raw_points[2]),
            scale(&raw_points[3]),
            scale(&raw_points[4]),
        ];

        let t2 = RatFunc::from_poly(up(&[0, 0, 1]));
        let t3 = RatFunc::from_poly(up(&[0, 0, 0, 1]));
        let t4 = RatFunc::from_poly(up(&[0, 0, 0, 0, 1]));
        let t6 = RatFunc::from_poly(up(&[0, 0, 0, 0, 0, 0, 1]));
        let h = |i: usize| RatFunc::from_poly(quartics[i].clone());
        let theta1 = RatFunc::from_poly(up(&[-4, -6, -3, -3, 2]));
        let theta2 = RatFunc::from_poly(up(&[
            -32, -144, -312, -492, -588, -522, -381, -183, -27, 27, 66, 12, 16,
        ]));
        let theta3 = RatFunc::from_poly(up(&[8, 12, 6, 3, -20, 3, 6, 12, 8]));

        let two = RatFunc::from_rat(rat_int(2));
        let four = RatFunc::from_rat(rat_int(4));
        // the ordinate is −4h₂h₆θ₁θ₂/t⁶: the doubling relation
        // 2G₁ = −P₃−P₄+P₅ determines the sign, and it is the negative of the
        // raw θ-product (the recorded fiber value at t = 2 agrees)
        let g1 = Point::Affine(
            two.mul(&h(1)).mul(&h(5)).mul(&theta1.pow(2)).div(&t4).unwrap(),
            four.mul(&h(1))
                .mul(&h(5))
                .mul(&theta1)
                .mul(&theta2)
                .div(&t6)
                .unwrap()
                .neg(),
        );
        let prod14 = h(0).mul(&h(1)).mul(&h(2)).mul(&h(3));
        let g2 = Point::Affine(
            four.mul(&prod14).div(&t2).unwrap(),
            four.mul(&prod14).mul(&theta3).div(&t3).unwrap(),
        );

        CurveFamily {
            quartics,
            a4_poly,
            m,
            points,
            g1,
            g2,
        }
    }

    /// The family curve over ℚ(t).
    pub fn curve(&self) -> Curve<RatFunc> {
        Curve {
            a4: RatFunc::from_poly(self.a4_poly.clone()),
            a6: RatFunc::zero(),
        }
    }

    /// Values `h₁(t₀)..h₆(t₀)`.
    pub fn quartic_values(&self, t0: &Rat) -> [Rat; 6] {
        [
            self.quartics[0].eval(t0),
            self.quartics[1].eval(t0),
            self.quartics[2].eval(t0),
            self.quartics[3].eval(t0),
            self.quartics[4].eval(t0),
            self.quartics[5].eval(t0),
        ]
    }

    /// Specialized coefficient `A₄(t₀)`, rejecting singular parameters with
    /// the vanishing quartic named.
    pub fn a4_at(&self, t0: &Rat) -> Result<Rat, EllipticError> {
        for (i, hv) in self.quartic_values(t0).iter().enumerate() {
            if hv.is_zero() {
                return Err(EllipticError::Singular {
                    at: format!("t = {}", t0),
                    what: format!("h{}(t) vanishes, so the specialized curve is singular", i + 1),
                });
            }
        }
        Ok(self.a4_poly.eval(t0))
    }

    pub fn curve_at(&self, t0: &Rat) -> Result<Curve<Rat>, EllipticError> {
        let a4 = self.a4_at(t0)?;
        Ok(Curve {
            a4,
            a6: Rat::zero(),
        })
    }

    pub fn points_at(&self, t0: &Rat) -> Result<[Point<Rat>; 5], EllipticError> {
        let curve = self.curve_at(t0)?;
        let mut out = Vec::with_capacity(5);
        for (i, p) in self.points.iter().enumerate() {
            let sp = specialize_point(p, t0, &format!("family point {}", i + 1))?;
            if !curve.contains(&sp) {
                return Err(EllipticError::NotOnCurve {
                    x: format!("{}", sp.x().unwrap()),
                    y: format!("{}", sp.y().unwrap()),
                });
            }
            out.push(sp);
        }
        Ok(out.try_into().expect("five points"))
    }

    pub fn generators_at(&self, t0: &Rat) -> Result<(Point<Rat>, Point<Rat>), EllipticError> {
        let curve = self.curve_at(t0)?;
        let g1 = specialize_point(&self.g1, t0, "generator 1")?;
        let g2 = specialize_point(&self.g2, t0, "generator 2")?;
        for g in [&g1, &g2] {
            if !curve.contains(g) {
                return Err(EllipticError::NotOnCurve {
                    x: format!("{}", g.x().unwrap()),
                    y: format!("{}", g.y().unwrap()),
                });
            }
        }
        Ok((g1, g2))
    }

    /// Specialize the whole curve (coefficient check included) at `t₀`.
    pub fn specialize(&self, t0: &Rat) -> Result<(Curve<Rat>, [Point<Rat>; 5]), EllipticError> {
        let curve = self.curve_at(t0)?;
        let points = self.points_at(t0)?;
        Ok((curve, points))
    }
}

impl Default for CurveFamily {
    fn default() -> Self {
        Self::new()
    }
}

/// The reference specialization `t = 2`: curve, the five specialized family
/// points, the five recorded generators, and the integer relation rows
/// expressing the points in the generators (plus the adjusted rows after the
/// basis repair `P₂+G₁+G₂, P₄+G₁+G₂, P₅+G₂`).
pub struct ReferenceFiber {
    pub t0: Rat,
    pub curve: Curve<Rat>,
    pub points: [Point<Rat>; 5],
    pub generators: [Point<Rat>; 5],
    pub relation_rows: Vec<Vec<i64>>,
    pub starred_rows: Vec<Vec<i64>>,
}

pub fn reference_fiber() -> ReferenceFiber {
    let pt = |x: &str, y: &str| -> Point<Rat> {
        Point::Affine(
            crate::algebra::parse_rat(x).unwrap(),
            crate::algebra::parse_rat(y).unwrap(),
        )
    };
    ReferenceFiber {
        t0: rat_int(2),
        curve: Curve {
            a4: rat_int(2624072905728),
            a6: Rat::zero(),
        },
        points: [
            pt("123121216", "1366271251712"),
            pt("9400356", "-29246291928"),
            pt("10188864", "-32931327744"),
            pt("1382976", "-2504823552"),
            pt("1132096", "2102770432"),
        ],
        generators: [
            pt("680800", "1449831680"),
            pt("981088", "1875840256"),
            pt("240126016/49", "3919014764288/343"),
            pt("55264356", "-411011675928"),
            pt("123121216", "-1366271251712"),
        ],
        relation_rows: vec![
            vec![0, 0, 0, 0, -1],
            vec![-2, -2, 1, 1, -1],
            vec![0, 0, -1, -1, 0],
            vec![-2, -2, 0, 1, -1],
            vec![0, -2, -1, 0, -1],
        ],
        starred_rows: vec![
            vec![0, 0, 0, 0, -1],
            vec![-1, -1, 1, 1, -1],
            vec![0, 0, -1, -1, 0],
            vec![-1, -1, 0, 1, -1],
            vec![0, -1, -1, 0, -1],
        ],
    }
}

/// Symbolic verification results for the family: point and generator
/// membership over ℚ(t) plus the two doubling relations.
pub fn family_symbolic_checks(fam: &CurveFamily) -> Vec<(String, bool)> {
    let curve = fam.curve();
    let mut out = Vec::new();
    for (i, p) in fam.points.iter().enumerate() {
        out.push((
            format!("family point {} lies on the curve over Q(t)", i + 1),
            curve.contains(p),
        ));
    }
    out.push((
        "generator 1 lies on the curve over Q(t)".into(),
        curve.contains(&fam.g1),
    ));
    out.push((
        "generator 2 lies on the curve over Q(t)".into(),
        curve.contains(&fam.g2),
    ));

    let lhs1 = curve.double(&fam.g1);
    let rhs1 = curve.linear_combination(&[-1, -1, 1], &fam.points[2..5]);
    out.push((
        "2·G1(t) = −P3(t) − P4(t) + P5(t) over Q(t)".into(),
        lhs1 == rhs1,
    ));

    let lhs2 = curve.double(&fam.g2);
    let rhs2 = curve.linear_combination(&[1, -1, 0, 1, -1], &fam.points);
    out.push((
        "2·G2(t) = P1(t) − P2(t) + P4(t) − P5(t) over Q(t)".into(),
        lhs2 == rhs2,
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use crate::octic::{solution_at, scale_to_primitive, SolutionFamily};

    #[test]
    fn quartic_values_at_two_and_one() {
        let fam = CurveFamily::new();
        let at2 = fam.quartic_values(&rat_int(2));
        assert_eq!(
            at2.map(|v| v),
            [
                rat_int(2),
                rat_int(46),
                rat_int(43),
                rat_int(248),
                rat_int(251),
                rat_int(296)
            ]
        );
        assert_eq!(fam.a4_at(&rat_int(2)).unwrap(), rat_int(2624072905728));
        assert_eq!(fam.a4_at(&rat_int(1)).unwrap(), rat_int(-473760000));
    }

    #[test]
    fn model_scaling_is_two_over_t_squared() {
        let m = model_scaling().unwrap();
        let expect = RatFunc::new(UPoly::from_i64(&[2]), UPoly::from_i64(&[0, 0, 1]));
        assert_eq!(m, expect);
        assert_eq!(m.eval(&rat_int(2)).unwrap(), rat(1, 2));
    }

    #[test]
    fn scaling_consistency_identity() {
        // m⁴ · form(sol2) = 144 ∏ hᵢ in ℚ(t)
        let fam = CurveFamily::new();
        let sol = sol2_ratfunc();
        let form = octic_form(&sol.x);
        let lhs = fam.m.pow(4).mul(&form);
        let rhs = RatFunc::from_poly(
            family_quartics()
                .iter()
                .fold(UPoly::constant(rat_int(144)), |acc, h| acc.mul(h)),
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn form_equals_scaled_quartic_product() {
        // 9t⁸·∏hᵢ(t) = form(sol2(t)) in ℚ[t]
        let s = sol2_poly();
        let lhs = family_quartics()
            .iter()
            .fold(UPoly::from_i64(&[0, 0, 0, 0, 0, 0, 0, 0, 9]), |acc, h| {
                acc.mul(h)
            });
        assert_eq!(lhs, octic_form(&s.x));
        // spot values
        assert_eq!(lhs.eval(&rat_int(1)), rat_int(-118440000));
        assert_eq!(lhs.eval(&rat_int(2)), rat_int(167940665966592));
    }

    #[test]
    fn specialized_points_at_two() {
        let fam = CurveFamily::new();
        let pts = fam.points_at(&rat_int(2)).unwrap();
        let reference = reference_fiber();
        assert_eq!(pts, reference.points);
    }

    #[test]
    fn generators_at_two_match_reference() {
        let fam = CurveFamily::new();
        let (g1, g2) = fam.generators_at(&rat_int(2)).unwrap();
        let reference = reference_fiber();
        assert_eq!(g1, reference.generators[0]);
        assert_eq!(g2, reference.generators[1]);
        // the raw θ-product ordinate is the negation of the stored one
        assert_eq!(
            g1.y().unwrap(),
            &(rat_int(851) * rat_int(20) * rat_int(85184))
        );
    }

    #[test]
    fn symbolic_family_checks_all_pass() {
        let fam = CurveFamily::new();
        for (name, ok) in family_symbolic_checks(&fam) {
            assert!(ok, "failed: {name}");
        }
    }

    #[test]
    fn curve_from_first_family_at_four() {
        let s = solution_at(SolutionFamily::Sol1, &rat_int(4));
        let (curve, pts) = curve_from_solution(&s).unwrap();
        assert_eq!(
            curve.a4,
            rat(1, 4)
                * crate::algebra::parse_rat("-1617508083022593897795364438996422549375").unwrap()
        );
        assert_eq!(
            pts[0],
            Point::Affine(
                crate::algebra::parse_rat("20626479356354560000").unwrap(),
                crate::algebra::parse_rat("20849350546566884379967280000").unwrap()
            )
        );
        for p in &pts {
            assert!(curve.contains(p));
        }
    }

    #[test]
    fn curve_from_primitive_sol2_at_two() {
        let s = scale_to_primitive(&solution_at(SolutionFamily::Sol2, &rat_int(2))).unwrap();
        let (curve, _) = curve_from_solution(&s).unwrap();
        assert_eq!(curve.a4, rat_int(164004556608));
    }

    #[test]
    fn degenerate_solution_rejected() {
        let s = SolutionPair {
            x: [rat_int(3), rat_int(4), rat_int(5)],
            y: [rat_int(3), rat_int(4), rat_int(5)],
        };
        assert!(matches!(
            curve_from_solution(&s),
            Err(EllipticError::Degenerate(_))
        ));
    }

    #[test]
    fn singular_specialization_names_the_quartic() {
        let fam = CurveFamily::new();
        // h₁..h₆ have no rational roots, so every rational t is fine for the
        // coefficient; the pole of m at t = 0 must be reported instead
        match fam.points_at(&rat_int(0)) {
            Err(EllipticError::Pole { what, .. }) => {
                assert!(what.contains("x-coordinate") || what.contains("y-coordinate"));
            }
            other => panic!("expected a pole error, got {other:?}"),
        }
    }

    #[test]
    fn specialization_commutes_with_addition() {
        let fam = CurveFamily::new();
        let curve_t = fam.curve();
        let sum_t = curve_t.add(&fam.points[0], &fam.points[1]);
        for t0 in [rat_int(2), rat_int(3), rat(5, 2)] {
            let curve = fam.curve_at(&t0).unwrap();
            let pts = fam.points_at(&t0).unwrap();
            let lhs = specialize_point(&sum_t, &t0, "sum").unwrap();
            let rhs = curve.add(&pts[0], &pts[1]);
            assert_eq!(lhs, rhs, "t = {t0}");
        }
    }

    #[test]
    fn reference_fiber_is_consistent() {
        let reference = reference_fiber();
        for p in reference.points.iter().chain(reference.generators.iter()) {
            assert!(reference.curve.contains(p), "{p} not on the curve");
        }
    }
}
