use equiareal::algebra::rational::rat_int;
use equiareal::elliptic::{CurveFamily, Point};
fn main() {
    let fam = CurveFamily::new();
    let t0 = rat_int(2);
    let curve = fam.curve_at(&t0).unwrap();
    let pts = fam.points_at(&t0).unwrap();
    let (g1, g2) = fam.generators_at(&t0).unwrap();
    let two_g1 = curve.double(&g1);
    println!("2*G1(2)        = {}", two_g1);
    let rhs = curve.linear_combination(&[0, 0, -1, -1, 1], &pts);
    println!("-P3-P4+P5      = {}", rhs);
    let rhs_neg = curve.neg_point(&rhs);
    println!("match direct: {}, match negated: {}", two_g1 == rhs, two_g1 == rhs_neg);
    // torsion translate
    let t = Point::affine(rat_int(0), rat_int(0));
    let rhs_t = curve.add(&rhs, &t);
    println!("-P3-P4+P5+T    = {}", rhs_t);
    println!("match +T: {}", two_g1 == rhs_t);
    let _ = g2;
}
