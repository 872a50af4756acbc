//! Exact arithmetic for the octic form `x₁⁸+x₂⁸+x₃⁸−2x₁⁴x₂⁴−2x₁⁴x₃⁴−2x₂⁴x₃⁴`,
//! pairs of equiareal triangles whose sides are perfect squares, and the
//! rank-5 elliptic curve families attached to the parametric solutions.
//!
//! The crate is organised in four layers:
//!
//! * [`algebra`] — arbitrary-precision rationals, univariate polynomials over
//!   ℚ, rational functions in `t`, sparse multivariate polynomials, integer
//!   matrices with fraction-free determinants, integer factorization, and
//!   precision-tracked real numbers.
//! * [`octic`] — the octic form, its factorization, the parametric solution
//!   families, and equiareal squared-side triangle construction.
//! * [`elliptic`] — short Weierstrass curves and the exact group law over any
//!   exact field, the curve family `V² = U³ + 36∏hᵢ(t)·U`, its points and
//!   generators, and specialization.
//! * [`heights`] — Néron–Tate canonical heights, regulators, generator
//!   relation verification, and the squarefree-divisor specialization
//!   criterion.
//!
//! The `equiareal` binary exposes all of it behind `verify`, `triangles`,
//! `curve`, `regulator`, `generators`, `gtcheck` and `scan` subcommands; see
//! [`cli`]. Each major capability also has a runnable example under
//! `examples/`.

pub mod algebra;
pub mod cli;
pub mod elliptic;
pub mod heights;
pub mod octic;

pub use algebra::{Rat, Real};
