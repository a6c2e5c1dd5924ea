//! The quadratic form `q_t(x,y,z) = t x^2 + t y^2 + z^2` and its polar
//! bilinear form, the algebraic bedrock of every geometry in the family.
//!
//! For `t > 0` the unit set of `q_t` is an ellipsoid carrying the elliptic
//! plane, for `t < 0` a two-sheeted hyperboloid carrying the hyperbolic
//! plane, and at `t = 0` the form degenerates to `z^2`, whose unit set is the
//! pair of planes `z = +-1` carrying the Euclidean plane.

use crate::linalg::{Mat3, Vec3};
use crate::param::Param;

/// `q_t(v) = t (x^2 + y^2) + z^2`.
#[inline]
pub fn quad_form(p: Param, v: Vec3) -> f64 {
    p.t() * (v.x * v.x + v.y * v.y) + v.z * v.z
}

/// The symmetric bilinear form polarizing `q_t`:
/// `beta_t(u, v) = t (u_x v_x + u_y v_y) + u_z v_z`.
#[inline]
pub fn bilinear_form(p: Param, u: Vec3, v: Vec3) -> f64 {
    p.t() * (u.x * v.x + u.y * v.y) + u.z * v.z
}

/// Gram matrix of `q_t` in the fixed basis, `diag(t, t, 1)`.
pub fn gram(p: Param) -> Mat3 {
    Mat3::diagonal(p.t(), p.t(), 1.0)
}

/// `q_t(u) q_t(v) - beta_t(u, v)^2`, evaluated without the cancellation of
/// the direct expression.
///
/// Writing `m = u x v` (Euclidean cross product), the Lagrange-type identity
/// `m' adj(G_t) m = q_t(u) q_t(v) - beta_t(u,v)^2` holds with
/// `adj(G_t) = diag(t, t, t^2)`. For nearby unit vectors the cross product is
/// taken against the difference, `u x (v - u)`, which keeps every factor
/// small instead of subtracting two near-equal products.
pub fn cross_defect(p: Param, u: Vec3, v: Vec3) -> f64 {
    let m = u.cross(v - u); // equals u x v exactly in exact arithmetic
    let t = p.t();
    t * (m.x * m.x + m.y * m.y) + t * t * m.z * m.z
}
