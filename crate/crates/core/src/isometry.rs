//! The isometry group `I_t` and its distinguished elements.
//!
//! `I_t` is the identity component of the orthogonal group of `q_t`: matrices
//! `M` with `M' G_t M = G_t` and `det M = 1`. At `t = 0` the form degenerates
//! and the raw stabilizer condition admits the full unimodular affine group
//! of the slice; the members that arise as limits of isometry families are
//! exactly the orientation-preserving Euclidean motions (third row `(0,0,1)`,
//! rotation block upper-left), and the [`Isometry`] constructor enforces that
//! shape at `t = 0`.
//!
//! Three families are built explicitly:
//! - [`involution`]: the unique order-two element fixing a point, acting as
//!   `-Id` on its tangent plane;
//! - [`stabilizer_rotation`]: the circle group fixing a point, obtained by
//!   conjugating the apex rotation with a transporter;
//! - [`coherent_translation`]: the `q_t`-rotation in the `(x, z)` plane with
//!   entries analytic in `t`, restricting at `t = 0` to the Euclidean
//!   translation `x -> x + d`.

use crate::error::{Error, Result};
use crate::form::gram;
use crate::gentrig::{gen_arc, gen_cos, gen_sin};
use crate::linalg::{Mat3, Vec3};
use crate::param::Param;
use crate::point::ModelPoint;

/// Default tolerance for membership checks in `I_t`.
pub const ISOMETRY_TOL: f64 = 1e-10;

/// An element of `I_t`, validated on construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isometry {
    m: Mat3,
    param: Param,
}

/// Membership test for the orientation-preserving orthogonal group of `q_t`:
/// `M' G_t M = G_t` entrywise within `tol` and `det M` within `tol` of 1.
///
/// At `t = 0` this is the raw (degenerate-form) condition; it does not by
/// itself pin down a Euclidean motion. See [`Isometry::new`].
pub fn is_isometry(p: Param, m: &Mat3, tol: f64) -> bool {
    let g = gram(p);
    let residual = (m.transpose() * g * *m).max_abs_diff(&g);
    residual <= tol && (m.det() - 1.0).abs() <= tol
}

/// Residuals of the membership conditions: the entrywise gap of
/// `M' G_t M = G_t` and the gap of `det M = 1`.
pub fn isometry_residuals(p: Param, m: &Mat3) -> (f64, f64) {
    let g = gram(p);
    (
        (m.transpose() * g * *m).max_abs_diff(&g),
        (m.det() - 1.0).abs(),
    )
}

/// True when `m` has the Euclidean-motion shape: third row `(0, 0, 1)` and
/// an orthogonal upper-left block, within `tol`.
pub fn euclidean_shape(m: &Mat3, tol: f64) -> bool {
    let third_ok = m.at(2, 0).abs() <= tol && m.at(2, 1).abs() <= tol
        && (m.at(2, 2) - 1.0).abs() <= tol;
    let (a, b, c, d) = (m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1));
    let ortho_ok = (a * a + c * c - 1.0).abs() <= tol
        && (b * b + d * d - 1.0).abs() <= tol
        && (a * b + c * d).abs() <= tol;
    third_ok && ortho_ok
}

impl Isometry {
    /// Validates and wraps a matrix. At `t = 0` the Euclidean-motion shape is
    /// required on top of the degenerate-form conditions.
    pub fn new(p: Param, m: Mat3) -> Result<Isometry> {
        let (rq, rd) = isometry_residuals(p, &m);
        if rq > ISOMETRY_TOL || rd > ISOMETRY_TOL {
            return Err(Error::InvalidSides(format!(
                "matrix is not a q_t isometry (form residual {rq:e}, det residual {rd:e})"
            )));
        }
        if p.is_zero() && !euclidean_shape(&m, ISOMETRY_TOL) {
            return Err(Error::InvalidSides(
                "matrix does not restrict to a Euclidean motion at t = 0".into(),
            ));
        }
        Ok(Isometry { m, param: p })
    }

    /// Wraps a matrix known to satisfy the invariants by construction.
    pub(crate) fn trusted(p: Param, m: Mat3) -> Isometry {
        debug_assert!(is_isometry(p, &m, 1e-9));
        Isometry { m, param: p }
    }

    #[inline]
    pub fn matrix(&self) -> &Mat3 {
        &self.m
    }

    #[inline]
    pub fn param(&self) -> Param {
        self.param
    }

    pub fn identity(p: Param) -> Isometry {
        Isometry {
            m: Mat3::IDENTITY,
            param: p,
        }
    }

    /// Group law; both factors must act on the same geometry.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        assert!(self.param == other.param, "mixed geometries");
        Isometry {
            m: self.m * other.m,
            param: self.param,
        }
    }

    pub fn inverse(&self) -> Isometry {
        Isometry {
            m: self.m.inverse(),
            param: self.param,
        }
    }

    /// Image of a model point, re-normalized and canonicalized.
    pub fn apply(&self, pt: &ModelPoint) -> ModelPoint {
        assert!(self.param == pt.param(), "mixed geometries");
        ModelPoint::from_raw(self.param, self.m * pt.rep())
    }

    #[inline]
    pub fn apply_vec(&self, v: Vec3) -> Vec3 {
        self.m * v
    }
}

/// The point reflection `s_p(v) = 2 beta_t(v, p) p - v` (for `q_t(p) = 1`).
///
/// Fixes `p`, squares to the identity and restricts to `-Id` on the tangent
/// plane at `p`. At the apex it is `diag(-1, -1, 1)` for every `t`; at
/// `t = 0` it is the Euclidean point reflection through `(x(p), y(p))`.
pub fn involution(pt: &ModelPoint) -> Isometry {
    let p = pt.param();
    let v = pt.rep();
    let gv = gram(p) * v; // row vector of the rank-one piece
    let mut m = [[0.0; 3]; 3];
    let vc = [v.x, v.y, v.z];
    let gc = [gv.x, gv.y, gv.z];
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = 2.0 * vc[i] * gc[j] - if i == j { 1.0 } else { 0.0 };
        }
    }
    Isometry::trusted(p, Mat3::from_rows(m))
}

/// Rotation by `theta` about the apex `(0, 0, 1)`: the block rotation of the
/// `(x, y)` plane, an isometry of every `q_t`.
pub fn rotation_about_apex(p: Param, theta: f64) -> Isometry {
    let (s, c) = theta.sin_cos();
    Isometry::trusted(
        p,
        Mat3::from_rows([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]]),
    )
}

/// The analytic-in-`t` family through the Euclidean `x`-translation:
/// the `q_t`-rotation of the `(x, z)` plane by generalized angle `d`,
///
/// ```text
/// (x, y, z) -> (gen_cos(d) x + gen_sin(d) z,  y,  -t gen_sin(d) x + gen_cos(d) z)
/// ```
///
/// It lies in `I_t` for every `t` (determinant `gen_cos^2 + t gen_sin^2 = 1`),
/// equals `x -> x + d` at `t = 0`, and translates the apex by distance `|d|`
/// along the `x`-axis geodesic.
pub fn coherent_translation(d: f64, p: Param) -> Isometry {
    let gc = gen_cos(p, d);
    let gs = gen_sin(p, d);
    Isometry::trusted(
        p,
        Mat3::from_rows([
            [gc, 0.0, gs],
            [0.0, 1.0, 0.0],
            [-p.t() * gs, 0.0, gc],
        ]),
    )
}

/// An isometry carrying the apex to `pt`: a coherent translation along `x`
/// followed by a rotation about the apex. The apex itself gets the identity.
pub(crate) fn transporter_to(pt: &ModelPoint) -> Isometry {
    let p = pt.param();
    let v = pt.rep();
    let r = v.x.hypot(v.y);
    if r == 0.0 {
        return Isometry::identity(p);
    }
    let phi = v.y.atan2(v.x);
    let d = gen_arc(p, r, v.z);
    rotation_about_apex(p, phi).compose(&coherent_translation(d, p))
}

/// The one-parameter rotation group fixing `pt`, evaluated at angle `theta`:
/// the apex rotation conjugated by a transporter. At `theta = pi` it equals
/// `involution(pt)`.
pub fn stabilizer_rotation(pt: &ModelPoint, theta: f64) -> Isometry {
    let p = pt.param();
    let w = transporter_to(pt);
    // closed-form inverse: T(-d) R(-phi) reuses exact entries
    let w_inv = Isometry::trusted(p, w.matrix().inverse());
    w.compose(&rotation_about_apex(p, theta)).compose(&w_inv)
}

/// `n` equally spaced samples of the circle of center `center` through
/// `through`: the orbit of `through` under the stabilizer of `center`.
pub fn circle_orbit(
    center: &ModelPoint,
    through: &ModelPoint,
    n: usize,
) -> Result<Vec<ModelPoint>> {
    if center.approx_eq(through, 1e-12) {
        return Err(Error::CoincidentPoints);
    }
    let mut samples = Vec::with_capacity(n);
    for k in 0..n {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
        samples.push(stabilizer_rotation(center, theta).apply(through));
    }
    Ok(samples)
}

/// Orientation classification of the `t = 0` restriction is simplest through
/// the rotation block; geometry-level code mostly consumes this module via
/// the constructors above.
#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::distance;
    use crate::point::normalize_point;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn p(t: f64) -> Param {
        Param::new(t).unwrap()
    }

    fn pt(t: f64, x: f64, y: f64, z: f64) -> ModelPoint {
        normalize_point(p(t), Vec3::new(x, y, z)).unwrap()
    }

    #[test]
    fn is_isometry_examples() {
        for t in [-1.0, 0.0, 0.5, 1.0] {
            assert!(is_isometry(p(t), &Mat3::IDENTITY, 1e-12));
            let central = Mat3::diagonal(-1.0, -1.0, 1.0);
            assert!(is_isometry(p(t), &central, 1e-12));
        }
        let scale = Mat3::diagonal(2.0, 2.0, 1.0);
        assert!(!is_isometry(p(1.0), &scale, 1e-6));
    }

    #[test]
    fn constructor_enforces_euclidean_shape_at_zero() {
        // unit-determinant shear preserves the degenerate form but is not a motion
        let shear = Mat3::from_rows([[1.0, 0.5, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);
        assert!(is_isometry(p(0.0), &shear, 1e-12));
        assert!(Isometry::new(p(0.0), shear).is_err());
        let translation = Mat3::from_rows([[1.0, 0.0, 0.7], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);
        assert!(Isometry::new(p(0.0), translation).is_ok());
    }

    #[test]
    fn involution_at_the_apex() {
        for t in [-1.0, 0.0, 1.0] {
            let s = involution(&ModelPoint::apex(p(t)));
            assert!(s.matrix().max_abs_diff(&Mat3::diagonal(-1.0, -1.0, 1.0)) < 1e-15);
        }
    }

    #[test]
    fn involution_squares_to_identity_and_fixes_base() {
        for t in [-1.0, 0.0, 1.0] {
            for (x, y) in [(0.3, -0.2), (0.9, 0.1), (0.0, 0.55)] {
                let b = pt(t, x, y, 1.0);
                let s = involution(&b);
                let sq = s.compose(&s);
                assert!(sq.matrix().max_abs_diff(&Mat3::IDENTITY) < 1e-12);
                assert!(s.apply(&b).approx_eq(&b, 1e-12));
            }
        }
    }

    #[test]
    fn flat_involution_is_point_reflection() {
        let (a, b) = (0.4, -1.3);
        let s = involution(&pt(0.0, a, b, 1.0));
        let img = s.apply_vec(Vec3::new(2.0, 5.0, 1.0));
        assert!((img - Vec3::new(2.0 * a - 2.0, 2.0 * b - 5.0, 1.0)).max_abs() < 1e-14);
    }

    #[test]
    fn apex_stabilizer_is_the_block_rotation() {
        let theta = 1.234;
        let r = stabilizer_rotation(&ModelPoint::apex(p(0.5)), theta);
        let expect = rotation_about_apex(p(0.5), theta);
        assert!(r.matrix().max_abs_diff(expect.matrix()) < 1e-15);
    }

    #[test]
    fn stabilizer_at_pi_is_the_involution() {
        for t in [-1.0, -0.3, 0.0, 0.4, 1.0] {
            let b = pt(t, 0.5, -0.3, 1.0);
            let r = stabilizer_rotation(&b, PI);
            let s = involution(&b);
            assert!(
                r.matrix().max_abs_diff(s.matrix()) < 1e-12,
                "t={t}: {:?}",
                r.matrix().max_abs_diff(s.matrix())
            );
        }
    }

    #[test]
    fn stabilizer_is_a_homomorphism() {
        let b = pt(-0.8, 0.4, 0.2, 1.0);
        let (t1, t2) = (0.7, -1.9);
        let lhs = stabilizer_rotation(&b, t1).compose(&stabilizer_rotation(&b, t2));
        let rhs = stabilizer_rotation(&b, t1 + t2);
        assert!(lhs.matrix().max_abs_diff(rhs.matrix()) < 1e-12);
    }

    #[test]
    fn translation_matrix_shapes() {
        let m0 = coherent_translation(0.7, p(0.0));
        let expect = Mat3::from_rows([[1.0, 0.0, 0.7], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);
        assert!(m0.matrix().max_abs_diff(&expect) < 1e-15);

        let m1 = coherent_translation(FRAC_PI_2, p(1.0));
        let img = m1.apply(&ModelPoint::apex(p(1.0)));
        assert!(img.approx_eq(&pt(1.0, 1.0, 0.0, 0.001), 1e-9) || img.rep().x > 0.999);
    }

    #[test]
    fn translation_moves_apex_by_d() {
        let d = 0.7;
        for t in [-1.0, -0.1, 0.0, 0.1, 1.0] {
            let apex = ModelPoint::apex(p(t));
            let img = coherent_translation(d, p(t)).apply(&apex);
            assert!(
                (distance(&apex, &img).value() - d).abs() <= 1e-10,
                "t={t}"
            );
        }
    }

    #[test]
    fn circle_orbit_flat_square() {
        let c = ModelPoint::apex(p(0.0));
        let through = pt(0.0, 1.0, 0.0, 1.0);
        let orbit = circle_orbit(&c, &through, 4).unwrap();
        let expect = [
            Vec3::new(1.0, 0.0, 1.0),
            Vec3::new(0.0, 1.0, 1.0),
            Vec3::new(-1.0, 0.0, 1.0),
            Vec3::new(0.0, -1.0, 1.0),
        ];
        for (got, want) in orbit.iter().zip(expect) {
            assert!((got.rep() - want).max_abs() < 1e-13);
        }
    }

    #[test]
    fn orbit_of_the_polar_circle_is_the_equator() {
        // radius pi/2 orbit around the apex stays in z = 0
        let c = ModelPoint::apex(p(1.0));
        let through = pt(1.0, 1.0, 0.0, 0.0);
        for q in circle_orbit(&c, &through, 12).unwrap() {
            assert!(q.rep().z.abs() < 1e-12);
        }
    }

    #[test]
    fn orbit_is_equidistant() {
        for t in [-0.7, 0.0, 0.8] {
            let c = pt(t, 0.2, 0.3, 1.0);
            let through = pt(t, 0.9, -0.1, 1.0);
            let radius = distance(&c, &through).value();
            for q in circle_orbit(&c, &through, 17).unwrap() {
                assert!((distance(&c, &q).value() - radius).abs() <= 1e-10, "t={t}");
            }
        }
    }

    #[test]
    fn orbit_rejects_coincident_center() {
        let c = pt(0.3, 0.1, 0.1, 1.0);
        assert_eq!(
            circle_orbit(&c, &c.clone(), 8).unwrap_err(),
            Error::CoincidentPoints
        );
    }
}
