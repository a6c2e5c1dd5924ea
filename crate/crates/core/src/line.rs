//! Lines (geodesics) of `E_t` encoded by plane data.
//!
//! For `t != 0` a line is the trace on `S_t` of a plane through the origin;
//! the stored normal is the `beta_t`-normal of that plane, normalized to
//! `q_t = 1` for `t > 0` (this representative is the pole of the line) and
//! to `q_t = -1` for `t < 0`. At `t = 0` the stored vector `(n_x, n_y, -c)`
//! encodes the affine line `n_x x + n_y y = c` of the slice `z = 1`, with
//! `(n_x, n_y)` normalized to unit Euclidean norm.

use crate::error::{Error, Result};
use crate::form::{bilinear_form, gram, quad_form};
use crate::linalg::Vec3;
use crate::param::{Param, Sign};
use crate::point::{canonical_sign, normalize_point, ModelPoint};

/// A geodesic of `E_t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    param: Param,
    normal: Vec3,
}

impl Line {
    #[inline]
    pub fn param(&self) -> Param {
        self.param
    }

    /// The stored normal (see the module docs for its meaning per regime).
    #[inline]
    pub fn normal(&self) -> Vec3 {
        self.normal
    }

    /// The Euclidean normal of the defining plane through the origin:
    /// `G_t n` for `t != 0`, the stored vector itself at `t = 0` (where the
    /// plane through the origin is `{m . v = 0}` with `m = (n_x, n_y, -c)`).
    pub(crate) fn euclidean_normal(&self) -> Vec3 {
        match self.param.sign() {
            Sign::Zero => self.normal,
            _ => gram(self.param) * self.normal,
        }
    }

    /// Builds a line from the Euclidean normal `m` of a plane through the
    /// origin, normalizing and canonicalizing the stored representative.
    pub(crate) fn from_plane_normal(p: Param, m: Vec3) -> Result<Line> {
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        if m.norm() == 0.0 {
            return Err(Error::NullVector);
        }
        let normal = match p.sign() {
            Sign::Zero => {
                let plane = m.x.hypot(m.y);
                if plane == 0.0 {
                    // horizontal plane: misses the slice z = 1
                    return Err(Error::OutsideCone { t: 0.0, q: 0.0 });
                }
                canonical_sign(m * plane.recip())
            }
            _ => {
                let n = gram(p).inverse() * m;
                let q = quad_form(p, n);
                // t > 0: q > 0 always; t < 0: the plane cuts the upper sheet
                // only when its beta-normal is negative
                if p.is_negative() && q >= 0.0 {
                    return Err(Error::OutsideCone { t: p.t(), q });
                }
                canonical_sign(n * q.abs().sqrt().recip())
            }
        };
        Ok(Line { param: p, normal })
    }
}

/// The unique line through two distinct points.
pub fn line_through(a: &ModelPoint, b: &ModelPoint) -> Result<Line> {
    let p = a.param();
    assert!(p == b.param(), "points from different geometries");
    if a.approx_eq(b, 1e-12) {
        return Err(Error::CoincidentPoints);
    }
    Line::from_plane_normal(p, a.rep().cross(b.rep()))
}

/// The line through `at` with tangent direction `dir` (need not be unit).
pub fn line_from_point_dir(at: &ModelPoint, dir: Vec3) -> Result<Line> {
    let m = at.rep().cross(dir);
    if m.norm() < 1e-15 * at.rep().norm().max(1.0) * dir.norm().max(1e-300) {
        return Err(Error::NullVector);
    }
    Line::from_plane_normal(at.param(), m)
}

/// Incidence test: membership of `pt` on `l` within `tol`.
///
/// For `t != 0` the residual is `|beta_t(n, pt)|`; at `t = 0` it is the
/// normalized affine residual `|n_x x + n_y y - c| / |(n_x, n_y)|`.
pub fn on_line(l: &Line, pt: &ModelPoint, tol: f64) -> bool {
    assert!(l.param() == pt.param(), "mixed geometries");
    let r = match l.param.sign() {
        Sign::Zero => {
            let n = l.normal;
            let v = pt.rep();
            (n.x * v.x + n.y * v.y + n.z).abs() / n.x.hypot(n.y)
        }
        _ => bilinear_form(l.param, l.normal, pt.rep()).abs(),
    };
    r <= tol
}

/// Intersection point of two lines.
///
/// Computed as the cross product of the two plane normals, then projected to
/// the surface. Identical lines are an error; for `t <= 0` two lines may
/// fail to meet (parallels at `t = 0`, ultraparallels for `t < 0`), reported
/// as [`Error::NoIntersection`].
pub fn intersect_lines(a: &Line, b: &Line) -> Result<ModelPoint> {
    let p = a.param();
    assert!(p == b.param(), "mixed geometries");
    let m1 = a.euclidean_normal();
    let m2 = b.euclidean_normal();
    let v = m1.cross(m2);
    if v.norm() <= 1e-12 * m1.norm() * m2.norm() {
        return Err(Error::IdenticalLines);
    }
    match p.sign() {
        Sign::Zero => {
            if v.z.abs() <= 1e-12 * v.norm() {
                return Err(Error::NoIntersection);
            }
            normalize_point(p, v)
        }
        Sign::Negative => {
            if quad_form(p, v) <= 0.0 {
                return Err(Error::NoIntersection);
            }
            normalize_point(p, v)
        }
        Sign::Positive => normalize_point(p, v),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(t: f64) -> Param {
        Param::new(t).unwrap()
    }

    fn pt(t: f64, x: f64, y: f64, z: f64) -> ModelPoint {
        normalize_point(p(t), Vec3::new(x, y, z)).unwrap()
    }

    #[test]
    fn equator_through_two_axis_points() {
        let l = line_through(&pt(1.0, 1.0, 0.0, 0.0), &pt(1.0, 0.0, 1.0, 0.0)).unwrap();
        assert!((l.normal() - Vec3::new(0.0, 0.0, 1.0)).max_abs() < 1e-15);
        assert!(on_line(&l, &pt(1.0, 1.0, 0.0, 0.0), 1e-12));
        assert!(!on_line(&l, &ModelPoint::apex(p(1.0)), 1e-12));
    }

    #[test]
    fn euclidean_x_axis() {
        let l = line_through(&ModelPoint::apex(p(0.0)), &pt(0.0, 1.0, 0.0, 1.0)).unwrap();
        // the x axis of the slice: y = 0
        assert!(on_line(&l, &pt(0.0, 7.3, 0.0, 1.0), 1e-12));
        assert!(!on_line(&l, &pt(0.0, 0.0, 0.1, 1.0), 1e-3));
        assert!((l.normal().x.abs() - 0.0).abs() < 1e-15);
        assert!((l.normal().y.abs() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn hyperbolic_plane_y_zero() {
        let l = line_through(&ModelPoint::apex(p(-1.0)), &pt(-1.0, 0.75, 0.0, 1.25)).unwrap();
        assert!((l.normal() - Vec3::new(0.0, 1.0, 0.0)).max_abs() < 1e-15);
        // the whole geodesic stays on its plane
        let start = ModelPoint::apex(p(-1.0));
        let dir = Vec3::new(1.0, 0.0, 0.0);
        for s in [-2.0, -0.3, 0.9, 3.0] {
            let g = crate::metric::geodesic_point(&start, dir, s).unwrap();
            assert!(on_line(&l, &g, 1e-12));
        }
    }

    #[test]
    fn line_through_rejects_coincident_points() {
        let a = pt(0.5, 0.3, 0.4, 1.0);
        assert_eq!(line_through(&a, &a.clone()).unwrap_err(), Error::CoincidentPoints);
    }

    #[test]
    fn containment_of_defining_points() {
        for t in [-1.0, -0.3, 0.0, 0.6, 1.0] {
            let a = pt(t, 0.3, -0.5, 1.0);
            let b = pt(t, -0.2, 0.4, 1.0);
            let l = line_through(&a, &b).unwrap();
            assert!(on_line(&l, &a, 1e-12), "t={t}");
            assert!(on_line(&l, &b, 1e-12), "t={t}");
        }
    }

    #[test]
    fn normal_is_unit_for_elliptic_lines() {
        let l = line_through(&pt(0.25, 0.3, 0.1, 1.0), &pt(0.25, -0.4, 0.8, 1.0)).unwrap();
        assert!((quad_form(p(0.25), l.normal()) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn intersection_of_meridians() {
        let l1 = line_through(&ModelPoint::apex(p(1.0)), &pt(1.0, 1.0, 0.0, 0.0)).unwrap();
        let l2 = line_through(&ModelPoint::apex(p(1.0)), &pt(1.0, 0.0, 1.0, 0.0)).unwrap();
        let i = intersect_lines(&l1, &l2).unwrap();
        assert!(i.approx_eq(&ModelPoint::apex(p(1.0)), 1e-14));
    }

    #[test]
    fn identical_and_parallel_lines() {
        let a = pt(0.0, 0.0, 1.0, 1.0);
        let b = pt(0.0, 1.0, 1.0, 1.0);
        let l1 = line_through(&a, &b).unwrap();
        assert_eq!(intersect_lines(&l1, &l1.clone()).unwrap_err(), Error::IdenticalLines);
        // parallel distinct line y = 0
        let l2 = line_through(&ModelPoint::apex(p(0.0)), &pt(0.0, 1.0, 0.0, 1.0)).unwrap();
        assert_eq!(intersect_lines(&l1, &l2).unwrap_err(), Error::NoIntersection);
    }

    #[test]
    fn ultraparallel_hyperbolic_lines_do_not_meet() {
        // two lines perpendicular to the x axis at x = +-0.8 diverge
        let t = -1.0;
        let a1 = pt(t, 0.8, 0.0, 1.0);
        let a2 = pt(t, 0.8, 0.3, 1.0);
        let b1 = pt(t, -0.8, 0.0, 1.0);
        let b2 = pt(t, -0.8, 0.3, 1.0);
        let l1 = line_through(&a1, &a2).unwrap();
        let l2 = line_through(&b1, &b2).unwrap();
        assert_eq!(intersect_lines(&l1, &l2).unwrap_err(), Error::NoIntersection);
    }
}
