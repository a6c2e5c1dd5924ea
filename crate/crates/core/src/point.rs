//! Points of the geometry `E_t`: unit vectors of `q_t` up to sign.
//!
//! A [`ModelPoint`] stores one canonical representative of the `Z_2` orbit
//! `{v, -v}` on the unit set `S_t = {q_t = 1}`. The canonical sign prefers
//! `z > 0`; on the slice `z = 0` (which occurs only for `t > 0`) it prefers
//! the first nonzero of `(x, y)` positive. For `t <= 0` every point has
//! `z >= 1`, so the representative set is exactly the upper sheet (`t < 0`)
//! or the plane `z = 1` (`t = 0`).

use crate::error::{Error, Result};
use crate::form::{bilinear_form, quad_form};
use crate::linalg::Vec3;
use crate::param::{Param, Sign};

/// Absolute tolerance on `beta_t(u, p)` below which `u` counts as tangent at
/// `p`. Inputs produced by the crate's own projections are accurate to about
/// 1e-12, leaving three orders of margin.
pub const TANGENCY_TOL: f64 = 1e-9;

/// A point of `E_t`: a `q_t`-normalized representative with canonical sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelPoint {
    rep: Vec3,
    param: Param,
}

/// Flips the sign so `z > 0`, or on `z = 0` so the first nonzero of `(x, y)`
/// is positive.
pub(crate) fn canonical_sign(v: Vec3) -> Vec3 {
    if v.z != 0.0 {
        if v.z > 0.0 {
            v
        } else {
            -v
        }
    } else if v.x != 0.0 {
        if v.x > 0.0 {
            v
        } else {
            -v
        }
    } else if v.y < 0.0 {
        -v
    } else {
        v
    }
}

/// Projects a ray onto the unit set `S_t` and canonicalizes the sign.
///
/// Fails with [`Error::NullVector`] on the zero vector and with
/// [`Error::OutsideCone`] when `q_t(v) <= 0`, i.e. the ray meets no point of
/// the geometry (for `t = 0` this is any vector with `z = 0`; for `t < 0`
/// any vector outside the light cone of `q_t`).
pub fn normalize_point(p: Param, v: Vec3) -> Result<ModelPoint> {
    if !v.is_finite() {
        return Err(Error::NonFinite);
    }
    if v.is_zero() {
        return Err(Error::NullVector);
    }
    let q = quad_form(p, v);
    if q <= 0.0 {
        return Err(Error::OutsideCone { t: p.t(), q });
    }
    let rep = canonical_sign(v * q.sqrt().recip());
    Ok(ModelPoint { rep, param: p })
}

impl ModelPoint {
    /// `(0, 0, 1)`, the point lying on every `S_t`.
    pub fn apex(p: Param) -> ModelPoint {
        ModelPoint {
            rep: Vec3::new(0.0, 0.0, 1.0),
            param: p,
        }
    }

    #[inline]
    pub fn rep(&self) -> Vec3 {
        self.rep
    }

    #[inline]
    pub fn param(&self) -> Param {
        self.param
    }

    /// Componentwise comparison of canonical representatives.
    pub fn approx_eq(&self, other: &ModelPoint, tol: f64) -> bool {
        self.param == other.param && (self.rep - other.rep).max_abs() <= tol
    }

    /// Rebuilds a point from an almost-normalized vector (for instance the
    /// image under an isometry), re-projecting to kill rounding drift.
    pub(crate) fn from_raw(p: Param, v: Vec3) -> ModelPoint {
        normalize_point(p, v).expect("image of a model point stays on the surface")
    }
}

/// Component of `w` tangent at `at`: `w - beta_t(w, p) p` (using `q_t(p) = 1`).
///
/// At `t = 0` this lands in the plane `z = 0`, the tangent plane of every
/// point of the slice `z = 1`.
pub fn project_to_tangent(at: &ModelPoint, w: Vec3) -> Vec3 {
    let b = bilinear_form(at.param(), w, at.rep());
    w - at.rep() * b
}

/// The Riemannian pairing on the tangent plane at `at`.
///
/// For `t != 0` this is `beta_t / t` restricted to `{w : beta_t(w, at) = 0}`;
/// at `t = 0` it is the plain Euclidean pairing of the `(x, y)` components.
/// The two agree on the common tangent plane `z = 0` of the apex, making the
/// metric continuous in `t` at fixed tangent data. Positive definite in every
/// regime.
pub fn tangent_metric(at: &ModelPoint, u: Vec3, v: Vec3) -> Result<f64> {
    let p = at.param();
    for w in [u, v] {
        let r = bilinear_form(p, w, at.rep()).abs();
        if r > TANGENCY_TOL {
            return Err(Error::NotTangent { residual: r });
        }
    }
    Ok(tangent_metric_unchecked(p, u, v))
}

/// The pairing without the tangency precondition check.
#[inline]
pub(crate) fn tangent_metric_unchecked(p: Param, u: Vec3, v: Vec3) -> f64 {
    match p.sign() {
        Sign::Zero => u.x * v.x + u.y * v.y,
        _ => bilinear_form(p, u, v) / p.t(),
    }
}

/// Projects `w` to the tangent plane at `at` and scales it to unit metric
/// norm. Fails with [`Error::NullVector`] when the projection vanishes
/// (i.e. `w` is proportional to the base point).
pub fn unit_tangent(at: &ModelPoint, w: Vec3) -> Result<Vec3> {
    let u = project_to_tangent(at, w);
    let g = tangent_metric_unchecked(at.param(), u, u);
    if g <= 1e-24 {
        return Err(Error::NullVector);
    }
    Ok(u * g.sqrt().recip())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(t: f64) -> Param {
        Param::new(t).unwrap()
    }

    #[test]
    fn scaling_on_the_round_sphere() {
        let pt = normalize_point(p(1.0), Vec3::new(2.0, 0.0, 0.0)).unwrap();
        assert!((pt.rep() - Vec3::new(1.0, 0.0, 0.0)).max_abs() < 1e-15);
    }

    #[test]
    fn spacelike_ray_is_rejected_hyperbolically() {
        let err = normalize_point(p(-1.0), Vec3::new(1.0, 0.0, 0.0)).unwrap_err();
        assert!(matches!(err, Error::OutsideCone { .. }));
    }

    #[test]
    fn hyperbolic_projection_value() {
        // q_{-1}(0.6, 0, 1) = 0.64, so the point is the ray divided by 0.8
        let pt = normalize_point(p(-1.0), Vec3::new(0.6, 0.0, 1.0)).unwrap();
        assert!((pt.rep() - Vec3::new(0.75, 0.0, 1.25)).max_abs() < 1e-15);
    }

    #[test]
    fn zero_vector_and_flat_horizontal_ray() {
        assert_eq!(
            normalize_point(p(0.3), Vec3::ZERO).unwrap_err(),
            Error::NullVector
        );
        // at t = 0 a vector with z = 0 has q_0 = 0: no point of the plane
        assert!(matches!(
            normalize_point(p(0.0), Vec3::new(1.0, 2.0, 0.0)).unwrap_err(),
            Error::OutsideCone { .. }
        ));
    }

    #[test]
    fn idempotent_and_sign_canonical() {
        for t in [-1.0, -0.2, 0.0, 0.4, 1.0] {
            let v = Vec3::new(0.3, -0.4, 1.0);
            let a = normalize_point(p(t), v).unwrap();
            let b = normalize_point(p(t), a.rep()).unwrap();
            let c = normalize_point(p(t), -v).unwrap();
            assert!(a.approx_eq(&b, 1e-15));
            assert!(a.approx_eq(&c, 1e-15));
        }
        // a z = 0 representative (only possible for t > 0) canonicalizes on x
        let e = normalize_point(p(1.0), Vec3::new(-2.0, 0.0, 0.0)).unwrap();
        assert!(e.rep().x > 0.0);
    }

    #[test]
    fn upper_sheet_for_nonpositive_t() {
        for t in [-1.0, -0.5, 0.0] {
            let pt = normalize_point(p(t), Vec3::new(0.2, 0.1, -1.0)).unwrap();
            assert!(pt.rep().z > 0.0);
        }
    }

    #[test]
    fn tangent_metric_examples() {
        let u = Vec3::new(1.0, 0.0, 0.0);
        let v = Vec3::new(0.0, 1.0, 0.0);
        for t in [-1.0, 0.0, 1.0] {
            let at = ModelPoint::apex(p(t));
            assert!((tangent_metric(&at, u, u).unwrap() - 1.0).abs() < 1e-15);
            assert_eq!(tangent_metric(&at, u, v).unwrap(), 0.0);
        }
    }

    #[test]
    fn tangency_precondition_is_enforced() {
        let at = ModelPoint::apex(p(1.0));
        let err = tangent_metric(&at, Vec3::new(0.0, 0.0, 0.5), Vec3::new(1.0, 0.0, 0.0));
        assert!(matches!(err.unwrap_err(), Error::NotTangent { .. }));
    }

    #[test]
    fn projection_is_tangent_and_positive() {
        for t in [-0.7, 0.0, 0.9] {
            let at = normalize_point(p(t), Vec3::new(0.4, -0.2, 1.0)).unwrap();
            let u = project_to_tangent(&at, Vec3::new(-0.3, 0.8, 0.6));
            let r = bilinear_form(p(t), u, at.rep()).abs();
            assert!(r < 1e-15);
            assert!(tangent_metric(&at, u, u).unwrap() > 0.0);
        }
    }
}
