//! Distance, geodesics and angles on `E_t`.
//!
//! For `t != 0` the angular distance between unit representatives is
//! `arccos(beta_t)` (elliptic, with `|beta_t|` implementing the antipodal
//! quotient) or `arccosh(beta_t)` (hyperbolic); dividing by `sqrt(|t|)` gives
//! the normalized distance `D_t`, the one whose `t -> 0` limit is the
//! Euclidean distance of the `z = 1` slice. In these units the pole-equator
//! distance for `t > 0` is `pi / (2 sqrt(t))` and the induced curvature is
//! `t`.
//!
//! Near-coincident points are the ill-conditioned case of the `arccos` /
//! `arccosh` forms (half the significant digits are lost as the argument
//! approaches 1), so within `1e-6` of 1 the implementation switches to an
//! `atan2` / `asinh` evaluation fed by [`cross_defect`], which computes
//! `1 - beta^2` without cancellation. On the ray configuration of the `z = 1`
//! slice the switched form reduces exactly to `arctan(sqrt(t) x)/sqrt(t)`.

use crate::error::{Error, Result};
use crate::form::{bilinear_form, cross_defect};
use crate::gentrig::{gen_cos, gen_sin};
use crate::linalg::Vec3;
use crate::param::Sign;
use crate::point::{project_to_tangent, tangent_metric_unchecked, ModelPoint, TANGENCY_TOL};

/// Relative distance of the arccos/arccosh argument from 1 below which the
/// stable evaluation path is used.
const STABLE_SWITCH: f64 = 1e-6;

/// A length in normalized `E_t` units (the units in which the pole-equator
/// distance is `pi / (2 sqrt(t))`). Always nonnegative; for `t > 0` bounded
/// by the elliptic diameter.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct LengthValue(f64);

impl LengthValue {
    pub fn new(value: f64) -> Result<LengthValue> {
        if !value.is_finite() {
            return Err(Error::NonFinite);
        }
        if value < 0.0 {
            return Err(Error::InvalidSides(format!("negative length {value}")));
        }
        Ok(LengthValue(value))
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }
}

impl From<LengthValue> for f64 {
    fn from(l: LengthValue) -> f64 {
        l.0
    }
}

fn lex_le(a: Vec3, b: Vec3) -> bool {
    (a.x, a.y, a.z) <= (b.x, b.y, b.z)
}

/// Unnormalized angle `w_t` between two points, `arccos` / `arccosh` of the
/// bilinear pairing. For `t > 0` the absolute value of the pairing is taken,
/// which is the antipodal quotient: the result lies in `[0, pi/2]`.
///
/// Undefined at `t = 0` ([`Error::ZeroParam`]); use [`distance`] there.
pub fn angular_distance(a: &ModelPoint, b: &ModelPoint) -> Result<f64> {
    let p = a.param();
    assert!(p == b.param(), "points from different geometries");
    match p.sign() {
        Sign::Zero => Err(Error::ZeroParam),
        _ => Ok(angular(a, b)),
    }
}

/// `w_t` for `t != 0`, computed order-independently (the two arguments are
/// sorted internally so the result is bitwise symmetric).
fn angular(a: &ModelPoint, b: &ModelPoint) -> f64 {
    let p = a.param();
    let (u, v) = if lex_le(a.rep(), b.rep()) {
        (a.rep(), b.rep())
    } else {
        (b.rep(), a.rep())
    };
    let beta = bilinear_form(p, u, v);
    match p.sign() {
        Sign::Positive => {
            // antipodal quotient: fold the pairing to [0, 1]
            let (v, beta) = if beta < 0.0 { (-v, -beta) } else { (v, beta) };
            let beta = beta.min(1.0);
            if beta > 1.0 - STABLE_SWITCH {
                let s2 = cross_defect(p, u, v).max(0.0); // = 1 - beta^2
                s2.sqrt().atan2(beta)
            } else {
                beta.acos()
            }
        }
        Sign::Negative => {
            // same-sheet representatives pair to >= 1
            let beta = beta.max(1.0);
            if beta < 1.0 + STABLE_SWITCH {
                let s2 = (-cross_defect(p, u, v)).max(0.0); // = beta^2 - 1
                s2.sqrt().asinh()
            } else {
                beta.acosh()
            }
        }
        Sign::Zero => unreachable!("angular() requires t != 0"),
    }
}

/// The distance `D_t` of the geometry, in normalized units.
///
/// For `t != 0` this is the angular distance divided by `sqrt(|t|)`; at
/// `t = 0` it is the Euclidean distance on the slice `z = 1`. Symmetric,
/// and zero exactly when the two quotient points coincide.
pub fn distance(a: &ModelPoint, b: &ModelPoint) -> LengthValue {
    let p = a.param();
    assert!(p == b.param(), "points from different geometries");
    let d = match p.sign() {
        Sign::Zero => {
            let dx = a.rep().x - b.rep().x;
            let dy = a.rep().y - b.rep().y;
            dx.hypot(dy)
        }
        _ => angular(a, b) / p.sqrt_abs(),
    };
    LengthValue(d)
}

/// Unit-speed geodesic through `start` with initial velocity `dir`:
/// `gen_cos(s) start + gen_sin(s) dir`, re-normalized.
///
/// `dir` must be tangent at `start` ([`Error::NotTangent`]) and of unit
/// metric norm ([`Error::NotUnitTangent`]). For `t > 0` the curve is
/// periodic with period `2 pi / sqrt(t)`; for `t <= 0` it is a ray realizing
/// `distance(start, .) = |s|`.
pub fn geodesic_point(start: &ModelPoint, dir: Vec3, s: f64) -> Result<ModelPoint> {
    let p = start.param();
    let tangency = bilinear_form(p, dir, start.rep()).abs();
    if tangency > TANGENCY_TOL {
        return Err(Error::NotTangent { residual: tangency });
    }
    let g = tangent_metric_unchecked(p, dir, dir);
    if (g - 1.0).abs() > TANGENCY_TOL {
        return Err(Error::NotUnitTangent { norm: g });
    }
    let v = start.rep() * gen_cos(p, s) + dir * gen_sin(p, s);
    Ok(ModelPoint::from_raw(p, v))
}

/// Initial unit tangent at `vertex` of the minor geodesic arc towards
/// `target`. For `t > 0` the representative of `target` is sign-flipped when
/// needed so the shorter of the two arcs is taken.
pub(crate) fn initial_tangent(vertex: &ModelPoint, target: &ModelPoint) -> Result<Vec3> {
    let p = vertex.param();
    let mut w = target.rep();
    if p.is_positive() && bilinear_form(p, w, vertex.rep()) < 0.0 {
        w = -w;
    }
    let u = project_to_tangent(vertex, w);
    let g = tangent_metric_unchecked(p, u, u);
    if g <= 1e-24 {
        return Err(Error::CoincidentWithVertex);
    }
    Ok(u * g.sqrt().recip())
}

/// Angle at `vertex` between the minor geodesic arcs towards `p` and `q`,
/// in `[0, pi]`.
///
/// Computed from the initial tangents with the half-angle form
/// `2 atan2(|u - v|_g, |u + v|_g)`, which is well-conditioned at both ends
/// of the range.
pub fn angle(vertex: &ModelPoint, p: &ModelPoint, q: &ModelPoint) -> Result<f64> {
    let par = vertex.param();
    assert!(
        par == p.param() && par == q.param(),
        "points from different geometries"
    );
    let u = initial_tangent(vertex, p)?;
    let v = initial_tangent(vertex, q)?;
    let diff = tangent_metric_unchecked(par, u - v, u - v).max(0.0).sqrt();
    let sum = tangent_metric_unchecked(par, u + v, u + v).max(0.0).sqrt();
    Ok(2.0 * diff.atan2(sum))
}
