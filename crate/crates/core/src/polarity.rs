//! Elliptic polarity: the pole/equator duality between points and lines for
//! `t > 0`, and perpendicularity through it.
//!
//! The pole of a line is the point whose involution fixes the line globally
//! (and pointwise) without lying on it; concretely it is the `q_t`-unit
//! normal of the defining plane. Every point of the line sits at distance
//! `pi / (2 sqrt(t))` from the pole.

use crate::error::{Error, Result};
use crate::line::{on_line, Line};
use crate::param::Param;
use crate::point::{normalize_point, ModelPoint};

fn require_positive(p: Param) -> Result<()> {
    if p.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositiveParam { t: p.t() })
    }
}

/// The pole of a line (`t > 0` only).
pub fn pole(l: &Line) -> Result<ModelPoint> {
    require_positive(l.param())?;
    // the stored normal is already the q_t-unit, canonical representative
    normalize_point(l.param(), l.normal())
}

/// The equator of a point: the line whose pole it is (`t > 0` only).
pub fn equator(pt: &ModelPoint) -> Result<Line> {
    require_positive(pt.param())?;
    let l = Line::from_plane_normal(pt.param(), crate::form::gram(pt.param()) * pt.rep())?;
    Ok(l)
}

/// Perpendicularity via polarity: `l1` is perpendicular to `l2` when the
/// pole of `l1` lies on `l2` (`t > 0` only). The relation is symmetric;
/// the test suite checks both orders rather than assuming it.
pub fn perpendicular(l1: &Line, l2: &Line, tol: f64) -> Result<bool> {
    require_positive(l1.param())?;
    assert!(l1.param() == l2.param(), "mixed geometries");
    Ok(on_line(l2, &pole(l1)?, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::line::line_through;
    use crate::linalg::Vec3;
    use crate::metric::distance;

    fn p(t: f64) -> Param {
        Param::new(t).unwrap()
    }

    fn pt(t: f64, x: f64, y: f64, z: f64) -> ModelPoint {
        normalize_point(p(t), Vec3::new(x, y, z)).unwrap()
    }

    fn equator_line(t: f64) -> Line {
        line_through(&pt(t, 1.0, 0.0, 0.0), &pt(t, 0.0, 1.0, 0.0)).unwrap()
    }

    fn meridian_y0(t: f64) -> Line {
        line_through(&ModelPoint::apex(p(t)), &pt(t, 1.0, 0.0, 0.0)).unwrap()
    }

    #[test]
    fn pole_of_the_equator_is_the_apex() {
        let l = equator_line(1.0);
        assert!(pole(&l).unwrap().approx_eq(&ModelPoint::apex(p(1.0)), 1e-15));
    }

    #[test]
    fn pole_of_a_meridian() {
        // plane y = 0 has pole (0, 1, 0)
        let l = meridian_y0(1.0);
        assert!(pole(&l)
            .unwrap()
            .approx_eq(&pt(1.0, 0.0, 1.0, 0.0), 1e-15));
    }

    #[test]
    fn duality_round_trip() {
        let q = pt(1.0, 0.3, -0.5, 1.0);
        let back = pole(&equator(&q).unwrap()).unwrap();
        assert!(back.approx_eq(&q, 1e-13));
    }

    #[test]
    fn pole_equator_distance_normalization() {
        // at t = 4 the distance would be pi/4; within range, use t = 0.25 -> pi
        let t = 0.25;
        let l = equator_line(t);
        let n = pole(&l).unwrap();
        let on = pt(t, 1.0, 0.3, 0.0);
        assert!(crate::line::on_line(&l, &on, 1e-12));
        let expect = p(t).elliptic_diameter().unwrap();
        assert!((distance(&n, &on).value() - expect).abs() < 1e-12);
    }

    #[test]
    fn perpendicular_examples() {
        let t = 1.0;
        // planes x = 0 and y = 0
        let lx = line_through(&ModelPoint::apex(p(t)), &pt(t, 0.0, 1.0, 0.0)).unwrap();
        let ly = meridian_y0(t);
        assert!(perpendicular(&lx, &ly, 1e-12).unwrap());
        assert!(perpendicular(&ly, &lx, 1e-12).unwrap());

        // meridian and equator
        assert!(perpendicular(&equator_line(t), &ly, 1e-12).unwrap());

        // planes y = 0 and y = x are not perpendicular
        let diag = line_through(&ModelPoint::apex(p(t)), &pt(t, 1.0, 1.0, 0.0)).unwrap();
        assert!(!perpendicular(&ly, &diag, 1e-9).unwrap());
    }

    #[test]
    fn polarity_requires_positive_curvature() {
        let l = line_through(&ModelPoint::apex(p(-1.0)), &pt(-1.0, 0.5, 0.0, 1.0)).unwrap();
        assert!(matches!(
            pole(&l).unwrap_err(),
            Error::NonPositiveParam { .. }
        ));
        assert!(matches!(
            equator(&ModelPoint::apex(p(0.0))).unwrap_err(),
            Error::NonPositiveParam { .. }
        ));
    }
}
