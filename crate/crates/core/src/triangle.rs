//! Triangles of `E_t` and their measurements.
//!
//! A triangle is three pairwise distinct, linearly independent points; for
//! `t > 0` it is always the minor-arc triangle (every pairwise distance below
//! the elliptic diameter), which fixes the choice of connected component.
//! Measurement produces the six classical quantities plus area: by angle
//! excess over `t` for `t != 0` and by the coordinate cross product on the
//! flat slice.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Mat3, Vec3};
use crate::metric::{angle, distance};
use crate::param::Param;
use crate::point::{normalize_point, ModelPoint};

/// A non-degenerate triangle with vertices `A`, `B`, `C`.
#[derive(Debug, Clone, Copy)]
pub struct Triangle {
    param: Param,
    a: ModelPoint,
    b: ModelPoint,
    c: ModelPoint,
}

/// Sides, angles and area of a triangle. Sides are labeled opposite their
/// vertices (`a` faces `A`). Serializes to JSON with exactly the keys
/// `a, b, c, A, B, C, area, t`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TriangleMeasurements {
    #[serde(rename = "a")]
    pub side_a: f64,
    #[serde(rename = "b")]
    pub side_b: f64,
    #[serde(rename = "c")]
    pub side_c: f64,
    #[serde(rename = "A")]
    pub angle_a: f64,
    #[serde(rename = "B")]
    pub angle_b: f64,
    #[serde(rename = "C")]
    pub angle_c: f64,
    pub area: f64,
    pub t: f64,
}

impl Triangle {
    /// Validates non-degeneracy: vertices pairwise distinct as quotient
    /// points and representative vectors linearly independent. For `t > 0`
    /// pairwise distances never exceed the elliptic diameter (the arc taken
    /// is always the minor one, with a fixed convention at the boundary), so
    /// polar vertex pairs such as the octant triangle's are admitted.
    pub fn new(a: ModelPoint, b: ModelPoint, c: ModelPoint) -> Result<Triangle> {
        let p = a.param();
        assert!(p == b.param() && p == c.param(), "mixed geometries");
        for (u, v) in [(&a, &b), (&b, &c), (&c, &a)] {
            if u.approx_eq(v, 1e-10) {
                return Err(Error::DegenerateTriangle("coincident vertices".into()));
            }
        }
        let (ra, rb, rc) = (a.rep(), b.rep(), c.rep());
        let det = Mat3::from_rows([
            [ra.x, ra.y, ra.z],
            [rb.x, rb.y, rb.z],
            [rc.x, rc.y, rc.z],
        ])
        .det();
        if det.abs() <= 1e-10 {
            return Err(Error::DegenerateTriangle(format!(
                "vertices are collinear (det {det:e})"
            )));
        }
        Ok(Triangle { param: p, a, b, c })
    }

    #[inline]
    pub fn param(&self) -> Param {
        self.param
    }

    #[inline]
    pub fn a(&self) -> &ModelPoint {
        &self.a
    }

    #[inline]
    pub fn b(&self) -> &ModelPoint {
        &self.b
    }

    #[inline]
    pub fn c(&self) -> &ModelPoint {
        &self.c
    }

    pub fn vertices(&self) -> [&ModelPoint; 3] {
        [&self.a, &self.b, &self.c]
    }
}

/// Measures sides (geodesic distances), angles (between minor arcs) and area.
///
/// Area is `(A + B + C - pi) / t` for `t != 0` — the excess or defect over
/// the curvature — and the coordinate formula
/// `|cross of edge vectors| / 2` on the slice `z = 1` at `t = 0`.
pub fn measure(tr: &Triangle) -> Result<TriangleMeasurements> {
    let p = tr.param;
    let side_a = distance(&tr.b, &tr.c).value();
    let side_b = distance(&tr.c, &tr.a).value();
    let side_c = distance(&tr.a, &tr.b).value();
    let map_deg = |_| Error::DegenerateTriangle("angle at a degenerate vertex".into());
    let angle_a = angle(&tr.a, &tr.b, &tr.c).map_err(map_deg)?;
    let angle_b = angle(&tr.b, &tr.c, &tr.a).map_err(map_deg)?;
    let angle_c = angle(&tr.c, &tr.a, &tr.b).map_err(map_deg)?;
    let area = if p.is_zero() {
        let e1 = tr.b.rep() - tr.a.rep();
        let e2 = tr.c.rep() - tr.a.rep();
        0.5 * (e1.x * e2.y - e1.y * e2.x).abs()
    } else {
        (angle_a + angle_b + angle_c - std::f64::consts::PI) / p.t()
    };
    Ok(TriangleMeasurements {
        side_a,
        side_b,
        side_c,
        angle_a,
        angle_b,
        angle_c,
        area,
        t: p.t(),
    })
}

/// The coherent right-triangle family: vertices are the projections of the
/// rays `(0,0,1)`, `(x,0,1)` and `(0,y,1)`. The angle at the first vertex is
/// right for every `t` by the mirror symmetry swapping the two legs.
///
/// For `t < 0` the rays must lie inside the cone (`t x^2 + 1 > 0`), else
/// [`Error::OutsideCone`].
pub fn build_right_triangle(p: Param, x: f64, y: f64) -> Result<Triangle> {
    if x == 0.0 || y == 0.0 {
        return Err(Error::DegenerateTriangle("zero leg ray".into()));
    }
    let a = ModelPoint::apex(p);
    let b = normalize_point(p, Vec3::new(x, 0.0, 1.0))?;
    let c = normalize_point(p, Vec3::new(0.0, y, 1.0))?;
    Triangle::new(a, b, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn p(t: f64) -> Param {
        Param::new(t).unwrap()
    }

    fn pt(t: f64, x: f64, y: f64, z: f64) -> ModelPoint {
        normalize_point(p(t), Vec3::new(x, y, z)).unwrap()
    }

    #[test]
    fn octant_triangle() {
        let tr = Triangle::new(
            ModelPoint::apex(p(1.0)),
            pt(1.0, 1.0, 0.0, 0.0),
            pt(1.0, 0.0, 1.0, 0.0),
        )
        .unwrap();
        let m = measure(&tr).unwrap();
        for v in [m.side_a, m.side_b, m.side_c, m.angle_a, m.angle_b, m.angle_c] {
            assert!((v - FRAC_PI_2).abs() < 1e-12);
        }
        assert!((m.area - FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn flat_3_4_5_triangle() {
        let tr = Triangle::new(
            ModelPoint::apex(p(0.0)),
            pt(0.0, 3.0, 0.0, 1.0),
            pt(0.0, 0.0, 4.0, 1.0),
        )
        .unwrap();
        let m = measure(&tr).unwrap();
        assert!((m.side_a - 5.0).abs() < 1e-12); // opposite the right angle at A
        assert!((m.side_b - 4.0).abs() < 1e-12);
        assert!((m.side_c - 3.0).abs() < 1e-12);
        assert!((m.angle_a - FRAC_PI_2).abs() < 1e-12);
        assert!((m.angle_b - (4.0_f64 / 3.0).atan()).abs() < 1e-12);
        assert!((m.angle_c - (3.0_f64 / 4.0).atan()).abs() < 1e-12);
        assert!((m.area - 6.0).abs() < 1e-12);
        assert!((m.angle_a + m.angle_b + m.angle_c - PI).abs() < 1e-9);
    }

    #[test]
    fn right_family_hypotenuse_matches_closed_form() {
        // hypotenuse = arccos(1/(sqrt(t x^2 + 1) sqrt(t y^2 + 1))) / sqrt(t)
        let (x, y) = (0.8, 1.3);
        for t in [0.2, 0.6, 1.0] {
            let tr = build_right_triangle(p(t), x, y).unwrap();
            let m = measure(&tr).unwrap();
            let expect =
                (1.0 / ((t * x * x + 1.0).sqrt() * (t * y * y + 1.0).sqrt())).acos() / t.sqrt();
            assert!((m.side_a - expect).abs() <= 1e-10, "t={t}");
            let leg = (t.sqrt() * x).atan() / t.sqrt();
            assert!((m.side_c - leg).abs() <= 1e-10);
        }
    }

    #[test]
    fn right_family_has_right_angle_at_first_vertex() {
        for t in [-1.0, -0.5, 0.0, 0.5, 1.0] {
            let tr = build_right_triangle(p(t), 0.7, 0.9).unwrap();
            let m = measure(&tr).unwrap();
            assert!((m.angle_a - FRAC_PI_2).abs() < 1e-12, "t={t}");
        }
    }

    #[test]
    fn isoceles_symmetry() {
        for t in [-0.9, 0.0, 0.9] {
            let m = measure(&build_right_triangle(p(t), 1.0, 1.0).unwrap()).unwrap();
            assert!((m.side_b - m.side_c).abs() < 1e-14);
            assert!((m.angle_b - m.angle_c).abs() < 1e-14);
        }
    }

    #[test]
    fn large_legs_approach_the_polar_sides() {
        let m = measure(&build_right_triangle(p(1.0), 1e8, 1e8).unwrap()).unwrap();
        assert!((m.side_b - FRAC_PI_2).abs() < 1e-7);
        assert!((m.side_c - FRAC_PI_2).abs() < 1e-7);
    }

    #[test]
    fn excess_sign_matches_curvature_sign() {
        for t in [-1.0, -0.2, 0.2, 1.0] {
            let m = measure(&build_right_triangle(p(t), 0.9, 0.6).unwrap()).unwrap();
            let excess = m.angle_a + m.angle_b + m.angle_c - PI;
            assert!(excess.signum() == t.signum(), "t={t}, excess={excess}");
            assert!(m.area > 0.0);
            // area consistency of the excess convention
            assert!((m.area - excess / t).abs() < 1e-12);
        }
    }

    #[test]
    fn cone_violation_is_reported() {
        assert!(matches!(
            build_right_triangle(p(-1.0), 1.5, 0.5).unwrap_err(),
            Error::OutsideCone { .. }
        ));
    }

    #[test]
    fn degenerate_triangles_are_rejected() {
        let a = ModelPoint::apex(p(0.0));
        let b = pt(0.0, 1.0, 0.0, 1.0);
        let c = pt(0.0, 2.0, 0.0, 1.0); // collinear with a, b
        assert!(matches!(
            Triangle::new(a, b, c).unwrap_err(),
            Error::DegenerateTriangle(_)
        ));
        assert!(matches!(
            Triangle::new(a, b, b).unwrap_err(),
            Error::DegenerateTriangle(_)
        ));
        // a boundary (polar) pair is admitted: the octant corner
        let n = ModelPoint::apex(p(1.0));
        let e = pt(1.0, 1.0, 0.0, 0.0);
        let f = pt(1.0, 0.3, 0.4, 1.0);
        assert!(Triangle::new(n, e, f).is_ok());
    }

    #[test]
    fn measurements_serialize_with_documented_keys() {
        let m = measure(&build_right_triangle(p(0.5), 1.0, 2.0).unwrap()).unwrap();
        let v = serde_json::to_value(m).unwrap();
        let obj = v.as_object().unwrap();
        for key in ["a", "b", "c", "A", "B", "C", "area", "t"] {
            assert!(obj.contains_key(key), "missing key {key}");
        }
        assert_eq!(obj.len(), 8);
    }
}
