//! Internal angle bisectors and their concurrency.
//!
//! At each vertex the bisector direction is the sum of the unit tangents
//! towards the two other vertices. The three bisector geodesics of a
//! triangle meet in one point (the incenter) in every geometry of the
//! family; the check below quantifies how far the three pairwise
//! intersections are from doing so.

use crate::error::{Error, Result};
use crate::line::{intersect_lines, line_from_point_dir, Line};
use crate::metric::distance;
use crate::point::{tangent_metric_unchecked, ModelPoint};
use crate::triangle::Triangle;

/// The internal bisector geodesic at `vertex` of the angle spanned towards
/// `p` and `q`.
pub fn bisector_line(vertex: &ModelPoint, p: &ModelPoint, q: &ModelPoint) -> Result<Line> {
    let u = crate::metric::initial_tangent(vertex, p)?;
    let v = crate::metric::initial_tangent(vertex, q)?;
    let d = u + v;
    if tangent_metric_unchecked(vertex.param(), d, d) < 1e-20 {
        // straight angle: the two arcs are opposite
        return Err(Error::DegenerateTriangle("straight angle at a vertex".into()));
    }
    line_from_point_dir(vertex, d)
}

/// Maximum pairwise distance between the three intersection points of the
/// internal angle bisectors; zero means they are concurrent.
pub fn angle_bisector_concurrency_check(tr: &Triangle) -> Result<f64> {
    let [a, b, c] = tr.vertices();
    let la = bisector_line(a, b, c)?;
    let lb = bisector_line(b, c, a)?;
    let lc = bisector_line(c, a, b)?;
    let map = |e: Error| match e {
        Error::NoIntersection | Error::IdenticalLines => {
            Error::DegenerateTriangle("bisectors fail to intersect pairwise".into())
        }
        other => other,
    };
    let i_ab = intersect_lines(&la, &lb).map_err(map)?;
    let i_bc = intersect_lines(&lb, &lc).map_err(map)?;
    let i_ca = intersect_lines(&lc, &la).map_err(map)?;
    let d1 = distance(&i_ab, &i_bc).value();
    let d2 = distance(&i_bc, &i_ca).value();
    let d3 = distance(&i_ca, &i_ab).value();
    Ok(d1.max(d2).max(d3))
}
