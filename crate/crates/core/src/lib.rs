//! A one-parameter family of constant-curvature plane geometries.
//!
//! For `t` in `[-1, 1]` the quadratic form `q_t(x, y, z) = t x^2 + t y^2 + z^2`
//! carves a model surface out of `R^3`: an ellipsoid for `t > 0` carrying the
//! elliptic plane, the planes `z = +-1` at `t = 0` carrying the Euclidean
//! plane, and a two-sheeted hyperboloid for `t < 0` carrying the hyperbolic
//! plane. With distances normalized by `1 / sqrt(|t|)`, every primitive of
//! the geometry — points, lines, distances, angles, isometries, involutions,
//! circles, triangles, trigonometric laws and areas — varies continuously in
//! `t` and restricts at `t = 0` to its Euclidean counterpart. The curvature
//! of `E_t` in these units is `t`.
//!
//! The crate provides:
//!
//! - [`form`], [`gentrig`], [`point`]: the quadratic-form kernel, the
//!   generalized trigonometric functions `gen_cos` / `gen_sin` that unify the
//!   circular and hyperbolic regimes, and the `q_t`-unit model points (with
//!   the antipodal quotient handled by canonical representatives);
//! - [`metric`], [`line`], [`polarity`], [`bisector`]: distances with
//!   numerically stable near-coincident evaluation, geodesics, angles, lines,
//!   elliptic pole/equator duality and angle-bisector concurrency;
//! - [`isometry`], [`coherence`]: the isometry groups of `q_t`, point
//!   involutions, stabilizer rotations, circle orbits, translations analytic
//!   in `t`, and the verification of coherent (analytic-in-`t`) families of
//!   matrices including their Euclidean limits;
//! - [`triangle`], [`trig`]: triangle construction and measurement, the
//!   right-triangle table, sine rule, Pythagorean identities and areas by
//!   angle excess and by the closed-form side-length formula;
//! - [`transition`]: sweeps over `t`, Richardson-extrapolated limits at
//!   `t -> 0`, Taylor-coefficient extraction and the scaled Pythagorean
//!   transition check;
//! - [`verify`]: a battery of runtime self-checks behind the CLI.

pub mod bisector;
pub mod coherence;
pub mod error;
pub mod form;
pub mod gentrig;
pub mod isometry;
pub mod line;
pub mod linalg;
pub mod metric;
mod numeric;
pub mod param;
pub mod point;
pub mod polarity;
pub mod transition;
pub mod triangle;
pub mod trig;
pub mod verify;

pub use error::{Error, Result};
pub use form::{bilinear_form, quad_form};
pub use gentrig::{gen_cos, gen_sin};
pub use isometry::{
    coherent_translation, circle_orbit, involution, is_isometry, stabilizer_rotation, Isometry,
};
pub use line::{intersect_lines, line_through, on_line, Line};
pub use linalg::{Mat3, Vec3};
pub use metric::{angle, angular_distance, distance, geodesic_point, LengthValue};
pub use param::{Param, Sign};
pub use point::{normalize_point, tangent_metric, ModelPoint};
pub use triangle::{build_right_triangle, measure, Triangle, TriangleMeasurements};
