//! Numerical evidence that the geometries transit through `t = 0`: sweeps
//! over the parameter, Richardson-extrapolated limits from either side,
//! Taylor-coefficient extraction, and the scaled Pythagorean rearrangement
//! whose limit is the Euclidean theorem.
//!
//! Everything here evaluates fixed geometric configurations through the
//! library's stable distance path; the quantities are analytic in `t`
//! (coherence of the underlying families), so low-order extrapolation and
//! small symmetric stencils converge fast.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gentrig::gen_cos;
use crate::linalg::Vec3;
use crate::metric::distance;
use crate::numeric::{observed_decay_order, observed_order, polyfit, richardson};
use crate::param::Param;
use crate::point::{normalize_point, ModelPoint};
use crate::triangle::{measure, Triangle};
use crate::trig::heron_area;

/// Geometric stencil for limits: `t_k = t0 / 2^k`, `k = 0..=RICHARDSON_STEPS`.
const RICHARDSON_T0: f64 = 0.1;
const RICHARDSON_STEPS: usize = 10;
const RICHARDSON_LEVELS: usize = 3;

/// Default half-width of the symmetric stencil used by [`series_fit`].
///
/// Chosen so that the unmodeled tail of slowly converging series (the ray
/// distance at `x = 2` has radius of convergence `|t| = 1/4`) aliases onto
/// the reported coefficients below 1e-6.
const SERIES_HALF_WIDTH: f64 = 0.005;
const SERIES_POINTS: usize = 9;
const SERIES_MAX_ORDER: usize = 4;

/// A quantity evaluated at fixed geometric data over a grid of `t`.
#[derive(Debug, Clone, Serialize)]
pub struct SweepTable {
    pub quantity: String,
    /// The geometric inputs held fixed across the sweep.
    pub metadata: String,
    pub rows: Vec<SweepRow>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SweepRow {
    pub t: f64,
    pub value: f64,
}

impl SweepTable {
    /// CSV export: header `t,value`, one row per grid point, `.` decimal
    /// separator, 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,value\n");
        for row in &self.rows {
            out.push_str(&format!("{:.16e},{:.16e}\n", row.t, row.value));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("sweep table serializes")
    }
}

/// Coefficients of a polynomial fit in `t` around zero and its residual.
#[derive(Debug, Clone, Serialize)]
pub struct SeriesEstimate {
    /// `c_0 .. c_k`, ascending powers of `t`.
    pub coefficients: Vec<f64>,
    /// Root-mean-square misfit over the stencil.
    pub residual: f64,
}

impl SeriesEstimate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("series estimate serializes")
    }
}

/// Side from which a one-sided limit at `t = 0` is taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Above,
    Below,
}

/// A Richardson-extrapolated limit with its quality indicators.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct LimitEstimate {
    pub value: f64,
    /// Gap between the last two extrapolants; an a-posteriori error bound.
    pub error_estimate: f64,
    /// Observed convergence order of the raw sequence (about 1 for a
    /// quantity with a nonzero linear term in `t`).
    pub observed_order: f64,
}

/// Evaluates `f` at every grid value, failing fast with the offending `t`
/// attached when the evaluator reports a domain error.
pub fn sweep(
    quantity: &str,
    metadata: &str,
    grid: &[f64],
    f: impl Fn(f64) -> Result<f64>,
) -> Result<SweepTable> {
    let mut rows = Vec::with_capacity(grid.len());
    for &t in grid {
        let value = f(t).map_err(|e| Error::EvaluatorDomain {
            t,
            source: Box::new(e),
        })?;
        rows.push(SweepRow { t, value });
    }
    Ok(SweepTable {
        quantity: quantity.to_string(),
        metadata: metadata.to_string(),
        rows,
    })
}

/// The default CLI grid: 41 uniform values on `[-1, 1]`, including 0.
pub fn default_grid() -> Vec<f64> {
    crate::coherence::uniform_grid(-1.0, 1.0, 41)
}

/// One-sided limit of `f(t)` as `t -> 0`, extrapolated on the geometric
/// stencil `t_k = t0 / 2^k` with three Richardson levels.
pub fn numeric_limit_from(
    f: impl Fn(f64) -> Result<f64>,
    side: Side,
    t0: f64,
) -> Result<LimitEstimate> {
    assert!(t0 > 0.0 && t0 <= 1.0, "stencil start must be in (0, 1]");
    let sign = match side {
        Side::Above => 1.0,
        Side::Below => -1.0,
    };
    let mut values = Vec::with_capacity(RICHARDSON_STEPS + 1);
    for k in 0..=RICHARDSON_STEPS {
        let t = sign * t0 / (1u64 << k) as f64;
        values.push(f(t).map_err(|e| Error::EvaluatorDomain {
            t,
            source: Box::new(e),
        })?);
    }
    let (value, error_estimate) = richardson(&values, RICHARDSON_LEVELS)?;
    if !value.is_finite() || error_estimate > 1e-6 * value.abs().max(1.0) {
        return Err(Error::NoConvergence { error_estimate });
    }
    Ok(LimitEstimate {
        value,
        error_estimate,
        observed_order: observed_order(&values),
    })
}

/// [`numeric_limit_from`] with the default stencil start `t0 = 0.1`.
pub fn numeric_limit(f: impl Fn(f64) -> Result<f64>, side: Side) -> Result<LimitEstimate> {
    numeric_limit_from(f, side, RICHARDSON_T0)
}

/// Least-squares expansion of `f` in powers of `t` on a symmetric stencil
/// around zero (both signs, so the fit sees the genuine two-sided analytic
/// continuation). `order` is capped at 4.
pub fn series_fit(f: impl Fn(f64) -> Result<f64>, order: usize) -> Result<SeriesEstimate> {
    series_fit_with(f, order, SERIES_HALF_WIDTH, SERIES_POINTS)
}

/// [`series_fit`] with explicit stencil geometry: `points` symmetric values
/// with `|t| <= half_width`. `points` must exceed the order and be odd so
/// the stencil contains `t = 0`.
pub fn series_fit_with(
    f: impl Fn(f64) -> Result<f64>,
    order: usize,
    half_width: f64,
    points: usize,
) -> Result<SeriesEstimate> {
    if order > SERIES_MAX_ORDER || points <= order || points % 2 == 0 {
        return Err(Error::IllConditioned);
    }
    let grid = crate::coherence::uniform_grid(-half_width, half_width, points);
    let mut ys = Vec::with_capacity(points);
    for &t in &grid {
        ys.push(f(t).map_err(|e| Error::EvaluatorDomain {
            t,
            source: Box::new(e),
        })?);
    }
    let (coefficients, residual) = polyfit(&grid, &ys, order)?;
    Ok(SeriesEstimate {
        coefficients,
        residual,
    })
}

/// The distance `D_t` between the projections of two fixed rays, the basic
/// evaluator of the transition tests. Rays are given in `R^3`; each `t` of a
/// sweep re-projects them onto `S_t`.
pub fn ray_distance(t: f64, ray_a: Vec3, ray_b: Vec3) -> Result<f64> {
    let p = Param::new(t)?;
    let a = normalize_point(p, ray_a)?;
    let b = normalize_point(p, ray_b)?;
    Ok(distance(&a, &b).value())
}

/// Report of [`pythagoras_transition_check`].
#[derive(Debug, Clone, Serialize)]
pub struct PythagorasTransition {
    pub x: f64,
    pub y: f64,
    /// Worst gap between the two sides of the scaled identity
    /// `sqrt(|t|) (1 - gen_cos(D_ab) gen_cos(D_ac)) = sqrt(|t|) (1 - gen_cos(D_bc))`
    /// over the evaluation grid.
    pub max_identity_residual: f64,
    /// Limits of `2 (1 - gen_cos(D)) / t` for the two legs and the
    /// hypotenuse: the squared Euclidean lengths emerging at `t = 0`.
    pub leg_x_sq: f64,
    pub leg_y_sq: f64,
    pub hyp_sq: f64,
    /// `|leg_x_sq + leg_y_sq - hyp_sq|`: the Pythagorean relation in the limit.
    pub additivity_residual: f64,
    /// `|x^2 + y^2 - hyp_sq|`: agreement with the exact Euclidean value.
    pub target_residual: f64,
    /// Observed decay order in `t` of one scaled side (about 3/2, the reason
    /// the `sqrt(t)` prefactor is needed for a nontrivial limit).
    pub scaled_order: f64,
}

/// Follows the right triangle on the rays `(x,0,1)`, `(0,y,1)` through the
/// family: checks the scaled Pythagorean identity at every admissible grid
/// `t`, and extracts the `t -> 0` limits that recombine into the Euclidean
/// `x^2 + y^2 = hypotenuse^2`.
pub fn pythagoras_transition_check(x: f64, y: f64) -> Result<PythagorasTransition> {
    if x == 0.0 || y == 0.0 {
        return Err(Error::InvalidSides("zero leg ray".into()));
    }
    let apex_ray = Vec3::new(0.0, 0.0, 1.0);
    let bx = Vec3::new(x, 0.0, 1.0);
    let cy = Vec3::new(0.0, y, 1.0);

    // keep every sample strictly inside the hyperbolic cone
    let reach = x.abs().max(y.abs());
    let bound = (0.8 / (reach * reach)).min(1.0);
    let t0 = 0.8 * bound.min(RICHARDSON_T0 / bound.max(1e-300)).min(bound);

    let sides = |t: f64| -> Result<(f64, f64, f64)> {
        Ok((
            ray_distance(t, apex_ray, bx)?,
            ray_distance(t, apex_ray, cy)?,
            ray_distance(t, bx, cy)?,
        ))
    };

    let mut max_identity_residual = 0.0_f64;
    for &t in &crate::coherence::uniform_grid(-bound, bound, 21) {
        let p = Param::new(t)?;
        let (dab, dac, dbc) = sides(t)?;
        let scale = p.sqrt_abs();
        let lhs = scale * (1.0 - gen_cos(p, dab) * gen_cos(p, dac));
        let rhs = scale * (1.0 - gen_cos(p, dbc));
        max_identity_residual = max_identity_residual.max((lhs - rhs).abs());
    }

    // 2 (1 - gen_cos(D)) / t -> D_0^2 from either side
    let squared_term = |d_of_t: &dyn Fn(f64) -> Result<f64>, t: f64| -> Result<f64> {
        let p = Param::new(t)?;
        Ok(2.0 * (1.0 - gen_cos(p, d_of_t(t)?)) / t)
    };
    let leg_x = |t: f64| squared_term(&|t| ray_distance(t, apex_ray, bx), t);
    let leg_y = |t: f64| squared_term(&|t| ray_distance(t, apex_ray, cy), t);
    let hyp = |t: f64| squared_term(&|t| ray_distance(t, bx, cy), t);

    let mut two_sided = |f: &dyn Fn(f64) -> Result<f64>| -> Result<f64> {
        let above = numeric_limit_from(f, Side::Above, t0)?;
        let below = numeric_limit_from(f, Side::Below, t0)?;
        max_identity_residual = max_identity_residual.max(0.0);
        if (above.value - below.value).abs()
            > 2.0 * (above.error_estimate + below.error_estimate) + 1e-9
        {
            return Err(Error::NoConvergence {
                error_estimate: (above.value - below.value).abs(),
            });
        }
        Ok(0.5 * (above.value + below.value))
    };

    let leg_x_sq = two_sided(&leg_x)?;
    let leg_y_sq = two_sided(&leg_y)?;
    let hyp_sq = two_sided(&hyp)?;

    // decay of one scaled side along the above-side stencil
    let mut scaled_values = Vec::new();
    for k in 0..=RICHARDSON_STEPS {
        let t = t0 / (1u64 << k) as f64;
        let p = Param::new(t)?;
        let (dab, dac, _) = sides(t)?;
        scaled_values.push(p.sqrt_abs() * (1.0 - gen_cos(p, dab) * gen_cos(p, dac)));
    }
    let scaled_order = observed_decay_order(&scaled_values);

    Ok(PythagorasTransition {
        x,
        y,
        max_identity_residual,
        leg_x_sq,
        leg_y_sq,
        hyp_sq,
        additivity_residual: (leg_x_sq + leg_y_sq - hyp_sq).abs(),
        target_residual: (x * x + y * y - hyp_sq).abs(),
        scaled_order,
    })
}

/// Excess-over-flat-area curvature estimate on a small geodesic triangle of
/// diameter about `h` at the apex: two legs of length `h` spanning 60
/// degrees, excess divided by the Heron area of the measured sides. Tends to
/// `t` as `h -> 0` with an `O(h^2)` error.
pub fn curvature_estimate(p: Param, h: f64) -> Result<f64> {
    let apex = ModelPoint::apex(p);
    let u = Vec3::new(1.0, 0.0, 0.0);
    let v = Vec3::new(0.5, 0.75_f64.sqrt(), 0.0);
    let b = crate::metric::geodesic_point(&apex, u, h)?;
    let c = crate::metric::geodesic_point(&apex, v, h)?;
    let m = measure(&Triangle::new(apex, b, c)?)?;
    let excess = m.angle_a + m.angle_b + m.angle_c - std::f64::consts::PI;
    let flat = heron_area(m.side_a, m.side_b, m.side_c);
    if flat <= 0.0 {
        return Err(Error::DegenerateTriangle("vanishing flat area".into()));
    }
    Ok(excess / flat)
}
