//! Coherent families of isometries and the group-theoretic line axiom.
//!
//! A family `t -> A(t)` with `A(t)` in `I_t` and entries analytic in `t`
//! is *coherent*; the `t = 0` members reachable this way are exactly the
//! orientation-preserving Euclidean motions, which is how the Euclidean
//! group appears as the limit of the elliptic and hyperbolic ones.
//! [`check_coherent_family`] verifies a sampled family against a finite,
//! falsifiable proxy of that definition: membership residuals at every
//! sample, a low-degree polynomial fit of each entry as the analyticity
//! proxy, and the Euclidean-motion shape of the fitted `t = 0` limit.

use crate::error::{Error, Result};
use crate::isometry::{euclidean_shape, involution, isometry_residuals};
use crate::linalg::Mat3;
use crate::numeric::polyfit;
use crate::param::Param;
use crate::point::ModelPoint;

/// Degree of the per-entry polynomial fit used as the analyticity proxy.
const FIT_DEGREE: usize = 4;

/// Acceptable root-mean-square misfit of the degree-4 fit over `[-1, 1]`.
const FIT_RMS_TOL: f64 = 1e-8;

/// Fewest samples accepted by [`check_coherent_family`].
const MIN_SAMPLES: usize = 9;

/// Per-sample membership residuals of a family.
#[derive(Debug, Clone, Copy)]
pub struct FamilySample {
    pub t: f64,
    pub residual_qt: f64,
    pub residual_det: f64,
}

/// Classification of a Euclidean-motion limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EuclideanClass {
    Identity,
    Translation,
    RotationAboutPoint,
}

impl EuclideanClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            EuclideanClass::Identity => "identity",
            EuclideanClass::Translation => "translation",
            EuclideanClass::RotationAboutPoint => "rotation-about-point",
        }
    }
}

/// Outcome of [`check_coherent_family`].
#[derive(Debug, Clone)]
pub struct CoherentFamilyReport {
    pub samples: Vec<FamilySample>,
    /// The entrywise polynomial fits evaluated at `t = 0`.
    pub limit_matrix: Mat3,
    /// Largest RMS misfit over the nine entries.
    pub max_fit_residual: f64,
    pub is_coherent: bool,
    /// `None` when the limit fails the Euclidean-motion shape.
    pub euclidean_class: Option<EuclideanClass>,
}

/// Verifies a sampled family `(t_k, A_k)` for coherence.
///
/// Requirements on the sampling: at least [`MIN_SAMPLES`] values covering
/// both signs of `t` (so the fitted value at `t = 0` is an interpolation);
/// otherwise [`Error::InsufficientSamples`]. `tol` bounds both the
/// per-sample membership residuals and the limit-shape residuals.
pub fn check_coherent_family(samples: &[(f64, Mat3)], tol: f64) -> Result<CoherentFamilyReport> {
    if samples.len() < MIN_SAMPLES {
        return Err(Error::InsufficientSamples(format!(
            "{} samples, need at least {MIN_SAMPLES}",
            samples.len()
        )));
    }
    let (mut has_neg, mut has_pos) = (false, false);
    for (t, _) in samples {
        has_neg |= *t < 0.0;
        has_pos |= *t > 0.0;
    }
    if !(has_neg && has_pos) {
        return Err(Error::InsufficientSamples(
            "samples must cover both signs of t".into(),
        ));
    }

    let mut rows = Vec::with_capacity(samples.len());
    let mut max_membership = 0.0_f64;
    for (t, m) in samples {
        let p = Param::new(*t)?;
        let (rq, rd) = isometry_residuals(p, m);
        max_membership = max_membership.max(rq).max(rd);
        rows.push(FamilySample {
            t: *t,
            residual_qt: rq,
            residual_det: rd,
        });
    }

    let ts: Vec<f64> = samples.iter().map(|(t, _)| *t).collect();
    let mut limit = [[0.0; 3]; 3];
    let mut max_fit_residual = 0.0_f64;
    for i in 0..3 {
        for j in 0..3 {
            let ys: Vec<f64> = samples.iter().map(|(_, m)| m.at(i, j)).collect();
            let (coeffs, rms) = polyfit(&ts, &ys, FIT_DEGREE)?;
            limit[i][j] = coeffs[0];
            max_fit_residual = max_fit_residual.max(rms);
        }
    }
    let limit_matrix = Mat3::from_rows(limit);

    let shape_ok =
        euclidean_shape(&limit_matrix, tol) && (limit_matrix.det() - 1.0).abs() <= tol;
    let euclidean_class = shape_ok.then(|| classify_motion(&limit_matrix, tol));
    let is_coherent = max_membership <= tol && max_fit_residual <= FIT_RMS_TOL && shape_ok;

    Ok(CoherentFamilyReport {
        samples: rows,
        limit_matrix,
        max_fit_residual,
        is_coherent,
        euclidean_class,
    })
}

fn classify_motion(m: &Mat3, tol: f64) -> EuclideanClass {
    if m.max_abs_diff(&Mat3::IDENTITY) <= tol {
        EuclideanClass::Identity
    } else if (m.at(0, 0) - 1.0).abs() <= tol
        && (m.at(1, 1) - 1.0).abs() <= tol
        && m.at(0, 1).abs() <= tol
        && m.at(1, 0).abs() <= tol
    {
        EuclideanClass::Translation
    } else {
        // a motion with nontrivial rotation block fixes a point of the plane
        EuclideanClass::RotationAboutPoint
    }
}

/// Maximum commutator deviation over the `(s_p s_p')` pairs of a point set:
/// `max || (s_1 s_2)(s_3 s_4) - (s_3 s_4)(s_1 s_2) ||` over all pairs of
/// ordered pairs, in the entrywise maximum norm.
///
/// For points on one line the products are translations along it and the
/// result is zero up to rounding; a generic non-collinear quadruple makes it
/// order one, which is the negative control callers should exercise.
pub fn line_axiom_check(points: &[ModelPoint]) -> Result<f64> {
    if points.len() < 4 {
        return Err(Error::TooFewPoints {
            got: points.len(),
            need: 4,
        });
    }
    let p = points[0].param();
    assert!(
        points.iter().all(|q| q.param() == p),
        "mixed geometries"
    );
    let involutions: Vec<Mat3> = points.iter().map(|q| *involution(q).matrix()).collect();
    let mut pairs = Vec::new();
    for (i, si) in involutions.iter().enumerate() {
        for (j, sj) in involutions.iter().enumerate() {
            if i != j {
                pairs.push(*si * *sj);
            }
        }
    }
    let mut worst = 0.0_f64;
    for g in &pairs {
        for h in &pairs {
            worst = worst.max((*g * *h).max_abs_diff(&(*h * *g)));
        }
    }
    Ok(worst)
}

/// Helper shared by tests and the verification battery: membership residual
/// of the sample family built from an isometry-valued closure over a grid.
pub fn sample_family(
    grid: &[f64],
    f: impl Fn(Param) -> Mat3,
) -> Result<Vec<(f64, Mat3)>> {
    grid.iter()
        .map(|&t| Param::new(t).map(|p| (t, f(p))))
        .collect()
}

/// Uniform grid of `n >= 2` values on `[lo, hi]`, endpoints exact.
pub fn uniform_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2);
    (0..n)
        .map(|k| {
            if k == n - 1 {
                hi
            } else {
                lo + (hi - lo) * k as f64 / (n - 1) as f64
            }
        })
        .collect()
}
