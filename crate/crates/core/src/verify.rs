//! Runtime self-verification battery behind the CLI `verify` command.
//!
//! Each check exercises one family of invariants with deterministic
//! pseudo-random configurations (fixed seeds) and reports the worst residual
//! against its tolerance. Suites group related checks; `all` runs everything.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bisector::angle_bisector_concurrency_check;
use crate::coherence::{check_coherent_family, line_axiom_check, sample_family, uniform_grid};
use crate::error::{Error, Result};
use crate::form::{bilinear_form, quad_form};
use crate::gentrig::{gen_cos, gen_sin};
use crate::isometry::{
    coherent_translation, involution, rotation_about_apex, stabilizer_rotation, Isometry,
    ISOMETRY_TOL,
};
use crate::line::{line_through, on_line};
use crate::linalg::{Mat3, Vec3};
use crate::metric::{distance, geodesic_point};
use crate::param::Param;
use crate::point::{normalize_point, tangent_metric, unit_tangent, ModelPoint};
use crate::polarity::{equator, perpendicular, pole};
use crate::transition::{
    curvature_estimate, numeric_limit_from, pythagoras_transition_check, ray_distance,
    series_fit, Side,
};
use crate::triangle::{build_right_triangle, measure, Triangle};
use crate::trig::{pythagoras_check, right_triangle_table_check, sine_rule_ratios};

/// Outcome of one named check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: &'static str,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl CheckResult {
    fn new(suite: &'static str, name: &'static str, residual: f64, tolerance: f64) -> CheckResult {
        CheckResult {
            suite,
            name,
            residual,
            tolerance,
            passed: residual.is_finite() && residual <= tolerance,
        }
    }
}

/// Names of the available suites, `all` excluded.
pub const SUITES: [&str; 6] = [
    "forms",
    "metric",
    "involution",
    "coherence",
    "trig",
    "transition",
];

const T_GRID: [f64; 5] = [-1.0, -0.5, 0.0, 0.5, 1.0];

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random point from the disc of rays `(x, y, 1)` with radius scaled to
/// stay inside the hyperbolic cone.
fn sample_point(r: &mut ChaCha8Rng, p: Param, radius: f64) -> ModelPoint {
    let cap = if p.is_negative() {
        radius.min(0.85 / p.sqrt_abs())
    } else {
        radius
    };
    loop {
        let x = r.random_range(-cap..cap);
        let y = r.random_range(-cap..cap);
        let v = Vec3::new(x, y, 1.0);
        if quad_form(p, v) > 0.1 {
            return normalize_point(p, v).expect("sampled inside the cone");
        }
    }
}

/// A well-conditioned random triangle: bounded aspect ratio, no tiny angles,
/// no near-polar vertex pairs.
fn sample_triangle(r: &mut ChaCha8Rng, p: Param) -> Triangle {
    loop {
        let a = sample_point(r, p, 1.0);
        let b = sample_point(r, p, 1.0);
        let c = sample_point(r, p, 1.0);
        if distance(&a, &b).value().min(distance(&b, &c).value()).min(
            distance(&c, &a).value(),
        ) < 0.3
        {
            continue;
        }
        if p.is_positive() {
            let polar = [(&a, &b), (&b, &c), (&c, &a)]
                .iter()
                .any(|(u, v)| bilinear_form(p, u.rep(), v.rep()).abs() < 0.05);
            if polar {
                continue;
            }
        }
        let Ok(tr) = Triangle::new(a, b, c) else {
            continue;
        };
        let Ok(m) = measure(&tr) else { continue };
        if m.angle_a.min(m.angle_b).min(m.angle_c) > 0.2 {
            return tr;
        }
    }
}

/// A random right triangle with the right angle at the third vertex.
fn sample_right_triangle(r: &mut ChaCha8Rng, p: Param) -> Triangle {
    loop {
        let base = sample_point(r, p, 0.5);
        let theta = r.random_range(0.0..std::f64::consts::TAU);
        let raw1 = rotation_about_apex(p, theta).apply_vec(Vec3::new(1.0, 0.0, 0.0));
        let Ok(u) = unit_tangent(&base, raw1) else {
            continue;
        };
        // second leg: a tangent orthogonalized against the first
        let raw2 = rotation_about_apex(p, theta + std::f64::consts::FRAC_PI_2)
            .apply_vec(Vec3::new(1.0, 0.0, 0.0));
        let w = crate::point::project_to_tangent(&base, raw2);
        let guu = crate::point::tangent_metric_unchecked(p, u, u);
        let gwu = crate::point::tangent_metric_unchecked(p, w, u);
        let v_raw = w - u * (gwu / guu);
        let Ok(v) = unit_tangent(&base, v_raw) else {
            continue;
        };
        let la = r.random_range(0.25..1.0);
        let lb = r.random_range(0.25..1.0);
        let Ok(va) = geodesic_point(&base, u, la) else {
            continue;
        };
        let Ok(vb) = geodesic_point(&base, v, lb) else {
            continue;
        };
        if let Ok(tr) = Triangle::new(va, vb, base) {
            return tr;
        }
    }
}

/// A random isometry of moderate size: rotation, translation, rotation.
fn sample_isometry(r: &mut ChaCha8Rng, p: Param) -> Isometry {
    let phi1 = r.random_range(0.0..std::f64::consts::TAU);
    let d = r.random_range(-0.9..0.9);
    let phi2 = r.random_range(0.0..std::f64::consts::TAU);
    rotation_about_apex(p, phi1)
        .compose(&coherent_translation(d, p))
        .compose(&rotation_about_apex(p, phi2))
}

fn suite_forms() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut r = rng(11);

    // polarization identity against the quadratic form
    let mut worst = 0.0_f64;
    for _ in 0..200 {
        let t = r.random_range(-1.0..1.0);
        let p = Param::new(t).unwrap();
        let u = Vec3::new(
            r.random_range(-2.0..2.0),
            r.random_range(-2.0..2.0),
            r.random_range(-2.0..2.0),
        );
        let v = Vec3::new(
            r.random_range(-2.0..2.0),
            r.random_range(-2.0..2.0),
            r.random_range(-2.0..2.0),
        );
        let pol = 0.5 * (quad_form(p, u + v) - quad_form(p, u) - quad_form(p, v));
        worst = worst.max((pol - bilinear_form(p, u, v)).abs());
        worst = worst.max((bilinear_form(p, u, v) - bilinear_form(p, v, u)).abs());
    }
    out.push(CheckResult::new("forms", "polarization-identity", worst, 1e-12));

    // generalized Pythagorean identity of the model functions, residual
    // relative to the squared terms (cosh^2 reaches 1.2e8 at s = 10, t = -1)
    let mut worst = 0.0_f64;
    for &t in uniform_grid(-1.0, 1.0, 81).iter() {
        let p = Param::new(t).unwrap();
        for k in 0..=40 {
            let s = -10.0 + 0.5 * k as f64;
            let (c, g) = (gen_cos(p, s), gen_sin(p, s));
            worst = worst.max((c * c + t * g * g - 1.0).abs() / (c * c).max(1.0));
        }
    }
    out.push(CheckResult::new("forms", "gen-trig-identity", worst, 1e-10));

    // tangent metric positive definite on random tangents
    let mut min_norm = f64::MAX;
    for _ in 0..100 {
        let t = r.random_range(-1.0..1.0);
        let p = Param::new(t).unwrap();
        let at = sample_point(&mut r, p, 1.0);
        let w = Vec3::new(
            r.random_range(-1.0..1.0),
            r.random_range(-1.0..1.0),
            r.random_range(-1.0..1.0),
        );
        let u = crate::point::project_to_tangent(&at, w);
        if u.max_abs() < 1e-6 {
            continue;
        }
        min_norm = min_norm.min(tangent_metric(&at, u, u).unwrap());
    }
    out.push(CheckResult::new(
        "forms",
        "tangent-metric-positive",
        if min_norm > 0.0 { 0.0 } else { 1.0 },
        0.5,
    ));

    // normalization is idempotent and sign-canonical
    let mut worst = 0.0_f64;
    for _ in 0..100 {
        let t = r.random_range(-1.0..1.0);
        let p = Param::new(t).unwrap();
        let a = sample_point(&mut r, p, 1.0);
        let again = normalize_point(p, a.rep()).unwrap();
        let flipped = normalize_point(p, -a.rep()).unwrap();
        worst = worst.max((again.rep() - a.rep()).max_abs());
        worst = worst.max((flipped.rep() - a.rep()).max_abs());
        worst = worst.max((quad_form(p, a.rep()) - 1.0).abs());
    }
    out.push(CheckResult::new("forms", "normalize-canonical", worst, 1e-12));

    // q_t invariance under sampled isometries
    let mut worst = 0.0_f64;
    for &t in &T_GRID {
        let p = Param::new(t).unwrap();
        for _ in 0..40 {
            let m = sample_isometry(&mut r, p);
            let v = Vec3::new(
                r.random_range(-1.0..1.0),
                r.random_range(-1.0..1.0),
                r.random_range(-1.0..1.0),
            );
            worst = worst.max((quad_form(p, m.apply_vec(v)) - quad_form(p, v)).abs());
        }
    }
    out.push(CheckResult::new("forms", "isometry-preserves-form", worst, 1e-11));

    out
}

fn suite_metric() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut r = rng(23);

    // triangle inequality and symmetry on random triples
    let mut sym = 0.0_f64;
    let mut violation = 0.0_f64;
    for &t in &T_GRID {
        let p = Param::new(t).unwrap();
        for _ in 0..1000 {
            let a = sample_point(&mut r, p, 1.2);
            let b = sample_point(&mut r, p, 1.2);
            let c = sample_point(&mut r, p, 1.2);
            let ab = distance(&a, &b).value();
            let ba = distance(&b, &a).value();
            sym = sym.max((ab - ba).abs());
            let bc = distance(&b, &c).value();
            let ac = distance(&a, &c).value();
            violation = violation.max(ac - ab - bc);
        }
    }
    out.push(CheckResult::new("metric", "distance-symmetry", sym, 0.0));
    out.push(CheckResult::new("metric", "triangle-inequality", violation, 1e-10));

    // isometry invariance of distance
    let mut worst = 0.0_f64;
    for &t in &T_GRID {
        let p = Param::new(t).unwrap();
        for _ in 0..60 {
            let m = sample_isometry(&mut r, p);
            let a = sample_point(&mut r, p, 1.0);
            let b = sample_point(&mut r, p, 1.0);
            let before = distance(&a, &b).value();
            let after = distance(&m.apply(&a), &m.apply(&b)).value();
            worst = worst.max((before - after).abs());
        }
    }
    out.push(CheckResult::new("metric", "isometry-invariance", worst, 1e-10));

    // geodesics realize distance
    let mut worst = 0.0_f64;
    for &t in &T_GRID {
        let p = Param::new(t).unwrap();
        for _ in 0..50 {
            let start = sample_point(&mut r, p, 0.8);
            let Ok(dir) = unit_tangent(
                &start,
                Vec3::new(
                    r.random_range(-1.0..1.0),
                    r.random_range(-1.0..1.0),
                    r.random_range(-1.0..1.0),
                ),
            ) else {
                continue;
            };
            let max_s = p
                .elliptic_diameter()
                .map(|d| d * 0.95)
                .unwrap_or(2.0);
            let s = r.random_range(0.05..max_s);
            let end = geodesic_point(&start, dir, s).unwrap();
            worst = worst.max((distance(&start, &end).value() - s).abs());
        }
    }
    out.push(CheckResult::new("metric", "geodesics-realize-distance", worst, 1e-9));

    // elliptic wrap: distance never exceeds the diameter
    let mut worst = 0.0_f64;
    for &t in &[0.25, 1.0] {
        let p = Param::new(t).unwrap();
        let diam = p.elliptic_diameter().unwrap();
        for _ in 0..300 {
            let a = sample_point(&mut r, p, 3.0);
            let b = sample_point(&mut r, p, 3.0);
            worst = worst.max(distance(&a, &b).value() - diam);
        }
    }
    out.push(CheckResult::new("metric", "elliptic-wrap", worst, 1e-12));

    // continuity at t = 0 with the predicted linear rate
    let mut worst = 0.0_f64;
    for k in 2..=8 {
        for sign in [-1.0, 1.0] {
            let t = sign * 10f64.powi(-k);
            let x: f64 = 1.5;
            let d = ray_distance(t, Vec3::new(0.0, 0.0, 1.0), Vec3::new(x, 0.0, 1.0)).unwrap();
            let bound = t.abs() * x.powi(3) / 3.0 * (1.0 + 10.0 * t.abs() * x * x);
            worst = worst.max((d - x).abs() - bound);
        }
    }
    out.push(CheckResult::new("metric", "continuity-at-zero", worst, 0.0));

    // polarity: duality round trip and pole-equator distance
    let mut dual = 0.0_f64;
    let mut pole_dist = 0.0_f64;
    for &t in &[0.25, 1.0] {
        let p = Param::new(t).unwrap();
        let expect = p.elliptic_diameter().unwrap();
        for _ in 0..50 {
            let q = sample_point(&mut r, p, 2.0);
            let l = equator(&q).unwrap();
            let back = pole(&l).unwrap();
            dual = dual.max((back.rep() - q.rep()).max_abs());
            let a = sample_point(&mut r, p, 2.0);
            let b = sample_point(&mut r, p, 2.0);
            if a.approx_eq(&b, 1e-6) {
                continue;
            }
            let line = line_through(&a, &b).unwrap();
            let n = pole(&line).unwrap();
            pole_dist = pole_dist.max((distance(&n, &a).value() - expect).abs());
        }
    }
    out.push(CheckResult::new("metric", "pole-equator-duality", dual, 1e-12));
    out.push(CheckResult::new("metric", "pole-equator-distance", pole_dist, 1e-10));

    // perpendicularity through polarity is symmetric
    let mut asym = 0.0_f64;
    let p = Param::new(1.0).unwrap();
    for _ in 0..100 {
        let l1 = line_through(
            &sample_point(&mut r, p, 2.0),
            &sample_point(&mut r, p, 2.0),
        );
        let l2 = line_through(
            &sample_point(&mut r, p, 2.0),
            &sample_point(&mut r, p, 2.0),
        );
        let (Ok(l1), Ok(l2)) = (l1, l2) else { continue };
        let ab = perpendicular(&l1, &l2, 1e-9).unwrap();
        let ba = perpendicular(&l2, &l1, 1e-9).unwrap();
        if ab != ba {
            asym = 1.0;
        }
    }
    out.push(CheckResult::new("metric", "perpendicularity-symmetric", asym, 0.5));

    // bisector concurrency across curvatures
    let mut worst = 0.0_f64;
    for &t in &[-1.0, -0.3, 0.0, 0.3, 1.0] {
        let p = Param::new(t).unwrap();
        for _ in 0..20 {
            let tr = sample_triangle(&mut r, p);
            worst = worst.max(angle_bisector_concurrency_check(&tr).unwrap());
        }
    }
    out.push(CheckResult::new("metric", "bisector-concurrency", worst, 1e-8));

    out
}

fn suite_involution() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut r = rng(37);

    // order two and fixed point
    let mut worst = 0.0_f64;
    for &t in &[-1.0, 0.0, 1.0] {
        let p = Param::new(t).unwrap();
        for _ in 0..100 {
            let q = sample_point(&mut r, p, 1.0);
            let s = involution(&q);
            worst = worst.max(s.compose(&s).matrix().max_abs_diff(&Mat3::IDENTITY));
            worst = worst.max((s.apply(&q).rep() - q.rep()).max_abs());
        }
    }
    out.push(CheckResult::new("involution", "order-two-fixing", worst, 1e-12));

    // conjugation equivariance
    let mut worst = 0.0_f64;
    for &t in &T_GRID {
        let p = Param::new(t).unwrap();
        for _ in 0..40 {
            let m = sample_isometry(&mut r, p);
            let q = sample_point(&mut r, p, 1.0);
            let lhs = m.compose(&involution(&q)).compose(&m.inverse());
            let rhs = involution(&m.apply(&q));
            worst = worst.max(lhs.matrix().max_abs_diff(rhs.matrix()));
        }
    }
    out.push(CheckResult::new("involution", "conjugation-equivariance", worst, 1e-10));

    // commutators along a line, with non-collinear negative control for
    // t != 0 (at t = 0 all products of point reflections are translations
    // and commute regardless of collinearity)
    let mut worst = 0.0_f64;
    let mut control = f64::MAX;
    for &t in &T_GRID {
        let p = Param::new(t).unwrap();
        let start = sample_point(&mut r, p, 0.3);
        let dir = unit_tangent(&start, Vec3::new(0.9, 0.4, 0.0)).unwrap();
        let pts: Vec<ModelPoint> = [-0.8, -0.25, 0.3, 0.7, 1.1]
            .iter()
            .map(|&s| geodesic_point(&start, dir, s).unwrap())
            .collect();
        worst = worst.max(line_axiom_check(&pts).unwrap());

        if t != 0.0 {
            let mut off = pts.clone();
            off[3] = geodesic_point(
                &start,
                unit_tangent(&start, Vec3::new(-0.4, 0.9, 0.0)).unwrap(),
                0.8,
            )
            .unwrap();
            control = control.min(line_axiom_check(&off).unwrap());
        }
    }
    out.push(CheckResult::new("involution", "line-commutators", worst, 1e-10));
    out.push(CheckResult::new(
        "involution",
        "non-collinear-control",
        if control > 1e-3 { 0.0 } else { 1.0 },
        0.5,
    ));

    // pole commutation and equator characterization (t > 0)
    let mut pole_comm = 0.0_f64;
    let mut equator_fix = 0.0_f64;
    for &t in &[0.25, 1.0] {
        let p = Param::new(t).unwrap();
        for _ in 0..40 {
            let a = sample_point(&mut r, p, 1.5);
            let b = sample_point(&mut r, p, 1.5);
            if a.approx_eq(&b, 1e-6) {
                continue;
            }
            let l = line_through(&a, &b).unwrap();
            let n = pole(&l).unwrap();
            let prod = involution(&a).compose(&involution(&b));
            let sn = involution(&n);
            pole_comm = pole_comm
                .max(prod.compose(&sn).matrix().max_abs_diff(sn.compose(&prod).matrix()));

            // any point of the equator of a fixes a under its involution
            let q = sample_point(&mut r, p, 1.5);
            let eq = equator(&q).unwrap();
            let theta = r.random_range(0.0..std::f64::consts::TAU);
            let on_eq = stabilizer_rotation(&q, theta).apply(&pole_on_equator(&eq));
            debug_assert!(on_line(&eq, &on_eq, 1e-9));
            let fixed = involution(&on_eq).apply(&q);
            equator_fix = equator_fix.max((fixed.rep() - q.rep()).max_abs());
        }
    }
    out.push(CheckResult::new("involution", "pole-commutation", pole_comm, 1e-10));
    out.push(CheckResult::new("involution", "equator-characterization", equator_fix, 1e-10));

    out
}

/// An arbitrary point on a line (t > 0): rotate the pole's frame. Used for
/// sampling equator points.
fn pole_on_equator(l: &crate::line::Line) -> ModelPoint {
    let p = l.param();
    let n = pole(l).expect("t > 0 line");
    // any unit tangent at the pole exponentiates to the equator at distance
    // pi / (2 sqrt(t))
    let dir = unit_tangent(&n, Vec3::new(0.83, -0.37, 0.41))
        .or_else(|_| unit_tangent(&n, Vec3::new(-0.2, 0.9, 0.1)))
        .expect("some tangent direction exists");
    geodesic_point(&n, dir, p.elliptic_diameter().unwrap()).expect("unit tangent")
}

fn suite_coherence() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let grid = uniform_grid(-1.0, 1.0, 21);

    let fam = sample_family(&grid, |p| *coherent_translation(0.7, p).matrix()).unwrap();
    let rep = check_coherent_family(&fam, ISOMETRY_TOL).unwrap();
    out.push(CheckResult::new(
        "coherence",
        "translation-family-accepted",
        if rep.is_coherent
            && rep.euclidean_class == Some(crate::coherence::EuclideanClass::Translation)
        {
            rep.max_fit_residual
        } else {
            1.0
        },
        1e-8,
    ));

    let fam = sample_family(&grid, |p| {
        *stabilizer_rotation(&ModelPoint::apex(p), 1.1).matrix()
    })
    .unwrap();
    let rep = check_coherent_family(&fam, ISOMETRY_TOL).unwrap();
    out.push(CheckResult::new(
        "coherence",
        "rotation-family-accepted",
        if rep.is_coherent
            && rep.euclidean_class == Some(crate::coherence::EuclideanClass::RotationAboutPoint)
        {
            rep.max_fit_residual
        } else {
            1.0
        },
        1e-8,
    ));

    let mut bad = Mat3::IDENTITY;
    bad.0[2][0] = 0.1;
    let fam = sample_family(&grid, |_| bad).unwrap();
    let rep = check_coherent_family(&fam, ISOMETRY_TOL).unwrap();
    out.push(CheckResult::new(
        "coherence",
        "perturbed-family-rejected",
        if rep.is_coherent { 1.0 } else { 0.0 },
        0.5,
    ));

    // the translation moves the apex by exactly |d| at every t
    let mut worst = 0.0_f64;
    for &t in &[-1.0, -0.1, 0.0, 0.1, 1.0] {
        let p = Param::new(t).unwrap();
        let apex = ModelPoint::apex(p);
        for &d in &[-1.1, -0.7, 0.3, 0.7] {
            let img = coherent_translation(d, p).apply(&apex);
            worst = worst.max((distance(&apex, &img).value() - d.abs()).abs());
        }
    }
    out.push(CheckResult::new("coherence", "translation-distance", worst, 1e-10));

    // entries of the translation family are polynomial-bounded in t
    let fam = sample_family(&grid, |p| *coherent_translation(0.7, p).matrix()).unwrap();
    let rep = check_coherent_family(&fam, ISOMETRY_TOL).unwrap();
    out.push(CheckResult::new(
        "coherence",
        "translation-analyticity-proxy",
        rep.max_fit_residual,
        1e-8,
    ));

    out
}

fn suite_trig() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut r = rng(53);

    // Pythagorean identity on the coherent right family over the full grid
    let mut worst = 0.0_f64;
    for &t in crate::transition::default_grid().iter() {
        let p = Param::new(t).unwrap();
        let tr = build_right_triangle(p, 0.9, 0.7).unwrap();
        let m = measure(&tr).unwrap();
        // right angle is at the first vertex: relabel so it sits at C
        let relabeled = Triangle::new(*tr.b(), *tr.c(), *tr.a()).unwrap();
        let _ = m;
        worst = worst.max(pythagoras_check(&relabeled).unwrap());
    }
    out.push(CheckResult::new("trig", "pythagoras-identity", worst, 1e-10));

    // right-triangle table across regimes
    let mut worst = 0.0_f64;
    for &t in &T_GRID {
        let p = Param::new(t).unwrap();
        for _ in 0..50 {
            let tr = sample_right_triangle(&mut r, p);
            for res in right_triangle_table_check(&tr).unwrap() {
                worst = worst.max(res);
            }
        }
    }
    out.push(CheckResult::new("trig", "right-triangle-table", worst, 1e-10));

    // sine rule spread
    let mut worst = 0.0_f64;
    for &t in &T_GRID {
        let p = Param::new(t).unwrap();
        for _ in 0..100 {
            let tr = sample_triangle(&mut r, p);
            let rats = sine_rule_ratios(&tr).unwrap();
            let spread = rats.iter().cloned().fold(f64::MIN, f64::max)
                - rats.iter().cloned().fold(f64::MAX, f64::min);
            worst = worst.max(spread);
        }
    }
    out.push(CheckResult::new("trig", "sine-rule-spread", worst, 1e-10));

    // closed-form area against excess area
    let mut worst = 0.0_f64;
    for &t in &[0.25, 1.0] {
        let p = Param::new(t).unwrap();
        for _ in 0..50 {
            let tr = sample_triangle(&mut r, p);
            let m = measure(&tr).unwrap();
            let e = crate::trig::area_euler(p, m.side_a, m.side_b, m.side_c).unwrap();
            worst = worst.max((e - m.area).abs());
        }
    }
    out.push(CheckResult::new("trig", "euler-area-vs-excess", worst, 1e-9));

    // excess sign matches the curvature sign
    let mut bad = 0.0_f64;
    for &t in &[-1.0, -0.5, 0.5, 1.0] {
        let p = Param::new(t).unwrap();
        for _ in 0..50 {
            let tr = sample_triangle(&mut r, p);
            let m = measure(&tr).unwrap();
            let excess = m.angle_a + m.angle_b + m.angle_c - std::f64::consts::PI;
            if excess.signum() != t.signum() {
                bad = 1.0;
            }
        }
    }
    out.push(CheckResult::new("trig", "excess-sign", bad, 0.5));

    out
}

fn suite_transition() -> Vec<CheckResult> {
    let mut out = Vec::new();

    // series of the ray distance for x in {0.5, 1, 2}
    let mut worst = 0.0_f64;
    for x in [0.5_f64, 1.0, 2.0] {
        let est = series_fit(
            |t| ray_distance(t, Vec3::new(0.0, 0.0, 1.0), Vec3::new(x, 0.0, 1.0)),
            4,
        )
        .unwrap();
        let expect = [x, -x.powi(3) / 3.0, x.powi(5) / 5.0];
        for (k, e) in expect.iter().enumerate() {
            worst = worst.max((est.coefficients[k] - e).abs());
        }
    }
    out.push(CheckResult::new("transition", "ray-distance-series", worst, 1e-6));

    // two-sided limits of the right-triangle side lengths
    let mut worst = 0.0_f64;
    for (x, y) in [(1.0_f64, 1.0_f64), (3.0, 4.0), (0.2, 5.0)] {
        let reach: f64 = x.max(y);
        let t0 = (0.05 / (reach * reach)).min(0.1);
        let pairs: [(Vec3, Vec3, f64); 3] = [
            (Vec3::new(0.0, 0.0, 1.0), Vec3::new(x, 0.0, 1.0), x),
            (Vec3::new(0.0, 0.0, 1.0), Vec3::new(0.0, y, 1.0), y),
            (
                Vec3::new(x, 0.0, 1.0),
                Vec3::new(0.0, y, 1.0),
                x.hypot(y),
            ),
        ];
        for (u, v, expect) in pairs {
            for side in [Side::Above, Side::Below] {
                let est = numeric_limit_from(|t| ray_distance(t, u, v), side, t0).unwrap();
                worst = worst.max((est.value - expect).abs());
            }
        }
    }
    out.push(CheckResult::new("transition", "lemma-limits", worst, 1e-8));

    // scaled Pythagorean rearrangement limits to the Euclidean theorem
    let rep = pythagoras_transition_check(3.0, 4.0).unwrap();
    out.push(CheckResult::new(
        "transition",
        "pythagoras-transition",
        rep.max_identity_residual.max(rep.target_residual),
        1e-6,
    ));

    // normalized area of the unit right triangle limits to 1/2
    let mut worst = 0.0_f64;
    for side in [Side::Above, Side::Below] {
        let est = numeric_limit_from(
            |t| {
                let p = Param::new(t)?;
                Ok(measure(&build_right_triangle(p, 1.0, 1.0)?)?.area)
            },
            side,
            0.1,
        )
        .unwrap();
        worst = worst.max((est.value - 0.5).abs());
    }
    out.push(CheckResult::new("transition", "half-ab-area-limit", worst, 1e-6));

    // curvature recovery from small triangles
    let mut worst_order = f64::MAX;
    for &t in &[-1.0, -0.5, 0.5, 1.0] {
        let p = Param::new(t).unwrap();
        let e1 = (curvature_estimate(p, 0.1).unwrap() - t).abs();
        let e2 = (curvature_estimate(p, 0.05).unwrap() - t).abs();
        worst_order = worst_order.min((e1 / e2).log2());
    }
    out.push(CheckResult::new(
        "transition",
        "curvature-recovery-order",
        if worst_order >= 1.8 { 0.0 } else { 1.0 },
        0.5,
    ));
    out.push(CheckResult::new(
        "transition",
        "curvature-flat-estimate",
        curvature_estimate(Param::EUCLIDEAN, 0.05).unwrap().abs(),
        1e-6,
    ));

    out
}

/// Runs one suite by name, or every suite with `"all"`.
pub fn run_suite(name: &str) -> Result<Vec<CheckResult>> {
    match name {
        "forms" => Ok(suite_forms()),
        "metric" => Ok(suite_metric()),
        "involution" => Ok(suite_involution()),
        "coherence" => Ok(suite_coherence()),
        "trig" => Ok(suite_trig()),
        "transition" => Ok(suite_transition()),
        "all" => {
            let mut all = Vec::new();
            for s in SUITES {
                all.extend(run_suite(s)?);
            }
            Ok(all)
        }
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass() {
        let results = run_suite("all").unwrap();
        assert!(!results.is_empty());
        for r in &results {
            assert!(
                r.passed,
                "{}/{} failed: residual {:e} > {:e}",
                r.suite, r.name, r.residual, r.tolerance
            );
        }
    }

    #[test]
    fn unknown_suite_is_reported() {
        assert!(matches!(
            run_suite("nope").unwrap_err(),
            Error::UnknownSuite(_)
        ));
    }
}
