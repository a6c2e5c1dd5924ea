//! Trigonometric laws of `E_t`: Pythagorean identities, the right-triangle
//! table, the sine rule and closed-form area.
//!
//! Conventions: the right angle sits at `C` and the side opposite a vertex
//! carries its lowercase name, so `c` is the hypotenuse. In `E_t` the
//! regime-specific identities apply circular functions to `sqrt(t) * side`
//! (elliptic) or hyperbolic functions to `sqrt(-t) * side` (hyperbolic); the
//! Euclidean forms are their common `t -> 0` limit. Written with `gen_cos`
//! and `gen_sin` most rows become a single parameter-free identity.

use crate::error::{Error, Result};
use crate::gentrig::{gen_cos, gen_sin};
use crate::param::{Param, Sign};
use crate::triangle::{measure, Triangle, TriangleMeasurements};

/// Angle gap below which a corner counts as right.
pub const RIGHT_ANGLE_TOL: f64 = 1e-9;

fn right_angle_at_c(m: &TriangleMeasurements) -> Result<()> {
    let gap = (m.angle_c - std::f64::consts::FRAC_PI_2).abs();
    if gap > RIGHT_ANGLE_TOL {
        return Err(Error::NoRightAngle { angle: m.angle_c });
    }
    Ok(())
}

/// Residual of the Pythagorean theorem for a triangle with right angle at
/// `C`: `|gen_cos(c) - gen_cos(a) gen_cos(b)|` for `t != 0` (one identity
/// covering the elliptic `cos` form and the hyperbolic `cosh` form), and
/// `|c^2 - a^2 - b^2|` at `t = 0`.
pub fn pythagoras_check(tr: &Triangle) -> Result<f64> {
    let m = measure(tr)?;
    right_angle_at_c(&m)?;
    let p = tr.param();
    Ok(match p.sign() {
        Sign::Zero => (m.side_c * m.side_c - m.side_a * m.side_a - m.side_b * m.side_b).abs(),
        _ => (gen_cos(p, m.side_c) - gen_cos(p, m.side_a) * gen_cos(p, m.side_b)).abs(),
    })
}

/// The six right-triangle identities of the regime of `t`, as residuals.
///
/// With `~x` denoting `sqrt(|t|) x` the rows are, per regime:
///
/// | hyperbolic                     | Euclidean          | elliptic                  |
/// |--------------------------------|--------------------|---------------------------|
/// | `cosh ~c = cosh ~a cosh ~b`    | `c^2 = a^2 + b^2`  | `cos ~c = cos ~a cos ~b`  |
/// | `sinh ~b = sinh ~c sin B`      | `b = c sin B`      | `sin ~b = sin ~c sin B`   |
/// | `tanh ~a = tanh ~c cos B`      | `a = c cos B`      | `tan ~a = tan ~c cos B`   |
/// | `cosh ~c = cot A cot B`        | `1 = cot A cot B`  | `cos ~c = cot A cot B`    |
/// | `cos A = cosh ~a sin B`        | `cos A = sin B`    | `cos A = cos ~a sin B`    |
/// | `tanh ~a = sinh ~b tan A`      | `a = b tan A`      | `tan ~a = sin ~b tan A`   |
pub fn right_triangle_table_check(tr: &Triangle) -> Result<[f64; 6]> {
    let m = measure(tr)?;
    right_angle_at_c(&m)?;
    let p = tr.param();
    let (sa, sb, sc) = (m.side_a, m.side_b, m.side_c);
    let (aa, ab) = (m.angle_a, m.angle_b);
    let cot = |x: f64| x.cos() / x.sin();
    let rows = match p.sign() {
        Sign::Zero => [
            sc * sc - sa * sa - sb * sb,
            sb - sc * ab.sin(),
            sa - sc * ab.cos(),
            1.0 - cot(aa) * cot(ab),
            aa.cos() - ab.sin(),
            sa - sb * aa.tan(),
        ],
        Sign::Positive => {
            let s = p.sqrt_abs();
            let (ta, tb, tc) = (s * sa, s * sb, s * sc);
            [
                tc.cos() - ta.cos() * tb.cos(),
                tb.sin() - tc.sin() * ab.sin(),
                ta.tan() - tc.tan() * ab.cos(),
                tc.cos() - cot(aa) * cot(ab),
                aa.cos() - ta.cos() * ab.sin(),
                ta.tan() - tb.sin() * aa.tan(),
            ]
        }
        Sign::Negative => {
            let u = p.sqrt_abs();
            let (ta, tb, tc) = (u * sa, u * sb, u * sc);
            [
                tc.cosh() - ta.cosh() * tb.cosh(),
                tb.sinh() - tc.sinh() * ab.sin(),
                ta.tanh() - tc.tanh() * ab.cos(),
                tc.cosh() - cot(aa) * cot(ab),
                aa.cos() - ta.cosh() * ab.sin(),
                ta.tanh() - tb.sinh() * aa.tan(),
            ]
        }
    };
    Ok(rows.map(f64::abs))
}

/// The three sine-rule ratios `gen_sin(side) / sin(angle)`, which read
/// `sin(~a)/(sqrt(t) sin A)` in the elliptic regime, `a / sin A` in the
/// Euclidean one and `sinh(~a)/(sqrt(-t) sin A)` in the hyperbolic one.
/// Equal for a valid triangle.
pub fn sine_rule_ratios(tr: &Triangle) -> Result<[f64; 3]> {
    let m = measure(tr)?;
    let p = tr.param();
    for s in [m.angle_a.sin(), m.angle_b.sin(), m.angle_c.sin()] {
        if s < 1e-12 {
            return Err(Error::DegenerateTriangle("vanishing angle".into()));
        }
    }
    Ok([
        gen_sin(p, m.side_a) / m.angle_a.sin(),
        gen_sin(p, m.side_b) / m.angle_b.sin(),
        gen_sin(p, m.side_c) / m.angle_c.sin(),
    ])
}

/// Closed-form area from side lengths in the elliptic regime (`t > 0`),
/// normalized by `1/t`:
///
/// ```text
/// cos(t Delta / 2) = (1 + cos ~a + cos ~b + cos ~c)
///                    / (4 cos(~a/2) cos(~b/2) cos(~c/2))
/// ```
///
/// with `~x = sqrt(t) x`; the returned value is `Delta = 2 arccos(.) / t`,
/// which agrees with the excess area of [`measure`].
pub fn area_euler(p: Param, a: f64, b: f64, c: f64) -> Result<f64> {
    if !p.is_positive() {
        return Err(Error::NonPositiveParam { t: p.t() });
    }
    if !(a > 0.0 && b > 0.0 && c > 0.0) {
        return Err(Error::InvalidSides("sides must be positive".into()));
    }
    if a + b < c || b + c < a || c + a < b {
        return Err(Error::InvalidSides("triangle inequality fails".into()));
    }
    let s = p.sqrt_abs();
    let (ta, tb, tc) = (s * a, s * b, s * c);
    if ta >= std::f64::consts::PI || tb >= std::f64::consts::PI || tc >= std::f64::consts::PI {
        return Err(Error::InvalidSides("a scaled side reaches pi".into()));
    }
    let denom = 4.0 * (0.5 * ta).cos() * (0.5 * tb).cos() * (0.5 * tc).cos();
    if denom <= 0.0 {
        return Err(Error::InvalidSides("spherical validity fails".into()));
    }
    let q = (1.0 + ta.cos() + tb.cos() + tc.cos()) / denom;
    if !(-1.0 - 1e-12..=1.0 + 1e-12).contains(&q) {
        return Err(Error::InvalidSides(format!(
            "area quotient {q} outside [-1, 1]"
        )));
    }
    Ok(2.0 * q.clamp(-1.0, 1.0).acos() / p.t())
}

/// The quantity `1 - Q^2` where `Q` is the area quotient of a right triangle
/// with legs `a`, `b` held constant in `t` (hypotenuse from the Pythagorean
/// identity). Built entirely from `gen_cos`, hence analytic in `t` on both
/// sides of zero; its expansion starts at `a^2 b^2 t^2 / 16`.
pub fn euler_gap(p: Param, a: f64, b: f64) -> f64 {
    let ga = gen_cos(p, a);
    let gb = gen_cos(p, b);
    let gc = ga * gb; // Pythagorean hypotenuse
    // half-argument values: gen_cos(x/2) = sqrt((1 + gen_cos x) / 2)
    let ha = ((1.0 + ga) / 2.0).sqrt();
    let hb = ((1.0 + gb) / 2.0).sqrt();
    let hc = ((1.0 + gc) / 2.0).sqrt();
    let q = (1.0 + ga + gb + gc) / (4.0 * ha * hb * hc);
    1.0 - q * q
}

/// Flat-metric area estimate from side lengths (Heron's formula), the
/// independent reference used by curvature recovery on small triangles.
pub fn heron_area(a: f64, b: f64, c: f64) -> f64 {
    let s = 0.5 * (a + b + c);
    (s * (s - a) * (s - b) * (s - c)).max(0.0).sqrt()
}
