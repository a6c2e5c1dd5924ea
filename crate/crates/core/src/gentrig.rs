//! Generalized trigonometric functions, analytic in the parameter.
//!
//! `gen_cos` interpolates `cos(sqrt(t) s)` (elliptic), `1` (Euclidean) and
//! `cosh(sqrt(-t) s)` (hyperbolic); `gen_sin` interpolates
//! `sin(sqrt(t) s)/sqrt(t)`, `s` and `sinh(sqrt(-t) s)/sqrt(-t)`. Both are
//! entire functions of `(t, s)`:
//!
//! ```text
//! gen_cos(t, s) = 1 - t s^2/2 + t^2 s^4/24 - ...
//! gen_sin(t, s) = s - t s^3/6 + t^2 s^5/120 - ...
//! ```
//!
//! They satisfy `gen_cos^2 + t gen_sin^2 = 1`, the model-function analogue of
//! the Pythagorean identity, and turn the three regime-specific forms of each
//! trigonometric law into a single expression.

use crate::param::{Param, Sign};

/// Below this value of `|t| s^2` the closed forms lose relative accuracy
/// (`gen_sin` divides by `sqrt(|t|)`) and the even power series is used.
const SERIES_THRESHOLD: f64 = 1e-8;

/// `cos(sqrt(t) s)` for `t > 0`, `1` for `t = 0`, `cosh(sqrt(-t) s)` for `t < 0`.
pub fn gen_cos(p: Param, s: f64) -> f64 {
    let u = p.t() * s * s;
    if u.abs() < SERIES_THRESHOLD {
        // 1 - u/2 + u^2/24; the u^3 term is below 1e-24 here
        return 1.0 - u / 2.0 + u * u / 24.0;
    }
    match p.sign() {
        Sign::Positive => (p.sqrt_abs() * s).cos(),
        Sign::Negative => (p.sqrt_abs() * s).cosh(),
        Sign::Zero => 1.0,
    }
}

/// `sin(sqrt(t) s)/sqrt(t)` for `t > 0`, `s` for `t = 0`,
/// `sinh(sqrt(-t) s)/sqrt(-t)` for `t < 0`.
pub fn gen_sin(p: Param, s: f64) -> f64 {
    let u = p.t() * s * s;
    if u.abs() < SERIES_THRESHOLD {
        return s * (1.0 - u / 6.0 + u * u / 120.0);
    }
    let r = p.sqrt_abs();
    match p.sign() {
        Sign::Positive => (r * s).sin() / r,
        Sign::Negative => (r * s).sinh() / r,
        Sign::Zero => s,
    }
}

/// Inverse of `s -> (gen_sin(s), gen_cos(s))` for `r >= 0`: the generalized
/// arc length with `gen_sin = r` and `gen_cos = z`. Callers must pass a pair
/// lying on the model curve (`z^2 + t r^2 = 1`).
pub(crate) fn gen_arc(p: Param, r: f64, z: f64) -> f64 {
    debug_assert!(r >= 0.0);
    match p.sign() {
        Sign::Positive => {
            let rt = p.sqrt_abs();
            (rt * r).atan2(z) / rt
        }
        Sign::Zero => r,
        Sign::Negative => {
            let rt = p.sqrt_abs();
            (rt * r).asinh() / rt
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, LN_2};

    fn p(t: f64) -> Param {
        Param::new(t).unwrap()
    }

    #[test]
    fn round_sphere_quarter_turn() {
        assert!(gen_cos(p(1.0), FRAC_PI_2).abs() < 1e-15);
        assert!((gen_sin(p(1.0), FRAC_PI_2) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn flat_limit() {
        for s in [-4.0, -0.3, 0.0, 0.7, 9.5] {
            assert_eq!(gen_cos(p(0.0), s), 1.0);
            assert_eq!(gen_sin(p(0.0), s), s);
        }
    }

    #[test]
    fn hyperbolic_value_at_ln_2() {
        // cosh(ln 2) = (2 + 1/2)/2
        assert!((gen_cos(p(-1.0), LN_2) - 1.25).abs() < 1e-15);
        // sinh(ln 2) = (2 - 1/2)/2
        assert!((gen_sin(p(-1.0), LN_2) - 0.75).abs() < 1e-15);
    }

    #[test]
    fn pythagorean_identity_across_regimes() {
        for &t in &[-1.0, -0.5, -1e-6, -1e-12, 0.0, 1e-12, 1e-6, 0.5, 1.0] {
            for k in 0..=40 {
                let s = -10.0 + 0.5 * k as f64;
                let c = gen_cos(p(t), s);
                let g = gen_sin(p(t), s);
                // relative residual: the hyperbolic side reaches cosh^2(10),
                // where an absolute 1e-10 is below f64 resolution
                let scale = (c * c).max(1.0);
                assert!(
                    (c * c + t * g * g - 1.0).abs() <= 1e-10 * scale,
                    "identity residual too large at t={t}, s={s}"
                );
            }
        }
    }

    #[test]
    fn series_path_agrees_with_closed_form() {
        // straddle the threshold: |t| s^2 near 1e-8 from both sides
        for &t in &[1.1e-8_f64, -1.1e-8, 0.9e-8, -0.9e-8] {
            let s = 1.0;
            let rt = t.abs().sqrt();
            let (c_ref, g_ref) = if t > 0.0 {
                ((rt * s).cos(), (rt * s).sin() / rt)
            } else {
                ((rt * s).cosh(), (rt * s).sinh() / rt)
            };
            assert!((gen_cos(p(t), s) - c_ref).abs() < 1e-14);
            assert!((gen_sin(p(t), s) - g_ref).abs() < 1e-14);
        }
    }

    #[test]
    fn arc_inverts_the_pair() {
        for &t in &[-1.0, -0.3, 0.0, 0.4, 1.0] {
            for &s in &[0.0, 0.3, 1.2] {
                let d = gen_arc(p(t), gen_sin(p(t), s), gen_cos(p(t), s));
                assert!((d - s).abs() < 1e-13, "t={t} s={s} d={d}");
            }
        }
    }
}
