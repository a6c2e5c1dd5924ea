//! Small numerical routines shared by the coherence checks and the
//! transition analysis: least-squares polynomial fitting and Richardson
//! extrapolation.

use crate::error::{Error, Result};

/// Least-squares fit of a polynomial of the given degree, returning the
/// coefficients (ascending powers) and the root-mean-square misfit.
///
/// The abscissae are rescaled to `[-1, 1]` before forming the normal
/// equations, which keeps the Vandermonde system well conditioned for the
/// low degrees used here.
pub(crate) fn polyfit(ts: &[f64], ys: &[f64], degree: usize) -> Result<(Vec<f64>, f64)> {
    let n = ts.len();
    if n != ys.len() || n < degree + 1 {
        return Err(Error::IllConditioned);
    }
    let scale = ts.iter().fold(0.0_f64, |m, t| m.max(t.abs())).max(1e-300);
    let k = degree + 1;

    // normal equations in the scaled variable
    let mut a = vec![vec![0.0; k]; k];
    let mut b = vec![0.0; k];
    for (&t, &y) in ts.iter().zip(ys) {
        let tau = t / scale;
        let mut powers = vec![1.0; k];
        for j in 1..k {
            powers[j] = powers[j - 1] * tau;
        }
        for i in 0..k {
            b[i] += powers[i] * y;
            for j in 0..k {
                a[i][j] += powers[i] * powers[j];
            }
        }
    }
    let scaled = solve(&mut a, &mut b)?;

    let mut rss = 0.0;
    for (&t, &y) in ts.iter().zip(ys) {
        let tau = t / scale;
        let mut fit = 0.0;
        for c in scaled.iter().rev() {
            fit = fit * tau + c;
        }
        rss += (fit - y) * (fit - y);
    }

    let mut coeffs = scaled;
    let mut div = 1.0;
    for c in coeffs.iter_mut() {
        *c /= div;
        div *= scale;
    }
    Ok((coeffs, (rss / n as f64).sqrt()))
}

/// Gaussian elimination with partial pivoting on a small dense system.
fn solve(a: &mut [Vec<f64>], b: &mut [f64]) -> Result<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        if a[pivot][col].abs() < 1e-14 {
            return Err(Error::IllConditioned);
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for j in col..n {
                a[row][j] -= f * a[col][j];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for col in (0..n).rev() {
        let mut s = b[col];
        for j in col + 1..n {
            s -= a[col][j] * x[j];
        }
        x[col] = s / a[col][col];
    }
    Ok(x)
}

/// One Richardson tableau over values `f(t_0 / 2^k)`, `k = 0..`, for a
/// quantity with an expansion in integer powers of `t`. Eliminates the
/// first `levels` powers; returns the extrapolated limit and the gap
/// between the last two entries of the final column as an error estimate.
pub(crate) fn richardson(values: &[f64], levels: usize) -> Result<(f64, f64)> {
    if values.len() < levels + 2 {
        return Err(Error::InsufficientSamples(format!(
            "{} values for {} extrapolation levels",
            values.len(),
            levels
        )));
    }
    let mut col: Vec<f64> = values.to_vec();
    for j in 1..=levels {
        let w = (2.0_f64).powi(j as i32);
        for k in 0..col.len() - 1 {
            col[k] = (w * col[k + 1] - col[k]) / (w - 1.0);
        }
        col.pop();
    }
    let last = *col.last().unwrap();
    let prev = col[col.len() - 2];
    Ok((last, (last - prev).abs()))
}

/// Median of `log2` ratios of successive differences: the observed order of
/// a sequence `f(t_0 / 2^k)` converging to its limit.
pub(crate) fn observed_order(values: &[f64]) -> f64 {
    let mut orders = Vec::new();
    for w in values.windows(3) {
        let d1 = (w[0] - w[1]).abs();
        let d2 = (w[1] - w[2]).abs();
        if d1 > 0.0 && d2 > 0.0 {
            orders.push((d1 / d2).log2());
        }
    }
    median(&mut orders)
}

/// Median of `log2` ratios of successive values: the observed decay order of
/// a sequence `g(t_0 / 2^k) -> 0`.
pub(crate) fn observed_decay_order(values: &[f64]) -> f64 {
    let mut orders = Vec::new();
    for w in values.windows(2) {
        if w[0].abs() > 0.0 && w[1].abs() > 0.0 {
            orders.push((w[0].abs() / w[1].abs()).log2());
        }
    }
    median(&mut orders)
}

fn median(xs: &mut Vec<f64>) -> f64 {
    if xs.is_empty() {
        return f64::NAN;
    }
    xs.sort_by(f64::total_cmp);
    let n = xs.len();
    if n % 2 == 1 {
        xs[n / 2]
    } else {
        0.5 * (xs[n / 2 - 1] + xs[n / 2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fits_an_exact_cubic() {
        let ts: Vec<f64> = (-4..=4).map(|k| 0.05 * k as f64).collect();
        let ys: Vec<f64> = ts.iter().map(|t| 2.0 - t + 0.5 * t * t - 3.0 * t * t * t).collect();
        let (c, rms) = polyfit(&ts, &ys, 4).unwrap();
        assert!((c[0] - 2.0).abs() < 1e-12);
        assert!((c[1] + 1.0).abs() < 1e-10);
        assert!((c[2] - 0.5).abs() < 1e-9);
        assert!((c[3] + 3.0).abs() < 1e-8);
        assert!(c[4].abs() < 1e-7);
        assert!(rms < 1e-12);
    }

    #[test]
    fn underdetermined_fit_is_rejected() {
        assert!(matches!(
            polyfit(&[0.0, 0.1], &[1.0, 2.0], 3).unwrap_err(),
            Error::IllConditioned
        ));
    }

    #[test]
    fn richardson_kills_low_order_terms() {
        // f(t) = 5 + t + t^2, sampled at 0.1 / 2^k
        let values: Vec<f64> = (0..8)
            .map(|k| {
                let t = 0.1 / (1 << k) as f64;
                5.0 + t + t * t
            })
            .collect();
        let (limit, err) = richardson(&values, 3).unwrap();
        assert!((limit - 5.0).abs() < 1e-12);
        assert!(err < 1e-10);
    }

    #[test]
    fn observed_orders() {
        let linear: Vec<f64> = (0..8).map(|k| 1.0 + 0.1 / (1 << k) as f64).collect();
        assert!((observed_order(&linear) - 1.0).abs() < 0.05);
        let decay15: Vec<f64> = (0..8)
            .map(|k| (0.1 / (1 << k) as f64).powf(1.5))
            .collect();
        assert!((observed_decay_order(&decay15) - 1.5).abs() < 0.05);
    }
}
