use crate::error::{Error, Result};

/// The transition parameter `t` selecting the geometry `E_t`.
///
/// Negative values give the hyperbolic plane, zero the Euclidean plane and
/// positive values the elliptic plane. The admissible range is `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Param {
    t: f64,
}

/// Sign classification of the parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Param {
    /// The Euclidean plane, `t = 0`.
    pub const EUCLIDEAN: Param = Param { t: 0.0 };

    pub fn new(t: f64) -> Result<Param> {
        if !t.is_finite() || !(-1.0..=1.0).contains(&t) {
            return Err(Error::ParamOutOfRange { t });
        }
        Ok(Param { t })
    }

    #[inline]
    pub fn t(self) -> f64 {
        self.t
    }

    /// Classification is exact on the stored value: only `t == 0.0` is `Zero`.
    #[inline]
    pub fn sign(self) -> Sign {
        if self.t < 0.0 {
            Sign::Negative
        } else if self.t > 0.0 {
            Sign::Positive
        } else {
            Sign::Zero
        }
    }

    /// `sqrt(|t|)`, the factor scaling lengths inside circular or hyperbolic
    /// trigonometric functions.
    #[inline]
    pub fn sqrt_abs(self) -> f64 {
        self.t.abs().sqrt()
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.t == 0.0
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        self.t > 0.0
    }

    #[inline]
    pub fn is_negative(self) -> bool {
        self.t < 0.0
    }

    /// Diameter of the elliptic plane, `pi / (2 sqrt(t))`; `None` for `t <= 0`
    /// where the geometry is unbounded.
    pub fn elliptic_diameter(self) -> Option<f64> {
        if self.t > 0.0 {
            Some(std::f64::consts::FRAC_PI_2 / self.t.sqrt())
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_is_total() {
        assert_eq!(Param::new(-1.0).unwrap().sign(), Sign::Negative);
        assert_eq!(Param::new(0.0).unwrap().sign(), Sign::Zero);
        assert_eq!(Param::new(1e-300).unwrap().sign(), Sign::Positive);
        assert_eq!(Param::EUCLIDEAN.sign(), Sign::Zero);
    }

    #[test]
    fn range_is_enforced() {
        assert!(Param::new(1.0 + 1e-12).is_err());
        assert!(Param::new(f64::NAN).is_err());
        assert!(Param::new(-1.0).is_ok());
    }

    #[test]
    fn elliptic_diameter_matches_normalization() {
        let p = Param::new(4.0_f64.recip()).unwrap(); // t = 0.25
        assert!((p.elliptic_diameter().unwrap() - std::f64::consts::PI).abs() < 1e-15);
        assert!(Param::EUCLIDEAN.elliptic_diameter().is_none());
    }
}
