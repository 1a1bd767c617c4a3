//! Regularized sum over the evenly spaced radial spectrum of one angular mode.

use std::f64::consts::PI;

use super::quadrature::{integrate, Quadrature, QuadratureConfig};
use crate::{Error, Result};

/// One angular mode's radial sum `sum_{n>=1} sqrt((n pi / d)^2 + c^2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegularizedSummand {
    c: f64,
    gap: f64,
}

impl RegularizedSummand {
    pub fn new(c: f64, gap: f64) -> Result<Self> {
        if !(c.is_finite() && c >= 0.0) {
            return Err(Error::domain(format!(
                "mode offset c must be finite and >= 0, got {c}"
            )));
        }
        if !(gap.is_finite() && gap > 0.0) {
            return Err(Error::domain(format!(
                "gap must be finite and > 0, got {gap}"
            )));
        }
        Ok(Self { c, gap })
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn gap(&self) -> f64 {
        self.gap
    }

    /// Argument of the Bose factor, `2 d c`.
    pub fn xi_nu(&self) -> f64 {
        2.0 * self.gap * self.c
    }
}

/// `int_1^inf sqrt(y^2 - 1) / (e^{x y} - 1) dy` for `x > 0`, cut off where the
/// Bose factor has dropped by `e^{-T}` relative to its value at `y = 1`.
///
/// Computed as `int_0^U sinh^2 u / expm1(x cosh u) du` with
/// `x (cosh U - 1) = T`, which removes the square-root endpoint behaviour.
pub fn bose_integral(x: f64, q: &QuadratureConfig, abs_tol: f64) -> Result<Quadrature> {
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::domain(format!("Bose integral needs x > 0, got {x}")));
    }
    let u_max = (1.0 + q.truncation / x).acosh();
    let knee = (1.0 + 1.0 / x).acosh();
    let f = |u: f64| {
        let s = u.sinh();
        s * s / (x * u.cosh()).exp_m1()
    };
    integrate(f, 0.0, u_max, &[knee], q.rel_tol, abs_tol)
}

/// Regularized value of the radial sum:
/// `-c/2 - (2 d c^2 / pi) int_1^inf sqrt(y^2 - 1) / (e^{2 d c y} - 1) dy`.
///
/// At `c = 0` this is `-pi / (12 d)`. The `q.abs_tol` applies to the returned
/// value, `q.rel_tol` to the integral.
pub fn reg_radial_sum(s: &RegularizedSummand, q: &QuadratureConfig) -> Result<f64> {
    let (c, d) = (s.c, s.gap);
    if c == 0.0 {
        return Ok(-PI / (12.0 * d));
    }
    let prefactor = 2.0 * d * c * c / PI;
    let integral = bose_integral(s.xi_nu(), q, q.abs_tol / prefactor)?;
    Ok(-0.5 * c - prefactor * integral.value)
}
