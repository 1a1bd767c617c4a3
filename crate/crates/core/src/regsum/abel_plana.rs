//! Abel-Plana summation for sums over the integers and half-integers.

use std::f64::consts::PI;

use super::quadrature::{integrate, QuadratureConfig};
use crate::{Error, Result};

/// A function analytic in the right half-plane, evaluated on the real axis
/// and on the imaginary axis.
///
/// Values on the imaginary axis are limits from `Re z > 0`; any branch cut the
/// function has there is the implementor's to resolve. For functions real on
/// the real axis, `imaginary_axis(-t)` is the complex conjugate of
/// `imaginary_axis(t)`.
pub trait AnalyticFunction {
    fn real(&self, x: f64) -> f64;
    /// `f(i t)` as `(Re, Im)`.
    fn imaginary_axis(&self, t: f64) -> (f64, f64);
}

/// Adapter turning a pair of closures into an [`AnalyticFunction`].
pub struct FnPair<R, I> {
    pub real: R,
    pub imaginary: I,
}

impl<R, I> AnalyticFunction for FnPair<R, I>
where
    R: Fn(f64) -> f64,
    I: Fn(f64) -> (f64, f64),
{
    fn real(&self, x: f64) -> f64 {
        (self.real)(x)
    }

    fn imaginary_axis(&self, t: f64) -> (f64, f64) {
        (self.imaginary)(t)
    }
}

/// Growth of `|f(i t)|` as `t -> infinity`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Growth {
    Bounded,
    /// `|f(it)| <= scale (1 + |t|)^degree`
    Polynomial(u32),
    /// `|f(it)| <= scale e^{rate |t|}`; needs `rate < 2 pi`.
    Exponential(f64),
}

/// Caller-asserted decay class of the contour integrand. Analyticity and the
/// bound itself cannot be checked mechanically; a wrong descriptor gives a
/// wrong truncation point, not an error.
#[derive(Debug, Clone, PartialEq)]
pub struct TailBound {
    pub growth: Growth,
    pub scale: f64,
    /// Points on `t > 0` where `f(it)` is not smooth (branch points).
    pub breakpoints: Vec<f64>,
}

impl TailBound {
    pub fn new(growth: Growth, scale: f64) -> Self {
        Self {
            growth,
            scale,
            breakpoints: Vec::new(),
        }
    }

    pub fn with_breakpoints(mut self, points: impl IntoIterator<Item = f64>) -> Self {
        self.breakpoints.extend(points);
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.scale.is_finite() && self.scale > 0.0) {
            return Err(Error::NonConvergentTail(format!(
                "bound scale must be finite and > 0, got {}",
                self.scale
            )));
        }
        if let Growth::Exponential(rate) = self.growth {
            if !rate.is_finite() || rate >= 2.0 * PI {
                return Err(Error::NonConvergentTail(format!(
                    "growth rate {rate} is not below 2 pi"
                )));
            }
        }
        Ok(())
    }

    /// Upper bound on `int_t^inf 2 |f(is)| e^{-2 pi s} / (1 - e^{-2 pi s}) ds`.
    fn tail_beyond(&self, t: f64) -> f64 {
        let denom = -(-2.0 * PI * t).exp_m1();
        let two_m = 2.0 * self.scale;
        match self.growth {
            Growth::Bounded => two_m * (-2.0 * PI * t).exp() / (2.0 * PI) / denom,
            Growth::Polynomial(p) => {
                let p = f64::from(p);
                let rate = 2.0 * PI - p / (1.0 + t);
                if rate <= 0.0 {
                    return f64::INFINITY;
                }
                two_m * (1.0 + t).powf(p) * (-2.0 * PI * t).exp() / rate / denom
            }
            Growth::Exponential(r) => {
                let rate = 2.0 * PI - r;
                two_m * (-rate * t).exp() / rate / denom
            }
        }
    }

    fn cutoff(&self, target: f64) -> f64 {
        let mut t = 1.0;
        while self.tail_beyond(t) > target && t < 1e4 {
            t += 0.25;
        }
        t
    }
}

fn contour_integral<F>(
    f: &F,
    tail: &TailBound,
    q: &QuadratureConfig,
    weight: impl Fn(f64) -> f64,
) -> Result<f64>
where
    F: AnalyticFunction + ?Sized,
{
    tail.validate()?;
    let t_max = tail.cutoff(1e-3 * q.abs_tol);
    // Im f(it) - Im f(-it)
    let jump = |t: f64| {
        let (_, up) = f.imaginary_axis(t);
        let (_, down) = f.imaginary_axis(-t);
        (up - down) * weight(t)
    };
    Ok(integrate(jump, 0.0, t_max, &tail.breakpoints, q.rel_tol, q.abs_tol)?.value)
}

/// `sum_{n>=0} f(n) - int_0^inf f(x) dx`, evaluated as
/// `f(0)/2 + i int_0^inf [f(it) - f(-it)] / (e^{2 pi t} - 1) dt`.
pub fn abel_plana_integer<F>(f: &F, tail: &TailBound, q: &QuadratureConfig) -> Result<f64>
where
    F: AnalyticFunction + ?Sized,
{
    // i (f(it) - f(-it)) has real part -(Im f(it) - Im f(-it))
    let integral = contour_integral(f, tail, q, |t| -1.0 / (2.0 * PI * t).exp_m1())?;
    Ok(0.5 * f.real(0.0) + integral)
}

/// `sum_{n>=0} f(n + 1/2) - int_0^inf f(x) dx`, evaluated as
/// `-i int_0^inf [f(it) - f(-it)] / (e^{2 pi t} + 1) dt`.
pub fn abel_plana_half<F>(f: &F, tail: &TailBound, q: &QuadratureConfig) -> Result<f64>
where
    F: AnalyticFunction + ?Sized,
{
    contour_integral(f, tail, q, |t| 1.0 / ((2.0 * PI * t).exp() + 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exp_decay() -> FnPair<impl Fn(f64) -> f64, impl Fn(f64) -> (f64, f64)> {
        FnPair {
            real: |x: f64| (-x).exp(),
            imaginary: |t: f64| (t.cos(), -t.sin()),
        }
    }

    #[test]
    fn zero_function() {
        let zero = FnPair {
            real: |_x: f64| 0.0,
            imaginary: |_t: f64| (0.0, 0.0),
        };
        let tail = TailBound::new(Growth::Bounded, 1.0);
        let q = QuadratureConfig::default();
        assert_eq!(abel_plana_integer(&zero, &tail, &q).unwrap(), 0.0);
        assert_eq!(abel_plana_half(&zero, &tail, &q).unwrap(), 0.0);
    }

    #[test]
    fn rejects_fast_growth() {
        let tail = TailBound::new(Growth::Exponential(2.0 * PI), 1.0);
        let q = QuadratureConfig::default();
        let err = abel_plana_integer(&exp_decay(), &tail, &q).unwrap_err();
        assert!(matches!(err, Error::NonConvergentTail(_)));
        let tail = TailBound::new(Growth::Bounded, f64::NAN);
        assert!(abel_plana_half(&exp_decay(), &tail, &q).is_err());
    }

    #[test]
    fn exponential_identity() {
        let tail = TailBound::new(Growth::Bounded, 1.0);
        let q = QuadratureConfig::default();
        let e1 = (-1.0f64).exp();
        let int = abel_plana_integer(&exp_decay(), &tail, &q).unwrap();
        assert!((int - (1.0 / (1.0 - e1) - 1.0)).abs() < 1e-12);
        let half = abel_plana_half(&exp_decay(), &tail, &q).unwrap();
        assert!((half - ((-0.5f64).exp() / (1.0 - e1) - 1.0)).abs() < 1e-12);
    }
}
