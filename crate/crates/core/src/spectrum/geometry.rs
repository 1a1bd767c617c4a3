use serde::Serialize;

use crate::specfun::BesselOrder;
use crate::{Error, Result};

/// Two concentric spheres of radii `a < b` in `D` space dimensions.
///
/// The derived quantities are recomputed from `(a, b)` on every call so they
/// can never drift out of sync.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Geometry {
    dim: u32,
    inner: f64,
    outer: f64,
}

impl Geometry {
    pub fn new(dim: u32, inner: f64, outer: f64) -> Result<Self> {
        if dim < 3 {
            return Err(Error::invalid(format!("require D >= 3, got D={dim}")));
        }
        if !(inner.is_finite() && outer.is_finite()) || inner <= 0.0 {
            return Err(Error::invalid(format!(
                "radii must be finite and positive, got a={inner}, b={outer}"
            )));
        }
        if inner >= outer {
            return Err(Error::invalid(format!(
                "require a < b, got a={inner}, b={outer}"
            )));
        }
        Ok(Self { dim, inner, outer })
    }

    /// Geometry with mean radius `sqrt(ab) = 1` and gap `d = eta`.
    pub fn from_eta(dim: u32, eta: f64) -> Result<Self> {
        if !(eta.is_finite() && eta > 0.0) {
            return Err(Error::invalid(format!("eta must be > 0, got {eta}")));
        }
        // a (a + eta) = 1
        let inner = 2.0 / (eta + (eta * eta + 4.0).sqrt());
        Self::new(dim, inner, inner + eta)
    }

    /// Same shape with both radii multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(self.dim, self.inner * factor, self.outer * factor)
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn inner(&self) -> f64 {
        self.inner
    }

    pub fn outer(&self) -> f64 {
        self.outer
    }

    /// `d = b - a`.
    pub fn gap(&self) -> f64 {
        self.outer - self.inner
    }

    /// `lambda = a / b`.
    pub fn ratio(&self) -> f64 {
        self.inner / self.outer
    }

    /// `sqrt(ab)`.
    pub fn mean_radius(&self) -> f64 {
        (self.inner * self.outer).sqrt()
    }

    /// `eta = d / sqrt(ab)`.
    pub fn eta(&self) -> f64 {
        self.gap() / self.mean_radius()
    }

    /// `xi = 2 d / sqrt(ab)`.
    pub fn xi(&self) -> f64 {
        2.0 * self.eta()
    }
}

/// Angular index `k`, radial index `n >= 1`, and the Bessel order
/// `nu = k + (D-2)/2` they select.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModeIndex {
    k: u32,
    n: u32,
    nu: BesselOrder,
}

impl ModeIndex {
    pub fn new(dim: u32, k: u32, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("radial index n starts at 1"));
        }
        Ok(Self {
            k,
            n,
            nu: BesselOrder::for_mode(k, dim)?,
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn nu(&self) -> BesselOrder {
        self.nu
    }
}
