use std::fmt;

use crate::{Error, Result};

/// A Bessel order restricted to the lattice `nu = j/2`, `j = 0, 1, 2, ...`.
///
/// Stored as `twice = 2*nu` so integer and half-integer orders are told apart
/// without floating-point comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BesselOrder {
    twice: u32,
}

impl BesselOrder {
    /// Order `j/2`.
    pub const fn from_twice(twice: u32) -> Self {
        Self { twice }
    }

    pub const fn integer(n: u32) -> Self {
        Self { twice: 2 * n }
    }

    /// Order `m + 1/2`.
    pub const fn half_odd(m: u32) -> Self {
        Self { twice: 2 * m + 1 }
    }

    /// The order `k + (D-2)/2` attached to angular index `k` in `D` dimensions.
    pub fn for_mode(k: u32, dim: u32) -> Result<Self> {
        if dim < 2 {
            return Err(Error::invalid(format!("dimension must be >= 2, got {dim}")));
        }
        Ok(Self {
            twice: 2 * k + dim - 2,
        })
    }

    /// Parses a floating-point order, rejecting anything off the lattice.
    pub fn new(nu: f64) -> Result<Self> {
        if !nu.is_finite() || nu < 0.0 {
            return Err(Error::domain(format!(
                "Bessel order must be >= 0, got {nu}"
            )));
        }
        let twice = 2.0 * nu;
        if twice.fract() != 0.0 || twice > u32::MAX as f64 {
            return Err(Error::domain(format!(
                "Bessel order {nu} is not on the half-integer lattice"
            )));
        }
        Ok(Self {
            twice: twice as u32,
        })
    }

    pub const fn twice(self) -> u32 {
        self.twice
    }

    pub fn value(self) -> f64 {
        f64::from(self.twice) * 0.5
    }

    pub const fn is_integer(self) -> bool {
        self.twice.is_multiple_of(2)
    }
}

impl fmt::Display for BesselOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Argument pair `(s = -p, q)` for the Hurwitz zeta function at a
/// non-positive integer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaArg {
    p: u32,
    q: f64,
}

impl ZetaArg {
    pub fn new(p: u32, q: f64) -> Result<Self> {
        if !(q.is_finite() && q > 0.0) {
            return Err(Error::domain(format!(
                "Hurwitz offset must be > 0, got {q}"
            )));
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }
}
