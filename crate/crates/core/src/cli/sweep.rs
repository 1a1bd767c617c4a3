use crate::energy::{self, Method, NumericConfig};
use crate::spectrum::Geometry;
use crate::{Error, Result};

use super::records::EnergyRecord;

/// A list of `eta` samples at fixed `sqrt(ab) = 1`, evaluated by each method.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    dim: u32,
    eta_values: Vec<f64>,
    methods: Vec<Method>,
}

impl SweepSpec {
    /// The etas must lie in `(0, 1)` and be strictly monotone; either
    /// direction is accepted and kept as given.
    pub fn new(dim: u32, eta_values: Vec<f64>, methods: Vec<Method>) -> Result<Self> {
        if eta_values.is_empty() {
            return Err(Error::invalid("eta list is empty"));
        }
        if let Some(bad) = eta_values.iter().find(|&&e| !(e > 0.0 && e < 1.0)) {
            return Err(Error::invalid(format!(
                "eta values must lie in (0, 1), got {bad}"
            )));
        }
        let rising = eta_values.windows(2).all(|w| w[1] > w[0]);
        let falling = eta_values.windows(2).all(|w| w[1] < w[0]);
        if !(rising || falling) {
            return Err(Error::invalid("eta values must be strictly monotone"));
        }
        super::check_methods(dim, &methods)?;
        Geometry::from_eta(dim, eta_values[0])?;
        Ok(Self {
            dim,
            eta_values,
            methods,
        })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn eta_values(&self) -> &[f64] {
        &self.eta_values
    }

    pub fn methods(&self) -> &[Method] {
        &self.methods
    }

    /// One record per (eta, method), eta-major, methods in the given order.
    pub fn run(&self, config: &NumericConfig) -> Result<Vec<EnergyRecord>> {
        let mut rows = Vec::with_capacity(self.eta_values.len() * self.methods.len());
        for &eta in &self.eta_values {
            let geom = Geometry::from_eta(self.dim, eta)?;
            for &m in &self.methods {
                let result = energy::energy(&geom, m, config)?;
                rows.push(EnergyRecord::new(&geom, &result)?);
            }
        }
        Ok(rows)
    }
}
