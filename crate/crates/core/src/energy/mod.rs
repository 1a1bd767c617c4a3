//! Casimir energy by three routes: the closed forms, the numeric regularized
//! mode sum, and the parallel-plate limit.

mod closed_form;
mod numeric;

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::specfun::{gamma_fn, riemann_zeta_int};
use crate::spectrum::Geometry;
use crate::{Error, Result};

pub use closed_form::{
    closed_form_table, coefficient_audit, derived_correction, energy_closed_form, AuditReport,
    AuditRow, ClosedForm, CorrectionAudit, CorrectionStatus, CorrectionTerm,
};
pub use numeric::{energy_numeric, energy_numeric_with, KMax, NumericConfig};

/// Which route produced an [`EnergyResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Numeric,
    PlateLimit,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::ClosedForm, Method::Numeric, Method::PlateLimit];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::Numeric => "numeric",
            Method::PlateLimit => "plate_limit",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().replace('-', "_").as_str() {
            "closed_form" => Ok(Method::ClosedForm),
            "numeric" => Ok(Method::Numeric),
            "plate_limit" => Ok(Method::PlateLimit),
            other => Err(Error::invalid(format!(
                "unknown method '{other}' (expected closed-form, numeric or plate-limit)"
            ))),
        }
    }
}

/// Convergence bookkeeping. Only the numeric route fills these in.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Diagnostics {
    /// Number of angular indices summed, `k = 0 .. k_max - 1`.
    pub k_max: Option<u32>,
    /// Upper bound on the omitted tail of the k-sum.
    pub truncation_estimate: Option<f64>,
    /// Sum of the per-k quadrature error estimates.
    pub quadrature_error: Option<f64>,
    /// The zeta-regularized `-(1/(4 sqrt(ab))) sum_k nu g(nu)` piece.
    pub divergent_part: Option<f64>,
    /// Bose-integral contribution of each k, in ascending order.
    pub per_k: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyResult {
    pub total_energy: f64,
    /// Energy per unit area of the inner sphere.
    pub per_inner_area: f64,
    pub method: Method,
    pub diagnostics: Diagnostics,
}

impl EnergyResult {
    fn from_per_area(geom: &Geometry, per_inner_area: f64, method: Method) -> Self {
        Self {
            total_energy: per_inner_area * surface_area(geom.dim(), geom.inner()),
            per_inner_area,
            method,
            diagnostics: Diagnostics::default(),
        }
    }
}

/// Area `2 pi^{D/2} r^{D-1} / Gamma(D/2)` of the sphere of radius `r` in
/// `D` dimensions.
pub fn surface_area(dim: u32, r: f64) -> f64 {
    let d = f64::from(dim);
    let gamma = gamma_fn(0.5 * d).unwrap_or(f64::NAN);
    2.0 * PI.powf(0.5 * d) * r.powi(dim as i32 - 1) / gamma
}

/// `-Gamma((D+1)/2) zeta(D+1) / (4 pi)^{(D+1)/2}`, the plate energy per area
/// at unit separation.
pub fn plate_limit_coefficient(dim: u32) -> Result<f64> {
    if dim < 3 {
        return Err(Error::invalid(format!(
            "plate limit requires D >= 3, got D={dim}"
        )));
    }
    let s = 0.5 * f64::from(dim + 1);
    Ok(-gamma_fn(s)? * riemann_zeta_int(dim + 1)? / (4.0 * PI).powf(s))
}

/// Energy per unit area of two parallel plates a distance `d` apart.
pub fn plate_limit(dim: u32, d: f64) -> Result<f64> {
    if !(d.is_finite() && d > 0.0) {
        return Err(Error::invalid(format!(
            "plate separation must be > 0, got {d}"
        )));
    }
    Ok(plate_limit_coefficient(dim)? / d.powi(dim as i32))
}

/// The plate formula applied at the shell's gap, spread over the inner sphere.
pub fn energy_plate_limit(geom: &Geometry) -> Result<EnergyResult> {
    let per_area = plate_limit(geom.dim(), geom.gap())?;
    Ok(EnergyResult::from_per_area(
        geom,
        per_area,
        Method::PlateLimit,
    ))
}

/// Dispatch to one route with default tolerances for the numeric sum.
pub fn energy(geom: &Geometry, method: Method, config: &NumericConfig) -> Result<EnergyResult> {
    match method {
        Method::ClosedForm => energy_closed_form(geom),
        Method::Numeric => energy_numeric_with(geom, config),
        Method::PlateLimit => energy_plate_limit(geom),
    }
}
