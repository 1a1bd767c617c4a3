use std::io::{self, Write};

use serde::Serialize;

use crate::energy::{plate_limit, EnergyResult};
use crate::spectrum::Geometry;
use crate::Result;

pub const SCHEMA_VERSION: u32 = 1;

pub const SWEEP_HEADER: [&str; 10] = [
    "D",
    "eta",
    "a",
    "b",
    "method",
    "energy_total",
    "energy_per_area",
    "scaled_plate_ratio",
    "k_max",
    "trunc_est",
];

/// One flat output row. Floats are written in shortest round-trip form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyRecord {
    #[serde(rename = "D")]
    pub dim: u32,
    pub eta: f64,
    pub a: f64,
    pub b: f64,
    pub method: String,
    pub energy_total: f64,
    pub energy_per_area: f64,
    /// `per_area / plate_limit(D, d)`.
    pub scaled_plate_ratio: f64,
    pub k_max: Option<u32>,
    pub trunc_est: Option<f64>,
}

#[derive(Serialize)]
struct Versioned<'a> {
    schema: u32,
    #[serde(flatten)]
    record: &'a EnergyRecord,
}

impl EnergyRecord {
    pub fn new(geom: &Geometry, result: &EnergyResult) -> Result<Self> {
        let plate = plate_limit(geom.dim(), geom.gap())?;
        Ok(Self {
            dim: geom.dim(),
            eta: geom.eta(),
            a: geom.inner(),
            b: geom.outer(),
            method: result.method.as_str().to_string(),
            energy_total: result.total_energy,
            energy_per_area: result.per_inner_area,
            scaled_plate_ratio: result.per_inner_area / plate,
            k_max: result.diagnostics.k_max,
            trunc_est: result.diagnostics.truncation_estimate,
        })
    }

    pub fn write_text(&self, out: &mut dyn Write) -> io::Result<()> {
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        writeln!(out, "method:             {}", self.method)?;
        writeln!(out, "D:                  {}", self.dim)?;
        writeln!(out, "a:                  {}", num(self.a))?;
        writeln!(out, "b:                  {}", num(self.b))?;
        writeln!(out, "eta:                {}", num(self.eta))?;
        writeln!(out, "energy_total:       {}", num(self.energy_total))?;
        writeln!(out, "energy_per_area:    {}", num(self.energy_per_area))?;
        writeln!(out, "scaled_plate_ratio: {}", num(self.scaled_plate_ratio))?;
        writeln!(
            out,
            "k_max:              {}",
            opt(self.k_max.map(|k| k.to_string()))
        )?;
        writeln!(out, "trunc_est:          {}", opt(self.trunc_est.map(num)))
    }
}

/// Shortest round-trip text, switching to exponent form outside `[1e-5, 1e16)`.
fn num(x: f64) -> String {
    let m = x.abs();
    if m == 0.0 || (1e-5..1e16).contains(&m) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

pub(super) fn write_records(
    records: &[EnergyRecord],
    json: bool,
    out: &mut dyn Write,
) -> std::result::Result<(), super::Failure> {
    if json {
        let rows: Vec<Versioned<'_>> = records
            .iter()
            .map(|record| Versioned {
                schema: SCHEMA_VERSION,
                record,
            })
            .collect();
        serde_json::to_writer_pretty(&mut *out, &rows)?;
        writeln!(out)?;
    } else {
        let mut w = csv::WriterBuilder::new()
            .has_headers(false)
            .from_writer(out);
        w.write_record(SWEEP_HEADER)?;
        for r in records {
            w.serialize(r)?;
        }
        w.flush()?;
    }
    Ok(())
}

/// One row of the spectrum table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumRow {
    pub n: u32,
    pub nu: f64,
    pub exact: f64,
    pub asymptotic: f64,
    pub rel_diff: f64,
    /// Frequency-equation residual over `|H_a| |H_b|`.
    pub residual: f64,
}
