#![allow(clippy::excessive_precision)]

//! Globally adaptive Gauss-Kronrod (10/21) quadrature on finite intervals.

use serde::Serialize;

use crate::{Error, Result};

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_600_525_614_478,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

// Gauss weights for XGK[1], XGK[3], ..., XGK[9]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

const MAX_PANELS: usize = 4000;

/// Tolerances for the integrals behind the regularized sums.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Truncation parameter `T`: the Bose-factor integral stops where the
    /// integrand has fallen by `e^{-T}` from its value at the lower endpoint.
    pub truncation: f64,
}

impl QuadratureConfig {
    pub const DEFAULT_REL_TOL: f64 = 1e-13;
    pub const DEFAULT_ABS_TOL: f64 = 1e-15;
    pub const DEFAULT_TRUNCATION: f64 = 40.0;
    pub const MIN_TRUNCATION: f64 = 30.0;

    pub fn new(rel_tol: f64, abs_tol: f64, truncation: f64) -> Result<Self> {
        if !(rel_tol.is_finite() && rel_tol > 0.0) {
            return Err(Error::invalid(format!(
                "rel_tol must be > 0, got {rel_tol}"
            )));
        }
        if !(abs_tol.is_finite() && abs_tol > 0.0) {
            return Err(Error::invalid(format!(
                "abs_tol must be > 0, got {abs_tol}"
            )));
        }
        if !(truncation.is_finite() && truncation >= Self::MIN_TRUNCATION) {
            return Err(Error::invalid(format!(
                "truncation T must be >= {}, got {truncation}",
                Self::MIN_TRUNCATION
            )));
        }
        Ok(Self {
            rel_tol,
            abs_tol,
            truncation,
        })
    }
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            rel_tol: Self::DEFAULT_REL_TOL,
            abs_tol: Self::DEFAULT_ABS_TOL,
            truncation: Self::DEFAULT_TRUNCATION,
        }
    }
}

/// Integral value with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub abs_err: f64,
    pub panels: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    lo: f64,
    hi: f64,
    value: f64,
    err: f64,
}

fn kronrod<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Panel {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut kron = fc * WGK[10];
    let mut gauss = 0.0;
    let mut res_abs = kron.abs();
    let mut fv = [0.0; 20];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        kron += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kron;
    let mut res_asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv[2 * j] - mean).abs() + (fv[2 * j + 1] - mean).abs());
    }
    let scale = half.abs();
    let value = kron * half;
    res_abs *= scale;
    res_asc *= scale;
    // QUADPACK error rescaling
    let mut err = ((kron - gauss) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    Panel { lo, hi, value, err }
}

/// `int_lo^hi f` to `max(abs_tol, rel_tol |I|)`, splitting first at the given
/// interior breakpoints. Panels are always bisected in a fixed order, so the
/// result is bit-reproducible.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    breakpoints: &[f64],
    rel_tol: f64,
    abs_tol: f64,
) -> Result<Quadrature> {
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(Error::invalid(format!(
            "integration limits must be finite: [{lo}, {hi}]"
        )));
    }
    if hi <= lo {
        return Ok(Quadrature {
            value: 0.0,
            abs_err: 0.0,
            panels: 0,
        });
    }
    let mut cuts: Vec<f64> = breakpoints
        .iter()
        .copied()
        .filter(|&p| p > lo && p < hi)
        .collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let mut edges = Vec::with_capacity(cuts.len() + 2);
    edges.push(lo);
    edges.extend(cuts);
    edges.push(hi);

    let mut panels: Vec<Panel> = edges.windows(2).map(|w| kronrod(&f, w[0], w[1])).collect();

    loop {
        let (total, err) = totals(&panels);
        if !total.is_finite() {
            return Err(Error::Convergence {
                message: "integrand produced a non-finite value".into(),
                partial: None,
            });
        }
        let target = abs_tol.max(rel_tol * total.abs());
        if err <= target {
            return Ok(Quadrature {
                value: total,
                abs_err: err,
                panels: panels.len(),
            });
        }
        if panels.len() >= MAX_PANELS {
            return Err(Error::Convergence {
                message: format!(
                    "adaptive quadrature hit {MAX_PANELS} panels with error {err:e} > {target:e}"
                ),
                partial: Some(total),
            });
        }
        let worst =
            panels.iter().enumerate().fold(
                0,
                |best, (i, p)| if p.err > panels[best].err { i } else { best },
            );
        let Panel { lo, hi, .. } = panels[worst];
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // interval exhausted at f64 resolution
            return Ok(Quadrature {
                value: total,
                abs_err: err,
                panels: panels.len(),
            });
        }
        panels[worst] = kronrod(&f, lo, mid);
        panels.insert(worst + 1, kronrod(&f, mid, hi));
    }
}

/// Compensated sum of panel values in left-to-right order.
fn totals(panels: &[Panel]) -> (f64, f64) {
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut err = 0.0;
    for p in panels {
        let y = p.value - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        err += p.err;
    }
    (sum, err)
}
