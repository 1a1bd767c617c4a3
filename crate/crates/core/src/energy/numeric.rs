use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::{Diagnostics, EnergyResult, Method};
use crate::regsum::{bose_integral, QuadratureConfig};
use crate::specfun::hurwitz_zeta_neg_exact;
use crate::spectrum::{DegeneracyPolynomial, Geometry};
use crate::{Error, Result};

/// How many angular indices to sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KMax {
    /// Stop once the rigorous tail bound drops below `sum_tol |sum|`.
    Auto,
    /// Sum exactly `k = 0 .. n - 1`; fails if the tail bound is still too big.
    Fixed(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NumericConfig {
    pub quadrature: QuadratureConfig,
    pub k_max: KMax,
    /// Relative tolerance on the truncated k-sum.
    pub sum_tol: f64,
    /// Largest `k_max` that `KMax::Auto` may reach.
    pub k_cap: u32,
}

impl NumericConfig {
    pub const DEFAULT_SUM_TOL: f64 = 1e-14;
    pub const DEFAULT_K_CAP: u32 = 10_000;
}

impl Default for NumericConfig {
    fn default() -> Self {
        Self {
            quadrature: QuadratureConfig::default(),
            k_max: KMax::Auto,
            sum_tol: Self::DEFAULT_SUM_TOL,
            k_cap: Self::DEFAULT_K_CAP,
        }
    }
}

/// Numeric regularized mode sum with default summation tolerances.
pub fn energy_numeric(geom: &Geometry, q: &QuadratureConfig, k_max: KMax) -> Result<EnergyResult> {
    energy_numeric_with(
        geom,
        &NumericConfig {
            quadrature: *q,
            k_max,
            ..NumericConfig::default()
        },
    )
}

struct ModeSum<'a> {
    poly: DegeneracyPolynomial,
    geom: &'a Geometry,
    offset: f64,
}

impl ModeSum<'_> {
    fn nu(&self, k: u32) -> f64 {
        f64::from(k) + self.offset
    }

    /// `(1/2) g(nu) (2 d c^2 / pi)`, the weight of the Bose integral.
    fn weight(&self, k: u32) -> f64 {
        let nu = self.nu(k);
        let c = nu / self.geom.mean_radius();
        0.5 * self.poly.eval(nu) * 2.0 * self.geom.gap() * c * c / PI
    }

    fn x(&self, k: u32) -> f64 {
        self.geom.xi() * self.nu(k)
    }

    /// Bound on `|term_k|` from
    /// `int_1^inf sqrt(y^2-1)/(e^{xy}-1) dy <= e^{-x} (1+x) / (x^2 (1-e^{-x}))`.
    fn bound(&self, k: u32) -> f64 {
        let x = self.x(k);
        self.weight(k) * (-x).exp() * (1.0 + x) / (x * x * -(-x).exp_m1())
    }

    /// Explicit sum of the bounds from `k0` on, closed with a geometric
    /// remainder once the ratios are below one and the rest is negligible.
    fn tail(&self, k0: u32) -> f64 {
        let mut total = 0.0;
        let mut k = k0;
        let mut b = self.bound(k);
        loop {
            if b == 0.0 || !b.is_finite() {
                return if b == 0.0 { total } else { f64::INFINITY };
            }
            let next = self.bound(k + 1);
            let r = next / b;
            total += b;
            if r < 1.0 {
                let rest = next / (1.0 - r);
                if rest <= 1e-6 * total {
                    return total + rest;
                }
            }
            if k - k0 > 10_000_000 {
                return f64::INFINITY;
            }
            k += 1;
            b = next;
        }
    }

    /// Cheap geometric estimate of the tail from `k0`, infinite while the
    /// bounds are still growing.
    fn quick_tail(&self, k0: u32) -> f64 {
        let b1 = self.bound(k0);
        if b1 == 0.0 {
            return 0.0;
        }
        let r = self.bound(k0 + 1) / b1;
        if r < 1.0 {
            b1 / (1.0 - r)
        } else {
            f64::INFINITY
        }
    }
}

/// `sum_k nu g(nu)` over `nu = k + (D-2)/2`, as an exact zeta-regularized
/// rational: each power `nu^{p+1}` becomes `zeta(-(p+1), (D-2)/2)`.
fn regularized_power_sum(poly: &DegeneracyPolynomial) -> BigRational {
    let q = BigRational::new(BigInt::from(poly.dim() - 2), BigInt::from(2));
    poly.coefficients()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(BigRational::zero(), |acc, (p, c)| {
            acc + c * hurwitz_zeta_neg_exact(p as u32 + 1, &q)
        })
}

struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    fn add(&mut self, x: f64) {
        let y = x - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }
}

/// `E = -(1/(4 sqrt(ab))) sum_k nu g(nu) - (1/2) sum_k g(nu) (2 d c^2/pi) I(2 d c)`
/// with `c = nu / sqrt(ab)` and `I` the Bose integral.
///
/// The first sum is evaluated exactly by zeta regularization; the second is
/// summed in ascending `k` with compensated accumulation.
pub fn energy_numeric_with(geom: &Geometry, config: &NumericConfig) -> Result<EnergyResult> {
    if geom.dim() < 4 {
        return Err(Error::invalid(format!(
            "numeric route requires D >= 4, got D={}",
            geom.dim()
        )));
    }
    if !(config.sum_tol.is_finite() && config.sum_tol > 0.0) {
        return Err(Error::invalid(format!(
            "sum tolerance must be > 0, got {}",
            config.sum_tol
        )));
    }
    if let KMax::Fixed(0) = config.k_max {
        return Err(Error::invalid("k_max must be >= 1"));
    }
    let poly = DegeneracyPolynomial::new(geom.dim())?;
    let power_sum = regularized_power_sum(&poly).to_f64().unwrap_or(f64::NAN);
    let divergent = -power_sum / (4.0 * geom.mean_radius());
    let modes = ModeSum {
        poly,
        geom,
        offset: 0.5 * f64::from(geom.dim() - 2),
    };
    let q = &config.quadrature;

    let mut acc = Kahan {
        sum: divergent,
        comp: 0.0,
    };
    let mut per_k = Vec::new();
    let mut quad_err = 0.0;
    let limit = match config.k_max {
        KMax::Auto => config.k_cap,
        KMax::Fixed(n) => n,
    };

    let mut k = 0;
    let trunc = loop {
        let w = modes.weight(k);
        let floor = 1e-6 * q.rel_tol * acc.sum.abs() / w;
        let integral = bose_integral(modes.x(k), q, floor.max(f64::MIN_POSITIVE))?;
        let term = -w * integral.value;
        acc.add(term);
        per_k.push(term);
        quad_err += w * integral.abs_err;
        k += 1;

        let target = config.sum_tol * acc.sum.abs();
        let check = match config.k_max {
            KMax::Auto => k >= limit || modes.quick_tail(k) <= target,
            KMax::Fixed(n) => k >= n,
        };
        if check {
            let tail = modes.tail(k);
            if tail <= target {
                break tail;
            }
            if k < limit {
                continue;
            }
            return Err(Error::Convergence {
                message: format!(
                    "k-sum tail bound {tail:e} exceeds {target:e} after k_max={k} terms"
                ),
                partial: Some(acc.sum),
            });
        }
    };

    let total = acc.sum;
    Ok(EnergyResult {
        total_energy: total,
        per_inner_area: total / super::surface_area(geom.dim(), geom.inner()),
        method: Method::Numeric,
        diagnostics: Diagnostics {
            k_max: Some(k),
            truncation_estimate: Some(trunc),
            quadrature_error: Some(quad_err),
            divergent_part: Some(divergent),
            per_k,
        },
    })
}
