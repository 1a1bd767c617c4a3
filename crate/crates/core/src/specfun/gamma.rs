use std::f64::consts::PI;

use crate::{Error, Result};

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Largest argument for which Gamma is finite in f64.
const GAMMA_MAX_ARG: f64 = 171.6;

fn check_arg(x: f64) -> Result<()> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::domain(format!("Gamma requires x > 0, got {x}")));
    }
    Ok(())
}

/// `Gamma(x)` for `x > 0`.
///
/// Integers and half-integers are computed by the exact product recurrence
/// from `Gamma(1) = 1` and `Gamma(1/2) = sqrt(pi)`; other arguments fall back
/// to a Lanczos approximation.
pub fn gamma_fn(x: f64) -> Result<f64> {
    check_arg(x)?;
    if x > GAMMA_MAX_ARG {
        return Ok(f64::INFINITY);
    }
    let twice = 2.0 * x;
    if twice.fract() == 0.0 {
        let (mut acc, mut z) = if x.fract() == 0.0 {
            (1.0, 1.0)
        } else {
            (PI.sqrt(), 0.5)
        };
        while z < x {
            acc *= z;
            z += 1.0;
        }
        return Ok(acc);
    }
    Ok(lanczos(x))
}

fn lanczos(x: f64) -> f64 {
    if x < 0.5 {
        // reflection
        return PI / ((PI * x).sin() * lanczos(1.0 - x));
    }
    let z = x - 1.0;
    let mut sum = LANCZOS_COEF[0];
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        sum += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * sum
}

/// `ln Gamma(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    check_arg(x)?;
    if x <= 30.0 {
        return Ok(gamma_fn(x)?.ln());
    }
    // Stirling series; the first omitted term is below 1e-17 for x > 30.
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let series = inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0)));
    Ok((x - 0.5) * x.ln() - x + 0.5 * (2.0 * PI).ln() + series)
}
