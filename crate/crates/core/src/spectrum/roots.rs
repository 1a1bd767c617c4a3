use std::f64::consts::PI;

use super::{Geometry, ModeIndex};
use crate::specfun::{bessel_jy, BesselOrder};
use crate::{Error, Result};

/// Scan step as a fraction of the local root spacing; must stay below 1/2.
const GUARD_FRACTION: f64 = 0.45;
/// Residual bound on the frequency equation at an accepted root, relative to
/// the product of the moduli `sqrt(J^2 + Y^2)` at both radii. The ratio is the
/// sine of a phase mismatch, so the test does not depend on how large `Y` is.
const RESIDUAL_TOL: f64 = 1e-10;
const MAX_BRENT_ITERS: usize = 200;

/// Cross product `J_nu(omega b) Y_nu(omega a) - J_nu(omega a) Y_nu(omega b)`.
pub fn freq_eq(geom: &Geometry, nu: BesselOrder, omega: f64) -> Result<f64> {
    freq_eq_parts(geom, nu, omega).map(|(v, _)| v)
}

/// Value and magnitude scale `|H_a| |H_b|` with `|H|^2 = J^2 + Y^2`.
fn freq_eq_parts(geom: &Geometry, nu: BesselOrder, omega: f64) -> Result<(f64, f64)> {
    if omega.is_nan() || omega <= 0.0 {
        return Err(Error::domain(format!("frequency must be > 0, got {omega}")));
    }
    let (ja, ya) = bessel_jy(nu, omega * geom.inner())?;
    let (jb, yb) = bessel_jy(nu, omega * geom.outer())?;
    Ok((jb * ya - ja * yb, ja.hypot(ya) * jb.hypot(yb)))
}

/// `|freq_eq| / (|H_a| |H_b|)`: the sine of the phase mismatch at `omega`.
pub fn relative_residual(geom: &Geometry, nu: BesselOrder, omega: f64) -> Result<f64> {
    let (value, scale) = freq_eq_parts(geom, nu, omega)?;
    Ok(value.abs() / scale)
}

/// Evenly spaced large-frequency spectrum
/// `omega_nk = sqrt((n pi / (b - a))^2 + nu^2 / (ab))`.
pub fn asymptotic_omega(geom: &Geometry, mode: ModeIndex) -> f64 {
    asymptotic_omega_for_order(geom, mode.nu(), mode.n())
}

/// [`asymptotic_omega`] for an explicit order; `nu = 0` is accepted.
pub fn asymptotic_omega_for_order(geom: &Geometry, nu: BesselOrder, n: u32) -> f64 {
    let radial = f64::from(n) * PI / geom.gap();
    let v = nu.value();
    (radial * radial + v * v / (geom.inner() * geom.outer())).sqrt()
}

/// Interval guaranteed to contain the `n`-th root.
///
/// With `u = r^{(D-1)/2} R` the radial problem is `-u'' + (nu^2 - 1/4)/r^2 u =
/// omega^2 u` on `[a, b]`, so the Dirichlet eigenvalues are bracketed by the
/// flat-well values shifted by the extremes of the centrifugal term.
pub fn root_window(geom: &Geometry, nu: BesselOrder, n: u32) -> (f64, f64) {
    let v = nu.value();
    let centrifugal = v * v - 0.25;
    let (a2, b2) = (geom.inner().powi(2), geom.outer().powi(2));
    let (v_lo, v_hi) = if centrifugal >= 0.0 {
        (centrifugal / b2, centrifugal / a2)
    } else {
        (centrifugal / a2, centrifugal / b2)
    };
    let radial = f64::from(n) * PI / geom.gap();
    let base = radial * radial;
    ((base + v_lo).max(0.0).sqrt(), (base + v_hi).max(0.0).sqrt())
}

/// Scan step at frequency `omega`: a fixed fraction of the local spacing of
/// the evenly spaced spectrum, never more than `GUARD_FRACTION * pi / d`.
fn scan_step(geom: &Geometry, nu: BesselOrder, omega: f64) -> f64 {
    let period = PI / geom.gap();
    let v = nu.value();
    let c2 = v * v / (geom.inner() * geom.outer());
    let n_eff = ((omega * omega - c2).max(0.0)).sqrt() / period;
    // d omega / d n = n (pi/d)^2 / omega
    let spacing = period * (period * n_eff.max(1.0) / omega).min(1.0);
    GUARD_FRACTION * spacing
}

/// First `n_max` positive roots of [`freq_eq`], strictly increasing.
///
/// Roots are bracketed by a guard scan that starts below the lowest possible
/// root and advances by less than half the local spacing, then refined by
/// Brent's method. Every root must fall inside its [`root_window`]; anything
/// else is reported as [`Error::RootLoss`] rather than skipped.
pub fn find_roots(geom: &Geometry, nu: BesselOrder, n_max: u32) -> Result<Vec<f64>> {
    if n_max == 0 {
        return Err(Error::invalid("n_max must be >= 1"));
    }
    let (first_lo, _) = root_window(geom, nu, 1);
    let (_, last_hi) = root_window(geom, nu, n_max);
    let scan_end = last_hi + scan_step(geom, nu, last_hi) * 2.0;

    let mut omega = (first_lo - scan_step(geom, nu, first_lo)).max(0.25 * first_lo);
    let mut f_prev = eval_checked(geom, nu, omega)?;
    let mut roots = Vec::with_capacity(n_max as usize);

    while roots.len() < n_max as usize {
        if omega > scan_end {
            return Err(Error::RootLoss(format!(
                "found {} of {n_max} roots for nu={nu} below omega={scan_end}",
                roots.len()
            )));
        }
        let next = omega + scan_step(geom, nu, omega);
        let f_next = eval_checked(geom, nu, next)?;
        if f_next == 0.0 {
            roots.push(next);
            // step past the exact zero so it is not bracketed twice
            omega = next + 1e-9 * scan_step(geom, nu, next);
            f_prev = eval_checked(geom, nu, omega)?;
            continue;
        }
        if f_prev.signum() != f_next.signum() && f_prev != 0.0 {
            let root = brent(|w| freq_eq(geom, nu, w), omega, next, f_prev, f_next)?;
            roots.push(root);
        }
        omega = next;
        f_prev = f_next;
    }

    for (i, &root) in roots.iter().enumerate() {
        let n = i as u32 + 1;
        let (lo, hi) = root_window(geom, nu, n);
        let slack = 1e-12 * hi;
        if root < lo - slack || root > hi + slack {
            return Err(Error::RootLoss(format!(
                "root #{n} for nu={nu} at {root} lies outside its window [{lo}, {hi}]"
            )));
        }
        let (value, scale) = freq_eq_parts(geom, nu, root)?;
        if value.abs() > RESIDUAL_TOL * scale {
            return Err(Error::Convergence {
                message: format!("root #{n} for nu={nu}: residual {value:e} too large"),
                partial: Some(root),
            });
        }
    }
    Ok(roots)
}

fn eval_checked(geom: &Geometry, nu: BesselOrder, omega: f64) -> Result<f64> {
    let v = freq_eq(geom, nu, omega)?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::domain(format!(
            "frequency equation not representable at omega={omega} for nu={nu}"
        )))
    }
}

/// Brent's method on a sign-changing bracket, converged to a few ulps.
fn brent<F>(f: F, lo: f64, hi: f64, f_lo: f64, f_hi: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let (mut a, mut b, mut fa, mut fb) = (lo, hi, f_lo, f_hi);
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for _ in 0..MAX_BRENT_ITERS {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = 2.0 * f64::EPSILON * b.abs();
        let m = 0.5 * (c - b);
        if m.abs() <= tol || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol && fa.abs() > fb.abs() {
            // inverse quadratic or secant step
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol { d } else { tol.copysign(m) };
        fb = f(b)?;
    }
    Err(Error::Convergence {
        message: format!("Brent iteration did not converge in [{lo}, {hi}]"),
        partial: Some(b),
    })
}
