//! Bessel functions of the first and second kind on the half-integer order
//! lattice.
//!
//! Half-integer orders start from the closed forms
//! `J_{1/2} = sqrt(2/(pi x)) sin x`, `J_{-1/2} = sqrt(2/(pi x)) cos x` and the
//! matching `Y` pair, then recur. Integer orders use three regimes in `x`:
//! the power series below [`SERIES_MAX`], Miller's backward recurrence with
//! the Neumann sums for `Y_0`, `Y_1` up to [`HANKEL_MIN`], and Hankel's
//! asymptotic expansion beyond it. `Y` always recurs upward (stable); `J`
//! recurs downward whenever the order exceeds the argument.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use super::BesselOrder;
use crate::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Integer orders: power series for `x <= SERIES_MAX`.
pub(crate) const SERIES_MAX: f64 = 2.0;
/// Integer orders: Hankel asymptotics for `x >= HANKEL_MIN`.
pub(crate) const HANKEL_MIN: f64 = 40.0;

const RESCALE_ABOVE: f64 = 1e250;
const RESCALE_BY: f64 = 1e-250;

/// `J_nu(x)`. At `x = 0` returns 1 for `nu = 0` and 0 otherwise.
pub fn bessel_j(order: BesselOrder, x: f64) -> Result<f64> {
    if x.is_nan() || x < 0.0 {
        return Err(Error::domain(format!("J_nu(x) requires x >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(if order.twice() == 0 { 1.0 } else { 0.0 });
    }
    bessel_jy(order, x).map(|(j, _)| j)
}

/// `Y_nu(x)` (Neumann function `N_nu`), `x > 0`.
pub fn bessel_y(order: BesselOrder, x: f64) -> Result<f64> {
    bessel_jy(order, x).map(|(_, y)| y)
}

/// `(J_nu(x), Y_nu(x))` for `x > 0`.
pub fn bessel_jy(order: BesselOrder, x: f64) -> Result<(f64, f64)> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::domain(format!("Y_nu(x) requires x > 0, got {x}")));
    }
    if x.is_infinite() {
        return Ok((0.0, 0.0));
    }
    if order.is_integer() {
        let n = order.twice() / 2;
        Ok(bessel_jy_integer_branch(
            n,
            x,
            IntegerBranch::for_argument(x),
        ))
    } else {
        Ok(half_odd_jy(order.twice() / 2, x))
    }
}

/// `J, Y` of order `m + 1/2`.
fn half_odd_jy(m: u32, x: f64) -> (f64, f64) {
    let (s, c) = x.sin_cos();
    let pref = (2.0 / (PI * x)).sqrt();

    // Y: upward from Y_{-1/2} = pref sin x, Y_{1/2} = -pref cos x
    let mut y_prev = pref * s;
    let mut y = -pref * c;
    for i in 0..m {
        let mu = f64::from(i) + 0.5;
        let next = (2.0 * mu / x) * y - y_prev;
        y_prev = y;
        y = next;
    }

    let j = if f64::from(m) + 0.5 <= x {
        let mut j_prev = pref * c;
        let mut j = pref * s;
        for i in 0..m {
            let mu = f64::from(i) + 0.5;
            let next = (2.0 * mu / x) * j - j_prev;
            j_prev = j;
            j = next;
        }
        j
    } else {
        // Miller: recur down from far above, keeping the requested order and
        // the two lowest orders, then normalise against the closed form with
        // the larger magnitude.
        let start = miller_start(f64::from(m) + 0.5, x);
        let mut upper = 0.0;
        let mut cur = 1e-300;
        let mut target = 0.0;
        // cur holds order (idx + 1/2)
        let mut idx = start;
        loop {
            if idx == m {
                target = cur;
            }
            if idx == 0 {
                break;
            }
            let mu = f64::from(idx) + 0.5;
            let lower = (2.0 * mu / x) * cur - upper;
            upper = cur;
            cur = lower;
            idx -= 1;
            if cur.abs() > RESCALE_ABOVE {
                cur *= RESCALE_BY;
                upper *= RESCALE_BY;
                target *= RESCALE_BY;
            }
        }
        // cur = J_{1/2}, upper = J_{3/2}; one more step gives J_{-1/2}
        let j_half = cur;
        let j_minus_half = (1.0 / x) * cur - upper;
        if s.abs() >= c.abs() {
            target * (pref * s) / j_half
        } else {
            target * (pref * c) / j_minus_half
        }
    };
    (j, y)
}

/// Highest order for Miller's recurrence so that the truncation error of the
/// normalisation is far below f64 resolution.
fn miller_start(nu: f64, x: f64) -> u32 {
    let m = nu.max(x);
    let start = (m + 30.0 + 4.0 * m.sqrt()).ceil() as u32;
    start + start % 2
}

/// Branch selector for integer orders; exposed to tests for cross-branch
/// continuity checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum IntegerBranch {
    Series,
    Recurrence,
    Asymptotic,
}

impl IntegerBranch {
    fn for_argument(x: f64) -> Self {
        if x <= SERIES_MAX {
            IntegerBranch::Series
        } else if x < HANKEL_MIN {
            IntegerBranch::Recurrence
        } else {
            IntegerBranch::Asymptotic
        }
    }
}

pub(crate) fn bessel_jy_integer_branch(n: u32, x: f64, branch: IntegerBranch) -> (f64, f64) {
    let (j, y0, y1) = match branch {
        IntegerBranch::Series => {
            let (y0, y1) = series_y01(x);
            (series_j(n, x), y0, y1)
        }
        IntegerBranch::Recurrence => {
            let js = miller_normalised(n, x);
            let (y0, y1) = neumann_y01(&js, x);
            (js[n as usize], y0, y1)
        }
        IntegerBranch::Asymptotic => {
            let (j0, y0) = hankel(0, x);
            let (j1, y1) = hankel(1, x);
            let j = match n {
                0 => j0,
                1 => j1,
                _ => miller_ratio(n, x, j0, j1),
            };
            (j, y0, y1)
        }
    };
    (j, upward_y(n, x, y0, y1))
}

fn upward_y(n: u32, x: f64, y0: f64, y1: f64) -> f64 {
    if n == 0 {
        return y0;
    }
    let (mut prev, mut cur) = (y0, y1);
    for k in 1..n {
        let next = (2.0 * f64::from(k) / x) * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `J_n(x) = sum_k (-1)^k (x/2)^{2k+n} / (k! (n+k)!)`.
fn series_j(n: u32, x: f64) -> f64 {
    let half = 0.5 * x;
    let mut term = 1.0;
    for i in 1..=n {
        term *= half / f64::from(i);
    }
    let q = -half * half;
    let mut sum = term;
    for k in 1..200u32 {
        term *= q / (f64::from(k) * f64::from(n + k));
        sum += term;
        if term.abs() <= f64::EPSILON * 1e-3 * sum.abs() {
            break;
        }
    }
    sum
}

/// Ascending series for `Y_0` and `Y_1`.
fn series_y01(x: f64) -> (f64, f64) {
    let half = 0.5 * x;
    let q = half * half;
    let log_term = half.ln();

    // Y_0 = (2/pi)(ln(x/2) + gamma) J_0 + (2/pi) sum_{k>=1} (-1)^{k+1} H_k q^k / (k!)^2
    let mut term = 1.0;
    let mut harmonic = 0.0;
    let mut s0 = 0.0;
    for k in 1..200u32 {
        let kf = f64::from(k);
        term *= -q / (kf * kf);
        harmonic += 1.0 / kf;
        let t = -term * harmonic;
        s0 += t;
        if t.abs() <= f64::EPSILON * 1e-3 * s0.abs() {
            break;
        }
    }
    let j0 = series_j(0, x);
    let y0 = (2.0 / PI) * ((log_term + EULER_GAMMA) * j0 + s0);

    // Y_1 = -2/(pi x) + (2/pi) ln(x/2) J_1
    //       - (1/pi) sum_{k>=0} (-1)^k [psi(k+1) + psi(k+2)] (x/2)^{2k+1} / (k!(k+1)!)
    let mut term = half;
    let mut h_k = 0.0;
    let mut s1 = term * (2.0 * -EULER_GAMMA + 1.0);
    for k in 1..200u32 {
        let kf = f64::from(k);
        term *= -q / (kf * (kf + 1.0));
        h_k += 1.0 / kf;
        let psi_sum = 2.0 * (-EULER_GAMMA + h_k) + 1.0 / (kf + 1.0);
        let t = term * psi_sum;
        s1 += t;
        if t.abs() <= f64::EPSILON * 1e-3 * s1.abs() {
            break;
        }
    }
    let j1 = series_j(1, x);
    let y1 = -2.0 / (PI * x) + (2.0 / PI) * log_term * j1 - s1 / PI;
    (y0, y1)
}

/// Unnormalised backward recurrence `J_{k-1} = (2k/x) J_k - J_{k+1}` from
/// `start` down to order 0. Entry `k` of the result is proportional to `J_k`.
fn backward_sequence(start: u32, x: f64) -> Vec<f64> {
    let len = start as usize + 1;
    let mut seq = vec![0.0; len];
    seq[len - 1] = 1e-300;
    let mut upper = 0.0;
    for k in (1..len).rev() {
        let lower = (2.0 * k as f64 / x) * seq[k] - upper;
        upper = seq[k];
        seq[k - 1] = lower;
        if lower.abs() > RESCALE_ABOVE {
            for v in &mut seq[k - 1..] {
                *v *= RESCALE_BY;
            }
            upper *= RESCALE_BY;
        }
    }
    seq
}

/// All `J_k(x)` for `k <= start`, normalised with `J_0 + 2 sum J_{2k} = 1`.
fn miller_normalised(n: u32, x: f64) -> Vec<f64> {
    let start = miller_start(f64::from(n), x);
    let mut seq = backward_sequence(start, x);
    let norm = seq[0] + 2.0 * seq.iter().skip(2).step_by(2).sum::<f64>();
    for v in &mut seq {
        *v /= norm;
    }
    seq
}

/// Neumann-series forms of `Y_0` and `Y_1` in terms of the `J_k`:
///
/// `Y_0 = (2/pi)(ln(x/2)+gamma) J_0 - (4/pi) sum_{k>=1} (-1)^k J_{2k}/k`
/// `Y_1 = (2/pi)(ln(x/2)+gamma) J_1 - (2/pi) J_0/x + (2/pi) sum_{k>=1} (-1)^k (J_{2k-1} - J_{2k+1})/k`
fn neumann_y01(js: &[f64], x: f64) -> (f64, f64) {
    let lg = (0.5 * x).ln() + EULER_GAMMA;
    let mut s0 = 0.0;
    let mut s1 = 0.0;
    let mut k = 1usize;
    while 2 * k + 1 < js.len() {
        let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
        let kf = k as f64;
        s0 += sign * js[2 * k] / kf;
        s1 += sign * (js[2 * k - 1] - js[2 * k + 1]) / kf;
        k += 1;
    }
    let y0 = (2.0 / PI) * lg * js[0] - (4.0 / PI) * s0;
    let y1 = (2.0 / PI) * (lg * js[1] - js[0] / x + s1);
    (y0, y1)
}

/// `J_n` from the backward-recurrence ratios, normalised against whichever of
/// the supplied `J_0`, `J_1` is larger in magnitude.
fn miller_ratio(n: u32, x: f64, j0: f64, j1: f64) -> f64 {
    let seq = backward_sequence(miller_start(f64::from(n), x), x);
    let target = seq[n as usize];
    if j0.abs() >= j1.abs() {
        target * j0 / seq[0]
    } else {
        target * j1 / seq[1]
    }
}

/// Hankel's expansion for orders 0 and 1:
/// `J = sqrt(2/(pi x)) (P cos chi - Q sin chi)`,
/// `Y = sqrt(2/(pi x)) (P sin chi + Q cos chi)`, `chi = x - (nu/2 + 1/4) pi`.
fn hankel(n: u32, x: f64) -> (f64, f64) {
    let mu = 4.0 * f64::from(n * n);
    let eight_x = 8.0 * x;
    let mut p = 1.0;
    let mut q = 0.0;
    // term_k = a_k(nu) / x^k with a_k = prod_{i=1..k} (mu - (2i-1)^2) / (k! 8^k)
    let mut term = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..60u32 {
        let odd = f64::from(2 * k - 1);
        term *= (mu - odd * odd) / (f64::from(k) * eight_x);
        if term.abs() >= last {
            break;
        }
        last = term.abs();
        // k odd contributes to Q, k even to P, with alternating signs
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < f64::EPSILON * 1e-3 {
            break;
        }
    }
    let (s, c) = x.sin_cos();
    let (cos_chi, sin_chi) = if n == 0 {
        ((c + s) * FRAC_1_SQRT_2, (s - c) * FRAC_1_SQRT_2)
    } else {
        ((s - c) * FRAC_1_SQRT_2, -(s + c) * FRAC_1_SQRT_2)
    };
    let pref = (2.0 / (PI * x)).sqrt();
    (
        pref * (p * cos_chi - q * sin_chi),
        pref * (p * sin_chi + q * cos_chi),
    )
}
