use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::specfun::{ln_gamma, BesselOrder};
use crate::{Error, Result};

fn check_pair(dim: u32, nu: BesselOrder) -> Result<u32> {
    if dim < 3 {
        return Err(Error::domain(format!(
            "degeneracy requires D >= 3, got {dim}"
        )));
    }
    let offset = dim - 2;
    if nu.twice() < offset || !(nu.twice() - offset).is_multiple_of(2) {
        return Err(Error::domain(format!(
            "order {nu} is not of the form k + (D-2)/2 for D={dim}"
        )));
    }
    Ok((nu.twice() - offset) / 2)
}

/// Number of hyperspherical harmonics on the `(D-1)`-sphere sharing the
/// order `nu = k + (D-2)/2`:
///
/// `g(nu) = 2 nu [nu + (D-4)/2]! / ((D-2)! [nu - (D-2)/2]!)`
///
/// with half-integer factorials read as `z! = Gamma(z + 1)`. Evaluated through
/// `ln Gamma` and rounded; the value must land within `1e-9` (relative) of an
/// integer.
pub fn degeneracy(dim: u32, nu: BesselOrder) -> Result<u64> {
    check_pair(dim, nu)?;
    let v = nu.value();
    let d = f64::from(dim);
    let log =
        ln_gamma(v + (d - 2.0) / 2.0)? - ln_gamma(d - 1.0)? - ln_gamma(v - (d - 2.0) / 2.0 + 1.0)?;
    let value = 2.0 * v * log.exp();
    let rounded = value.round();
    if (value - rounded).abs() > 1e-9 * rounded.max(1.0) {
        return Err(Error::domain(format!(
            "degeneracy for D={dim}, nu={nu} evaluated to non-integer {value}"
        )));
    }
    if rounded >= u64::MAX as f64 {
        return Err(Error::domain(format!(
            "degeneracy for D={dim}, nu={nu} exceeds u64"
        )));
    }
    Ok(rounded as u64)
}

/// `g(nu)` as an exact polynomial in `nu`:
/// `g(nu) = 2 nu / (D-2)! * prod_{i=1}^{D-3} (nu - (D-2)/2 + i)`.
///
/// The numeric energy needs `g` both as a fast evaluator (large `nu`, beyond
/// `u64`) and as exact coefficients for the zeta-regularized power sums.
#[derive(Debug, Clone)]
pub struct DegeneracyPolynomial {
    dim: u32,
    exact: Vec<BigRational>,
    float: Vec<f64>,
}

impl DegeneracyPolynomial {
    pub fn new(dim: u32) -> Result<Self> {
        if dim < 3 {
            return Err(Error::domain(format!(
                "degeneracy requires D >= 3, got {dim}"
            )));
        }
        let half_offset = BigRational::new(BigInt::from(dim - 2), BigInt::from(2));
        // start with 2 nu
        let mut coef = vec![
            BigRational::zero(),
            BigRational::from_integer(BigInt::from(2)),
        ];
        for i in 1..=(dim - 3) {
            let root = BigRational::from_integer(BigInt::from(i)) - &half_offset;
            // multiply by (nu + root)
            let mut next = vec![BigRational::zero(); coef.len() + 1];
            for (p, c) in coef.iter().enumerate() {
                next[p + 1] += c;
                next[p] += c * &root;
            }
            coef = next;
        }
        let factorial: BigInt = (1..=u64::from(dim - 2)).fold(BigInt::one(), |acc, i| acc * i);
        let denom = BigRational::from_integer(factorial);
        let exact: Vec<BigRational> = coef.into_iter().map(|c| c / &denom).collect();
        let float = exact
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect();
        Ok(Self { dim, exact, float })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// Coefficients of `nu^0, nu^1, ...`.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.exact
    }

    /// Leading power, `D - 2`.
    pub fn degree(&self) -> usize {
        self.exact.len() - 1
    }

    pub fn eval(&self, nu: f64) -> f64 {
        self.float.iter().rev().fold(0.0, |acc, c| acc * nu + c)
    }
}
