use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ZetaArg;

/// Bernoulli numbers `B_0..=B_m` with the `B_1 = -1/2` convention.
fn bernoulli_numbers(m: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(m + 1);
    b.push(BigRational::one());
    for n in 1..=m {
        // sum_{k=0}^{n} C(n+1, k) B_k = 0
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one();
        for (k, bk) in b.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
    }
    b
}

/// The Bernoulli number `B_m` as an exact rational.
pub fn bernoulli_number(m: u32) -> BigRational {
    bernoulli_numbers(m as usize).pop().expect("non-empty")
}

/// Exact coefficients of `B_m(q)`, lowest power first.
fn bernoulli_poly_coefficients(m: usize) -> Vec<BigRational> {
    let b = bernoulli_numbers(m);
    let mut coef = vec![BigRational::zero(); m + 1];
    let mut binom = BigInt::one();
    for (k, bk) in b.iter().enumerate() {
        // C(m, k) B_k q^{m-k}
        coef[m - k] = BigRational::from_integer(binom.clone()) * bk;
        binom = binom * BigInt::from(m - k) / BigInt::from(k + 1);
    }
    coef
}

/// `B_m(q)` evaluated by Horner's rule on the exact rational coefficients.
pub fn bernoulli_poly(m: u32, q: f64) -> f64 {
    bernoulli_poly_coefficients(m as usize)
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * q + c.to_f64().unwrap_or(f64::NAN))
}

/// `B_m(q)` in exact rational arithmetic.
pub fn bernoulli_poly_exact(m: u32, q: &BigRational) -> BigRational {
    bernoulli_poly_coefficients(m as usize)
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * q + c)
}

/// Hurwitz zeta at a non-positive integer: `zeta(-p, q) = -B_{p+1}(q)/(p+1)`.
pub fn hurwitz_zeta_neg(arg: ZetaArg) -> f64 {
    let p = arg.p();
    -bernoulli_poly(p + 1, arg.q()) / f64::from(p + 1)
}

/// Exact form of [`hurwitz_zeta_neg`] for rational offsets.
pub fn hurwitz_zeta_neg_exact(p: u32, q: &BigRational) -> BigRational {
    debug_assert!(q.is_positive());
    -bernoulli_poly_exact(p + 1, q) / BigRational::from_integer(BigInt::from(p + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn bernoulli_numbers_known() {
        assert_eq!(bernoulli_number(0), ratio(1, 1));
        assert_eq!(bernoulli_number(1), ratio(-1, 2));
        assert_eq!(bernoulli_number(2), ratio(1, 6));
        assert_eq!(bernoulli_number(3), ratio(0, 1));
        assert_eq!(bernoulli_number(4), ratio(-1, 30));
        assert_eq!(bernoulli_number(12), ratio(-691, 2730));
    }

    #[test]
    fn polynomial_values() {
        for &q in &[0.0, 0.3, 1.5, 4.0] {
            assert!((bernoulli_poly(1, q) - (q - 0.5)).abs() < 1e-15);
        }
        assert!((bernoulli_poly(2, 0.0) - 1.0 / 6.0).abs() < 1e-16);
        assert_eq!(bernoulli_poly(3, 0.5), 0.0);
        assert_eq!(bernoulli_poly(0, 7.0), 1.0);
    }

    #[test]
    fn hurwitz_values() {
        for &q in &[0.5, 1.0, 2.5] {
            let z = hurwitz_zeta_neg(ZetaArg::new(0, q).unwrap());
            assert!((z - (0.5 - q)).abs() < 1e-15);
        }
        assert_eq!(hurwitz_zeta_neg_exact(1, &ratio(1, 1)), ratio(-1, 12));
        assert_eq!(hurwitz_zeta_neg_exact(1, &ratio(3, 2)), ratio(-11, 24));
        let z = hurwitz_zeta_neg(ZetaArg::new(1, 1.5).unwrap());
        assert!((z + 11.0 / 24.0).abs() < 1e-15);
    }

    #[test]
    fn riemann_continuation_values() {
        // zeta(-p) = zeta(-p, 1)
        assert_eq!(hurwitz_zeta_neg_exact(0, &ratio(1, 1)), ratio(-1, 2));
        assert_eq!(hurwitz_zeta_neg_exact(1, &ratio(1, 1)), ratio(-1, 12));
        assert_eq!(hurwitz_zeta_neg_exact(2, &ratio(1, 1)), ratio(0, 1));
        assert_eq!(hurwitz_zeta_neg_exact(3, &ratio(1, 1)), ratio(1, 120));
    }

    #[test]
    fn shift_identity() {
        // zeta(-p, q) - zeta(-p, q + 1) = q^p
        for p in 0..8u32 {
            for &(n, d) in &[(1, 2), (3, 2), (2, 1), (9, 2)] {
                let q = ratio(n, d);
                let lhs = hurwitz_zeta_neg_exact(p, &q)
                    - hurwitz_zeta_neg_exact(p, &(q.clone() + ratio(1, 1)));
                assert_eq!(lhs, num_traits::pow(q, p as usize));
            }
        }
    }
}
