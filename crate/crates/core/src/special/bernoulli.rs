//! Exact Bernoulli numbers, Bernoulli polynomials and harmonic numbers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest index kept in the cached tables.
pub const TABLE_MAX: usize = 240;

fn exact_table() -> &'static Vec<BigRational> {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // Σ_{k=0}^{n} C(n+1, k) B_k = 0
        let mut b: Vec<BigRational> = Vec::with_capacity(TABLE_MAX + 1);
        b.push(BigRational::one());
        for n in 1..=TABLE_MAX {
            if n > 1 && n % 2 == 1 {
                b.push(BigRational::zero());
                continue;
            }
            let mut binom = BigInt::one();
            let mut acc = BigRational::zero();
            for (k, bk) in b.iter().enumerate() {
                if !bk.is_zero() {
                    acc += bk * BigRational::from_integer(binom.clone());
                }
                binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
            }
            b.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
        }
        b
    })
}

fn float_table() -> &'static Vec<f64> {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| exact_table().iter().map(|r| r.to_f64().unwrap_or(f64::NAN)).collect())
}

/// `B2j / (2j)!` for `j = 0..=TABLE_MAX/2`.
pub(crate) fn scaled_even_table() -> &'static Vec<f64> {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut fact = BigInt::one();
        let mut out = Vec::with_capacity(TABLE_MAX / 2 + 1);
        for (n, b) in exact_table().iter().enumerate() {
            if n > 0 {
                fact *= BigInt::from(n);
            }
            if n % 2 == 0 {
                out.push((b / BigRational::from_integer(fact.clone())).to_f64().unwrap_or(0.0));
            }
        }
        out
    })
}

/// Exact `Bₙ` with the convention `B₁ = −1/2`.
pub fn bernoulli_exact(n: usize) -> Result<BigRational> {
    exact_table()
        .get(n)
        .cloned()
        .ok_or_else(|| Error::domain("bernoulli_number", format!("n = {n} exceeds {TABLE_MAX}")))
}

pub fn bernoulli_number(n: usize) -> Result<f64> {
    float_table()
        .get(n)
        .copied()
        .ok_or_else(|| Error::domain("bernoulli_number", format!("n = {n} exceeds {TABLE_MAX}")))
}

/// `Bₙ(t) = Σ C(n,k) B_k t^{n−k}`.
pub fn bernoulli_poly(n: usize, t: f64) -> Result<f64> {
    let b = float_table();
    if n > TABLE_MAX {
        return Err(Error::domain("bernoulli_poly", format!("n = {n} exceeds {TABLE_MAX}")));
    }
    // Horner in t over coefficients C(n,k) B_{n-k}
    let mut acc = 0.0;
    let mut binom = 1.0;
    for k in 0..=n {
        acc = acc * t + binom * b[k];
        binom = binom * (n - k) as f64 / (k + 1) as f64;
    }
    Ok(acc)
}

pub fn bernoulli_poly_exact(n: usize, t: &BigRational) -> Result<BigRational> {
    if n > TABLE_MAX {
        return Err(Error::domain("bernoulli_poly", format!("n = {n} exceeds {TABLE_MAX}")));
    }
    let b = exact_table();
    let mut acc = BigRational::zero();
    let mut binom = BigInt::one();
    for k in 0..=n {
        acc = acc * t + BigRational::from_integer(binom.clone()) * &b[k];
        binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
    }
    Ok(acc)
}

/// `Hₙ = Σ_{k=1}^{n} 1/k` as an exact rational.
pub fn harmonic(n: u64) -> BigRational {
    let mut h = BigRational::zero();
    for k in 1..=n {
        h += BigRational::new(BigInt::one(), BigInt::from(k));
    }
    h
}

/// `ζ(2k)` for `k ≥ 1` from the Bernoulli numbers.
pub fn zeta_even(k: usize) -> f64 {
    let c = scaled_even_table()[k];
    let tau2k = (2.0 * std::f64::consts::TAU.ln() * k as f64).exp();
    0.5 * c.abs() * tau2k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn small_bernoulli_numbers() {
        assert_eq!(bernoulli_exact(0).unwrap(), q(1, 1));
        assert_eq!(bernoulli_exact(1).unwrap(), q(-1, 2));
        assert_eq!(bernoulli_exact(2).unwrap(), q(1, 6));
        assert_eq!(bernoulli_exact(4).unwrap(), q(-1, 30));
        assert_eq!(bernoulli_exact(12).unwrap(), q(-691, 2730));
        for n in (3..60).step_by(2) {
            assert!(bernoulli_exact(n).unwrap().is_zero());
        }
    }

    #[test]
    fn large_index_float_matches_zeta_formula() {
        // B_60 = -2·60!·ζ(60)/(2π)^60 with ζ(60) = 1 to double precision
        let b60 = bernoulli_number(60).unwrap();
        assert!((b60 / -2.139994925722533e34 - 1.0).abs() < 1e-14, "{b60:e}");
        assert!(bernoulli_number(TABLE_MAX + 1).is_err());
    }

    #[test]
    fn polynomial_values() {
        assert!((bernoulli_poly(2, 0.5).unwrap() + 1.0 / 12.0).abs() < 1e-16);
        assert!((bernoulli_poly(3, 0.25).unwrap() - 3.0 / 64.0).abs() < 1e-16);
        assert_eq!(bernoulli_poly_exact(1, &q(1, 3)).unwrap(), q(-1, 6));
    }

    #[test]
    fn harmonic_numbers() {
        assert_eq!(harmonic(4), q(25, 12));
        assert_eq!(harmonic(0), q(0, 1));
    }

    #[test]
    fn even_zeta_values() {
        let pi = std::f64::consts::PI;
        assert!((zeta_even(1) - pi * pi / 6.0).abs() < 1e-15);
        assert!((zeta_even(2) - pi.powi(4) / 90.0).abs() < 1e-15);
    }
}
