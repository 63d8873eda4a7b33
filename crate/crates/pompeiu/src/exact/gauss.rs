//! Gaussian rationals: exact points of the plane.
//!
//! The plane is identified with ℚ(i) ⊂ ℂ; a point is `Complex<Rational>`.
//! Complex arithmetic on exact components is exact, so rotations by unit
//! Gaussian rationals and reflections stay on the rational lattice.

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_traits::{One, Zero};
use thiserror::Error;

use super::rational::{rat_i, rational_to_f64, Rational};

/// Exact plane point / Gaussian rational `re + im·i`.
pub type GaussRational = Complex<Rational>;

pub fn gauss(re: Rational, im: Rational) -> GaussRational {
    Complex::new(re, im)
}

pub fn gauss_i64(re: i64, im: i64) -> GaussRational {
    Complex::new(rat_i(re), rat_i(im))
}

pub fn gauss_zero() -> GaussRational {
    Complex::new(Rational::zero(), Rational::zero())
}

pub fn gauss_one() -> GaussRational {
    Complex::new(Rational::one(), Rational::zero())
}

/// The imaginary unit.
pub fn gauss_unit_i() -> GaussRational {
    Complex::new(Rational::zero(), Rational::one())
}

/// `z · i`, i.e. a quarter turn counter-clockwise.
pub fn mul_i(z: &GaussRational) -> GaussRational {
    Complex::new(-z.im.clone(), z.re.clone())
}

/// Exact test for `|z|² = 1`.
pub fn is_unit_modulus(z: &GaussRational) -> bool {
    z.norm_sqr().is_one()
}

/// True when both components have denominator 1.
pub fn is_gaussian_integer(z: &GaussRational) -> bool {
    z.re.is_integer() && z.im.is_integer()
}

/// Real part of `conj(a)·b`: the Euclidean dot product.
pub fn dot(a: &GaussRational, b: &GaussRational) -> Rational {
    &a.re * &b.re + &a.im * &b.im
}

/// Imaginary part of `conj(a)·b`: twice the signed area of the triangle 0,a,b.
pub fn cross(a: &GaussRational, b: &GaussRational) -> Rational {
    &a.re * &b.im - &a.im * &b.re
}

/// Exact collinearity of three points.
pub fn points_collinear(a: &GaussRational, b: &GaussRational, c: &GaussRational) -> bool {
    cross(&(b - a), &(c - a)).is_zero()
}

pub fn gauss_to_c64(z: &GaussRational) -> Complex64 {
    Complex64::new(rational_to_f64(&z.re), rational_to_f64(&z.im))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PythagoreanError {
    #[error("pythagorean unit requires (m, n) != (0, 0)")]
    ZeroParameters,
}

/// The rational point `(m² − n² + 2mn·i)/(m² + n²)` of the unit circle.
pub fn pythagorean_unit(m: i64, n: i64) -> Result<GaussRational, PythagoreanError> {
    if m == 0 && n == 0 {
        return Err(PythagoreanError::ZeroParameters);
    }
    let (m, n) = (BigInt::from(m), BigInt::from(n));
    let denom = &m * &m + &n * &n;
    let re = Rational::new(&m * &m - &n * &n, denom.clone());
    let im = Rational::new(BigInt::from(2) * &m * &n, denom);
    Ok(Complex::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn pythagorean_unit_examples() {
        assert_eq!(
            pythagorean_unit(2, 1).unwrap(),
            gauss(rat(3, 5), rat(4, 5))
        );
        assert_eq!(pythagorean_unit(1, 0).unwrap(), gauss_one());
        assert_eq!(pythagorean_unit(1, 1).unwrap(), gauss_unit_i());
        assert_eq!(
            pythagorean_unit(0, 0).unwrap_err(),
            PythagoreanError::ZeroParameters
        );
    }

    #[test]
    fn pythagorean_units_have_exact_unit_modulus() {
        for m in -50i64..=50 {
            for n in -50i64..=50 {
                if m == 0 && n == 0 {
                    continue;
                }
                let u = pythagorean_unit(m, n).unwrap();
                assert!(is_unit_modulus(&u), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn exact_complex_division() {
        let u = pythagorean_unit(2, 1).unwrap();
        let w = gauss_i64(3, 4) / &u; // (3+4i)/((3+4i)/5) = 5
        assert_eq!(w, gauss_i64(5, 0));
    }

    #[test]
    fn collinearity_is_exact() {
        let a = gauss(rat(0, 1), rat(0, 1));
        let b = gauss(rat(1, 2), rat(1, 3));
        let c = gauss(rat(3, 2), rat(1, 1));
        assert!(points_collinear(&a, &b, &c));
        let d = gauss(rat(3, 2), rat(1000000001, 1000000000));
        assert!(!points_collinear(&a, &b, &d));
    }
}
