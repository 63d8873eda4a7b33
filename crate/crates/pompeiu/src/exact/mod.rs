//! Exact arithmetic foundation.
//!
//! Everything downstream is built on four carriers: arbitrary-precision
//! rationals ([`Rational`]), Gaussian rationals ([`GaussRational`], points of
//! the plane identified with ℚ(i)), dense univariate polynomials over ℚ
//! ([`UniPoly`]), and integer matrices with Smith normal form ([`IntMatrix`]).
//! All arithmetic is exact; results are kept canonical eagerly.

pub mod gauss;
pub mod intmat;
pub mod poly;
pub mod primes;
pub mod rational;

pub use gauss::{
    cross, dot, gauss, gauss_i64, gauss_one, gauss_to_c64, gauss_zero, is_gaussian_integer,
    is_unit_modulus, mul_i, points_collinear, pythagorean_unit, GaussRational, PythagoreanError,
};
pub use intmat::{IntMatrix, SmithNormalForm};
pub use poly::{poly_gcd, resultant, UniPoly};
pub use primes::is_probable_prime;
pub use rational::{format_rational, parse_rational, rat, rat_i, rational_to_f64, Rational};
