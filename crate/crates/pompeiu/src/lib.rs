//! Exact toolkit for the discrete Pompeiu property of finite planar point sets.
//!
//! A finite weighted tuple of points has the discrete Pompeiu property with
//! respect to a family of transformations when the only function whose
//! weighted sum vanishes on every transformed copy of the tuple is the zero
//! function. This crate makes the question computational at desk scale:
//!
//! - [`exact`] — arbitrary-precision rationals, Gaussian rationals, dense
//!   univariate polynomials over ℚ, and integer matrices with Smith normal
//!   form;
//! - [`config`] — point configurations, motion groups, placements, and finite
//!   lattice windows, with exact enumeration of congruent/similar copies;
//! - [`masks`] — the mask-polynomial criterion for linear sets and
//!   constructive annihilating characters for translations;
//! - [`grid`] — finite-window constraint systems: exact nullspaces, delta and
//!   difference certificates, and the iterated-difference degree test;
//! - [`spectral`] — character analysis: branch factorizations, the length-12
//!   direction gadget, exponent-lattice triviality certificates, and the
//!   pigeonhole order check;
//! - [`geometry`] — exact reflections, the rational-quadrangle reduction
//!   chain, rectangle-to-square tilings, the H_alpha quadrangle family, and
//!   SVG scene export;
//! - [`cli`] — the TOML-configured command-line front end.
//!
//! Every algebraic path is exact; floating point appears only in the
//! H_alpha construction (parameterized by arbitrary angles) and in optional
//! numeric cross-checks of symbolic results.

pub mod config;
pub mod masks;
pub mod exact;

pub use config::{Configuration, MotionGroup, MotionKind, Placement, Window};
pub use exact::{GaussRational, IntMatrix, Rational, UniPoly};
