//! Numerical kernels for Cauchy-type integral operators on planar domains
//! with smooth (possibly multiply-connected) boundaries, and for the
//! symmetric products of such domains.
//!
//! The crate is `no_std` and only needs `alloc`. IO, configuration and the
//! command-line driver live in the companion `symprod` crate.
//!
//! Module map:
//!
//! - [`geometry`]: analytic boundary contours, winding numbers, point
//!   classification and quadrature grids.
//! - [`quadrature`]: periodic trapezoid, Gauss–Legendre and collapsed
//!   tensor rules on the solid simplex.
//! - [`cauchy`]: the Cauchy, Cauchy–Nørlund and symmetrized transforms,
//!   derivative factorization and truncated principal values.
//! - [`divdiff`]: divided differences (Newton table and Genocchi–Hermite).
//! - [`symmetric`]: the symmetrization map, root finding, the quotient
//!   metric, Łojasiewicz sampling, power sums and symmetric powers of maps.
//! - [`holder`]: Hölder seminorms and empirical exponent estimation.
//! - [`propermap`]: proper maps between symmetric products of the disc.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cauchy;
pub mod divdiff;
pub mod error;
pub mod geometry;
pub mod holder;
pub mod propermap;
pub mod quadrature;
pub mod symmetric;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Shorthand used throughout the crate.
pub type C64 = Complex64;
