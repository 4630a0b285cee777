//! Exact Poisson cohomology of the bracket `{x, y} = y^n` on `ℚ[x, y]`, in
//! its classical form and in the logarithmic form along the divisor
//! `y^n = 0`.
//!
//! - [`poly`]: sparse bivariate polynomials with exact rational coefficients.
//! - [`log_geometry`]: logarithmic derivations and forms, Hamiltonian maps and
//!   the Koszul bracket.
//! - [`complexes`]: the cochain complexes, selected by name from a
//!   [`complexes::ComplexRegistry`].
//! - [`linalg`]: exact sparse rank, kernel and quotient computations.
//! - [`cohomology`]: graded cohomology dimensions, representatives and the
//!   structural checks on cocycles and coboundaries.
//! - [`suites`]: named verification suites run by `logpoisson verify`.
//! - [`cli`]: argument handling, polynomial parsing and report rendering.

pub mod cli;
pub mod cohomology;
pub mod complexes;
pub mod error;
pub mod linalg;
pub mod log_geometry;
pub mod poly;
pub mod random;
pub mod suites;

pub use error::{Error, Result};
pub use poly::{BiPoly, Monomial, Rational};
