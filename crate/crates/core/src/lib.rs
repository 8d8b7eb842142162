//! Exact genus and smoothness certification for Fermat-type curves on
//! weighted projective planes P(1, m, n).
//!
//! For weights (a, m, n) with gcd(m, n) = 1 the curve
//!
//! ```text
//! C : x0^(a*m*n) + x1^(a*n) - x2^(a*m) = 0   in   P(1, m, n)
//! ```
//!
//! misses the two quotient singularities of the ambient plane. The crate
//! builds the toric affine charts and their coordinate rings, resolves the
//! chart singularities by continued fractions, certifies the curve smooth
//! chart by chart with exact elimination, and computes the genus three
//! independent ways: the ramification divisor of the degree-(a*m) projection
//! to the line, interior lattice points of the Newton triangle, and the
//! ramification divisor of the complementary degree-(a*n) projection.

pub mod cover;
pub mod curve;
pub mod elimination;
pub mod error;
pub mod genus;
pub mod lattice;
pub mod laurent;
pub mod report;
pub mod resolution;
pub mod unipoly;

pub use cover::{normalize_weights, Weights};
pub use error::{Error, Result};
pub use lattice::{wps_fan, Cone2D, Fan, LatticePoint};
pub use laurent::LaurentPoly2;
pub use resolution::{hj_resolve, HJResolution};
