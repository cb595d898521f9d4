//! Sparse effective Nullstellensatz toolkit.
//!
//! * [`polytope`]: lattice polytopes, normalized volumes, normality and the
//!   unimodular subdivision of the prism `P_d`.
//! * [`poly`]: exact multivariate and Laurent polynomials over the rationals.
//! * [`bounds`]: closed-form degree, exponent and support bounds for Bézout
//!   certificates, each returned as an auditable [`bounds::BoundReport`].
//! * [`linsys`]: exact sparse linear systems with a modular pre-check.
//! * [`solver`]: certificate search by exact sparse linear algebra over
//!   support-constrained cofactors, and certificate verification.
//! * [`groebner`]: Buchberger with cofactor tracking, Hilbert series and the
//!   algebraic degree of a system for a given coefficient matrix.

pub mod bounds;
pub mod exponent;
pub mod groebner;
mod intmat;
pub mod linsys;
pub mod poly;
pub mod polytope;
pub mod serde_util;
pub mod solver;

pub use exponent::ExponentVector;
