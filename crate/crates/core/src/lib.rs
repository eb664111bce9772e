//! Congruent and non-congruent hyperball packings in truncated regular
//! simplex tilings of hyperbolic 3- and 5-space.
//!
//! The numerical core is generic over the scalar type (see [`Real`]); the
//! aliases below fix it to `f64`, which is what every reported value uses.
//! Group-theoretic quantities (orders, orbifold Euler characteristics) are
//! exact and do not depend on the scalar type.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod coxeter;
pub mod error;
pub mod lorentz;
pub mod optimize;
pub mod packing;
pub mod quadrature;
pub mod report;
pub mod scalar;
pub mod specfun;
pub mod volume;

pub use error::{Error, Result};
pub use scalar::Real;

pub type LorentzVector = lorentz::LorentzVector<f64>;
pub type Hyperplane = lorentz::Hyperplane<f64>;
pub type SquareMatrix = lorentz::SquareMatrix<f64>;
pub type CoxeterGraph = coxeter::CoxeterGraph<f64>;
pub type GramMatrix = coxeter::GramMatrix<f64>;
pub type TruncatedSimplexModel = packing::TruncatedSimplexModel<f64>;
pub type HeightAssignment = packing::HeightAssignment<f64>;
pub type DensityResult = packing::DensityResult<f64>;
pub type ConstraintReport = packing::ConstraintReport<f64>;
pub type Optimum = optimize::Optimum<f64>;
pub type ReportRow = report::ReportRow<f64>;
pub type SweepPoint = report::SweepPoint<f64>;

/// Single-precision variants, mostly useful for checking that nothing in the
/// pipeline silently depends on `f64`.
pub type TruncatedSimplexModel32 = packing::TruncatedSimplexModel<f32>;
pub type CoxeterGraph32 = coxeter::CoxeterGraph<f32>;
