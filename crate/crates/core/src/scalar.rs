use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating point scalar used throughout the crate: `f32` or `f64`.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + NumAssign
    + Default
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` literal. Lossy for `f32`, never fails.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal is representable")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Default absolute tolerance for adaptive quadrature on O(1) integrands.
    fn quadrature_tol() -> Self;

    /// Relative tolerance used when comparing two independent routes to the
    /// same geometric quantity.
    fn route_tol() -> Self;
}

impl Real for f32 {
    fn quadrature_tol() -> Self {
        1e-7
    }

    fn route_tol() -> Self {
        1e-4
    }
}

impl Real for f64 {
    fn quadrature_tol() -> Self {
        1e-11
    }

    fn route_tol() -> Self {
        1e-10
    }
}
