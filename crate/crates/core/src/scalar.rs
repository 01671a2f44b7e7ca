//! Floating-point scalar abstraction shared by every numeric routine.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Real scalar the model is generic over: `f32` or `f64`.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Relative precision floor used by iterative routines (e.g. the Jacobi sweep threshold).
    const CONVERGENCE_FLOOR: f64;

    /// Converts an `f64` literal, panicking only for types that cannot hold it.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }

    #[inline]
    fn two() -> Self {
        Self::lit(2.0)
    }

    #[inline]
    fn quarter() -> Self {
        Self::lit(0.25)
    }
}

impl Scalar for f32 {
    const CONVERGENCE_FLOOR: f64 = 2.0 * f32::EPSILON as f64;
}

impl Scalar for f64 {
    const CONVERGENCE_FLOOR: f64 = 1e-13;
}
