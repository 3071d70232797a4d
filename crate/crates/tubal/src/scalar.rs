//! Scalar abstraction for the real element type of all tensors.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};
use rustfft::FftNum;

/// Real scalar type the library is generic over: `f32` or `f64`.
///
/// Bundles the floating-point, FFT and formatting bounds every kernel needs.
/// The reference tolerances quoted throughout the documentation assume `f64`;
/// `f32` works but resolves roughly half the digits.
pub trait Scalar:
    Float + FloatConst + NumAssign + FromPrimitive + FftNum + Sum + Display + LowerExp + Debug
{
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Casts an `f64` constant or count into the scalar type. Lossy for `f32`.
pub fn cast<T: Scalar>(x: f64) -> T {
    <T as num_traits::NumCast>::from(x).expect("f64 value not representable in scalar type")
}
