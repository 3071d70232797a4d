//! Tubal tensor algebra for dense third-order tensors.
//!
//! The crate implements the tensor-tensor product built on circular
//! convolution of tubes (computed slice-wise in the Fourier domain), the
//! factorizations that come with it — truncated and randomized tensor SVD —
//! and an adaptive cross approximation that estimates the tubal rank of a
//! tensor while touching only one lateral and one horizontal slice per
//! iteration. On top of those sit an iterative tensor-completion driver and
//! generators for the synthetic and function-based test tensors used by the
//! benchmark CLI.
//!
//! Everything is generic over the real scalar type through [`Scalar`]
//! (`f32` or `f64`); the `*64` aliases below pin the double-precision
//! instantiations that the documented tolerances refer to.

pub mod algebra;
pub mod error;
pub mod fft;
pub mod mat;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use algebra::{
    is_f_diagonal, is_orthogonal, tinv, tpinv, tprod, ttranspose, tube_inverse,
    tube_inverse_default, DEFAULT_TUBE_TOL,
};
pub use fft::{
    fft_mode3, fill_conjugate_symmetric, ifft_mode3, ifft_mode3_with_residue, FourierTensor3,
};
pub use mat::{CMat, Mat};
pub use tensor::{concat_horizontal, concat_lateral, relative_distance, SliceKind, SliceView};
pub use tensor::{Tensor3, Tube};

/// Double-precision tensor.
pub type Tensor3F64 = Tensor3<f64>;
/// Single-precision tensor.
pub type Tensor3F32 = Tensor3<f32>;
/// Double-precision tube.
pub type TubeF64 = Tube<f64>;
/// Double-precision Fourier-domain tensor.
pub type FourierTensor3F64 = FourierTensor3<f64>;
