//! Mode-3 Fourier transform layer.
//!
//! Convention: unnormalized forward DFT along every tube, `1/I3` on the
//! inverse. With that choice `||fft_mode3(x)||_F^2 = I3 * ||x||_F^2` and the
//! round trip is the identity. For real input the transformed slices carry a
//! conjugate symmetry: slice 0 is real, and slice `s` pairs with slice
//! `I3 - s` under conjugation, which is why downstream algorithms only do
//! explicit work on the first `I3/2 + 1` slices and fill the rest by
//! conjugation.

use num_complex::Complex;
use rayon::prelude::*;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::mat::{CMat, Mat};
use crate::scalar::{cast, Scalar};
use crate::tensor::{Tensor3, Tube};

/// Relative imaginary residue above which an inverse transform of
/// allegedly real-origin data is rejected as corrupted.
pub const IMAG_RESIDUE_LIMIT: f64 = 1e-6;

/// Complex mode-3 transform of a [`Tensor3`], tube-fastest layout.
#[derive(Debug, Clone)]
pub struct FourierTensor3<T> {
    dims: (usize, usize, usize),
    data: Vec<Complex<T>>,
    origin_real: bool,
}

/// Number of frontal slices that carry independent information for real
/// input: `ceil((I3 + 1) / 2)`, i.e. `I3/2 + 1`. The remaining slices are
/// conjugates of earlier ones.
pub fn explicit_slice_count(i3: usize) -> usize {
    i3 / 2 + 1
}

/// For a slice index `s >= explicit_slice_count(i3)`, the earlier slice it
/// mirrors under conjugation.
pub fn conjugate_source(s: usize, i3: usize) -> usize {
    debug_assert!(s > 0 && s < i3);
    i3 - s
}

impl<T: Scalar> FourierTensor3<T> {
    pub fn zeros(dims: (usize, usize, usize)) -> Self {
        Self {
            dims,
            data: vec![Complex::new(T::zero(), T::zero()); dims.0 * dims.1 * dims.2],
            origin_real: false,
        }
    }

    /// Assembles a Fourier tensor from raw complex data. `origin_real`
    /// records the caller's claim that the data is the transform of a real
    /// tensor; the claim is verified on the way back through
    /// [`ifft_mode3`].
    pub fn from_parts(
        dims: (usize, usize, usize),
        data: Vec<Complex<T>>,
        origin_real: bool,
    ) -> Result<Self> {
        let expected = dims.0 * dims.1 * dims.2;
        if data.len() != expected {
            return Err(Error::DataLength {
                dims,
                expected,
                found: data.len(),
            });
        }
        Ok(Self {
            dims,
            data,
            origin_real,
        })
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn origin_real(&self) -> bool {
        self.origin_real
    }

    pub fn data(&self) -> &[Complex<T>] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> Complex<T> {
        self.data[(i * self.dims.1 + j) * self.dims.2 + k]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Complex<T>) {
        self.data[(i * self.dims.1 + j) * self.dims.2 + k] = v;
    }

    /// Frontal slice `s` as a complex matrix.
    pub fn frontal_slice(&self, s: usize) -> CMat<T> {
        assert!(s < self.dims.2, "frontal index {s} out of range");
        CMat::from_fn(self.dims.0, self.dims.1, |i, j| self.get(i, j, s))
    }

    pub fn set_frontal_slice(&mut self, s: usize, m: &CMat<T>) {
        assert_eq!(m.shape(), (self.dims.0, self.dims.1));
        for j in 0..self.dims.1 {
            for (i, &z) in m.col(j).iter().enumerate() {
                self.set(i, j, s, z);
            }
        }
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    /// Largest violation of the real-origin symmetry, relative to the
    /// tensor norm: imaginary mass on slice 0 and mismatch between each
    /// conjugate slice pair.
    pub fn conjugate_symmetry_defect(&self) -> T {
        let norm = self.frobenius_norm();
        if norm == T::zero() {
            return T::zero();
        }
        let (i1, i2, i3) = self.dims;
        let mut worst = T::zero();
        for i in 0..i1 {
            for j in 0..i2 {
                worst = worst.max(self.get(i, j, 0).im.abs());
                for s in 1..explicit_slice_count(i3) {
                    let mirror = conjugate_source(s, i3);
                    if mirror == s {
                        continue;
                    }
                    let d = (self.get(i, j, s).conj() - self.get(i, j, mirror)).norm();
                    worst = worst.max(d);
                }
            }
        }
        worst / norm
    }
}

fn transform_tubes<T: Scalar>(data: &mut [Complex<T>], i3: usize, forward: bool) {
    if i3 <= 1 {
        return;
    }
    let mut planner = FftPlanner::new();
    let fft = if forward {
        planner.plan_fft_forward(i3)
    } else {
        planner.plan_fft_inverse(i3)
    };
    let scratch_len = fft.get_inplace_scratch_len();
    data.par_chunks_mut(i3).for_each_init(
        || vec![Complex::new(T::zero(), T::zero()); scratch_len],
        |scratch, tube| fft.process_with_scratch(tube, scratch),
    );
}

/// Forward DFT of every tube. The result is flagged `origin_real`.
pub fn fft_mode3<T: Scalar>(x: &Tensor3<T>) -> FourierTensor3<T> {
    let dims = x.dims();
    let mut data: Vec<Complex<T>> = x
        .data()
        .iter()
        .map(|&v| Complex::new(v, T::zero()))
        .collect();
    transform_tubes(&mut data, dims.2, true);
    FourierTensor3 {
        dims,
        data,
        origin_real: true,
    }
}

/// Inverse DFT of every tube, scaled by `1/I3`, dropping the imaginary
/// residue. Returns the recovered tensor and the relative residue
/// `||Im||_F / ||result||_F`; a residue above [`IMAG_RESIDUE_LIMIT`] means
/// some upstream step broke the conjugate symmetry and is reported as an
/// error instead.
pub fn ifft_mode3_with_residue<T: Scalar>(xhat: &FourierTensor3<T>) -> Result<(Tensor3<T>, T)> {
    let dims = xhat.dims;
    let i3 = dims.2;
    let mut buf = xhat.data.clone();
    transform_tubes(&mut buf, i3, false);
    let scale = T::one() / cast::<T>(i3 as f64);

    let mut re_sq = T::zero();
    let mut im_sq = T::zero();
    let mut out = Vec::with_capacity(buf.len());
    for z in &buf {
        let re = z.re * scale;
        let im = z.im * scale;
        re_sq += re * re;
        im_sq += im * im;
        out.push(re);
    }
    let total = (re_sq + im_sq).sqrt();
    let residue = if total > T::zero() {
        im_sq.sqrt() / total
    } else {
        T::zero()
    };
    let limit = cast::<T>(IMAG_RESIDUE_LIMIT);
    if residue > limit {
        return Err(Error::SymmetryViolation {
            residue: residue.to_f64().unwrap_or(f64::NAN),
            limit: IMAG_RESIDUE_LIMIT,
        });
    }
    Ok((Tensor3::from_data(dims, out), residue))
}

/// [`ifft_mode3_with_residue`] without the residue report.
pub fn ifft_mode3<T: Scalar>(xhat: &FourierTensor3<T>) -> Result<Tensor3<T>> {
    ifft_mode3_with_residue(xhat).map(|(t, _)| t)
}

/// Fills frontal slices `I3/2 + 1 ..` by conjugating their mirror slices
/// and marks the tensor as real-origin. Slices `0 ..= I3/2` must already be
/// populated.
pub fn fill_conjugate_symmetric<T: Scalar>(mut xhat: FourierTensor3<T>) -> FourierTensor3<T> {
    let (i1, i2, i3) = xhat.dims;
    let mid = explicit_slice_count(i3);
    for i in 0..i1 {
        for j in 0..i2 {
            let base = (i * i2 + j) * i3;
            for s in mid..i3 {
                xhat.data[base + s] = xhat.data[base + conjugate_source(s, i3)].conj();
            }
        }
    }
    xhat.origin_real = true;
    xhat
}

/// DFT of a single tube.
pub fn fft_tube<T: Scalar>(t: &Tube<T>) -> Vec<Complex<T>> {
    let mut buf: Vec<Complex<T>> = t
        .data()
        .iter()
        .map(|&v| Complex::new(v, T::zero()))
        .collect();
    let n = buf.len();
    transform_tubes(&mut buf, n, true);
    buf
}

/// Inverse DFT of a tube spectrum back to a real tube (imaginary part
/// dropped).
pub fn ifft_tube<T: Scalar>(spectrum: &[Complex<T>]) -> Tube<T> {
    let n = spectrum.len();
    let mut buf = spectrum.to_vec();
    transform_tubes(&mut buf, n, false);
    let scale = T::one() / cast::<T>(n as f64);
    Tube::new(buf.iter().map(|z| z.re * scale).collect())
}

/// Row-wise DFT of a real matrix whose rows are tubes (e.g. a lateral or
/// horizontal slice of shape `len x I3`). Returns row-major complex data.
pub fn fft_mat_rows<T: Scalar>(m: &Mat<T>) -> Vec<Complex<T>> {
    let mut data: Vec<Complex<T>> = m
        .data()
        .iter()
        .map(|&v| Complex::new(v, T::zero()))
        .collect();
    transform_tubes(&mut data, m.ncols(), true);
    data
}
