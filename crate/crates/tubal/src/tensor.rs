//! Dense third-order tensor type and its slicing/fiber utilities.
//!
//! A [`Tensor3`] stores its entries tube-fastest: the third index varies
//! fastest, so every tube `x(i, j, :)` is a contiguous run. That is the
//! layout the mode-3 FFT wants. Values are immutable once built (no `&self`
//! mutation), so tensors can be shared freely across threads.

use crate::error::{Error, Result};
use crate::mat::Mat;
use crate::scalar::Scalar;

/// Dense real third-order tensor with dims `(I1, I2, I3)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor3<T> {
    dims: (usize, usize, usize),
    data: Vec<T>,
}

/// A `1 x 1 x len` fiber: the scalar of the tubal algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct Tube<T> {
    data: Vec<T>,
}

/// The three slice orientations of a third-order tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SliceKind {
    /// `x(:, :, k)`, shape `I1 x I2`.
    Frontal,
    /// `x(:, j, :)`, shape `I1 x I3`.
    Lateral,
    /// `x(i, :, :)`, shape `I2 x I3`.
    Horizontal,
}

/// A materialized slice together with its orientation and index.
#[derive(Debug, Clone)]
pub struct SliceView<T> {
    pub kind: SliceKind,
    pub index: usize,
    pub payload: Mat<T>,
}

impl<T: Scalar> Tensor3<T> {
    pub fn zeros(i1: usize, i2: usize, i3: usize) -> Self {
        Self {
            dims: (i1, i2, i3),
            data: vec![T::zero(); i1 * i2 * i3],
        }
    }

    /// Builds a tensor from externally supplied data in tube-fastest order.
    ///
    /// Checks the length and rejects non-finite entries; computed tensors
    /// produced inside the crate skip the finiteness scan.
    pub fn new(dims: (usize, usize, usize), data: Vec<T>) -> Result<Self> {
        let expected = dims.0 * dims.1 * dims.2;
        if data.len() != expected {
            return Err(Error::DataLength {
                dims,
                expected,
                found: data.len(),
            });
        }
        if let Some(index) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { dims, data })
    }

    pub fn from_fn(
        dims: (usize, usize, usize),
        mut f: impl FnMut(usize, usize, usize) -> T,
    ) -> Self {
        let mut data = Vec::with_capacity(dims.0 * dims.1 * dims.2);
        for i in 0..dims.0 {
            for j in 0..dims.1 {
                for k in 0..dims.2 {
                    data.push(f(i, j, k));
                }
            }
        }
        Self { dims, data }
    }

    pub(crate) fn from_data(dims: (usize, usize, usize), data: Vec<T>) -> Self {
        debug_assert_eq!(data.len(), dims.0 * dims.1 * dims.2);
        Self { dims, data }
    }

    /// Identity tensor `n x n x i3`: first frontal slice is the identity
    /// matrix, all others zero. It is the unit of the t-product.
    pub fn identity(n: usize, i3: usize) -> Self {
        let mut t = Self::zeros(n, n, i3);
        for i in 0..n {
            t.set(i, i, 0, T::one());
        }
        t
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn num_entries(&self) -> usize {
        self.data.len()
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    #[inline]
    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i < self.dims.0 && j < self.dims.1 && k < self.dims.2);
        (i * self.dims.1 + j) * self.dims.2 + k
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> T {
        self.data[self.offset(i, j, k)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: T) {
        let o = self.offset(i, j, k);
        self.data[o] = v;
    }

    /// The tube `x(i, j, :)`, a contiguous fiber of length `I3`.
    pub fn tube_at(&self, i: usize, j: usize) -> Tube<T> {
        assert!(
            i < self.dims.0 && j < self.dims.1,
            "tube index ({i}, {j}) out of range for dims {:?}",
            self.dims
        );
        let base = (i * self.dims.1 + j) * self.dims.2;
        Tube {
            data: self.data[base..base + self.dims.2].to_vec(),
        }
    }

    /// Frontal slice `x(:, :, k)` as an `I1 x I2` matrix.
    pub fn frontal_slice(&self, k: usize) -> Mat<T> {
        assert!(
            k < self.dims.2,
            "frontal index {k} out of range for dims {:?}",
            self.dims
        );
        Mat::from_fn(self.dims.0, self.dims.1, |i, j| self.get(i, j, k))
    }

    /// Lateral slice `x(:, j, :)` as an `I1 x I3` matrix.
    pub fn lateral_slice(&self, j: usize) -> Mat<T> {
        assert!(
            j < self.dims.1,
            "lateral index {j} out of range for dims {:?}",
            self.dims
        );
        Mat::from_fn(self.dims.0, self.dims.2, |i, k| self.get(i, j, k))
    }

    /// Horizontal slice `x(i, :, :)` as an `I2 x I3` matrix.
    pub fn horizontal_slice(&self, i: usize) -> Mat<T> {
        assert!(
            i < self.dims.0,
            "horizontal index {i} out of range for dims {:?}",
            self.dims
        );
        Mat::from_fn(self.dims.1, self.dims.2, |j, k| self.get(i, j, k))
    }

    pub fn slice_view(&self, kind: SliceKind, index: usize) -> SliceView<T> {
        let payload = match kind {
            SliceKind::Frontal => self.frontal_slice(index),
            SliceKind::Lateral => self.lateral_slice(index),
            SliceKind::Horizontal => self.horizontal_slice(index),
        };
        SliceView {
            kind,
            index,
            payload,
        }
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|&x| x * x).sum::<T>().sqrt()
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, &x| m.max(x.abs()))
    }

    /// Entrywise product; dims must match.
    pub fn hadamard(&self, other: &Tensor3<T>) -> Tensor3<T> {
        assert_eq!(self.dims, other.dims, "hadamard dimension mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| a * b)
            .collect();
        Tensor3::from_data(self.dims, data)
    }

    pub fn add(&self, other: &Tensor3<T>) -> Tensor3<T> {
        assert_eq!(self.dims, other.dims, "add dimension mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| a + b)
            .collect();
        Tensor3::from_data(self.dims, data)
    }

    pub fn sub(&self, other: &Tensor3<T>) -> Tensor3<T> {
        assert_eq!(self.dims, other.dims, "sub dimension mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| a - b)
            .collect();
        Tensor3::from_data(self.dims, data)
    }

    pub fn scale(&self, s: T) -> Tensor3<T> {
        Tensor3::from_data(self.dims, self.data.iter().map(|&x| x * s).collect())
    }

    /// Embeds an `I1 x I3` matrix as an `I1 x 1 x I3` lateral-slice tensor.
    pub fn from_lateral(m: &Mat<T>) -> Tensor3<T> {
        Tensor3::from_fn((m.nrows(), 1, m.ncols()), |i, _, k| m.get(i, k))
    }

    /// Embeds an `I2 x I3` matrix as a `1 x I2 x I3` horizontal-slice tensor.
    pub fn from_horizontal(m: &Mat<T>) -> Tensor3<T> {
        Tensor3::from_fn((1, m.nrows(), m.ncols()), |_, j, k| m.get(j, k))
    }
}

impl<T: Scalar> Tube<T> {
    pub fn new(data: Vec<T>) -> Self {
        Self { data }
    }

    pub fn zeros(len: usize) -> Self {
        Self {
            data: vec![T::zero(); len],
        }
    }

    /// The unit of tube multiplication: `(1, 0, ..., 0)`.
    pub fn identity(len: usize) -> Self {
        let mut t = Self::zeros(len);
        t.data[0] = T::one();
        t
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn norm(&self) -> T {
        self.data.iter().map(|&x| x * x).sum::<T>().sqrt()
    }

    /// The tube as a `1 x 1 x len` tensor.
    pub fn to_tensor(&self) -> Tensor3<T> {
        Tensor3::from_data((1, 1, self.data.len()), self.data.clone())
    }
}

/// Stacks tensors along the second mode; all parts must agree on `(I1, I3)`.
/// Concatenating `k` lateral slices of shape `I1 x 1 x I3` gives `I1 x k x I3`.
pub fn concat_lateral<T: Scalar>(parts: &[Tensor3<T>]) -> Tensor3<T> {
    assert!(!parts.is_empty(), "concat_lateral of empty list");
    let (i1, _, i3) = parts[0].dims();
    let total: usize = parts
        .iter()
        .map(|p| {
            assert_eq!(
                (p.dims().0, p.dims().2),
                (i1, i3),
                "concat_lateral dimension mismatch"
            );
            p.dims().1
        })
        .sum();
    let mut out = Tensor3::zeros(i1, total, i3);
    let mut joff = 0;
    for p in parts {
        for i in 0..i1 {
            for j in 0..p.dims().1 {
                for k in 0..i3 {
                    out.set(i, joff + j, k, p.get(i, j, k));
                }
            }
        }
        joff += p.dims().1;
    }
    out
}

/// Stacks tensors along the first mode; all parts must agree on `(I2, I3)`.
pub fn concat_horizontal<T: Scalar>(parts: &[Tensor3<T>]) -> Tensor3<T> {
    assert!(!parts.is_empty(), "concat_horizontal of empty list");
    let (_, i2, i3) = parts[0].dims();
    let total: usize = parts
        .iter()
        .map(|p| {
            assert_eq!(
                (p.dims().1, p.dims().2),
                (i2, i3),
                "concat_horizontal dimension mismatch"
            );
            p.dims().0
        })
        .sum();
    let mut out = Tensor3::zeros(total, i2, i3);
    let mut ioff = 0;
    for p in parts {
        for i in 0..p.dims().0 {
            for j in 0..i2 {
                for k in 0..i3 {
                    out.set(ioff + i, j, k, p.get(i, j, k));
                }
            }
        }
        ioff += p.dims().0;
    }
    out
}

/// `||a - b||_F / ||a||_F`; falls back to the absolute norm when `a` is zero.
pub fn relative_distance<T: Scalar>(a: &Tensor3<T>, b: &Tensor3<T>) -> T {
    let denom = a.frobenius_norm();
    let diff = a.sub(b).frobenius_norm();
    if denom > T::zero() {
        diff / denom
    } else {
        diff
    }
}
