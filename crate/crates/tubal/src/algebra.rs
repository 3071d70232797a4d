//! The t-product algebra: tensor-tensor product, transpose, tube and tensor
//! inverses, Moore-Penrose pseudoinverse and structural predicates.
//!
//! Every operation here is computed slice-wise in the Fourier domain: the
//! t-product of real tensors equals independent matrix products of their
//! transformed frontal slices, and for real input only the first
//! `I3/2 + 1` slices need explicit work, the rest follow by conjugation.

use num_complex::Complex;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fft::{explicit_slice_count, fft_mode3, fft_tube, ifft_mode3, ifft_tube};
use crate::fft::{fill_conjugate_symmetric, FourierTensor3};
use crate::mat::{lu_inverse, pinv, CMat};
use crate::scalar::{cast, Scalar};
use crate::tensor::{Tensor3, Tube};

/// Default relative tolerance deciding when a tube counts as singular: a
/// DFT coefficient whose modulus falls at or below this fraction of the
/// tube's largest modulus cannot be reliably inverted.
pub const DEFAULT_TUBE_TOL: f64 = 1e-12;

/// Computes the explicit frontal slices of a result in the Fourier domain,
/// fills the mirrored ones by conjugation and transforms back.
fn assemble_from_slices<T: Scalar>(
    out_dims: (usize, usize, usize),
    slice_fn: impl Fn(usize) -> Result<CMat<T>> + Sync,
) -> Result<Tensor3<T>> {
    let i3 = out_dims.2;
    let mid = explicit_slice_count(i3);
    let slices: Vec<Result<CMat<T>>> = (0..mid).into_par_iter().map(&slice_fn).collect();
    let mut out = FourierTensor3::zeros(out_dims);
    for (s, slice) in slices.into_iter().enumerate() {
        out.set_frontal_slice(s, &slice?);
    }
    ifft_mode3(&fill_conjugate_symmetric(out))
}

/// Fast t-product `x * y` of an `I1 x I2 x I3` by an `I2 x I4 x I3` tensor.
///
/// Equivalent to multiplying the block-circulant expansion of `x` with the
/// mode-1 unfolding of `y`, but computed as per-slice products in the
/// Fourier domain with the conjugate-symmetry shortcut.
pub fn tprod<T: Scalar>(x: &Tensor3<T>, y: &Tensor3<T>) -> Tensor3<T> {
    let (i1, i2, i3) = x.dims();
    let (yi2, i4, yi3) = y.dims();
    assert_eq!(i2, yi2, "t-product inner dimension mismatch");
    assert_eq!(i3, yi3, "t-product depth mismatch");

    let xhat = fft_mode3(x);
    let yhat = fft_mode3(y);
    assemble_from_slices((i1, i4, i3), |s| {
        Ok(xhat.frontal_slice(s).matmul(&yhat.frontal_slice(s)))
    })
    .expect("product of real tensors stays conjugate symmetric")
}

/// Tensor transpose: transposes every frontal slice and reverses the order
/// of slices 1 .. I3-1. Satisfies `(x * y)^T = y^T * x^T`.
pub fn ttranspose<T: Scalar>(x: &Tensor3<T>) -> Tensor3<T> {
    let (i1, i2, i3) = x.dims();
    Tensor3::from_fn((i2, i1, i3), |j, i, k| {
        let src = if k == 0 { 0 } else { i3 - k };
        x.get(i, j, src)
    })
}

/// Inverse of a tube under circular convolution.
///
/// The inverse exists when no DFT coefficient of the tube (numerically)
/// vanishes; `tol` is relative to the largest coefficient modulus. Returns
/// [`Error::NearSingularTube`] otherwise, which signals callers doing pivoted
/// elimination to pick a different pivot.
pub fn tube_inverse<T: Scalar>(t: &Tube<T>, tol: T) -> Result<Tube<T>> {
    let spectrum = fft_tube(t);
    let mut max_mod = T::zero();
    let mut min_mod = T::infinity();
    for z in &spectrum {
        let m = z.norm();
        max_mod = max_mod.max(m);
        min_mod = min_mod.min(m);
    }
    if max_mod == T::zero() || min_mod <= tol * max_mod {
        let ratio = if max_mod > T::zero() {
            (min_mod / max_mod).to_f64().unwrap_or(0.0)
        } else {
            0.0
        };
        return Err(Error::NearSingularTube {
            ratio,
            tol: tol.to_f64().unwrap_or(f64::NAN),
        });
    }
    let recip: Vec<Complex<T>> = spectrum.iter().map(|z| z.finv()).collect();
    Ok(ifft_tube(&recip))
}

/// [`tube_inverse`] at the default tolerance.
pub fn tube_inverse_default<T: Scalar>(t: &Tube<T>) -> Result<Tube<T>> {
    tube_inverse(t, cast::<T>(DEFAULT_TUBE_TOL))
}

/// Inverse of a square tensor: per-slice matrix inverses in the Fourier
/// domain. Fails with [`Error::SingularSlice`] naming the first
/// numerically singular slice.
pub fn tinv<T: Scalar>(x: &Tensor3<T>) -> Result<Tensor3<T>> {
    let (i1, i2, i3) = x.dims();
    assert_eq!(i1, i2, "tinv needs a square tensor");
    let xhat = fft_mode3(x);
    assemble_from_slices((i1, i2, i3), |s| {
        lu_inverse(&xhat.frontal_slice(s)).ok_or(Error::SingularSlice { slice: s })
    })
}

/// Moore-Penrose pseudoinverse: per-slice pseudoinverses in the Fourier
/// domain. Rank-deficient slices are handled by the singular-value cutoff
/// of [`pinv`], so this never fails.
pub fn tpinv<T: Scalar>(x: &Tensor3<T>) -> Tensor3<T> {
    let (i1, i2, i3) = x.dims();
    let xhat = fft_mode3(x);
    assemble_from_slices((i2, i1, i3), |s| Ok(pinv(&xhat.frontal_slice(s))))
        .expect("pseudoinverse of real tensor stays conjugate symmetric")
}

/// Whether `x^T * x` equals the identity tensor within `tol` (largest
/// absolute entry deviation), and `x * x^T` as well when `x` is square.
/// Rectangular tensors are tested one-sided, matching the orthonormal
/// factors produced by the slice-wise factorizations.
pub fn is_orthogonal<T: Scalar>(x: &Tensor3<T>, tol: T) -> bool {
    let (i1, i2, i3) = x.dims();
    let xt = ttranspose(x);
    let gram = tprod(&xt, x);
    if !near_identity(&gram, i2, i3, tol) {
        return false;
    }
    if i1 == i2 {
        let outer = tprod(x, &xt);
        if !near_identity(&outer, i1, i3, tol) {
            return false;
        }
    }
    true
}

fn near_identity<T: Scalar>(x: &Tensor3<T>, n: usize, i3: usize, tol: T) -> bool {
    x.sub(&Tensor3::identity(n, i3)).max_abs() <= tol
}

/// Whether all frontal slices are diagonal: the largest off-diagonal
/// magnitude must not exceed `tol` times the largest magnitude overall.
pub fn is_f_diagonal<T: Scalar>(x: &Tensor3<T>, tol: T) -> bool {
    let (i1, i2, i3) = x.dims();
    let scale = x.max_abs();
    if scale == T::zero() {
        return true;
    }
    for i in 0..i1 {
        for j in 0..i2 {
            if i == j {
                continue;
            }
            for k in 0..i3 {
                if x.get(i, j, k).abs() > tol * scale {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::relative_distance;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_tensor(dims: (usize, usize, usize), seed: u64) -> Tensor3<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Tensor3::from_fn(dims, |_, _, _| rng.random::<f64>() - 0.5)
    }

    #[test]
    fn identity_is_the_tprod_unit() {
        let x = random_tensor((4, 3, 5), 1);
        let left = tprod(&Tensor3::identity(4, 5), &x);
        let right = tprod(&x, &Tensor3::identity(3, 5));
        assert!(relative_distance(&x, &left) < 1e-12);
        assert!(relative_distance(&x, &right) < 1e-12);
    }

    #[test]
    fn tube_product_is_circular_convolution() {
        // circ([1, 2]) applied to (3, 4) gives (1*3 + 2*4, 2*3 + 1*4).
        let a = Tensor3::new((1, 1, 2), vec![1.0, 2.0]).unwrap();
        let b = Tensor3::new((1, 1, 2), vec![3.0, 4.0]).unwrap();
        let c = tprod(&a, &b);
        assert!((c.get(0, 0, 0) - 11.0).abs() < 1e-12);
        assert!((c.get(0, 0, 1) - 10.0).abs() < 1e-12);
    }

    #[test]
    fn transpose_is_matrix_transpose_at_depth_one() {
        let x = random_tensor((3, 5, 1), 2);
        let xt = ttranspose(&x);
        for i in 0..3 {
            for j in 0..5 {
                assert_eq!(x.get(i, j, 0), xt.get(j, i, 0));
            }
        }
    }

    #[test]
    fn transpose_is_an_involution() {
        let x = random_tensor((4, 3, 6), 3);
        assert_eq!(ttranspose(&ttranspose(&x)), x);
    }

    #[test]
    fn transpose_reverses_products() {
        let x = random_tensor((3, 4, 5), 4);
        let y = random_tensor((4, 2, 5), 5);
        let lhs = ttranspose(&tprod(&x, &y));
        let rhs = tprod(&ttranspose(&y), &ttranspose(&x));
        assert!(relative_distance(&lhs, &rhs) < 1e-10);
    }

    #[test]
    fn tube_inverse_basics() {
        let e = Tube::<f64>::identity(4);
        let einv = tube_inverse_default(&e).unwrap();
        assert!(e.to_tensor().sub(&einv.to_tensor()).frobenius_norm() < 1e-12);

        let two = Tube::new(vec![2.0, 0.0, 0.0, 0.0]);
        let half = tube_inverse_default(&two).unwrap();
        assert!((half.data()[0] - 0.5).abs() < 1e-12);
        assert!(half.data()[1..].iter().all(|v| v.abs() < 1e-12));
    }

    #[test]
    fn tube_inverse_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..20 {
            let t = Tube::new((0..7).map(|_| rng.random::<f64>() + 0.5).collect());
            let tinv_t = tube_inverse_default(&t).unwrap();
            let prod = tprod(&t.to_tensor(), &tinv_t.to_tensor());
            let e = Tube::<f64>::identity(7).to_tensor();
            assert!(prod.sub(&e).frobenius_norm() < 1e-10);
            // Inverting twice returns the original tube.
            let back = tube_inverse_default(&tinv_t).unwrap();
            assert!(back.to_tensor().sub(&t.to_tensor()).frobenius_norm() < 1e-10);
        }
    }

    #[test]
    fn tube_inverse_rejects_singular_tube() {
        // A constant tube has a zero DFT coefficient at every nonzero
        // frequency.
        let t = Tube::new(vec![1.0, 1.0]);
        assert!(matches!(
            tube_inverse_default(&t),
            Err(Error::NearSingularTube { .. })
        ));
    }

    #[test]
    fn tinv_of_identity_and_scalings() {
        let id = Tensor3::<f64>::identity(3, 4);
        assert!(relative_distance(&id, &tinv(&id).unwrap()) < 1e-12);
        let two = id.scale(2.0);
        let half = tinv(&two).unwrap();
        assert!(relative_distance(&id.scale(0.5), &half) < 1e-12);
    }

    #[test]
    fn tinv_product_is_identity() {
        let x = random_tensor((4, 4, 3), 6);
        let xinv = tinv(&x).unwrap();
        let prod = tprod(&x, &xinv);
        let id = Tensor3::identity(4, 3);
        assert!(prod.sub(&id).frobenius_norm() < 1e-8);
    }

    #[test]
    fn tinv_reports_singular_slice() {
        // Slice 0 of the transform is the sum of frontal slices; make every
        // frontal slice the same rank-deficient matrix so slice 0 is
        // singular.
        let mut x = Tensor3::<f64>::zeros(2, 2, 2);
        for k in 0..2 {
            x.set(0, 0, k, 1.0);
            x.set(0, 1, k, 2.0);
            x.set(1, 0, k, 2.0);
            x.set(1, 1, k, 4.0);
        }
        assert!(matches!(tinv(&x), Err(Error::SingularSlice { .. })));
    }

    #[test]
    fn tpinv_of_identity() {
        let id = Tensor3::<f64>::identity(3, 5);
        assert!(relative_distance(&id, &tpinv(&id)) < 1e-12);
    }

    #[test]
    fn tpinv_satisfies_penrose_conditions() {
        // Tubal-rank-2 tensor: rank-deficient in every slice.
        let a = random_tensor((5, 2, 4), 7);
        let b = random_tensor((2, 6, 4), 8);
        let x = tprod(&a, &b);
        let xp = tpinv(&x);
        let xxpx = tprod(&tprod(&x, &xp), &x);
        let xpxxp = tprod(&tprod(&xp, &x), &xp);
        assert!(relative_distance(&x, &xxpx) < 1e-8);
        assert!(relative_distance(&xp, &xpxxp) < 1e-8);
    }

    #[test]
    fn orthogonality_and_f_diagonal_predicates() {
        let id = Tensor3::<f64>::identity(3, 4);
        assert!(is_orthogonal(&id, 1e-10));
        assert!(is_f_diagonal(&id, 1e-10));

        let ones = Tensor3::from_fn((2, 2, 2), |_, _, _| 1.0);
        assert!(!is_orthogonal(&ones, 1e-10));
        assert!(!is_f_diagonal(&ones, 1e-10));
    }
}
