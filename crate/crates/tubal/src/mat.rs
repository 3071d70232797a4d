//! Dense matrix containers and the numerical kernels used per frontal slice.
//!
//! [`Mat`] is a real row-major matrix; it is what slice extraction returns.
//! [`CMat`] is a complex column-major matrix used for all Fourier-domain
//! work. The kernels here (one-sided Jacobi SVD, modified Gram-Schmidt
//! orthonormalization, LU inverse, Moore-Penrose pseudoinverse) are small
//! dense routines tuned for slices of a few hundred rows, not a general
//! linear algebra package.

use num_complex::Complex;

use crate::scalar::{cast, Scalar};

/// Real dense matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat<T> {
    nrows: usize,
    ncols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            data: vec![T::zero(); nrows * ncols],
        }
    }

    pub fn from_fn(nrows: usize, ncols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in 0..nrows {
            for c in 0..ncols {
                data.push(f(r, c));
            }
        }
        Self { nrows, ncols, data }
    }

    /// Builds from row-major data; length must be `nrows * ncols`.
    pub fn from_rows(nrows: usize, ncols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), nrows * ncols, "row data length mismatch");
        Self { nrows, ncols, data }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.nrows, self.ncols)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> T {
        self.data[r * self.ncols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.ncols + c] = v;
    }

    /// Row `r` as a contiguous slice.
    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.ncols..(r + 1) * self.ncols]
    }

    pub fn col(&self, c: usize) -> Vec<T> {
        (0..self.nrows).map(|r| self.get(r, c)).collect()
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn transpose(&self) -> Mat<T> {
        Mat::from_fn(self.ncols, self.nrows, |r, c| self.get(c, r))
    }

    pub fn matmul(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.ncols, other.nrows, "matmul dimension mismatch");
        let mut out = Mat::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                for j in 0..other.ncols {
                    out.data[i * out.ncols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|&x| x * x).sum::<T>().sqrt()
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, &x| m.max(x.abs()))
    }

    pub fn sub(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.shape(), other.shape(), "sub dimension mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| a - b)
            .collect();
        Mat {
            nrows: self.nrows,
            ncols: self.ncols,
            data,
        }
    }
}

/// Complex dense matrix, column-major so the column-wise kernels below walk
/// contiguous memory.
#[derive(Debug, Clone)]
pub struct CMat<T> {
    nrows: usize,
    ncols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> CMat<T> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            data: vec![Complex::new(T::zero(), T::zero()); nrows * ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex::new(T::one(), T::zero()));
        }
        m
    }

    pub fn from_fn(
        nrows: usize,
        ncols: usize,
        mut f: impl FnMut(usize, usize) -> Complex<T>,
    ) -> Self {
        let mut data = Vec::with_capacity(nrows * ncols);
        for c in 0..ncols {
            for r in 0..nrows {
                data.push(f(r, c));
            }
        }
        Self { nrows, ncols, data }
    }

    /// Promotes a real matrix to complex.
    pub fn from_real(m: &Mat<T>) -> Self {
        Self::from_fn(m.nrows(), m.ncols(), |r, c| {
            Complex::new(m.get(r, c), T::zero())
        })
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.nrows, self.ncols)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Complex<T> {
        self.data[c * self.nrows + r]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Complex<T>) {
        self.data[c * self.nrows + r] = v;
    }

    pub fn col(&self, c: usize) -> &[Complex<T>] {
        &self.data[c * self.nrows..(c + 1) * self.nrows]
    }

    pub fn col_mut(&mut self, c: usize) -> &mut [Complex<T>] {
        &mut self.data[c * self.nrows..(c + 1) * self.nrows]
    }

    pub fn data(&self) -> &[Complex<T>] {
        &self.data
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CMat<T> {
        CMat::from_fn(self.ncols, self.nrows, |r, c| self.get(c, r).conj())
    }

    pub fn conj(&self) -> CMat<T> {
        CMat {
            nrows: self.nrows,
            ncols: self.ncols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn matmul(&self, other: &CMat<T>) -> CMat<T> {
        assert_eq!(self.ncols, other.nrows, "matmul dimension mismatch");
        let mut out = CMat::zeros(self.nrows, other.ncols);
        for j in 0..other.ncols {
            let bcol = other.col(j);
            let ocol = out.col_mut(j);
            for (k, &b) in bcol.iter().enumerate() {
                if b.re.is_zero() && b.im.is_zero() {
                    continue;
                }
                let acol = self.col(k);
                for (i, &a) in acol.iter().enumerate() {
                    ocol[i] += a * b;
                }
            }
        }
        out
    }

    /// `self^H * other` without forming the adjoint.
    pub fn adjoint_matmul(&self, other: &CMat<T>) -> CMat<T> {
        assert_eq!(self.nrows, other.nrows, "adjoint_matmul dimension mismatch");
        CMat::from_fn(self.ncols, other.ncols, |r, c| {
            dot_conj(self.col(r), other.col(c))
        })
    }

    pub fn frobenius_norm(&self) -> T {
        self.data
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<T>()
            .sqrt()
    }

    pub fn max_abs(&self) -> T {
        self.data
            .iter()
            .fold(T::zero(), |m, z| m.max(z.norm_sqr()))
            .sqrt()
    }

    pub fn scale(&self, s: Complex<T>) -> CMat<T> {
        CMat {
            nrows: self.nrows,
            ncols: self.ncols,
            data: self.data.iter().map(|&z| z * s).collect(),
        }
    }

    pub fn sub(&self, other: &CMat<T>) -> CMat<T> {
        assert_eq!(self.shape(), other.shape(), "sub dimension mismatch");
        CMat {
            nrows: self.nrows,
            ncols: self.ncols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }

    /// First `k` columns.
    pub fn truncate_cols(&self, k: usize) -> CMat<T> {
        assert!(k <= self.ncols);
        CMat {
            nrows: self.nrows,
            ncols: k,
            data: self.data[..k * self.nrows].to_vec(),
        }
    }
}

/// `sum_i conj(a[i]) * b[i]`.
pub fn dot_conj<T: Scalar>(a: &[Complex<T>], b: &[Complex<T>]) -> Complex<T> {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Complex::new(T::zero(), T::zero());
    for (x, y) in a.iter().zip(b) {
        acc += x.conj() * y;
    }
    acc
}

/// Thin SVD `a = u * diag(sigma) * v^H` with `k = min(nrows, ncols)` columns.
#[derive(Debug, Clone)]
pub struct Svd<T> {
    pub u: CMat<T>,
    pub sigma: Vec<T>,
    pub v: CMat<T>,
}

/// One-sided Jacobi SVD of a dense complex matrix.
///
/// Rotates column pairs until all mutual inner products fall below
/// `eps * ||col_p|| * ||col_q||`, then reads singular values off the column
/// norms. Jacobi converges to high relative accuracy even for tiny singular
/// values, which is what keeps the reconstruction errors of the slice-wise
/// factorizations near machine precision. Columns whose singular value
/// underflows the numerical rank are replaced by a deterministic orthonormal
/// completion so `u` always has orthonormal columns.
pub fn jacobi_svd<T: Scalar>(a: &CMat<T>) -> Svd<T> {
    if a.nrows() < a.ncols() {
        // Work on the adjoint and swap the factors back.
        let s = jacobi_svd(&a.adjoint());
        return Svd {
            u: s.v,
            sigma: s.sigma,
            v: s.u,
        };
    }

    let m = a.nrows();
    let n = a.ncols();
    let mut w = a.clone();
    let mut v = CMat::identity(n);

    let tol = T::epsilon();
    let max_sweeps = 60;
    for _sweep in 0..max_sweeps {
        let mut rotated = false;
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                let (app, aqq, apq) = {
                    let cp = w.col(p);
                    let cq = w.col(q);
                    let app = cp.iter().map(|z| z.norm_sqr()).sum::<T>();
                    let aqq = cq.iter().map(|z| z.norm_sqr()).sum::<T>();
                    (app, aqq, dot_conj(cp, cq))
                };
                let off = apq.norm();
                if off <= tol * (app * aqq).sqrt() || off.is_zero() {
                    continue;
                }
                rotated = true;

                // Unitary 2x2 that orthogonalizes the column pair: a phase
                // on the q side reduces the Gram block to real symmetric,
                // then a classic Jacobi rotation annihilates it.
                let alpha_conj = (apq / Complex::new(off, T::zero())).conj();
                let tau = (aqq - app) / (off + off);
                let t = {
                    let denom = tau.abs() + (T::one() + tau * tau).sqrt();
                    if tau >= T::zero() {
                        T::one() / denom
                    } else {
                        -T::one() / denom
                    }
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = c * t;

                rotate_pair(&mut w, p, q, c, s, alpha_conj);
                rotate_pair(&mut v, p, q, c, s, alpha_conj);
            }
        }
        if !rotated {
            break;
        }
    }

    // Column norms are the singular values; sort descending, stable in index.
    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<T> = (0..n)
        .map(|j| w.col(j).iter().map(|z| z.norm_sqr()).sum::<T>().sqrt())
        .collect();
    order.sort_by(|&a, &b| norms[b].partial_cmp(&norms[a]).unwrap().then(a.cmp(&b)));

    let sigma: Vec<T> = order.iter().map(|&j| norms[j]).collect();
    let sigma_max = sigma.first().copied().unwrap_or_else(T::zero);
    let rank_floor = sigma_max * cast::<T>(m.max(n) as f64) * T::epsilon();

    let mut u = CMat::zeros(m, n);
    let mut vs = CMat::zeros(n, n);
    let mut deficient = Vec::new();
    for (dst, &src) in order.iter().enumerate() {
        vs.col_mut(dst).copy_from_slice(v.col(src));
        if sigma[dst] > rank_floor && sigma[dst] > T::zero() {
            let inv = T::one() / sigma[dst];
            let wcol = w.col(src);
            let ucol = u.col_mut(dst);
            for (o, &z) in ucol.iter_mut().zip(wcol) {
                *o = z * Complex::new(inv, T::zero());
            }
        } else {
            deficient.push(dst);
        }
    }
    for dst in deficient {
        complete_column(&mut u, dst);
    }

    Svd { u, sigma, v: vs }
}

/// Applies the 2x2 unitary `[[c, s], [-s*alpha_conj, c*alpha_conj]]` to
/// columns `p`, `q` from the right.
fn rotate_pair<T: Scalar>(
    m: &mut CMat<T>,
    p: usize,
    q: usize,
    c: T,
    s: T,
    alpha_conj: Complex<T>,
) {
    let rows = m.nrows();
    let (pbase, qbase) = (p * rows, q * rows);
    let cc = Complex::new(c, T::zero());
    let sc = Complex::new(s, T::zero());
    for i in 0..rows {
        let wp = m.data[pbase + i];
        let wq = m.data[qbase + i] * alpha_conj;
        m.data[pbase + i] = wp * cc - wq * sc;
        m.data[qbase + i] = wp * sc + wq * cc;
    }
}

/// Replaces column `dst` with a unit vector orthogonal to every other
/// populated column, chosen deterministically from the standard basis.
fn complete_column<T: Scalar>(u: &mut CMat<T>, dst: usize) {
    let m = u.nrows();
    let n = u.ncols();
    for t in 0..m {
        let mut cand = vec![Complex::new(T::zero(), T::zero()); m];
        cand[t] = Complex::new(T::one(), T::zero());
        for j in 0..n {
            if j == dst {
                continue;
            }
            let proj = dot_conj(u.col(j), &cand);
            if proj.norm_sqr() > T::zero() {
                for (ci, &uj) in cand.iter_mut().zip(u.col(j).to_vec().iter()) {
                    *ci -= uj * proj;
                }
            }
        }
        let norm = cand.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        if norm > cast::<T>(0.5) {
            let inv = Complex::new(T::one() / norm, T::zero());
            for (o, z) in u.col_mut(dst).iter_mut().zip(cand) {
                *o = z * inv;
            }
            return;
        }
    }
    unreachable!("orthonormal completion always finds a basis vector");
}

/// Orthonormal basis for the column span: modified Gram-Schmidt, run twice
/// per column for orthogonality near machine precision. Rank-deficient
/// columns are swapped for a deterministic completion, so the result always
/// has exactly `a.ncols()` orthonormal columns (requires `ncols <= nrows`).
pub fn orthonormalize_cols<T: Scalar>(a: &CMat<T>) -> CMat<T> {
    let m = a.nrows();
    let k = a.ncols();
    assert!(k <= m, "cannot orthonormalize {k} columns in dimension {m}");
    let mut q = a.clone();
    let scale = a.max_abs().max(T::min_positive_value());
    let floor = scale * cast::<T>(m as f64) * T::epsilon();

    for j in 0..k {
        for _pass in 0..2 {
            for i in 0..j {
                let proj = dot_conj(q.col(i), q.col(j));
                let qi = q.col(i).to_vec();
                let qj = q.col_mut(j);
                for (y, x) in qj.iter_mut().zip(qi) {
                    *y -= x * proj;
                }
            }
        }
        let norm = q.col(j).iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        if norm <= floor {
            complete_gs_column(&mut q, j);
        } else {
            let inv = Complex::new(T::one() / norm, T::zero());
            for z in q.col_mut(j) {
                *z = *z * inv;
            }
        }
    }
    q
}

/// Completion used by [`orthonormalize_cols`]: only the columns before `dst`
/// are orthonormal at this point.
fn complete_gs_column<T: Scalar>(q: &mut CMat<T>, dst: usize) {
    let m = q.nrows();
    for t in 0..m {
        let mut cand = vec![Complex::new(T::zero(), T::zero()); m];
        cand[t] = Complex::new(T::one(), T::zero());
        for j in 0..dst {
            let proj = dot_conj(q.col(j), &cand);
            let qj = q.col(j).to_vec();
            for (ci, x) in cand.iter_mut().zip(qj) {
                *ci -= x * proj;
            }
        }
        let norm = cand.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        if norm > cast::<T>(0.5) {
            let inv = Complex::new(T::one() / norm, T::zero());
            for (o, z) in q.col_mut(dst).iter_mut().zip(cand) {
                *o = z * inv;
            }
            return;
        }
    }
    unreachable!("orthonormal completion always finds a basis vector");
}

/// Inverse of a square matrix via LU with partial pivoting.
///
/// Returns `None` when a pivot falls at or below `n * eps * max|a|`,
/// i.e. the matrix is numerically singular.
pub fn lu_inverse<T: Scalar>(a: &CMat<T>) -> Option<CMat<T>> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "lu_inverse needs a square matrix");
    if n == 0 {
        return Some(CMat::zeros(0, 0));
    }
    let mut lu = a.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let floor = a.max_abs() * cast::<T>(n as f64) * T::epsilon();

    for k in 0..n {
        // Pivot search down column k.
        let mut best = k;
        let mut best_mag = lu.get(k, k).norm_sqr();
        for i in k + 1..n {
            let mag = lu.get(i, k).norm_sqr();
            if mag > best_mag {
                best_mag = mag;
                best = i;
            }
        }
        if best_mag.sqrt() <= floor {
            return None;
        }
        if best != k {
            perm.swap(k, best);
            for j in 0..n {
                let tmp = lu.get(k, j);
                lu.set(k, j, lu.get(best, j));
                lu.set(best, j, tmp);
            }
        }
        let pivot = lu.get(k, k);
        for i in k + 1..n {
            let factor = lu.get(i, k) / pivot;
            lu.set(i, k, factor);
            for j in k + 1..n {
                let v = lu.get(i, j) - factor * lu.get(k, j);
                lu.set(i, j, v);
            }
        }
    }

    // Solve A x = e_c for each unit vector, applying the row permutation.
    let mut inv = CMat::zeros(n, n);
    let one = Complex::new(T::one(), T::zero());
    for c in 0..n {
        let mut x = vec![Complex::new(T::zero(), T::zero()); n];
        for (i, &p) in perm.iter().enumerate() {
            if p == c {
                x[i] = one;
            }
        }
        for i in 1..n {
            for j in 0..i {
                let f = lu.get(i, j);
                let xj = x[j];
                x[i] -= f * xj;
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let f = lu.get(i, j);
                let xj = x[j];
                x[i] -= f * xj;
            }
            x[i] /= lu.get(i, i);
        }
        inv.col_mut(c).copy_from_slice(&x);
    }
    Some(inv)
}

/// Moore-Penrose pseudoinverse via the Jacobi SVD.
///
/// Singular values at or below `max(nrows, ncols) * eps * sigma_max` are
/// treated as zero, the usual numerical-rank convention.
pub fn pinv<T: Scalar>(a: &CMat<T>) -> CMat<T> {
    let svd = jacobi_svd(a);
    let k = svd.sigma.len();
    let sigma_max = svd.sigma.first().copied().unwrap_or_else(T::zero);
    let cutoff = sigma_max * cast::<T>(a.nrows().max(a.ncols()) as f64) * T::epsilon();

    // V * diag(1/sigma) * U^H, dropping directions below the cutoff.
    let mut scaled_v = svd.v.clone();
    for j in 0..k {
        let f = if svd.sigma[j] > cutoff {
            T::one() / svd.sigma[j]
        } else {
            T::zero()
        };
        let fc = Complex::new(f, T::zero());
        for z in scaled_v.col_mut(j) {
            *z = *z * fc;
        }
    }
    scaled_v.matmul(&svd.u.adjoint())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_cmat(m: usize, n: usize, seed: u64) -> CMat<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        CMat::from_fn(m, n, |_, _| {
            Complex::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
        })
    }

    fn max_abs_diff(a: &CMat<f64>, b: &CMat<f64>) -> f64 {
        a.data()
            .iter()
            .zip(b.data())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    #[test]
    fn jacobi_reconstructs_random_matrix() {
        for &(m, n) in &[(7usize, 7usize), (9, 4), (4, 9)] {
            let a = random_cmat(m, n, 42 + (m * n) as u64);
            let svd = jacobi_svd(&a);
            let k = m.min(n);
            assert_eq!(svd.sigma.len(), k);
            let mut us = svd.u.clone();
            for j in 0..k {
                let s = Complex::new(svd.sigma[j], 0.0);
                for z in us.col_mut(j) {
                    *z = *z * s;
                }
            }
            let rec = us.matmul(&svd.v.adjoint());
            assert!(max_abs_diff(&rec, &a) < 1e-13 * a.max_abs().max(1.0));

            let utu = svd.u.adjoint_matmul(&svd.u);
            let vtv = svd.v.adjoint_matmul(&svd.v);
            let eye = CMat::identity(k);
            assert!(max_abs_diff(&utu, &eye) < 1e-13);
            assert!(max_abs_diff(&vtv, &eye) < 1e-13);
        }
    }

    #[test]
    fn jacobi_sorts_singular_values() {
        let a = random_cmat(12, 8, 7);
        let svd = jacobi_svd(&a);
        for w in svd.sigma.windows(2) {
            assert!(w[0] >= w[1]);
        }
    }

    #[test]
    fn jacobi_handles_rank_deficiency() {
        // Rank-2 matrix built from two outer products.
        let x = random_cmat(8, 2, 3);
        let y = random_cmat(6, 2, 4);
        let a = x.matmul(&y.adjoint());
        let svd = jacobi_svd(&a);
        assert!(svd.sigma[1] > 1e-10);
        for &s in &svd.sigma[2..] {
            assert!(s < 1e-12 * svd.sigma[0]);
        }
        // u columns stay orthonormal even past the rank.
        let utu = svd.u.adjoint_matmul(&svd.u);
        assert!(max_abs_diff(&utu, &CMat::identity(6)) < 1e-12);
    }

    #[test]
    fn jacobi_keeps_real_input_real() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = CMat::from_fn(6, 6, |_, _| Complex::new(rng.random::<f64>() - 0.5, 0.0));
        let svd = jacobi_svd(&a);
        let max_im = svd
            .u
            .data()
            .iter()
            .chain(svd.v.data())
            .map(|z| z.im.abs())
            .fold(0.0, f64::max);
        assert_eq!(max_im, 0.0);
    }

    #[test]
    fn mgs_produces_orthonormal_columns() {
        let a = random_cmat(20, 6, 5);
        let q = orthonormalize_cols(&a);
        let qtq = q.adjoint_matmul(&q);
        assert!(max_abs_diff(&qtq, &CMat::identity(6)) < 1e-13);
    }

    #[test]
    fn mgs_completes_dependent_columns() {
        let mut a = random_cmat(10, 3, 6);
        let dup = a.col(0).to_vec();
        a.col_mut(2).copy_from_slice(&dup);
        let q = orthonormalize_cols(&a);
        let qtq = q.adjoint_matmul(&q);
        assert!(max_abs_diff(&qtq, &CMat::identity(3)) < 1e-12);
    }

    #[test]
    fn lu_inverse_round_trip() {
        let a = random_cmat(9, 9, 8);
        let inv = lu_inverse(&a).expect("well conditioned");
        let prod = a.matmul(&inv);
        assert!(max_abs_diff(&prod, &CMat::identity(9)) < 1e-11);
    }

    #[test]
    fn lu_inverse_rejects_singular() {
        let mut a = random_cmat(5, 5, 9);
        let dup: Vec<_> = a.col(1).to_vec();
        a.col_mut(3).copy_from_slice(&dup);
        assert!(lu_inverse(&a).is_none());
    }

    #[test]
    fn pinv_satisfies_penrose_conditions() {
        let a = {
            // Rank-3 rectangular matrix.
            let x = random_cmat(8, 3, 12);
            let y = random_cmat(5, 3, 13);
            x.matmul(&y.adjoint())
        };
        let p = pinv(&a);
        let axa = a.matmul(&p).matmul(&a);
        let xax = p.matmul(&a).matmul(&p);
        assert!(max_abs_diff(&axa, &a) < 1e-12 * a.max_abs());
        assert!(max_abs_diff(&xax, &p) < 1e-12 * p.max_abs().max(1.0));
    }

    #[test]
    fn real_mat_basics() {
        let m = Mat::from_fn(2, 3, |r, c| (r * 3 + c) as f64);
        assert_eq!(m.get(1, 2), 5.0);
        assert_eq!(m.transpose().get(2, 1), 5.0);
        assert_eq!(m.row(1), &[3.0, 4.0, 5.0]);
        let id = Mat::from_fn(3, 3, |r, c| if r == c { 1.0 } else { 0.0 });
        let p = m.matmul(&id);
        assert_eq!(p.data(), m.data());
    }
}
