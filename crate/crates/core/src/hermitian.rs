//! Small dense complex linear algebra.
//!
//! [`CMatrix`] is a plain row-major complex matrix. [`HermitianMatrix`] wraps a
//! square `CMatrix` whose Hermitian symmetry is enforced at construction by
//! replacing `A` with `(A + A†) / 2`. Eigenpairs come from cyclic complex Jacobi
//! rotations, which is adequate for the matrix sizes this crate produces
//! (block Gram matrices of a few hundred rows at most).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

#[cfg(not(feature = "std"))]
use num_traits::Float;
use num_traits::Zero;

use crate::{Error, Result, C64, DEFAULT_PSD_TOL};

const JACOBI_MAX_SWEEPS: usize = 100;
const JACOBI_REL_OFF_TOL: f64 = 1e-14;

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![C64::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix from row-major data.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::InvalidMatrix(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_real_diag(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = C64::new(d, 0.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn matmul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        let mut out = CMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(self.cols, v.len(), "mul_vec dimension mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    pub fn scaled(&self, s: C64) -> CMatrix {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| z * s).collect(),
        }
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, other: &CMatrix, s: C64) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a += b * s;
        }
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        let mut out = self.clone();
        out.add_scaled(other, C64::new(-1.0, 0.0));
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `u† A v`.
    pub fn sesquilinear(&self, u: &[C64], v: &[C64]) -> C64 {
        let av = self.mul_vec(v);
        u.iter().zip(&av).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Square complex matrix equal to its own adjoint.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    inner: CMatrix,
}

impl HermitianMatrix {
    /// Symmetrizes `m` as `(m + m†)/2`. Rejects non-square or non-finite input.
    pub fn from_cmatrix(m: CMatrix) -> Result<Self> {
        if !m.is_square() || m.rows == 0 {
            return Err(Error::InvalidMatrix(format!(
                "expected a nonempty square matrix, got {}x{}",
                m.rows, m.cols
            )));
        }
        if !m.is_finite() {
            return Err(Error::InvalidMatrix("non-finite entry".into()));
        }
        let n = m.rows;
        let half = C64::new(0.5, 0.0);
        let mut out = CMatrix::zeros(n, n);
        for i in 0..n {
            out[(i, i)] = C64::new(m[(i, i)].re, 0.0);
            for j in (i + 1)..n {
                let z = (m[(i, j)] + m[(j, i)].conj()) * half;
                out[(i, j)] = z;
                out[(j, i)] = z.conj();
            }
        }
        Ok(Self { inner: out })
    }

    pub fn new(dim: usize, entries: Vec<C64>) -> Result<Self> {
        Self::from_cmatrix(CMatrix::from_vec(dim, dim, entries)?)
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(Error::InvalidMatrix("ragged rows".into()));
            }
            data.extend(r.iter().map(|&x| C64::new(x, 0.0)));
        }
        Self::new(n, data)
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            inner: CMatrix::identity(dim),
        }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            inner: CMatrix::zeros(dim, dim),
        }
    }

    pub fn diag(values: &[f64]) -> Self {
        Self {
            inner: CMatrix::from_real_diag(values),
        }
    }

    /// Rank-one matrix `v v†`.
    pub fn outer(v: &[C64]) -> Self {
        let n = v.len();
        let m = CMatrix::from_fn(n, n, |i, j| v[i] * v[j].conj());
        Self::from_cmatrix(m).expect("outer product of finite vector")
    }

    pub fn dim(&self) -> usize {
        self.inner.rows
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.inner[(i, j)]
    }

    pub fn as_cmatrix(&self) -> &CMatrix {
        &self.inner
    }

    pub fn into_cmatrix(self) -> CMatrix {
        self.inner
    }

    pub fn is_zero(&self) -> bool {
        self.inner.data.iter().all(|z| z.is_zero())
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self {
            inner: self.inner.scaled(C64::new(s, 0.0)),
        }
    }

    pub fn add(&self, other: &HermitianMatrix) -> Self {
        let mut inner = self.inner.clone();
        inner.add_scaled(&other.inner, C64::new(1.0, 0.0));
        Self { inner }
    }

    /// Real quadratic form `v† A v`.
    pub fn quadratic_form(&self, v: &[C64]) -> f64 {
        self.inner.sesquilinear(v, v).re
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.inner.frobenius_norm()
    }
}

/// Eigenvalues in ascending order with matching unit eigenvector columns.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: CMatrix,
}

impl EigenDecomposition {
    /// `V diag(λ) V†`.
    pub fn reconstruct(&self) -> CMatrix {
        self.reconstruct_with(|l| l)
    }

    fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> CMatrix {
        let n = self.eigenvalues.len();
        let v = &self.eigenvectors;
        let mut out = CMatrix::zeros(n, n);
        for (k, &l) in self.eigenvalues.iter().enumerate() {
            let fl = f(l);
            if fl == 0.0 {
                continue;
            }
            for i in 0..n {
                let vik = v[(i, k)] * fl;
                for j in 0..n {
                    out[(i, j)] += vik * v[(j, k)].conj();
                }
            }
        }
        out
    }
}

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
///
/// Each rotation first removes the phase of the pivot entry, reducing the 2x2
/// subproblem to a real symmetric one, then applies the classical rotation.
pub fn eigen_hermitian(a: &HermitianMatrix) -> Result<EigenDecomposition> {
    let (m, v) = jacobi(a, true)?;
    let v = v.expect("vectors requested");
    let n = a.dim();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.total_cmp(&m[(j, j)].re).then(i.cmp(&j)));
    let eigenvalues = order.iter().map(|&i| m[(i, i)].re).collect();
    let eigenvectors = CMatrix::from_fn(n, n, |i, k| v[(i, order[k])]);
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Runs the sweeps; returns the diagonalized matrix and, if asked, the accumulated rotations.
fn jacobi(a: &HermitianMatrix, vectors: bool) -> Result<(CMatrix, Option<CMatrix>)> {
    if !a.inner.is_finite() {
        return Err(Error::InvalidMatrix("non-finite entry".into()));
    }
    let n = a.dim();
    let mut m = a.inner.clone();
    let mut v = vectors.then(|| CMatrix::identity(n));
    let norm = m.frobenius_norm();

    for _ in 0..JACOBI_MAX_SWEEPS {
        let off = off_diagonal_norm(&m);
        if off <= JACOBI_REL_OFF_TOL * norm || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                let r = apq.norm();
                if r <= f64::MIN_POSITIVE {
                    continue;
                }
                let phase = apq / r;
                let app = m[(p, p)].re;
                let aqq = m[(q, q)].re;
                let tau = (aqq - app) / (2.0 * r);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let u_pp = C64::new(c, 0.0);
                let u_pq = C64::new(s, 0.0);
                let u_qp = phase.conj() * (-s);
                let u_qq = phase.conj() * c;

                for k in 0..n {
                    let akp = m[(k, p)];
                    let akq = m[(k, q)];
                    m[(k, p)] = akp * u_pp + akq * u_qp;
                    m[(k, q)] = akp * u_pq + akq * u_qq;
                }
                // Rows p, q outside the pivot block are conjugates of the updated columns.
                for k in 0..n {
                    if k != p && k != q {
                        m[(p, k)] = m[(k, p)].conj();
                        m[(q, k)] = m[(k, q)].conj();
                    }
                }
                let (app, aqp, aqq) = (m[(p, p)], m[(q, p)], m[(q, q)]);
                let apq = m[(p, q)];
                m[(p, p)] = C64::new((u_pp.conj() * app + u_qp.conj() * aqp).re, 0.0);
                m[(q, q)] = C64::new((u_pq.conj() * apq + u_qq.conj() * aqq).re, 0.0);
                m[(p, q)] = C64::zero();
                m[(q, p)] = C64::zero();
                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let vkp = v[(k, p)];
                        let vkq = v[(k, q)];
                        v[(k, p)] = vkp * u_pp + vkq * u_qp;
                        v[(k, q)] = vkp * u_pq + vkq * u_qq;
                    }
                }
            }
        }
    }
    Ok((m, v))
}

fn off_diagonal_norm(m: &CMatrix) -> f64 {
    let mut s = 0.0;
    for i in 0..m.rows {
        for j in 0..m.cols {
            if i != j {
                s += m[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

pub fn min_eigenvalue(a: &HermitianMatrix) -> Result<f64> {
    let (m, _) = jacobi(a, false)?;
    Ok((0..a.dim()).map(|i| m[(i, i)].re).fold(f64::INFINITY, f64::min))
}

/// Sum of the (real) diagonal entries.
pub fn trace(a: &HermitianMatrix) -> f64 {
    (0..a.dim()).map(|i| a.get(i, i).re).sum()
}

fn psd_scale(a: &HermitianMatrix) -> f64 {
    trace(a).max(1.0)
}

/// Unique positive semidefinite square root. Eigenvalues within `-tol·max(1, tr A)`
/// of zero are clamped before taking roots.
pub fn psd_sqrt(a: &HermitianMatrix, tol: f64) -> Result<HermitianMatrix> {
    let eig = eigen_hermitian(a)?;
    let lmin = eig.eigenvalues[0];
    if lmin < -tol * psd_scale(a) {
        return Err(Error::NotPsd {
            index: 0,
            value: lmin,
        });
    }
    HermitianMatrix::from_cmatrix(eig.reconstruct_with(|l| l.max(0.0).sqrt()))
}

/// Outcome of [`is_psd`].
#[derive(Debug, Clone, PartialEq)]
pub struct PsdCheck {
    pub is_psd: bool,
    pub min_eigenvalue: f64,
    /// Unit eigenvector of the most negative eigenvalue when the check fails.
    pub witness: Option<Vec<C64>>,
}

pub fn is_psd(a: &HermitianMatrix, tol: f64) -> Result<PsdCheck> {
    let eig = eigen_hermitian(a)?;
    let lmin = eig.eigenvalues[0];
    let ok = lmin >= -tol * psd_scale(a);
    Ok(PsdCheck {
        is_psd: ok,
        min_eigenvalue: lmin,
        witness: (!ok).then(|| eig.eigenvectors.column(0)),
    })
}

/// Lower-triangular factor of `A + jitter·I`.
#[derive(Debug, Clone, PartialEq)]
pub struct CholeskyFactor {
    pub lower: CMatrix,
    /// Pivots that were numerically zero; their columns are left at zero.
    pub zero_pivots: Vec<usize>,
}

impl CholeskyFactor {
    /// Solves `L L† x = b`. Fails if any pivot was zero.
    pub fn solve(&self, b: &[C64]) -> Result<Vec<C64>> {
        if let Some(&pivot) = self.zero_pivots.first() {
            return Err(Error::IllConditioned { pivot });
        }
        let l = &self.lower;
        let n = l.rows();
        assert_eq!(b.len(), n, "right-hand side length");
        let mut y = b.to_vec();
        for i in 0..n {
            let mut s = y[i];
            for k in 0..i {
                s -= l[(i, k)] * y[k];
            }
            y[i] = s / l[(i, i)];
        }
        for i in (0..n).rev() {
            let mut s = y[i];
            for k in (i + 1)..n {
                s -= l[(k, i)].conj() * y[k];
            }
            y[i] = s / l[(i, i)].conj();
        }
        Ok(y)
    }
}

/// Cholesky factorization of a positive semidefinite matrix plus `jitter·I`.
///
/// Pivots below `-DEFAULT_PSD_TOL·scale` are rejected; pivots within a few ulps of
/// zero are accepted and recorded, which keeps rank-deficient PSD input factorable.
pub fn cholesky_psd(a: &HermitianMatrix, jitter: f64) -> Result<CholeskyFactor> {
    if !(jitter >= 0.0) || !jitter.is_finite() {
        return Err(Error::InvalidMatrix(format!("jitter must be >= 0, got {jitter}")));
    }
    let n = a.dim();
    let src = a.as_cmatrix();
    let scale = (0..n)
        .map(|i| src[(i, i)].re + jitter)
        .fold(1.0_f64, f64::max);
    let zero_tol = (n as f64) * 4.0 * f64::EPSILON * scale;
    let mut l = CMatrix::zeros(n, n);
    let mut zero_pivots = Vec::new();
    for j in 0..n {
        let mut d = src[(j, j)].re + jitter;
        for k in 0..j {
            d -= l[(j, k)].norm_sqr();
        }
        if d < -DEFAULT_PSD_TOL * scale {
            return Err(Error::NotPsd { index: j, value: d });
        }
        if d <= zero_tol {
            zero_pivots.push(j);
            continue;
        }
        let ljj = d.sqrt();
        l[(j, j)] = C64::new(ljj, 0.0);
        for i in (j + 1)..n {
            let mut s = src[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)].conj();
            }
            l[(i, j)] = s / ljj;
        }
    }
    Ok(CholeskyFactor {
        lower: l,
        zero_pivots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn construction_symmetrizes() {
        let a = HermitianMatrix::new(2, vec![c(1.0, 0.3), c(2.0, 1.0), c(0.0, 0.0), c(3.0, 0.0)])
            .unwrap();
        assert_eq!(a.get(0, 0), c(1.0, 0.0));
        assert_eq!(a.get(0, 1), c(1.0, 0.5));
        assert_eq!(a.get(1, 0), c(1.0, -0.5));
    }

    #[test]
    fn rejects_non_finite() {
        let r = HermitianMatrix::new(1, vec![c(f64::NAN, 0.0)]);
        assert!(matches!(r, Err(Error::InvalidMatrix(_))));
    }

    #[test]
    fn eigen_examples() {
        let e = eigen_hermitian(&HermitianMatrix::identity(3)).unwrap();
        assert_eq!(e.eigenvalues, vec![1.0, 1.0, 1.0]);

        let a = HermitianMatrix::from_real_rows(&[&[2.0, 1.0], &[1.0, 2.0]]).unwrap();
        let e = eigen_hermitian(&a).unwrap();
        assert!(close(e.eigenvalues[0], 1.0, 1e-14) && close(e.eigenvalues[1], 3.0, 1e-14));

        let pauli_y =
            HermitianMatrix::new(2, vec![c(0.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(0.0, 0.0)])
                .unwrap();
        let e = eigen_hermitian(&pauli_y).unwrap();
        assert!(close(e.eigenvalues[0], -1.0, 1e-14) && close(e.eigenvalues[1], 1.0, 1e-14));
        let r = e.reconstruct().sub(pauli_y.as_cmatrix()).frobenius_norm();
        assert!(r <= 1e-12);
    }

    #[test]
    fn min_eigenvalue_examples() {
        assert!(close(min_eigenvalue(&HermitianMatrix::diag(&[4.0, 9.0])).unwrap(), 4.0, 1e-15));
        let ones = HermitianMatrix::from_real_rows(&[&[1.0, 1.0], &[1.0, 1.0]]).unwrap();
        assert!(close(min_eigenvalue(&ones).unwrap(), 0.0, 1e-15));
    }

    #[test]
    fn sqrt_examples() {
        let s = psd_sqrt(&HermitianMatrix::diag(&[4.0, 9.0]), 1e-10).unwrap();
        assert!(s.as_cmatrix().sub(HermitianMatrix::diag(&[2.0, 3.0]).as_cmatrix()).max_abs() < 1e-14);
        let ones = HermitianMatrix::from_real_rows(&[&[1.0, 1.0], &[1.0, 1.0]]).unwrap();
        let s = psd_sqrt(&ones, 1e-10).unwrap();
        let expect = ones.scaled(core::f64::consts::FRAC_1_SQRT_2);
        assert!(s.as_cmatrix().sub(expect.as_cmatrix()).max_abs() < 1e-14);
        let neg = HermitianMatrix::diag(&[1.0, -1.0]);
        assert!(matches!(psd_sqrt(&neg, 1e-10), Err(Error::NotPsd { .. })));
    }

    #[test]
    fn cholesky_examples() {
        let f = cholesky_psd(&HermitianMatrix::identity(3), 0.0).unwrap();
        assert_eq!(f.lower, CMatrix::identity(3));
        let f = cholesky_psd(&HermitianMatrix::diag(&[4.0, 9.0]), 0.0).unwrap();
        assert_eq!(f.lower, CMatrix::from_real_diag(&[2.0, 3.0]));

        // [[1,1],[1,1]]: first column (1,1); second pivot 1 - 1 = 0.
        let ones = HermitianMatrix::from_real_rows(&[&[1.0, 1.0], &[1.0, 1.0]]).unwrap();
        let f = cholesky_psd(&ones, 0.0).unwrap();
        assert_eq!(f.zero_pivots, vec![1]);
        let llh = f.lower.matmul(&f.lower.adjoint());
        assert!(llh.sub(ones.as_cmatrix()).max_abs() <= 1e-10);
        assert!(matches!(f.solve(&[c(1.0, 0.0), c(0.0, 0.0)]), Err(Error::IllConditioned { pivot: 1 })));

        let f = cholesky_psd(&ones, 1e-8).unwrap();
        assert!(f.zero_pivots.is_empty());
        let mut target = ones.as_cmatrix().clone();
        target.add_scaled(&CMatrix::identity(2), c(1e-8, 0.0));
        assert!(f.lower.matmul(&f.lower.adjoint()).sub(&target).max_abs() <= 1e-10);

        let neg = HermitianMatrix::diag(&[1.0, -1.0]);
        assert_eq!(cholesky_psd(&neg, 0.0), Err(Error::NotPsd { index: 1, value: -1.0 }));
    }

    #[test]
    fn cholesky_solve_complex() {
        let a = HermitianMatrix::new(2, vec![c(4.0, 0.0), c(1.0, 2.0), c(1.0, -2.0), c(6.0, 0.0)])
            .unwrap();
        let f = cholesky_psd(&a, 0.0).unwrap();
        let b = vec![c(1.0, -1.0), c(0.5, 2.0)];
        let x = f.solve(&b).unwrap();
        let ax = a.as_cmatrix().mul_vec(&x);
        for (u, v) in ax.iter().zip(&b) {
            assert!((u - v).norm() < 1e-13);
        }
    }

    #[test]
    fn trace_examples() {
        assert_eq!(trace(&HermitianMatrix::identity(4)), 4.0);
        assert_eq!(trace(&HermitianMatrix::diag(&[4.0, 9.0])), 13.0);
        assert_eq!(trace(&HermitianMatrix::zeros(3)), 0.0);
    }

    #[test]
    fn is_psd_examples() {
        assert!(is_psd(&HermitianMatrix::identity(2), 1e-10).unwrap().is_psd);
        let chk = is_psd(&HermitianMatrix::diag(&[1.0, -1.0]), 1e-10).unwrap();
        assert!(!chk.is_psd);
        let w = chk.witness.unwrap();
        assert!(w[0].norm() < 1e-15 && close(w[1].norm(), 1.0, 1e-15));
        let ones = HermitianMatrix::from_real_rows(&[&[1.0, 1.0], &[1.0, 1.0]]).unwrap();
        assert!(is_psd(&ones, 1e-10).unwrap().is_psd);
    }
}
