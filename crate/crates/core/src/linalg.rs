//! Small dense real-symmetric eigensolver and complex helpers.
//!
//! This is the numeric oracle every closed form is checked against, so it
//! depends on nothing but the scalar trait.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Complex scalar used for the susceptibility.
pub type ComplexValue<T> = Complex<T>;

/// `a / b`, rejecting an exactly zero divisor.
pub fn checked_div<T: Scalar>(a: ComplexValue<T>, b: ComplexValue<T>) -> Result<ComplexValue<T>> {
    if b.re == T::zero() && b.im == T::zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// Dense symmetric matrix stored row-major.
///
/// Symmetry is exact: every write goes to both `(i, j)` and `(j, i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T: Scalar> SymMatrix<T> {
    pub fn zeros(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadShape);
        }
        Ok(Self { n, entries: vec![T::zero(); n * n] })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n)?;
        for i in 0..n {
            m.entries[i * n + i] = T::one();
        }
        Ok(m)
    }

    /// Builds from square rows, replacing each off-diagonal pair with its mean.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::BadShape);
        }
        let mut m = Self::zeros(n)?;
        for i in 0..n {
            m.entries[i * n + i] = rows[i][i];
            for j in (i + 1)..n {
                let v = if rows[i][j] == rows[j][i] {
                    rows[i][j]
                } else {
                    (rows[i][j] + rows[j][i]) * T::half()
                };
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i * self.n + j]
    }

    /// Writes `v` at `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.n + j] = v;
        self.entries[j * self.n + i] = v;
    }

    /// Adds `v` at `(i, j)` and, off the diagonal, at `(j, i)`.
    #[inline]
    pub fn add(&mut self, i: usize, j: usize, v: T) {
        let cur = self.get(i, j);
        self.set(i, j, cur + v);
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.entries.chunks(self.n).map(<[T]>::to_vec).collect()
    }

    pub fn max_abs(&self) -> T {
        self.entries.iter().fold(T::zero(), |m, v| m.max(v.abs()))
    }

    pub fn frobenius(&self) -> T {
        self.entries.iter().fold(T::zero(), |s, v| s + *v * *v).sqrt()
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |s, i| s + self.get(i, i))
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        debug_assert_eq!(v.len(), self.n);
        self.entries
            .chunks(self.n)
            .map(|row| row.iter().zip(v).fold(T::zero(), |s, (a, b)| s + *a * *b))
            .collect()
    }

    /// `Q^T A Q` for a square `Q` given as columns-in-rows (`q[i][k]` = row i, column k).
    pub fn congruence(&self, q: &[Vec<T>]) -> Result<Self> {
        let n = self.n;
        if q.len() != n || q.iter().any(|r| r.len() != n) {
            return Err(Error::BadShape);
        }
        // aq = A Q
        let mut aq = vec![vec![T::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                aq[i][k] = (0..n).fold(T::zero(), |s, j| s + self.get(i, j) * q[j][k]);
            }
        }
        let mut out = Self::zeros(n)?;
        for k in 0..n {
            for l in k..n {
                let v = (0..n).fold(T::zero(), |s, i| s + q[i][k] * aq[i][l]);
                out.set(k, l, v);
            }
        }
        Ok(out)
    }

    fn is_finite(&self) -> bool {
        self.entries.iter().all(|v| v.is_finite())
    }
}

/// Ascending eigenvalues with matching orthonormal eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenSystem<T> {
    pub values: Vec<T>,
    /// `vectors[k]` is the unit eigenvector for `values[k]`.
    pub vectors: Vec<Vec<T>>,
}

impl<T: Scalar> EigenSystem<T> {
    /// Largest `|A v_k - lambda_k v_k|` entry over all pairs.
    pub fn max_residual(&self, a: &SymMatrix<T>) -> T {
        self.values
            .iter()
            .zip(&self.vectors)
            .map(|(&lambda, v)| {
                a.mul_vec(v)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |m, (av, vi)| m.max((*av - lambda * *vi).abs()))
            })
            .fold(T::zero(), T::max)
    }

    /// Largest `|V^T V - I|` entry.
    pub fn orthonormality_error(&self) -> T {
        gram_error(&self.vectors)
    }
}

/// Largest deviation of the Gram matrix of `vectors` from the identity.
pub fn gram_error<T: Scalar>(vectors: &[Vec<T>]) -> T {
    let mut worst = T::zero();
    for (i, a) in vectors.iter().enumerate() {
        for (j, b) in vectors.iter().enumerate() {
            let dot = a.iter().zip(b).fold(T::zero(), |s, (x, y)| s + *x * *y);
            let target = if i == j { T::one() } else { T::zero() };
            worst = worst.max((dot - target).abs());
        }
    }
    worst
}

const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi diagonalization.
///
/// Sweeps stop once the off-diagonal Frobenius norm falls below
/// `CONVERGENCE_FLOOR * ||A||_F`, or after 100 sweeps.
pub fn eig_sym<T: Scalar>(a: &SymMatrix<T>) -> Result<EigenSystem<T>> {
    if !a.is_finite() {
        return Err(Error::NonFinite);
    }
    let n = a.dim();
    let mut m: Vec<Vec<T>> = a.rows();
    let mut v: Vec<Vec<T>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect();

    let threshold = T::lit(T::CONVERGENCE_FLOOR) * a.frobenius();
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&m) <= threshold {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i][i].partial_cmp(&m[j][j]).expect("finite eigenvalues"));
    let values = order.iter().map(|&k| m[k][k]).collect();
    // v holds eigenvectors as columns
    let vectors = order.iter().map(|&k| (0..n).map(|i| v[i][k]).collect()).collect();
    Ok(EigenSystem { values, vectors })
}

fn off_diagonal_norm<T: Scalar>(m: &[Vec<T>]) -> T {
    let mut s = T::zero();
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                s = s + *x * *x;
            }
        }
    }
    s.sqrt()
}

/// One Jacobi rotation annihilating `m[p][q]`, accumulated into `v`.
fn rotate<T: Scalar>(m: &mut [Vec<T>], v: &mut [Vec<T>], p: usize, q: usize) {
    let apq = m[p][q];
    if apq == T::zero() {
        return;
    }
    let app = m[p][p];
    let aqq = m[q][q];
    let theta = (aqq - app) / (T::two() * apq);
    // smaller root of t^2 + 2 theta t - 1 = 0
    let t = if theta.is_infinite() {
        T::one() / (T::two() * theta)
    } else {
        let sign = if theta >= T::zero() { T::one() } else { -T::one() };
        sign / (theta.abs() + (theta * theta + T::one()).sqrt())
    };
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;
    let n = m.len();

    for k in 0..n {
        let mkp = m[k][p];
        let mkq = m[k][q];
        m[k][p] = c * mkp - s * mkq;
        m[k][q] = s * mkp + c * mkq;
    }
    for k in 0..n {
        let mpk = m[p][k];
        let mqk = m[q][k];
        m[p][k] = c * mpk - s * mqk;
        m[q][k] = s * mpk + c * mqk;
    }
    m[p][q] = T::zero();
    m[q][p] = T::zero();
    for row in v.iter_mut() {
        let vp = row[p];
        let vq = row[q];
        row[p] = c * vp - s * vq;
        row[q] = s * vp + c * vq;
    }
}

/// True iff the sorted sequences agree elementwise within `tol`.
pub fn eigenvalue_multiset_equal<T: Scalar>(a: &[T], b: &[T], tol: T) -> Result<bool> {
    Ok(multiset_distance(a, b)? <= tol)
}

/// Largest elementwise gap between the sorted sequences.
pub fn multiset_distance<T: Scalar>(a: &[T], b: &[T]) -> Result<T> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(|x, y| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal));
    b.sort_by(|x, y| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal));
    Ok(a.iter().zip(&b).fold(T::zero(), |m, (x, y)| m.max((*x - *y).abs())))
}
