use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Index, IndexMut, Mul, Sub};

use crate::error::{Error, Result};
use crate::C64;

/// Dense square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<C64>,
}

impl ComplexMatrix {
    pub fn new(dim: usize, entries: Vec<C64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        if entries.len() != dim * dim {
            return Err(Error::EntryCount {
                dim,
                len: entries.len(),
            });
        }
        Ok(Self { dim, entries })
    }

    /// Builds a real-valued matrix from row-major entries.
    pub fn from_real(dim: usize, entries: &[f64]) -> Result<Self> {
        Self::new(dim, entries.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![C64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Self { dim, entries }
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = C64::new(v, 0.0);
        }
        m
    }

    /// Rank-one operator `|u><v|`.
    pub fn outer(u: &[C64], v: &[C64]) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::DimensionMismatch {
                left: u.len(),
                right: v.len(),
            });
        }
        let dim = u.len();
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        Ok(Self::from_fn(dim, |i, j| u[i] * v[j].conj()))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[C64] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let lhs = self[(i, k)];
                if lhs.re == 0.0 && lhs.im == 0.0 {
                    continue;
                }
                let row = other.row(k);
                let dst = &mut out.entries[i * n..(i + 1) * n];
                for (d, r) in dst.iter_mut().zip(row) {
                    *d += lhs * r;
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[C64]) -> Result<Vec<C64>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: v.len(),
            });
        }
        Ok((0..self.dim)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// `<u|A|v>`
    pub fn expectation(&self, u: &[C64], v: &[C64]) -> Result<C64> {
        let av = self.apply(v)?;
        Ok(inner(u, &av))
    }

    /// Kronecker product `A ⊗ B`: entry `[(a1·dB+b1),(a2·dB+b2)] = A[a1][a2]·B[b1][b2]`.
    pub fn kron(&self, other: &Self) -> Self {
        let (da, db) = (self.dim, other.dim);
        let n = da * db;
        let mut entries = vec![C64::new(0.0, 0.0); n * n];
        for a1 in 0..da {
            for a2 in 0..da {
                let x = self[(a1, a2)];
                for b1 in 0..db {
                    for b2 in 0..db {
                        entries[(a1 * db + b1) * n + a2 * db + b2] = x * other[(b1, b2)];
                    }
                }
            }
        }
        Self { dim: n, entries }
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_same_dim(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.entries.iter().map(|z| z.norm_sqr()).sum())
    }

    /// Largest deviation `|A[i][j] − conj(A[j][i])|`.
    pub fn hermiticity_defect(&self) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.entries[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.entries[i * self.dim + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    /// Panics on dimension mismatch.
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        ComplexMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    /// Panics on dimension mismatch.
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        ComplexMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    /// Panics on dimension mismatch; use [`ComplexMatrix::matmul`] for a fallible product.
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs).expect("matrix dimensions differ")
    }
}

/// `<u|v>`, conjugate-linear in the first argument.
pub fn inner(u: &[C64], v: &[C64]) -> C64 {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

pub fn norm(v: &[C64]) -> f64 {
    libm::sqrt(v.iter().map(|z| z.norm_sqr()).sum())
}

/// Returns `v / ‖v‖`, or `None` for the zero vector.
pub fn normalize(v: &[C64]) -> Option<Vec<C64>> {
    let n = norm(v);
    if n == 0.0 || !n.is_finite() {
        return None;
    }
    Some(v.iter().map(|z| z / n).collect())
}

pub fn kron_vec(u: &[C64], v: &[C64]) -> Vec<C64> {
    u.iter()
        .flat_map(|a| v.iter().map(move |b| a * b))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let k = ComplexMatrix::identity(2).kron(&ComplexMatrix::identity(3));
        assert_eq!(k, ComplexMatrix::identity(6));
    }

    #[test]
    fn kron_of_diagonals() {
        let k = ComplexMatrix::diagonal(&[1.0, 2.0]).kron(&ComplexMatrix::diagonal(&[3.0, 4.0]));
        assert_eq!(k, ComplexMatrix::diagonal(&[3.0, 4.0, 6.0, 8.0]));
    }

    #[test]
    fn rejects_wrong_entry_count() {
        assert!(matches!(
            ComplexMatrix::new(2, vec![c(1.0); 3]),
            Err(Error::EntryCount { dim: 2, len: 3 })
        ));
        assert!(matches!(
            ComplexMatrix::new(0, vec![]),
            Err(Error::EmptyDimension)
        ));
    }

    #[test]
    fn matmul_dimension_mismatch() {
        let a = ComplexMatrix::identity(2);
        let b = ComplexMatrix::identity(3);
        assert!(a.matmul(&b).is_err());
    }

    #[test]
    fn adjoint_conjugates_and_transposes() {
        let m = ComplexMatrix::new(
            2,
            vec![c(1.0), C64::new(0.0, 2.0), C64::new(3.0, -1.0), c(4.0)],
        )
        .unwrap();
        let adj = m.adjoint();
        assert_eq!(adj[(0, 1)], C64::new(3.0, 1.0));
        assert_eq!(adj[(1, 0)], C64::new(0.0, -2.0));
        assert!(!m.is_hermitian(1e-12));
        assert!((&m + &adj).is_hermitian(1e-12));
    }

    #[test]
    fn outer_product_trace_is_inner_product() {
        let u = [c(1.0), C64::new(0.0, 1.0)];
        let o = ComplexMatrix::outer(&u, &u).unwrap();
        assert_eq!(o.trace(), c(2.0));
        assert!(o.is_hermitian(0.0));
    }
}
