//! Operators and vectors on a two-party space `C^dA ⊗ C^dB`.
//!
//! Basis label `i = a·dB + b` throughout, for local labels `a` on side A and
//! `b` on side B.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{inner, kron_vec, norm, ComplexMatrix};
use crate::tol::NORMALIZATION;
use crate::C64;

/// Local dimensions `(dA, dB)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalDims {
    pub a: usize,
    pub b: usize,
}

impl LocalDims {
    pub const fn new(a: usize, b: usize) -> Self {
        Self { a, b }
    }

    pub const fn total(&self) -> usize {
        self.a * self.b
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BipartiteOperator {
    matrix: ComplexMatrix,
    dims: LocalDims,
}

impl BipartiteOperator {
    pub fn new(matrix: ComplexMatrix, dims: LocalDims) -> Result<Self> {
        if dims.a == 0 || dims.b == 0 {
            return Err(Error::EmptyDimension);
        }
        if matrix.dim() != dims.total() {
            return Err(Error::LocalDims {
                dim: matrix.dim(),
                da: dims.a,
                db: dims.b,
            });
        }
        Ok(Self { matrix, dims })
    }

    pub fn identity(dims: LocalDims) -> Self {
        Self {
            matrix: ComplexMatrix::identity(dims.total()),
            dims,
        }
    }

    /// `A ⊗ B` for local operators `A` on side A and `B` on side B.
    pub fn product(a: &ComplexMatrix, b: &ComplexMatrix) -> Self {
        Self {
            matrix: a.kron(b),
            dims: LocalDims::new(a.dim(), b.dim()),
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn dims(&self) -> LocalDims {
        self.dims
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            matrix: self.matrix.scale(factor),
            dims: self.dims,
        }
    }

    /// Transposition on the A indices only:
    /// `out[(a1,b1),(a2,b2)] = in[(a2,b1),(a1,b2)]`.
    pub fn partial_transpose(&self) -> Self {
        let LocalDims { a: da, b: db } = self.dims;
        let m = &self.matrix;
        let out = ComplexMatrix::from_fn(da * db, |row, col| {
            let (a1, b1) = (row / db, row % db);
            let (a2, b2) = (col / db, col % db);
            m[(a2 * db + b1, a1 * db + b2)]
        });
        Self {
            matrix: out,
            dims: self.dims,
        }
    }

    /// Transposition on the B indices only.
    pub fn partial_transpose_b(&self) -> Self {
        let LocalDims { a: da, b: db } = self.dims;
        let m = &self.matrix;
        let out = ComplexMatrix::from_fn(da * db, |row, col| {
            let (a1, b1) = (row / db, row % db);
            let (a2, b2) = (col / db, col % db);
            m[(a1 * db + b2, a2 * db + b1)]
        });
        Self {
            matrix: out,
            dims: self.dims,
        }
    }

    /// Tensor product of two bipartite operators, regrouped so that the
    /// result is bipartite across `(A₁A₂) | (B₁B₂)`.
    pub fn tensor(&self, other: &Self) -> Self {
        let interleaved = self.matrix.kron(&other.matrix);
        let matrix = regroup_pair(&interleaved, self.dims, other.dims);
        Self {
            matrix,
            dims: LocalDims::new(self.dims.a * other.dims.a, self.dims.b * other.dims.b),
        }
    }

    /// `P·O·P†`.
    pub fn sandwich(&self, inner_op: &Self) -> Result<Self> {
        if self.dims != inner_op.dims {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: inner_op.dim(),
            });
        }
        let matrix = self
            .matrix
            .matmul(&inner_op.matrix)?
            .matmul(&self.matrix.adjoint())?;
        Ok(Self {
            matrix,
            dims: self.dims,
        })
    }

    /// A-side operator `⟨b|O|b⟩`, satisfying `⟨a|result|a⟩ = ⟨ab|O|ab⟩`.
    pub fn contract_b(&self, b: &[C64]) -> Result<ComplexMatrix> {
        let LocalDims { a: da, b: db } = self.dims;
        check_local(b, db)?;
        let m = &self.matrix;
        Ok(ComplexMatrix::from_fn(da, |a1, a2| {
            let mut acc = C64::new(0.0, 0.0);
            for b1 in 0..db {
                let left = b[b1].conj();
                for b2 in 0..db {
                    acc += left * m[(a1 * db + b1, a2 * db + b2)] * b[b2];
                }
            }
            acc
        }))
    }

    /// B-side operator `⟨a|O|a⟩`, satisfying `⟨b|result|b⟩ = ⟨ab|O|ab⟩`.
    pub fn contract_a(&self, a: &[C64]) -> Result<ComplexMatrix> {
        let LocalDims { a: da, b: db } = self.dims;
        check_local(a, da)?;
        let m = &self.matrix;
        Ok(ComplexMatrix::from_fn(db, |b1, b2| {
            let mut acc = C64::new(0.0, 0.0);
            for a1 in 0..da {
                let left = a[a1].conj();
                for a2 in 0..da {
                    acc += left * m[(a1 * db + b1, a2 * db + b2)] * a[a2];
                }
            }
            acc
        }))
    }

    /// `⟨ab|O|ab⟩` for local vectors `a`, `b` (real part).
    pub fn product_expectation(&self, a: &[C64], b: &[C64]) -> Result<f64> {
        for (v, expected) in [(a, self.dims.a), (b, self.dims.b)] {
            if v.len() != expected {
                return Err(Error::LocalVectorLength {
                    expected,
                    got: v.len(),
                });
            }
        }
        let ab = kron_vec(a, b);
        Ok(self.matrix.expectation(&ab, &ab)?.re)
    }
}

/// Regroups an `N`-fold Kronecker power in interleaved order `(A₁B₁A₂B₂…)`
/// into the grouped layout `((A₁A₂…),(B₁B₂…))`. Only `N ∈ {1, 2}` is supported.
pub fn permute_to_copies_layout(
    interleaved: &ComplexMatrix,
    local: LocalDims,
    copies: usize,
) -> Result<BipartiteOperator> {
    match copies {
        1 => BipartiteOperator::new(interleaved.clone(), local),
        2 => {
            let expected = local.total() * local.total();
            if interleaved.dim() != expected {
                return Err(Error::DimensionMismatch {
                    left: interleaved.dim(),
                    right: expected,
                });
            }
            BipartiteOperator::new(
                regroup_pair(interleaved, local, local),
                LocalDims::new(local.a * local.a, local.b * local.b),
            )
        }
        n => Err(Error::UnsupportedCopies(n)),
    }
}

/// Index of `(a1,b1,a2,b2)` in the grouped layout, for each interleaved index.
fn grouped_index_map(first: LocalDims, second: LocalDims) -> Vec<usize> {
    let n2 = second.total();
    let gb = first.b * second.b;
    (0..first.total() * n2)
        .map(|i| {
            let (x1, x2) = (i / n2, i % n2);
            let (a1, b1) = (x1 / first.b, x1 % first.b);
            let (a2, b2) = (x2 / second.b, x2 % second.b);
            (a1 * second.a + a2) * gb + b1 * second.b + b2
        })
        .collect()
}

fn regroup_pair(m: &ComplexMatrix, first: LocalDims, second: LocalDims) -> ComplexMatrix {
    let map = grouped_index_map(first, second);
    let mut out = ComplexMatrix::zeros(m.dim());
    for (i, &gi) in map.iter().enumerate() {
        for (j, &gj) in map.iter().enumerate() {
            out[(gi, gj)] = m[(i, j)];
        }
    }
    out
}

fn check_local(v: &[C64], expected: usize) -> Result<()> {
    if v.len() != expected {
        return Err(Error::LocalVectorLength {
            expected,
            got: v.len(),
        });
    }
    let n = norm(v);
    if (n - 1.0).abs() > NORMALIZATION {
        return Err(Error::NotNormalized { norm: n });
    }
    Ok(())
}

/// Pure state on `C^dA ⊗ C^dB`.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    dims: LocalDims,
    amplitudes: Vec<C64>,
}

impl StateVector {
    pub fn new(dims: LocalDims, amplitudes: Vec<C64>) -> Result<Self> {
        if dims.a == 0 || dims.b == 0 {
            return Err(Error::EmptyDimension);
        }
        if amplitudes.len() != dims.total() {
            return Err(Error::LocalVectorLength {
                expected: dims.total(),
                got: amplitudes.len(),
            });
        }
        Ok(Self { dims, amplitudes })
    }

    /// Builds a normalized state from real amplitudes, rescaling by their norm.
    pub fn normalized_real(dims: LocalDims, amplitudes: &[f64]) -> Result<Self> {
        let n = libm::sqrt(amplitudes.iter().map(|x| x * x).sum());
        if n == 0.0 {
            return Err(Error::ZeroVector);
        }
        Self::new(
            dims,
            amplitudes.iter().map(|&x| C64::new(x / n, 0.0)).collect(),
        )
    }

    /// `|a⟩ ⊗ |b⟩`.
    pub fn product(a: &[C64], b: &[C64]) -> Self {
        Self {
            dims: LocalDims::new(a.len(), b.len()),
            amplitudes: kron_vec(a, b),
        }
    }

    pub fn dims(&self) -> LocalDims {
        self.dims
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amplitudes)
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm() - 1.0).abs() <= NORMALIZATION
    }

    pub fn inner(&self, other: &Self) -> C64 {
        inner(&self.amplitudes, &other.amplitudes)
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn projector(&self) -> BipartiteOperator {
        let m = ComplexMatrix::outer(&self.amplitudes, &self.amplitudes)
            .expect("amplitude vector is non-empty");
        BipartiteOperator {
            matrix: m,
            dims: self.dims,
        }
    }

    /// Amplitude `c[a][b]` as a `dA × dB` row-major array.
    pub fn coefficient(&self, a: usize, b: usize) -> C64 {
        self.amplitudes[a * self.dims.b + b]
    }
}
