//! Hermitian eigendecomposition by cyclic complex Jacobi rotations.
//!
//! Each rotation first removes the phase of the pivot `A[p][q]` with a
//! diagonal unitary, then applies the real symmetric Jacobi rotation that
//! annihilates it. Sweeps visit every `(p, q)` pair with `p < q` in order,
//! so the output is a deterministic function of the input.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::tol::HERMITIAN;
use crate::C64;

/// Sweep limit for the cyclic Jacobi iteration.
pub const MAX_SWEEPS: usize = 100;

/// Relative off-diagonal Frobenius mass at which the iteration stops.
pub const CONVERGENCE: f64 = 1e-14;

/// Eigenvalues sorted non-increasing, with orthonormal eigenvectors aligned to them.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<Vec<C64>>,
}

impl Spectrum {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues[self.eigenvalues.len() - 1]
    }

    /// Number of eigenvalues with `|λ| > threshold`.
    pub fn rank(&self, threshold: f64) -> usize {
        self.eigenvalues
            .iter()
            .filter(|l| libm::fabs(**l) > threshold)
            .count()
    }

    /// `V·diag(λ)·V†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.dim();
        ComplexMatrix::from_fn(n, |i, j| {
            self.eigenvalues
                .iter()
                .zip(&self.eigenvectors)
                .map(|(l, v)| v[i] * v[j].conj() * *l)
                .sum()
        })
    }
}

/// Eigendecomposition of a matrix hermitian within [`HERMITIAN`].
pub fn eig_hermitian(a: &ComplexMatrix) -> Result<Spectrum> {
    let defect = a.hermiticity_defect();
    if defect > HERMITIAN {
        return Err(Error::NotHermitian { defect });
    }
    let n = a.dim();
    // Work on the exactly hermitian part.
    let mut m = ComplexMatrix::from_fn(n, |i, j| (a[(i, j)] + a[(j, i)].conj()) * 0.5);
    let mut v = ComplexMatrix::identity(n);

    let scale = m.frobenius_norm();
    let target = CONVERGENCE * scale;
    let mut converged = off_diagonal_norm(&m) <= target;
    let mut sweeps = 0;
    while !converged && sweeps < MAX_SWEEPS {
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
        sweeps += 1;
        converged = off_diagonal_norm(&m) <= target;
    }
    if !converged {
        return Err(Error::EigenNoConvergence { sweeps });
    }

    let mut order: Vec<usize> = (0..n).collect();
    // Stable sort keeps the sweep order for exact ties.
    order.sort_by(|&i, &j| m[(j, j)].re.total_cmp(&m[(i, i)].re));
    let eigenvalues = order.iter().map(|&k| m[(k, k)].re).collect();
    let eigenvectors = order
        .iter()
        .map(|&k| (0..n).map(|i| v[(i, k)]).collect())
        .collect();
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
    })
}

fn off_diagonal_norm(m: &ComplexMatrix) -> f64 {
    let n = m.dim();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += m[(i, j)].norm_sqr();
            }
        }
    }
    libm::sqrt(sum)
}

/// Applies `M ← J†·M·J`, `V ← V·J` with `J` chosen to zero `M[p][q]`.
fn rotate(m: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = m[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r;
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;

    let theta = (aqq - app) / (2.0 * r);
    let t = if theta >= 0.0 {
        1.0 / (theta + libm::sqrt(theta * theta + 1.0))
    } else {
        -1.0 / (-theta + libm::sqrt(theta * theta + 1.0))
    };
    let c = 1.0 / libm::sqrt(t * t + 1.0);
    let s = t * c;

    // J restricted to (p, q): [[c, s], [−s·conj(u), c·conj(u)]] with u = phase.
    let jqp = -phase.conj() * s;
    let jqq = phase.conj() * c;

    let n = m.dim();
    for k in 0..n {
        let mkp = m[(k, p)];
        let mkq = m[(k, q)];
        m[(k, p)] = mkp * c + mkq * jqp;
        m[(k, q)] = mkp * s + mkq * jqq;
    }
    for k in 0..n {
        let mpk = m[(p, k)];
        let mqk = m[(q, k)];
        m[(p, k)] = mpk * c + mqk * jqp.conj();
        m[(q, k)] = mpk * s + mqk * jqq.conj();
    }
    m[(p, q)] = C64::new(0.0, 0.0);
    m[(q, p)] = C64::new(0.0, 0.0);
    m[(p, p)] = C64::new(app - t * r, 0.0);
    m[(q, q)] = C64::new(aqq + t * r, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c + vkq * jqp;
        v[(k, q)] = vkp * s + vkq * jqq;
    }
}
