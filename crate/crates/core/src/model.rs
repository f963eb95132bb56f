//! The concrete states and projectors: the five-member unextendible product
//! basis on `C³ ⊗ C³`, its complement projector, the bound entangled state
//! `ρ_b = Π_b/4`, the pure state `ψ`, and the mixture `σ(p)`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{inner, kron_vec, BipartiteOperator, ComplexMatrix, LocalDims, StateVector};
use crate::tol::ZERO_EIGENVALUE;
use crate::C64;

/// Local dimensions of every operator in the model.
pub const QUTRITS: LocalDims = LocalDims::new(3, 3);

/// Local dimensions of the two-qubit maximally entangled state.
pub const QUBITS: LocalDims = LocalDims::new(2, 2);

/// One product vector `|a⟩ ⊗ |b⟩` with unnormalized integer amplitudes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductPair {
    pub a: [i8; 3],
    pub b: [i8; 3],
}

impl ProductPair {
    /// Normalized composed vector on `C³ ⊗ C³`.
    pub fn composed(&self) -> Vec<C64> {
        let a = to_complex(&self.a);
        let b = to_complex(&self.b);
        let v = kron_vec(&a, &b);
        let n = libm::sqrt(v.iter().map(|z| z.norm_sqr()).sum());
        v.into_iter().map(|z| z / n).collect()
    }
}

fn to_complex(v: &[i8; 3]) -> [C64; 3] {
    v.map(|x| C64::new(f64::from(x), 0.0))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductVectorSet {
    pub pairs: [ProductPair; 5],
}

impl ProductVectorSet {
    pub fn composed(&self) -> Vec<Vec<C64>> {
        self.pairs.iter().map(ProductPair::composed).collect()
    }

    /// Integer Gram matrix of the unnormalized composed vectors.
    pub fn integer_gram(&self) -> [[i32; 5]; 5] {
        let mut g = [[0; 5]; 5];
        for (i, p) in self.pairs.iter().enumerate() {
            for (j, q) in self.pairs.iter().enumerate() {
                let ga: i32 = p.a.iter().zip(&q.a).map(|(x, y)| i32::from(x * y)).sum();
                let gb: i32 = p.b.iter().zip(&q.b).map(|(x, y)| i32::from(x * y)).sum();
                g[i][j] = ga * gb;
            }
        }
        g
    }
}

/// The five product vectors whose orthogonal complement contains no product vector.
pub fn tiles_product_vectors() -> ProductVectorSet {
    ProductVectorSet {
        pairs: [
            ProductPair {
                a: [1, 0, 0],
                b: [1, 1, 0],
            },
            ProductPair {
                a: [1, 1, 0],
                b: [0, 0, 1],
            },
            ProductPair {
                a: [0, 0, 1],
                b: [0, 1, 1],
            },
            ProductPair {
                a: [0, 1, 1],
                b: [1, 0, 0],
            },
            ProductPair {
                a: [1, -1, 1],
                b: [1, -1, 1],
            },
        ],
    }
}

/// Orthogonal projector onto the complement of the composed vectors,
/// `I − Σ |v̂ᵢ⟩⟨v̂ᵢ|`. The vectors must be mutually orthogonal.
pub fn complement_projector(vs: &ProductVectorSet) -> Result<BipartiteOperator> {
    let gram = vs.integer_gram();
    for (i, row) in gram.iter().enumerate() {
        if row[i] == 0 {
            return Err(Error::RankDeficient);
        }
        if row.iter().enumerate().any(|(j, &g)| j != i && g != 0) {
            return Err(Error::RankDeficient);
        }
    }
    let mut m = ComplexMatrix::identity(QUTRITS.total());
    for v in vs.composed() {
        m = &m - &ComplexMatrix::outer(&v, &v)?;
    }
    BipartiteOperator::new(m, QUTRITS)
}

/// `Π_b`, the projector onto the 4-dimensional complement of the tiles vectors.
pub fn upb_projector() -> BipartiteOperator {
    complement_projector(&tiles_product_vectors()).expect("tiles vectors are orthogonal")
}

/// `ρ_b = Π_b / 4`.
pub fn rho_b() -> BipartiteOperator {
    upb_projector().scale(0.25)
}

/// `ψ = (|00⟩ − |01⟩ − 2|11⟩)/√6`, an entangled pure state inside the complement.
pub fn psi() -> StateVector {
    let mut amps = [0.0; 9];
    amps[0] = 1.0;
    amps[1] = -1.0;
    amps[4] = -2.0;
    StateVector::normalized_real(QUTRITS, &amps).expect("non-zero amplitudes")
}

/// `Φ = (|00⟩ + |11⟩)/√2` on two qubits.
pub fn phi() -> StateVector {
    StateVector::normalized_real(QUBITS, &[1.0, 0.0, 0.0, 1.0]).expect("non-zero amplitudes")
}

/// `τ = |0⟩ ⊗ (|0⟩ + |1⟩)/√2`, the null direction of `P ρ_b P†`.
pub fn tau() -> StateVector {
    let mut amps = [0.0; 9];
    amps[0] = 1.0;
    amps[1] = 1.0;
    StateVector::normalized_real(QUTRITS, &amps).expect("non-zero amplitudes")
}

/// `P = (|0⟩⟨0| + |1⟩⟨1|) ⊗ (|0⟩⟨0| + |1⟩⟨1|)` on `C³ ⊗ C³`.
pub fn qubit_block_projector() -> BipartiteOperator {
    let local = ComplexMatrix::diagonal(&[1.0, 1.0, 0.0]);
    BipartiteOperator::product(&local, &local)
}

#[derive(Clone, Debug)]
pub struct FixedStates {
    pub psi: StateVector,
    pub phi: StateVector,
    pub tau: StateVector,
    pub p: BipartiteOperator,
}

pub fn fixed_states() -> FixedStates {
    FixedStates {
        psi: psi(),
        phi: phi(),
        tau: tau(),
        p: qubit_block_projector(),
    }
}

/// `σ(p) = (1 − p)·ρ_b + p·|ψ⟩⟨ψ|` for `p ∈ [0, 1]`.
pub fn sigma(p: f64) -> Result<BipartiteOperator> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ParameterOutOfRange(p));
    }
    let mixed = rho_b().into_matrix().scale(1.0 - p);
    let pure = psi().projector().into_matrix().scale(p);
    BipartiteOperator::new(&mixed + &pure, QUTRITS)
}

/// `P ρ_b P†`, the projected bound entangled state.
pub fn projected_rho_b() -> BipartiteOperator {
    qubit_block_projector()
        .sandwich(&rho_b())
        .expect("matching dimensions")
}

/// Whether `v` is (numerically) annihilated by `op`.
pub fn annihilates(op: &BipartiteOperator, v: &[C64]) -> Result<bool> {
    let w = op.matrix().apply(v)?;
    Ok(libm::sqrt(inner(&w, &w).re) <= ZERO_EIGENVALUE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::eig_hermitian;

    #[test]
    fn first_and_last_pairs_as_printed() {
        let vs = tiles_product_vectors();
        assert_eq!(vs.pairs[0].a, [1, 0, 0]);
        assert_eq!(vs.pairs[0].b, [1, 1, 0]);
        assert_eq!(vs.pairs[4].a, [1, -1, 1]);
        assert_eq!(vs.pairs[4].b, [1, -1, 1]);
    }

    #[test]
    fn integer_gram_is_diagonal() {
        let g = tiles_product_vectors().integer_gram();
        for (i, row) in g.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if i == j {
                    assert!(x > 0);
                } else {
                    assert_eq!(x, 0, "pair {i} vs {j}");
                }
            }
        }
    }

    #[test]
    fn dependent_set_is_rejected() {
        let mut vs = tiles_product_vectors();
        vs.pairs[1] = vs.pairs[0];
        assert_eq!(complement_projector(&vs), Err(Error::RankDeficient));
    }

    #[test]
    fn projector_annihilates_third_vector() {
        let pi = upb_projector();
        let v = tiles_product_vectors().pairs[2].composed();
        let w = pi.matrix().apply(&v).unwrap();
        assert!(crate::linalg::norm(&w) <= 1e-12);
    }

    #[test]
    fn sigma_endpoints() {
        let s0 = eig_hermitian(sigma(0.0).unwrap().matrix()).unwrap();
        for (k, l) in s0.eigenvalues.iter().enumerate() {
            let expected = if k < 4 { 0.25 } else { 0.0 };
            assert!((l - expected).abs() < 1e-12, "{k}: {l}");
        }
        let s1 = sigma(1.0).unwrap();
        assert!(s1.matrix().max_abs_diff(psi().projector().matrix()).unwrap() < 1e-15);
    }

    #[test]
    fn sigma_rejects_out_of_range() {
        assert_eq!(sigma(-0.1), Err(Error::ParameterOutOfRange(-0.1)));
        assert_eq!(sigma(1.5), Err(Error::ParameterOutOfRange(1.5)));
        assert!(sigma(f64::NAN).is_err());
    }

    #[test]
    fn tau_is_null_direction_of_projected_rho_b() {
        assert!(annihilates(&projected_rho_b(), tau().amplitudes()).unwrap());
    }
}
