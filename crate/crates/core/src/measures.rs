//! Entanglement quantities: negativity and its logarithm, the PPT test, the
//! projected distillability witness, Schmidt data of pure states, and the
//! overlap-based entanglement-cost bound. All values in ebits use log base 2.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{eig_hermitian, BipartiteOperator, ComplexMatrix, StateVector};
use crate::tol::{HERMITIAN, NORMALIZATION, UNIT_TRACE, ZERO_EIGENVALUE};

fn check_state(rho: &BipartiteOperator) -> Result<()> {
    if !rho.matrix().is_hermitian(HERMITIAN) {
        return Err(Error::NotAState("not hermitian"));
    }
    let tr = rho.matrix().trace();
    if (tr.re - 1.0).abs() > UNIT_TRACE || tr.im.abs() > UNIT_TRACE {
        return Err(Error::NotAState("trace is not 1"));
    }
    Ok(())
}

/// Absolute sum of the negative eigenvalues of `ρ^{T_A}`, over the full spectrum.
pub fn negativity(rho: &BipartiteOperator) -> Result<f64> {
    check_state(rho)?;
    let spectrum = eig_hermitian(rho.partial_transpose().matrix())?;
    Ok(spectrum
        .eigenvalues
        .iter()
        .map(|&l| if l < 0.0 { -l } else { 0.0 })
        .sum())
}

/// `log₂(1 + 2·N(ρ))`, in ebits.
pub fn log_negativity(rho: &BipartiteOperator) -> Result<f64> {
    negativity(rho).map(log_negativity_from_negativity)
}

pub fn log_negativity_from_negativity(n: f64) -> f64 {
    libm::log2(1.0 + 2.0 * n)
}

/// Whether the smallest eigenvalue of `ρ^{T_A}` is at least `−tol`.
pub fn is_ppt(rho: &BipartiteOperator, tol: f64) -> Result<bool> {
    let spectrum = eig_hermitian(rho.partial_transpose().matrix())?;
    Ok(spectrum.min() >= -tol)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WitnessReport {
    /// Smallest eigenvalue `n` of `(P ρ P†)^{T_A}`.
    pub min_eigenvalue: f64,
    pub is_distillable_certificate: bool,
    /// Rank of `(P ρ P†)^{T_A}` at the zero-eigenvalue threshold.
    pub projected_rank: usize,
}

/// Checks that `p` is `P_A ⊗ P_B` with both factors rank-2 orthogonal projectors.
pub fn check_two_by_two_projector(p: &BipartiteOperator) -> Result<()> {
    let m = p.matrix();
    if !m.is_hermitian(HERMITIAN) {
        return Err(Error::InvalidProjector("not hermitian"));
    }
    let squared = m.matmul(m)?;
    if squared.max_abs_diff(m)? > 1e-12 {
        return Err(Error::InvalidProjector("not idempotent"));
    }
    let dims = p.dims();
    // For P = P_A ⊗ P_B with tr P_A = tr P_B = 2, tr_B P = 2·P_A and tr_A P = 2·P_B.
    let pa = ComplexMatrix::from_fn(dims.a, |a1, a2| {
        (0..dims.b)
            .map(|b| m[(a1 * dims.b + b, a2 * dims.b + b)])
            .sum::<crate::C64>()
            * 0.5
    });
    let pb = ComplexMatrix::from_fn(dims.b, |b1, b2| {
        (0..dims.a)
            .map(|a| m[(a * dims.b + b1, a * dims.b + b2)])
            .sum::<crate::C64>()
            * 0.5
    });
    for local in [&pa, &pb] {
        if (local.trace().re - 2.0).abs() > 1e-12 {
            return Err(Error::InvalidProjector("local rank is not 2"));
        }
        if local.matmul(local)?.max_abs_diff(local)? > 1e-12 {
            return Err(Error::InvalidProjector("local factor not a projector"));
        }
    }
    if pa.kron(&pb).max_abs_diff(m)? > 1e-12 {
        return Err(Error::InvalidProjector("not a product operator"));
    }
    Ok(())
}

/// Minimum eigenvalue of `(P ρ P†)^{T_A}` from the full operator; a value
/// below `−tol` certifies that `ρ` is distillable.
pub fn distillability_witness(
    rho: &BipartiteOperator,
    p: &BipartiteOperator,
    tol: f64,
) -> Result<WitnessReport> {
    check_two_by_two_projector(p)?;
    let projected = p.sandwich(rho)?.partial_transpose();
    let spectrum = eig_hermitian(projected.matrix())?;
    let n = spectrum.min();
    Ok(WitnessReport {
        min_eigenvalue: n,
        is_distillable_certificate: n < -tol,
        projected_rank: spectrum.rank(ZERO_EIGENVALUE),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SchmidtData {
    /// Schmidt coefficients, descending; their squares sum to 1.
    pub coefficients: Vec<f64>,
    pub entropy_ebits: f64,
}

impl SchmidtData {
    pub fn squared(&self) -> Vec<f64> {
        self.coefficients.iter().map(|c| c * c).collect()
    }
}

/// Schmidt coefficients (singular values of the amplitude matrix) and the
/// entanglement entropy of a normalized pure state.
pub fn schmidt(psi: &StateVector) -> Result<SchmidtData> {
    let n = psi.norm();
    if n == 0.0 {
        return Err(Error::ZeroVector);
    }
    if (n - 1.0).abs() > NORMALIZATION {
        return Err(Error::NotNormalized { norm: n });
    }
    let dims = psi.dims();
    // Reduced state on the smaller side.
    let reduced = if dims.a <= dims.b {
        ComplexMatrix::from_fn(dims.a, |a1, a2| {
            (0..dims.b)
                .map(|b| psi.coefficient(a1, b) * psi.coefficient(a2, b).conj())
                .sum()
        })
    } else {
        ComplexMatrix::from_fn(dims.b, |b1, b2| {
            (0..dims.a)
                .map(|a| psi.coefficient(a, b1) * psi.coefficient(a, b2).conj())
                .sum()
        })
    };
    let spectrum = eig_hermitian(&reduced)?;
    let weights: Vec<f64> = spectrum.eigenvalues.iter().map(|&l| l.max(0.0)).collect();
    let entropy_ebits = weights
        .iter()
        .filter(|&&l| l > 0.0)
        .map(|&l| -l * libm::log2(l))
        .sum::<f64>()
        .max(0.0);
    Ok(SchmidtData {
        coefficients: weights.iter().map(|&l| libm::sqrt(l)).collect(),
        entropy_ebits,
    })
}

/// `−log₂ α`: the entanglement-cost lower bound implied by a product-overlap
/// bound `α` with the support projector.
pub fn ec_lower_bound_from_overlap(alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::OverlapOutOfRange(alpha));
    }
    Ok(-libm::log2(alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::LocalDims;
    use crate::model::{phi, psi, qubit_block_projector, rho_b, sigma};

    #[test]
    fn bound_entangled_state_has_zero_negativity() {
        assert!(negativity(&rho_b()).unwrap() <= 1e-12);
        assert!(log_negativity(&sigma(0.0).unwrap()).unwrap().abs() <= 1e-12);
        assert!(is_ppt(&rho_b(), 1e-10).unwrap());
    }

    #[test]
    fn maximally_entangled_qubits() {
        let p = phi().projector();
        assert!((negativity(&p).unwrap() - 0.5).abs() < 1e-12);
        assert!((log_negativity(&p).unwrap() - 1.0).abs() < 1e-12);
        let s = schmidt(&phi()).unwrap();
        let h = core::f64::consts::FRAC_1_SQRT_2;
        assert!((s.coefficients[0] - h).abs() < 1e-12);
        assert!((s.coefficients[1] - h).abs() < 1e-12);
        assert!((s.entropy_ebits - 1.0).abs() < 1e-12);
    }

    #[test]
    fn product_state_schmidt() {
        let s = StateVector::normalized_real(LocalDims::new(2, 2), &[1.0, 0.0, 0.0, 0.0]).unwrap();
        let d = schmidt(&s).unwrap();
        assert!((d.coefficients[0] - 1.0).abs() < 1e-15);
        assert_eq!(d.coefficients[1], 0.0);
        assert_eq!(d.entropy_ebits, 0.0);
    }

    #[test]
    fn schmidt_errors() {
        let zero = StateVector::new(LocalDims::new(2, 2), alloc::vec![Default::default(); 4]).unwrap();
        assert_eq!(schmidt(&zero), Err(Error::ZeroVector));
        let big = StateVector::new(
            LocalDims::new(1, 2),
            alloc::vec![crate::C64::new(1.0, 0.0), crate::C64::new(1.0, 0.0)],
        )
        .unwrap();
        assert!(matches!(schmidt(&big), Err(Error::NotNormalized { .. })));
    }

    #[test]
    fn witness_at_bound_entangled_endpoint() {
        let w = distillability_witness(&sigma(0.0).unwrap(), &qubit_block_projector(), 1e-10)
            .unwrap();
        assert!(w.min_eigenvalue.abs() <= 1e-11);
        assert_eq!(w.projected_rank, 3);
        assert!(!w.is_distillable_certificate);
    }

    #[test]
    fn witness_rejects_bad_projectors() {
        let rho = sigma(0.1).unwrap();
        let full = BipartiteOperator::identity(LocalDims::new(3, 3));
        assert!(matches!(
            distillability_witness(&rho, &full, 1e-10),
            Err(Error::InvalidProjector(_))
        ));
        assert!(matches!(
            distillability_witness(&rho, &psi().projector(), 1e-10),
            Err(Error::InvalidProjector(_))
        ));
        assert!(matches!(
            distillability_witness(&rho, &qubit_block_projector().scale(2.0), 1e-10),
            Err(Error::InvalidProjector(_))
        ));
    }

    #[test]
    fn negativity_rejects_non_states() {
        let twice = rho_b().scale(2.0);
        assert!(matches!(negativity(&twice), Err(Error::NotAState(_))));
    }

    #[test]
    fn overlap_bound_values() {
        assert_eq!(ec_lower_bound_from_overlap(1.0).unwrap(), 0.0);
        assert!((ec_lower_bound_from_overlap(0.5).unwrap() - 1.0).abs() < 1e-15);
        let b = ec_lower_bound_from_overlap(0.99).unwrap();
        assert!((b - 0.0145).abs() < 5e-5);
        assert!(ec_lower_bound_from_overlap(0.0).is_err());
        assert!(ec_lower_bound_from_overlap(1.01).is_err());
    }
}
