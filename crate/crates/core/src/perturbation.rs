//! Rayleigh–Schrödinger expansion of the lowest eigenvalue of `A + εN`
//! around a known eigenvector of `A`.

use crate::error::{Error, Result};
use crate::linalg::{eig_hermitian, inner, norm, ComplexMatrix};
use crate::model::{projected_rho_b, psi, tau};
use crate::tol::ZERO_EIGENVALUE;
use crate::C64;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PerturbationTerms {
    /// `m₀ = ⟨v|A|v⟩`
    pub zeroth: f64,
    /// `⟨v|N|v⟩`
    pub first: f64,
    /// `Σ |⟨mᵢ|N|v⟩|² / (m₀ − mᵢ)` over eigenvalues `mᵢ` of `A` separated from `m₀`.
    pub second: f64,
}

impl PerturbationTerms {
    pub fn evaluate(&self, eps: f64) -> f64 {
        self.zeroth + eps * self.first + eps * eps * self.second
    }
}

/// Expansion of the eigenvalue of `base + ε·perturbation` that continues
/// from the eigenpair `(m₀, reference)` of `base`. Eigenvectors of `base`
/// degenerate with `m₀` are skipped; their couplings to `reference` must
/// vanish for the expansion to hold.
pub fn eigenvalue_expansion(
    base: &ComplexMatrix,
    perturbation: &ComplexMatrix,
    reference: &[C64],
) -> Result<PerturbationTerms> {
    let zeroth = base.expectation(reference, reference)?.re;
    let av = base.apply(reference)?;
    let residual: alloc::vec::Vec<C64> = av
        .iter()
        .zip(reference)
        .map(|(x, v)| x - v * zeroth)
        .collect();
    if norm(&residual) > ZERO_EIGENVALUE {
        return Err(Error::NotEigenvector(norm(&residual)));
    }
    let first = perturbation.expectation(reference, reference)?.re;
    let nv = perturbation.apply(reference)?;
    let spectrum = eig_hermitian(base)?;
    let second = spectrum
        .eigenvalues
        .iter()
        .zip(&spectrum.eigenvectors)
        .filter(|(m, _)| libm::fabs(**m - zeroth) > ZERO_EIGENVALUE)
        .map(|(m, v)| inner(v, &nv).norm_sqr() / (zeroth - m))
        .sum();
    Ok(PerturbationTerms {
        zeroth,
        first,
        second,
    })
}

/// Terms for the smallest eigenvalue of `(1 − p)·P ρ_b P† + p·(|ψ⟩⟨ψ|)^{T_A}`,
/// expanded in `p` from the null vector `τ`.
pub fn witness_expansion() -> Result<PerturbationTerms> {
    let base = projected_rho_b().into_matrix();
    let coupled = psi().projector().partial_transpose().into_matrix();
    let perturbation = &coupled - &base;
    eigenvalue_expansion(&base, &perturbation, tau().amplitudes())
}

/// `k` in `n(p) = −k·p² + O(p³)`.
pub fn k_perturbative() -> Result<f64> {
    witness_expansion().map(|t| -t.second)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_level_exact_second_order() {
        // A = diag(0, 1), N = [[0, g], [g, 0]]: lowest eigenvalue −ε²g² + O(ε⁴).
        let base = ComplexMatrix::diagonal(&[0.0, 1.0]);
        let g = 0.3;
        let n = ComplexMatrix::from_real(2, &[0.0, g, g, 0.0]).unwrap();
        let e0 = [C64::new(1.0, 0.0), C64::new(0.0, 0.0)];
        let t = eigenvalue_expansion(&base, &n, &e0).unwrap();
        assert_eq!(t.zeroth, 0.0);
        assert_eq!(t.first, 0.0);
        assert!((t.second + g * g).abs() < 1e-15);
    }

    #[test]
    fn rejects_non_eigenvector() {
        let base = ComplexMatrix::from_real(2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let e0 = [C64::new(1.0, 0.0), C64::new(0.0, 0.0)];
        assert!(matches!(
            eigenvalue_expansion(&base, &base, &e0),
            Err(Error::NotEigenvector(_))
        ));
    }

    #[test]
    fn witness_zeroth_and_first_orders_vanish() {
        let t = witness_expansion().unwrap();
        assert!(t.zeroth.abs() < 1e-15);
        assert!(t.first.abs() < 1e-15);
        assert!(t.second < 0.0);
    }
}
