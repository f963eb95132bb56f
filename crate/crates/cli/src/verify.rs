//! Structural invariants of the kernel and the model, evaluated on sampled
//! inputs. Every row is an identity that must hold for all inputs.

use ebitgap_core::linalg::{eig_hermitian, permute_to_copies_layout, ComplexMatrix};
use ebitgap_core::measures::{distillability_witness, negativity};
use ebitgap_core::model::{
    projected_rho_b, psi, qubit_block_projector, rho_b, sigma, tau, upb_projector,
};
use ebitgap_core::overlap::{restart_start, seesaw_run};
use ebitgap_core::tol::ZERO_EIGENVALUE;

use crate::checks::Check;
use crate::format::sci;
use crate::sampling::random_hermitian_batch;
use crate::{CliError, Settings};

pub const SAMPLED_P: [f64; 7] = [0.0, 0.0015, 0.015, 0.05, 0.3, 0.7, 1.0];

fn row(name: &'static str, claim: &str, tol: &str, f: impl FnOnce() -> Result<(f64, bool), CliError>) -> Check {
    match f() {
        Ok((value, pass)) => Check::new(name, claim, sci(value), tol, pass),
        Err(e) => Check::failed(name, claim, e),
    }
}

fn max_over<T>(items: impl IntoIterator<Item = T>, mut f: impl FnMut(T) -> Result<f64, CliError>) -> Result<f64, CliError> {
    let mut worst: f64 = 0.0;
    for item in items {
        worst = worst.max(f(item)?);
    }
    Ok(worst)
}

pub fn verify_suite(settings: &Settings) -> Vec<Check> {
    let randoms = random_hermitian_batch(settings.seed, 8, 9);
    vec![
        row("kron_associative", "exact", "<= 1e-15", || {
            let w = max_over(randoms.windows(3), |m| {
                let (a, b, c) = (&m[0], &m[1], &m[2]);
                Ok(a.kron(b).kron(c).max_abs_diff(&a.kron(&b.kron(c)))?)
            })?;
            Ok((w, w <= 1e-15))
        }),
        row("kron_trace_multiplicative", "tr(A⊗B)=trA·trB", "<= 1e-11", || {
            let w = max_over(randoms.windows(2), |m| {
                Ok((m[0].kron(&m[1]).trace() - m[0].trace() * m[1].trace()).norm())
            })?;
            Ok((w, w <= 1e-11))
        }),
        row("pt_involution", "exact", "0", || {
            let w = max_over(SAMPLED_P, |p| {
                let s = sigma(p)?;
                Ok(s.partial_transpose().partial_transpose().matrix().max_abs_diff(s.matrix())?)
            })?;
            Ok((w, w == 0.0))
        }),
        row("pt_trace_hermiticity", "preserved", "<= 1e-12", || {
            let w = max_over(SAMPLED_P, |p| {
                let pt = sigma(p)?.partial_transpose();
                let m = pt.matrix();
                Ok((m.trace().re - 1.0).abs().max(m.hermiticity_defect()))
            })?;
            Ok((w, w <= 1e-12))
        }),
        row("pt_side_independent_spectrum", "T_A ~ T_B", "<= 1e-12", || {
            let w = max_over(SAMPLED_P, |p| {
                let s = sigma(p)?;
                let a = eig_hermitian(s.partial_transpose().matrix())?;
                let b = eig_hermitian(s.partial_transpose_b().matrix())?;
                Ok(a.eigenvalues.iter().zip(&b.eigenvalues).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max))
            })?;
            Ok((w, w <= 1e-12))
        }),
        row("eig_trace_sum", "sum λ = tr", "<= 1e-11", || {
            let w = max_over(&randoms, |m| {
                let s = eig_hermitian(m)?;
                Ok((s.eigenvalues.iter().sum::<f64>() - m.trace().re).abs())
            })?;
            Ok((w, w <= 1e-11))
        }),
        row("eig_gram_identity", "orthonormal", "<= 1e-11", || {
            let w = max_over(&randoms, |m| {
                let s = eig_hermitian(m)?;
                let n = s.dim();
                let v = ComplexMatrix::from_fn(n, |i, k| s.eigenvectors[k][i]);
                Ok(v.adjoint().matmul(&v)?.max_abs_diff(&ComplexMatrix::identity(n))?)
            })?;
            Ok((w, w <= 1e-11))
        }),
        row("projector_spectra", "{0, 1}", "<= 1e-11", || {
            let w = max_over([upb_projector(), qubit_block_projector()], |p| {
                let s = eig_hermitian(p.matrix())?;
                Ok(s.eigenvalues.iter().map(|l| l.abs().min((l - 1.0).abs())).fold(0.0, f64::max))
            })?;
            Ok((w, w <= 1e-11))
        }),
        row("layout_spectrum", "preserved", "<= 1e-12", || {
            let w = max_over(randoms.windows(2), |m| {
                let k = m[0].kron(&m[1]);
                let g = permute_to_copies_layout(&k, upb_projector().dims(), 2)?;
                let a = eig_hermitian(&k)?;
                let b = eig_hermitian(g.matrix())?;
                Ok(a.eigenvalues.iter().zip(&b.eigenvalues).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max))
            })?;
            Ok((w, w <= 1e-12))
        }),
        row("sigma_affine", "σ(0)+p(σ(1)−σ(0))", "<= 1e-15", || {
            let (s0, s1) = (sigma(0.0)?, sigma(1.0)?);
            let w = max_over(SAMPLED_P, |p| {
                let line = &s0.matrix().scale(1.0 - p) + &s1.matrix().scale(p);
                Ok(sigma(p)?.matrix().max_abs_diff(&line)?)
            })?;
            Ok((w, w <= 1e-15))
        }),
        row("sigma_is_state", "PSD, unit trace", "<= 1e-12", || {
            let w = max_over(SAMPLED_P, |p| {
                let s = sigma(p)?;
                let spectrum = eig_hermitian(s.matrix())?;
                Ok((-spectrum.min()).max(0.0).max((s.matrix().trace().re - 1.0).abs()))
            })?;
            Ok((w, w <= 1e-12))
        }),
        row("sigma_supported_in_v", "Π σ Π = σ", "<= 1e-12", || {
            let pi = upb_projector();
            let w = max_over(SAMPLED_P, |p| {
                let s = sigma(p)?;
                Ok(pi.sandwich(&s)?.matrix().max_abs_diff(s.matrix())?)
            })?;
            Ok((w, w <= 1e-12))
        }),
        row("psi_in_v", "Π ψ = ψ", "<= 1e-12", || {
            let s = psi();
            let w = upb_projector().matrix().apply(s.amplitudes())?;
            let d = w.iter().zip(s.amplitudes()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
            Ok((d, d <= 1e-12))
        }),
        row("pt_fixed_rho_b", "ρ_b and PρP† fixed", "<= 1e-12", || {
            let w = max_over([rho_b(), projected_rho_b()], |o| {
                Ok(o.partial_transpose().matrix().max_abs_diff(o.matrix())?)
            })?;
            Ok((w, w <= 1e-12))
        }),
        row("projected_rank_three", "rank 3, null τ", "1e-10", || {
            let a = projected_rho_b();
            let rank = eig_hermitian(a.matrix())?.rank(ZERO_EIGENVALUE);
            let null = ebitgap_core::linalg::norm(&a.matrix().apply(tau().amplitudes())?);
            Ok((rank as f64, rank == 3 && null <= ZERO_EIGENVALUE))
        }),
        row("projection_commutes_with_pt", "(PσP†)^T_A = Pσ^T_A P†", "<= 1e-15", || {
            let p = qubit_block_projector();
            let w = max_over(SAMPLED_P, |x| {
                let s = sigma(x)?;
                let lhs = p.sandwich(&s)?.partial_transpose();
                let rhs = p.sandwich(&s.partial_transpose())?;
                Ok(lhs.matrix().max_abs_diff(rhs.matrix())?)
            })?;
            Ok((w, w <= 1e-15))
        }),
        row("convexity_bound", "N(σ(p)) <= p/3", "1e-12", || {
            let w = max_over(SAMPLED_P, |p| Ok(negativity(&sigma(p)?)? - p / 3.0))?;
            Ok((w, w <= 1e-12))
        }),
        row("witness_below_negativity", "|n| <= N", "1e-12", || {
            let p_op = qubit_block_projector();
            let w = max_over(SAMPLED_P, |p| {
                let s = sigma(p)?;
                let n = distillability_witness(&s, &p_op, settings.witness_tol)?.min_eigenvalue;
                Ok((-n).max(0.0) - negativity(&s)?)
            })?;
            Ok((w, w <= 1e-12))
        }),
        row("seesaw_monotone", "non-decreasing", ">= -1e-14", || {
            let pi = upb_projector();
            let mut worst_drop: f64 = 0.0;
            for index in 0..10 {
                let (a0, b0) = restart_start(settings.seed, index, pi.dims());
                let run = seesaw_run(&pi, &a0, &b0, settings.tol_eig, 500)?;
                for w in run.objective.windows(2) {
                    worst_drop = worst_drop.max(w[0] - w[1]);
                }
            }
            Ok((worst_drop, worst_drop <= 1e-14))
        }),
    ]
}
