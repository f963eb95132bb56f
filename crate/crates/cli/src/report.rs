//! Fixed-order table of every quoted number and structural claim, each
//! recomputed from scratch and compared at a pinned tolerance.

use ebitgap_core::experiments::{fit_quadratic_law, sweep, SweepRange, SweepRecord};
use ebitgap_core::linalg::{eig_hermitian, inner, norm, permute_to_copies_layout};
use ebitgap_core::measures::{
    distillability_witness, ec_lower_bound_from_overlap, log_negativity, schmidt,
};
use ebitgap_core::model::{
    phi, projected_rho_b, psi, qubit_block_projector, rho_b, sigma, tau, tiles_product_vectors,
    upb_projector,
};
use ebitgap_core::overlap::{grid_oracle_overlap, seesaw_max_overlap, two_copy_overlap, SeesawConfig};
use ebitgap_core::perturbation::witness_expansion;
use ebitgap_core::tol::{BETA_CERTIFIED, ZERO_EIGENVALUE};

use crate::checks::Check;
use crate::format::sci;
use crate::sampling::random_hermitian_batch;
use crate::{CliError, Settings};

/// Quoted logarithmic negativity used in the gap statement.
pub const QUOTED_E_N: f64 = 0.012;
pub const QUOTED_E_N_TOL: f64 = 0.001;
/// The two candidate mixing parameters for the quoted `E_N`.
pub const AUDIT_PS: [f64; 2] = [0.0015, 0.015];
pub const GAP_MIN: f64 = 0.0025;

pub const WITNESS_P: f64 = 0.015;
pub const WITNESS_RANGE: (f64, f64) = (2.6e-4, 2.8e-4);
pub const EXPONENT_WINDOW: (f64, f64) = (1e-3, 1e-2);
pub const K_WINDOW: (f64, f64) = (1e-4, 1e-3);
pub const FIT_POINTS: usize = 20;
pub const GAP_REGIME_P_MAX: f64 = 0.012;
pub const GRID_RESOLUTION: usize = 24;
pub const KERNEL_SAMPLES: usize = 50;

fn run(name: &'static str, expected: &str, f: impl FnOnce() -> Result<Check, CliError>) -> Check {
    f().unwrap_or_else(|e| Check::failed(name, expected, e))
}

/// Outcome of checking which candidate `p` carries the quoted `E_N = 0.012`.
#[derive(Clone, Debug, PartialEq)]
pub struct TypoAudit {
    pub values: [(f64, f64); 2],
    /// Candidates whose `E_N` lies within tolerance of the quoted value.
    pub matching: Vec<f64>,
}

impl TypoAudit {
    pub fn compute() -> Result<Self, CliError> {
        let mut values = [(0.0, 0.0); 2];
        for (slot, &p) in values.iter_mut().zip(&AUDIT_PS) {
            *slot = (p, log_negativity(&sigma(p)?)?);
        }
        let matching = values
            .iter()
            .filter(|(_, e)| (e - QUOTED_E_N).abs() <= QUOTED_E_N_TOL)
            .map(|(p, _)| *p)
            .collect();
        Ok(Self { values, matching })
    }

    /// The unique matching `p`, if exactly one candidate matches.
    pub fn resolved(&self) -> Option<f64> {
        match self.matching.as_slice() {
            [p] => Some(*p),
            _ => None,
        }
    }
}

pub fn reproduce_report(settings: &Settings) -> Vec<Check> {
    let mut rows = Vec::new();
    rows.extend(structure_checks());
    rows.extend(witness_checks(settings));
    rows.extend(quadratic_law_checks(settings));
    let grid = sweep(
        &SweepRange::linear(0.0, crate::figure::FIGURE_P_MAX, crate::figure::FIGURE_POINTS),
        settings.witness_tol,
    );
    match grid {
        Ok(records) => rows.extend(sweep_checks(&records)),
        Err(e) => rows.push(Check::failed("sweep_grid", "200-point grid", e)),
    }
    rows.extend(pure_state_checks());
    rows.extend(gap_checks());
    rows.extend(additivity_checks());
    rows.extend(overlap_checks(settings));
    rows.extend(kernel_checks(settings));
    rows
}

fn structure_checks() -> Vec<Check> {
    vec![
        run("ppt_rho_b", "PPT", || {
            let min = eig_hermitian(rho_b().partial_transpose().matrix())?.min();
            Ok(Check::new("ppt_rho_b", "PPT", sci(min), ">= -1e-10", min >= -1e-10))
        }),
        run("pt_fixed_rho_b", "rho_b^T_A = rho_b", || {
            let rho = rho_b();
            let d = rho.partial_transpose().matrix().max_abs_diff(rho.matrix())?;
            Ok(Check::new("pt_fixed_rho_b", "rho_b^T_A = rho_b", sci(d), "<= 1e-12", d <= 1e-12))
        }),
        run("upb_orthogonal", "mutually orthogonal", || {
            let vs = tiles_product_vectors().composed();
            let mut worst: f64 = 0.0;
            for (i, u) in vs.iter().enumerate() {
                for v in &vs[i + 1..] {
                    worst = worst.max(inner(u, v).norm());
                }
            }
            Ok(Check::new("upb_orthogonal", "0", sci(worst), "<= 1e-12", worst <= 1e-12))
        }),
        run("upb_projector", "rank-4 projector", || {
            let pi = upb_projector();
            let m = pi.matrix();
            let idem = m.matmul(m)?.max_abs_diff(m)?;
            let herm = m.hermiticity_defect();
            let trace = m.trace().re;
            let annihilated = tiles_product_vectors()
                .composed()
                .iter()
                .map(|v| m.apply(v).map(|w| norm(&w)))
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .fold(0.0, f64::max);
            let pass = idem <= 1e-12
                && herm <= 1e-12
                && (trace - 4.0).abs() <= 1e-11
                && annihilated <= 1e-12;
            Ok(Check::new(
                "upb_projector",
                "trace 4",
                format!(
                    "trace={} idem={} herm={} kill={}",
                    sci(trace),
                    sci(idem),
                    sci(herm),
                    sci(annihilated)
                ),
                "1e-11 / 1e-12",
                pass,
            ))
        }),
        run("psi_in_v", "psi in V", || {
            let s = psi();
            let w = upb_projector().matrix().apply(s.amplitudes())?;
            let d = w
                .iter()
                .zip(s.amplitudes())
                .map(|(x, y)| (x - y).norm())
                .fold(0.0, f64::max);
            Ok(Check::new("psi_in_v", "0", sci(d), "<= 1e-12", d <= 1e-12))
        }),
        run("tau_psi_orthogonal", "0", || {
            let d = tau().inner(&psi()).norm();
            Ok(Check::new("tau_psi_orthogonal", "0", sci(d), "<= 1e-12", d <= 1e-12))
        }),
    ]
}

fn witness_checks(settings: &Settings) -> Vec<Check> {
    vec![
        run("witness_p015", "2.7e-4", || {
            let w = distillability_witness(
                &sigma(WITNESS_P)?,
                &qubit_block_projector(),
                settings.witness_tol,
            )?;
            let n = -w.min_eigenvalue;
            let pass = (WITNESS_RANGE.0..=WITNESS_RANGE.1).contains(&n) && w.is_distillable_certificate;
            Ok(Check::new("witness_p015", "2.7e-4", sci(n), "[2.6e-4, 2.8e-4]", pass))
        }),
        run("rank_projected_rho_b", "3", || {
            let spectrum = eig_hermitian(projected_rho_b().partial_transpose().matrix())?;
            let rank = spectrum.rank(ZERO_EIGENVALUE);
            Ok(Check::new(
                "rank_projected_rho_b",
                "3",
                rank.to_string(),
                "threshold 1e-10",
                rank == 3,
            ))
        }),
        run("witness_p0", "0", || {
            let w = distillability_witness(&sigma(0.0)?, &qubit_block_projector(), settings.witness_tol)?;
            let pass = w.min_eigenvalue.abs() <= 1e-11 && !w.is_distillable_certificate;
            Ok(Check::new("witness_p0", "0", sci(w.min_eigenvalue), "<= 1e-11", pass))
        }),
    ]
}

fn fit_records(window: (f64, f64), settings: &Settings) -> Result<Vec<SweepRecord>, CliError> {
    Ok(sweep(
        &SweepRange::logarithmic(window.0, window.1, FIT_POINTS),
        settings.witness_tol,
    )?)
}

fn quadratic_law_checks(settings: &Settings) -> Vec<Check> {
    vec![
        run("first_order_vanishes", "0", || {
            let t = witness_expansion()?;
            let worst = t.zeroth.abs().max(t.first.abs());
            Ok(Check::new("first_order_vanishes", "0", sci(worst), "<= 1e-12", worst <= 1e-12))
        }),
        run("quadratic_exponent", "2", || {
            let fit = fit_quadratic_law(&fit_records(EXPONENT_WINDOW, settings)?, EXPONENT_WINDOW)?;
            let pass = (fit.exponent_fit - 2.0).abs() <= 0.05;
            Ok(Check::new("quadratic_exponent", "2", sci(fit.exponent_fit), "+-0.05", pass))
        }),
        run("k_fit_vs_perturbative", "equal", || {
            let fit = fit_quadratic_law(&fit_records(K_WINDOW, settings)?, K_WINDOW)?;
            let rel = (fit.k_fit - fit.k_perturbative).abs() / fit.k_perturbative;
            Ok(Check::new(
                "k_fit_vs_perturbative",
                sci(fit.k_perturbative),
                sci(fit.k_fit),
                "rel <= 0.02",
                rel <= 0.02,
            ))
        }),
        run("k_order_one", "O(1)", || {
            let k = -witness_expansion()?.second;
            Ok(Check::new("k_order_one", "O(1)", sci(k), "[0.5, 2.5]", (0.5..=2.5).contains(&k)))
        }),
        run("k_matches_witness_p015", "2.7e-4", || {
            let k = -witness_expansion()?.second;
            let predicted = k * WITNESS_P * WITNESS_P;
            let rel = (predicted - 2.7e-4).abs() / 2.7e-4;
            Ok(Check::new("k_matches_witness_p015", "2.7e-4", sci(predicted), "rel <= 0.15", rel <= 0.15))
        }),
    ]
}

pub(crate) fn is_non_decreasing(values: impl IntoIterator<Item = f64>) -> bool {
    let v: Vec<f64> = values.into_iter().collect();
    v.windows(2).all(|w| w[1] >= w[0])
}

fn sweep_checks(records: &[SweepRecord]) -> Vec<Check> {
    let abs_n = is_non_decreasing(records.iter().map(|r| (-r.witness_n).max(0.0)));
    let e_n = is_non_decreasing(records.iter().map(|r| r.log_negativity));
    let floor = -BETA_CERTIFIED.log2();
    let regime: Vec<&SweepRecord> = records
        .iter()
        .filter(|r| r.p > 0.0 && r.p <= GAP_REGIME_P_MAX)
        .collect();
    let worst_e_n = regime.iter().map(|r| r.log_negativity).fold(0.0, f64::max);
    let weakest_n = regime.iter().map(|r| r.witness_n).fold(f64::NEG_INFINITY, f64::max);
    let gap_ok = !regime.is_empty() && worst_e_n < floor && weakest_n < -1e-10;
    vec![
        Check::new(
            "monotone_abs_n",
            "grows monotonically",
            format!("{} points", records.len()),
            "non-decreasing",
            abs_n,
        ),
        Check::new(
            "monotone_e_n",
            "non-decreasing",
            format!("{} points", records.len()),
            "non-decreasing",
            e_n,
        ),
        Check::new(
            "gap_regime",
            "E_N < 0.0145, n < 0",
            format!("max E_N={} max n={} ({} points)", sci(worst_e_n), sci(weakest_n), regime.len()),
            "p in (0, 0.012]",
            gap_ok,
        ),
    ]
}

fn pure_state_checks() -> Vec<Check> {
    vec![
        run("entropy_psi", "0.55", || {
            let s = schmidt(&psi())?.entropy_ebits;
            Ok(Check::new("entropy_psi", "0.55", sci(s), "+-0.005", (s - 0.55).abs() <= 0.005))
        }),
        run("e_n_psi", "log2(5/3)", || {
            let e = log_negativity(&psi().projector())?;
            let want = (5.0f64 / 3.0).log2();
            Ok(Check::new("e_n_psi", sci(want), sci(e), "+-1e-9", (e - want).abs() <= 1e-9))
        }),
        run("e_n_phi", "1", || {
            let e = log_negativity(&phi().projector())?;
            Ok(Check::new("e_n_phi", "1", sci(e), "+-1e-11", (e - 1.0).abs() <= 1e-11))
        }),
    ]
}

fn gap_checks() -> Vec<Check> {
    let floor_row = run("e_c_floor", "0.015", || {
        let floor = ec_lower_bound_from_overlap(BETA_CERTIFIED)?;
        Ok(Check::new("e_c_floor", "0.015", sci(floor), "+-0.001", (floor - 0.015).abs() <= 0.001))
    });
    let audit = match TypoAudit::compute() {
        Ok(a) => a,
        Err(e) => {
            return vec![
                floor_row,
                Check::failed("e_n_typo_audit", "0.012 at p=0.0015", e),
            ]
        }
    };
    let computed = audit
        .values
        .iter()
        .map(|(p, e)| format!("p={p}: {}", sci(*e)))
        .collect::<Vec<_>>()
        .join("; ");
    let audit_row = Check::new(
        "e_n_typo_audit",
        "0.012 at p=0.0015",
        format!(
            "{computed}; matches {}",
            match audit.resolved() {
                Some(p) => format!("p={p}"),
                None => format!("{} candidates", audit.matching.len()),
            }
        ),
        "+-0.001, exactly one",
        audit.resolved().is_some(),
    );
    let gap_row = match audit.resolved() {
        Some(p) => {
            let e_n = audit.values.iter().find(|(q, _)| *q == p).map(|v| v.1).unwrap_or(f64::NAN);
            let gap = -BETA_CERTIFIED.log2() - e_n;
            Check::new("gap_at_audited_p", "> 0.003", format!("p={p}: {}", sci(gap)), ">= 0.0025", gap >= GAP_MIN)
        }
        None => Check::new("gap_at_audited_p", "> 0.003", "unresolved audit", ">= 0.0025", false),
    };
    vec![floor_row, audit_row, gap_row]
}

fn additivity_checks() -> Vec<Check> {
    vec![
        run("additivity", "E_N(X⊗Y)=E_N(X)+E_N(Y)", || {
            let states = [sigma(0.3)?, psi().projector(), phi().projector()];
            let mut worst: f64 = 0.0;
            for x in &states {
                for y in &states {
                    let joint = log_negativity(&x.tensor(y))?;
                    worst = worst.max((joint - log_negativity(x)? - log_negativity(y)?).abs());
                }
            }
            Ok(Check::new("additivity", "0", sci(worst), "<= 1e-9", worst <= 1e-9))
        }),
        run("catalysis", "E_N(σ⊗Φ)=E_N(σ)+1", || {
            let s = sigma(WITNESS_P)?;
            let joint = log_negativity(&s.tensor(&phi().projector()))?;
            let d = (joint - log_negativity(&s)? - 1.0).abs();
            Ok(Check::new("catalysis", "0", sci(d), "<= 1e-9", d <= 1e-9))
        }),
    ]
}

fn overlap_checks(settings: &Settings) -> Vec<Check> {
    let pi = upb_projector();
    let config = SeesawConfig {
        seed: settings.seed,
        tol: settings.tol_eig,
        ..SeesawConfig::default()
    };
    let single = match seesaw_max_overlap(&pi, &config) {
        Ok(r) => r,
        Err(e) => return vec![Check::failed("overlap_single", "< 0.99", e)],
    };
    let alpha = single.alpha;
    vec![
        Check::new("overlap_single", "< 0.99", sci(alpha), "strict", alpha < BETA_CERTIFIED),
        run("overlap_restart_stability", "stable", || {
            let doubled = SeesawConfig {
                restarts: 2 * config.restarts,
                ..config
            };
            let a2 = seesaw_max_overlap(&pi, &doubled)?.alpha;
            let d = (a2 - alpha).abs();
            Ok(Check::new("overlap_restart_stability", "0", sci(d), "<= 1e-6", d <= 1e-6))
        }),
        run("overlap_grid_oracle", &sci(alpha), || {
            let g = grid_oracle_overlap(&pi, GRID_RESOLUTION)?;
            let pass = g.refined <= alpha + 1e-8 && g.refined >= alpha - 1e-4;
            Ok(Check::new("overlap_grid_oracle", sci(alpha), sci(g.refined), "[-1e-4, +1e-8]", pass))
        }),
        run("overlap_two_copy", "<= 0.9801", || {
            let a2 = two_copy_overlap(&pi, &config)?.alpha;
            let pass = a2 >= alpha * alpha - 1e-6 && a2 <= BETA_CERTIFIED * BETA_CERTIFIED;
            Ok(Check::new(
                "overlap_two_copy",
                "<= 0.9801",
                sci(a2),
                format!(">= {}", sci(alpha * alpha - 1e-6)),
                pass,
            ))
        }),
    ]
}

fn kernel_checks(settings: &Settings) -> Vec<Check> {
    vec![
        run("kernel_eig_residual", "0", || {
            let mut worst: f64 = 0.0;
            for m in random_hermitian_batch(settings.seed, KERNEL_SAMPLES, 9) {
                let s = eig_hermitian(&m)?;
                worst = worst.max(s.reconstruct().max_abs_diff(&m)?);
            }
            Ok(Check::new("kernel_eig_residual", "0", sci(worst), "<= 1e-11", worst <= 1e-11))
        }),
        run("kernel_pt_involution", "exact", || {
            let s = sigma(0.3)?;
            let exact = s.partial_transpose().partial_transpose() == s;
            Ok(Check::new(
                "kernel_pt_involution",
                "exact",
                if exact { "exact" } else { "differs" },
                "0",
                exact,
            ))
        }),
        run("kernel_layout_spectrum", "0", || {
            let pi = upb_projector();
            let doubled = pi.matrix().kron(pi.matrix());
            let grouped = permute_to_copies_layout(&doubled, pi.dims(), 2)?;
            let a = eig_hermitian(&doubled)?;
            let b = eig_hermitian(grouped.matrix())?;
            let worst = a
                .eigenvalues
                .iter()
                .zip(&b.eigenvalues)
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max);
            Ok(Check::new("kernel_layout_spectrum", "0", sci(worst), "<= 1e-12", worst <= 1e-12))
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn audit_resolves_to_larger_candidate() {
        let audit = TypoAudit::compute().unwrap();
        assert_eq!(audit.resolved(), Some(0.015));
        // The smaller candidate is capped by the convexity bound.
        let small = audit.values[0].1;
        assert!(small <= (1.0 + 2.0 * 0.0015 / 3.0f64).log2());
    }

    #[test]
    fn monotone_helper() {
        assert!(is_non_decreasing([0.0, 0.0, 1.0]));
        assert!(!is_non_decreasing([0.0, 1.0, 0.5]));
    }
}
