//! One PASS/FAIL line per acceptance criterion. Exits non-zero on any failure.

use std::process::ExitCode;
use std::time::Instant;

use ebitgap::sampling::random_hermitian_batch;
use ebitgap_core::experiments::{fit_quadratic_law, sweep, SweepRange};
use ebitgap_core::linalg::{eig_hermitian, inner, norm, permute_to_copies_layout, LocalDims};
use ebitgap_core::measures::{distillability_witness, log_negativity, schmidt};
use ebitgap_core::model::{
    phi, projected_rho_b, psi, qubit_block_projector, rho_b, sigma, tau, tiles_product_vectors,
    upb_projector,
};
use ebitgap_core::overlap::{grid_oracle_overlap, seesaw_max_overlap, two_copy_overlap, SeesawConfig};
use ebitgap_core::perturbation::k_perturbative;
use ebitgap_core::Result;

const PPT_MIN_EIG: f64 = -1e-10;
const PT_FIXED: f64 = 1e-12;
const ORTHOGONALITY: f64 = 1e-12;
const TRACE_FOUR: f64 = 1e-11;
const WITNESS_BAND: (f64, f64) = (2.6e-4, 2.8e-4);
const RANK_THRESHOLD: f64 = 1e-10;
const WITNESS_TOL: f64 = 1e-10;
const EXPONENT_TOL: f64 = 0.05;
const K_REL_TOL: f64 = 0.02;
const K_ORDER_ONE: (f64, f64) = (0.5, 2.5);
const FIT_POINTS: usize = 20;
const GRID_POINTS: usize = 200;
const GRID_P_MAX: f64 = 0.05;
const ENTROPY_PSI: f64 = 0.55;
const ENTROPY_TOL: f64 = 0.005;
const E_N_PSI_TOL: f64 = 1e-9;
const E_N_PHI_TOL: f64 = 1e-11;
const GAP_E_N_MAX: f64 = 0.0145;
const GAP_P_MAX: f64 = 0.012;
const QUOTED_E_N: f64 = 0.012;
const QUOTED_E_N_TOL: f64 = 0.001;
const GAP_MIN: f64 = 0.0025;
const BETA: f64 = 0.99;
const ADDITIVITY_TOL: f64 = 1e-9;
const RESTART_STABILITY: f64 = 1e-6;
const ORACLE_ABOVE: f64 = 1e-8;
const GRID_RESOLUTION: usize = 24;
const TWO_COPY_SLACK: f64 = 1e-6;
const TWO_COPY_MAX: f64 = 0.9801;
const KERNEL_SAMPLES: usize = 50;
const KERNEL_SEED: u64 = 42;
const RECONSTRUCTION: f64 = 1e-11;
const LAYOUT_SPECTRUM: f64 = 1e-12;

type Criterion = (&'static str, fn() -> Result<Outcome>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Result<Outcome> {
    Ok(Outcome { pass, detail })
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn c1_ppt() -> Result<Outcome> {
    let rho = rho_b();
    let pt = rho.partial_transpose();
    let min = eig_hermitian(pt.matrix())?.min();
    let fixed = pt.matrix().max_abs_diff(rho.matrix())?;
    outcome(
        min >= PPT_MIN_EIG && fixed <= PT_FIXED,
        format!("min eig {min:.3e}, |rho^T_A - rho|_max {fixed:.3e}"),
    )
}

fn c2_upb() -> Result<Outcome> {
    let vs = tiles_product_vectors().composed();
    let mut overlap: f64 = 0.0;
    for (i, u) in vs.iter().enumerate() {
        for v in &vs[i + 1..] {
            overlap = overlap.max(inner(u, v).norm());
        }
    }
    let pi = upb_projector();
    let m = pi.matrix();
    let idem = m.matmul(m)?.max_abs_diff(m)?;
    let herm = m.hermiticity_defect();
    let trace = m.trace().re;
    let s = psi();
    let in_v = norm(
        &m.apply(s.amplitudes())?
            .iter()
            .zip(s.amplitudes())
            .map(|(x, y)| x - y)
            .collect::<Vec<_>>(),
    );
    let tau_psi = tau().inner(&s).norm();
    let pass = overlap <= ORTHOGONALITY
        && idem <= ORTHOGONALITY
        && herm <= ORTHOGONALITY
        && (trace - 4.0).abs() <= TRACE_FOUR
        && in_v <= ORTHOGONALITY
        && tau_psi <= ORTHOGONALITY;
    outcome(
        pass,
        format!("max overlap {overlap:.1e}, idem {idem:.1e}, trace {trace:.12}, psi off V {in_v:.1e}, <tau|psi> {tau_psi:.1e}"),
    )
}

fn c3_witness() -> Result<Outcome> {
    let w = distillability_witness(&sigma(0.015)?, &qubit_block_projector(), WITNESS_TOL)?;
    let n = -w.min_eigenvalue;
    let rank = eig_hermitian(projected_rho_b().partial_transpose().matrix())?.rank(RANK_THRESHOLD);
    outcome(
        (WITNESS_BAND.0..=WITNESS_BAND.1).contains(&n) && rank == 3,
        format!("|n|(0.015) = {n:.5e}, rank = {rank}"),
    )
}

fn c4_quadratic_law() -> Result<Outcome> {
    let wide = (1e-3, 1e-2);
    let narrow = (1e-4, 1e-3);
    let exp_fit = fit_quadratic_law(
        &sweep(&SweepRange::logarithmic(wide.0, wide.1, FIT_POINTS), WITNESS_TOL)?,
        wide,
    )?;
    let k_fit = fit_quadratic_law(
        &sweep(&SweepRange::logarithmic(narrow.0, narrow.1, FIT_POINTS), WITNESS_TOL)?,
        narrow,
    )?;
    let k_pert = k_perturbative()?;
    let rel = (k_fit.k_fit - k_pert).abs() / k_pert;
    outcome(
        (exp_fit.exponent_fit - 2.0).abs() <= EXPONENT_TOL
            && rel <= K_REL_TOL
            && (K_ORDER_ONE.0..=K_ORDER_ONE.1).contains(&k_pert),
        format!(
            "exponent {:.4}, k_fit {:.5}, k_pert {k_pert:.5}, rel {rel:.4}",
            exp_fit.exponent_fit, k_fit.k_fit
        ),
    )
}

fn c5_monotone() -> Result<Outcome> {
    let records = sweep(&SweepRange::linear(0.0, GRID_P_MAX, GRID_POINTS), WITNESS_TOL)?;
    let abs_n: Vec<f64> = records.iter().map(|r| (-r.witness_n).max(0.0)).collect();
    let e_n: Vec<f64> = records.iter().map(|r| r.log_negativity).collect();
    let up = |v: &[f64]| v.windows(2).all(|w| w[1] >= w[0]);
    outcome(
        records.len() == GRID_POINTS && up(&abs_n) && up(&e_n),
        format!("{} points, |n| up {}, E_N up {}", records.len(), up(&abs_n), up(&e_n)),
    )
}

fn c6_pure_states() -> Result<Outcome> {
    let entropy = schmidt(&psi())?.entropy_ebits;
    let e_psi = log_negativity(&psi().projector())?;
    let e_phi = log_negativity(&phi().projector())?;
    let d_psi = (e_psi - (5.0f64 / 3.0).log2()).abs();
    outcome(
        (entropy - ENTROPY_PSI).abs() <= ENTROPY_TOL
            && d_psi <= E_N_PSI_TOL
            && (e_phi - 1.0).abs() <= E_N_PHI_TOL,
        format!("S(psi) {entropy:.6}, E_N(psi) - log2(5/3) {d_psi:.1e}, E_N(Phi) {e_phi:.12}"),
    )
}

fn c7_gap() -> Result<Outcome> {
    let records = sweep(&SweepRange::linear(0.0, GRID_P_MAX, GRID_POINTS), WITNESS_TOL)?;
    let regime: Vec<_> = records.iter().filter(|r| r.p > 0.0 && r.p <= GAP_P_MAX).collect();
    let regime_ok = !regime.is_empty()
        && regime.iter().all(|r| r.log_negativity < GAP_E_N_MAX && r.witness_n < -WITNESS_TOL);
    let mut matching = Vec::new();
    for p in [0.0015, 0.015] {
        let e = log_negativity(&sigma(p)?)?;
        if (e - QUOTED_E_N).abs() <= QUOTED_E_N_TOL {
            matching.push((p, e));
        }
    }
    let (audit_ok, gap, p_star) = match matching.as_slice() {
        [(p, e)] => {
            let gap = -BETA.log2() - e;
            (gap >= GAP_MIN, gap, *p)
        }
        _ => (false, f64::NAN, f64::NAN),
    };
    outcome(
        regime_ok && audit_ok,
        format!("{} regime points ok {regime_ok}, audit p = {p_star}, gap {gap:.5}", regime.len()),
    )
}

fn c8_additivity() -> Result<Outcome> {
    let states = [sigma(0.3)?, psi().projector(), phi().projector()];
    let mut worst: f64 = 0.0;
    for x in &states {
        for y in &states {
            let sum = log_negativity(x)? + log_negativity(y)?;
            worst = worst.max((log_negativity(&x.tensor(y))? - sum).abs());
        }
    }
    let s = sigma(0.015)?;
    let cat = (log_negativity(&s.tensor(&phi().projector()))? - log_negativity(&s)? - 1.0).abs();
    outcome(
        worst <= ADDITIVITY_TOL && cat <= ADDITIVITY_TOL,
        format!("additivity {worst:.1e}, catalysis {cat:.1e}"),
    )
}

fn c9_overlap() -> Result<Outcome> {
    let pi = upb_projector();
    let config = SeesawConfig::default();
    let single = seesaw_max_overlap(&pi, &config)?.alpha;
    let doubled = seesaw_max_overlap(
        &pi,
        &SeesawConfig {
            restarts: 2 * config.restarts,
            ..config
        },
    )?
    .alpha;
    let oracle = grid_oracle_overlap(&pi, GRID_RESOLUTION)?.refined;
    let two = two_copy_overlap(&pi, &config)?.alpha;
    let pass = single < BETA
        && (single - doubled).abs() <= RESTART_STABILITY
        && oracle <= single + ORACLE_ABOVE
        && two >= single * single - TWO_COPY_SLACK
        && two <= TWO_COPY_MAX;
    outcome(
        pass,
        format!("alpha {single:.9}, 400 restarts {doubled:.9}, grid {oracle:.9}, two-copy {two:.9}"),
    )
}

fn c10_kernel() -> Result<Outcome> {
    let mut residual: f64 = 0.0;
    for m in random_hermitian_batch(KERNEL_SEED, KERNEL_SAMPLES, 9) {
        residual = residual.max(eig_hermitian(&m)?.reconstruct().max_abs_diff(&m)?);
    }
    let s = sigma(0.3)?;
    let involution = s.partial_transpose().partial_transpose() == s;
    let pi = upb_projector();
    let doubled = pi.matrix().kron(pi.matrix());
    let grouped = permute_to_copies_layout(&doubled, LocalDims::new(3, 3), 2)?;
    let layout = max_diff(
        &eig_hermitian(&doubled)?.eigenvalues,
        &eig_hermitian(grouped.matrix())?.eigenvalues,
    );
    outcome(
        residual <= RECONSTRUCTION && involution && layout <= LAYOUT_SPECTRUM,
        format!("residual {residual:.1e}, involution exact {involution}, layout {layout:.1e}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("ppt of rho_b", c1_ppt),
        ("upb structure", c2_upb),
        ("witness number", c3_witness),
        ("quadratic law", c4_quadratic_law),
        ("monotonicity", c5_monotone),
        ("pure-state anchors", c6_pure_states),
        ("gap existence", c7_gap),
        ("additivity and catalysis", c8_additivity),
        ("overlap bounds", c9_overlap),
        ("numerical kernel", c10_kernel),
    ];
    let start = Instant::now();
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let (pass, detail) = match check() {
            Ok(o) => (o.pass, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failures += 1;
        }
        println!(
            "criterion {:>2} {name:<25} {}  {detail}",
            i + 1,
            if pass { "PASS" } else { "FAIL" }
        );
    }
    println!(
        "{}/{} criteria passed in {:.1}s",
        criteria.len() - failures,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
