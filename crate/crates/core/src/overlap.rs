//! Maximal overlap `max ⟨ab|Π|ab⟩` of a product vector with a projector.
//!
//! The seesaw alternates between the two sides: with `b` fixed, the best `a`
//! is the top eigenvector of the A-side contraction `⟨b|Π|b⟩`, and vice
//! versa. Each half-step can only increase the objective. Restarts draw
//! both local vectors from the unitarily invariant distribution on the
//! complex unit sphere; restart `k` uses ChaCha stream `k` under `seed`, so
//! the result does not depend on the order restarts are evaluated in.

use alloc::vec::Vec;
use core::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::{eig_hermitian, normalize, permute_to_copies_layout, BipartiteOperator};
use crate::tol::{HERMITIAN, ZERO_EIGENVALUE};
use crate::C64;

/// Restarts whose overlaps differ by at most this are ties; the lower index wins.
pub const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeesawConfig {
    pub restarts: usize,
    pub seed: u64,
    /// Stop a run once a full iteration improves the objective by less than this.
    pub tol: f64,
    pub max_iterations: usize,
}

impl Default for SeesawConfig {
    fn default() -> Self {
        Self {
            restarts: 200,
            seed: 42,
            tol: 1e-12,
            max_iterations: 500,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OverlapResult {
    pub alpha: f64,
    pub a_opt: Vec<C64>,
    pub b_opt: Vec<C64>,
    pub restarts_used: usize,
    pub iterations_total: usize,
    /// Whether the winning restart met the tolerance before the iteration cap.
    pub converged: bool,
}

/// One seesaw run from a given starting pair.
#[derive(Clone, Debug)]
pub struct SeesawRun {
    pub a: Vec<C64>,
    pub b: Vec<C64>,
    /// Objective at the start and after every half-step.
    pub objective: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}

impl SeesawRun {
    pub fn value(&self) -> f64 {
        self.objective[self.objective.len() - 1]
    }
}

/// Rejects operators that are not hermitian with spectrum in `[0, 1]`.
pub fn check_contraction(pi: &BipartiteOperator) -> Result<()> {
    let spectrum = eig_hermitian(pi.matrix())?;
    if spectrum.min() < -ZERO_EIGENVALUE {
        return Err(Error::NotContraction(spectrum.min()));
    }
    if spectrum.max() > 1.0 + ZERO_EIGENVALUE {
        return Err(Error::NotContraction(spectrum.max()));
    }
    Ok(())
}

/// Top eigenpair of a local hermitian operator, phase-fixed so that the
/// largest-magnitude component is real and positive.
fn top_eigenvector(m: &crate::linalg::ComplexMatrix) -> Result<(f64, Vec<C64>)> {
    let spectrum = eig_hermitian(m)?;
    let mut v = spectrum.eigenvectors[0].clone();
    let pivot = v
        .iter()
        .copied()
        .fold(C64::new(0.0, 0.0), |best, z| if z.norm() > best.norm() { z } else { best });
    let phase = pivot.conj() / pivot.norm();
    for z in &mut v {
        *z *= phase;
    }
    let v = normalize(&v).ok_or(Error::ZeroVector)?;
    Ok((spectrum.max(), v))
}

/// Runs the seesaw from `(a0, b0)` without validating `pi`.
pub fn seesaw_run(
    pi: &BipartiteOperator,
    a0: &[C64],
    b0: &[C64],
    tol: f64,
    max_iterations: usize,
) -> Result<SeesawRun> {
    let mut a = a0.to_vec();
    let mut b = b0.to_vec();
    let mut objective = Vec::with_capacity(2 * max_iterations + 1);
    let mut current = pi.product_expectation(&a, &b)?;
    objective.push(current);
    let mut iterations = 0;
    let mut converged = false;
    while iterations < max_iterations {
        iterations += 1;
        let (fa, next_a) = top_eigenvector(&pi.contract_b(&b)?)?;
        a = next_a;
        objective.push(fa);
        let (fb, next_b) = top_eigenvector(&pi.contract_a(&a)?)?;
        b = next_b;
        objective.push(fb);
        let gain = fb - current;
        current = fb;
        if gain < tol {
            converged = true;
            break;
        }
    }
    Ok(SeesawRun {
        a,
        b,
        objective,
        iterations,
        converged,
    })
}

fn random_unit_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vec<C64> {
    loop {
        let v: Vec<C64> = (0..dim)
            .map(|_| {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                C64::new(re, im)
            })
            .collect();
        if let Some(u) = normalize(&v) {
            return u;
        }
    }
}

/// Starting pair for restart `index`.
pub fn restart_start(seed: u64, index: usize, dims: crate::linalg::LocalDims) -> (Vec<C64>, Vec<C64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let a = random_unit_vector(&mut rng, dims.a);
    let b = random_unit_vector(&mut rng, dims.b);
    (a, b)
}

/// Best product overlap over `config.restarts` seeded seesaw runs.
pub fn seesaw_max_overlap(pi: &BipartiteOperator, config: &SeesawConfig) -> Result<OverlapResult> {
    if config.restarts < 1 {
        return Err(Error::NoRestarts);
    }
    check_contraction(pi)?;
    let mut best: Option<SeesawRun> = None;
    let mut iterations_total = 0;
    for index in 0..config.restarts {
        let (a0, b0) = restart_start(config.seed, index, pi.dims());
        let run = seesaw_run(pi, &a0, &b0, config.tol, config.max_iterations)?;
        iterations_total += run.iterations;
        let better = match &best {
            None => true,
            Some(b) => run.value() > b.value() + TIE_TOLERANCE,
        };
        if better {
            best = Some(run);
        }
    }
    let best = best.expect("at least one restart");
    Ok(OverlapResult {
        alpha: pi.product_expectation(&best.a, &best.b)?,
        a_opt: best.a,
        b_opt: best.b,
        restarts_used: config.restarts,
        iterations_total,
        converged: best.converged,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridOracle {
    /// Best overlap on the grid itself.
    pub grid_max: f64,
    /// After local seesaw refinement from the best grid point.
    pub refined: f64,
}

pub const MIN_GRID_RESOLUTION: usize = 8;

fn sphere_grid(resolution: usize) -> Vec<[C64; 3]> {
    let mut points = Vec::with_capacity(resolution * resolution);
    for i in 0..resolution {
        let theta = PI * i as f64 / (resolution - 1) as f64;
        let (st, ct) = (libm::sin(theta), libm::cos(theta));
        for j in 0..resolution {
            let phi = 2.0 * PI * j as f64 / resolution as f64;
            points.push([
                C64::new(st * libm::cos(phi), 0.0),
                C64::new(st * libm::sin(phi), 0.0),
                C64::new(ct, 0.0),
            ]);
        }
    }
    points
}

/// Exhaustive scan over real unit vectors on both sides of a `(3, 3)`
/// operator, two spherical angles per side, followed by seesaw refinement.
/// Only real product vectors are scanned, so the result lower-bounds the
/// complex maximum.
pub fn grid_oracle_overlap(pi: &BipartiteOperator, resolution: usize) -> Result<GridOracle> {
    if resolution < MIN_GRID_RESOLUTION {
        return Err(Error::ResolutionTooSmall(resolution));
    }
    let dims = pi.dims();
    if dims.a != 3 || dims.b != 3 {
        return Err(Error::LocalDims {
            dim: pi.dim(),
            da: 3,
            db: 3,
        });
    }
    if !pi.matrix().is_hermitian(HERMITIAN) {
        return Err(Error::NotHermitian {
            defect: pi.matrix().hermiticity_defect(),
        });
    }
    let grid = sphere_grid(resolution);
    let mut grid_max = f64::NEG_INFINITY;
    let mut arg = (0, 0);
    for (ia, a) in grid.iter().enumerate() {
        let mb = pi.contract_a(a)?;
        for (ib, b) in grid.iter().enumerate() {
            let value = mb.expectation(b, b)?.re;
            if value > grid_max {
                grid_max = value;
                arg = (ia, ib);
            }
        }
    }
    let refined = seesaw_run(pi, &grid[arg.0], &grid[arg.1], 1e-14, 500)?;
    Ok(GridOracle {
        grid_max,
        refined: pi.product_expectation(&refined.a, &refined.b)?,
    })
}

/// Seesaw on `Π ⊗ Π` regrouped as a `(dA², dB²)` bipartite operator.
pub fn two_copy_overlap(pi: &BipartiteOperator, config: &SeesawConfig) -> Result<OverlapResult> {
    let doubled = pi.matrix().kron(pi.matrix());
    let grouped = permute_to_copies_layout(&doubled, pi.dims(), 2)?;
    seesaw_max_overlap(&grouped, config)
}
