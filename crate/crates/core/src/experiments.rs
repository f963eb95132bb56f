//! Parameter sweeps along `σ(p)` and the power-law fit of the witness eigenvalue.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::measures::{distillability_witness, log_negativity_from_negativity, negativity};
use crate::model::{qubit_block_projector, sigma};
use crate::perturbation::k_perturbative;

/// One point of a sweep over `p`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRecord {
    pub p: f64,
    /// Smallest eigenvalue of `(P σ(p) P†)^{T_A}`.
    pub witness_n: f64,
    pub negativity: f64,
    pub log_negativity: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRange {
    pub p_min: f64,
    pub p_max: f64,
    pub steps: usize,
    pub log_spacing: bool,
}

impl SweepRange {
    pub fn linear(p_min: f64, p_max: f64, steps: usize) -> Self {
        Self {
            p_min,
            p_max,
            steps,
            log_spacing: false,
        }
    }

    pub fn logarithmic(p_min: f64, p_max: f64, steps: usize) -> Self {
        Self {
            p_min,
            p_max,
            steps,
            log_spacing: true,
        }
    }

    /// Grid points in increasing order; endpoints are exact. A range with
    /// `p_min == p_max` is the single point `p_min`.
    pub fn points(&self) -> Result<Vec<f64>> {
        let Self {
            p_min,
            p_max,
            steps,
            log_spacing,
        } = *self;
        if !(p_min.is_finite() && p_max.is_finite()) || p_min < 0.0 || p_max > 1.0 {
            return Err(Error::InvalidRange("p must lie in [0, 1]"));
        }
        if p_min > p_max {
            return Err(Error::InvalidRange("p_min exceeds p_max"));
        }
        if p_min == p_max {
            return Ok(alloc::vec![p_min]);
        }
        if steps < 2 {
            return Err(Error::InvalidRange("at least 2 steps required"));
        }
        if log_spacing && p_min <= 0.0 {
            return Err(Error::InvalidRange("log spacing needs p_min > 0"));
        }
        let last = (steps - 1) as f64;
        Ok((0..steps)
            .map(|i| {
                if i == steps - 1 {
                    return p_max;
                }
                let t = i as f64 / last;
                if log_spacing {
                    let (lo, hi) = (libm::log(p_min), libm::log(p_max));
                    libm::exp(lo + t * (hi - lo))
                } else {
                    p_min + t * (p_max - p_min)
                }
            })
            .collect())
    }
}

pub fn sweep_point(p: f64, witness_tol: f64) -> Result<SweepRecord> {
    let state = sigma(p)?;
    let witness = distillability_witness(&state, &qubit_block_projector(), witness_tol)?;
    let n = negativity(&state)?;
    Ok(SweepRecord {
        p,
        witness_n: witness.min_eigenvalue,
        negativity: n,
        log_negativity: log_negativity_from_negativity(n),
    })
}

pub fn sweep(range: &SweepRange, witness_tol: f64) -> Result<Vec<SweepRecord>> {
    range
        .points()?
        .into_iter()
        .map(|p| sweep_point(p, witness_tol))
        .collect()
}

/// Power-law fit `|n(p)| ≈ k·p^e` together with the perturbative `k`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadraticFit {
    pub k_fit: f64,
    pub exponent_fit: f64,
    pub k_perturbative: f64,
    pub fit_window: (f64, f64),
    pub points_used: usize,
}

/// Least-squares line through `(ln p, ln |n|)` for records with `p` in the
/// closed window and a negative witness eigenvalue. `k_fit` is `exp` of the
/// intercept.
pub fn fit_quadratic_law(records: &[SweepRecord], window: (f64, f64)) -> Result<QuadraticFit> {
    let (xs, ys): (Vec<f64>, Vec<f64>) = records
        .iter()
        .filter(|r| r.p >= window.0 && r.p <= window.1 && r.p > 0.0 && r.witness_n < 0.0)
        .map(|r| (libm::log(r.p), libm::log(-r.witness_n)))
        .unzip();
    if xs.len() < 5 {
        return Err(Error::InsufficientRecords(xs.len()));
    }
    let count = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / count;
    let mean_y = ys.iter().sum::<f64>() / count;
    let sxx: f64 = xs.iter().map(|x| (x - mean_x) * (x - mean_x)).sum();
    let sxy: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - mean_x) * (y - mean_y))
        .sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    Ok(QuadraticFit {
        k_fit: libm::exp(intercept),
        exponent_fit: slope,
        k_perturbative: k_perturbative()?,
        fit_window: window,
        points_used: xs.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_point_range() {
        let r = sweep(&SweepRange::linear(0.0, 0.0, 1), 1e-10).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0].witness_n.abs() <= 1e-11);
        assert!(r[0].log_negativity.abs() <= 1e-12);
    }

    #[test]
    fn bad_ranges() {
        assert!(SweepRange::linear(0.5, 0.1, 10).points().is_err());
        assert!(SweepRange::linear(0.0, 1.5, 10).points().is_err());
        assert!(SweepRange::linear(0.0, 0.5, 1).points().is_err());
        assert!(SweepRange::logarithmic(0.0, 0.5, 10).points().is_err());
    }

    #[test]
    fn grid_endpoints_exact() {
        let pts = SweepRange::logarithmic(1e-4, 1e-3, 7).points().unwrap();
        assert_eq!(pts.len(), 7);
        assert_eq!(pts[6], 1e-3);
        assert!((pts[0] - 1e-4).abs() < 1e-19);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn fit_needs_five_points() {
        let recs = sweep(&SweepRange::linear(0.01, 0.02, 4), 1e-10).unwrap();
        assert_eq!(
            fit_quadratic_law(&recs, (0.0, 1.0)),
            Err(Error::InsufficientRecords(4))
        );
    }

    #[test]
    fn fit_recovers_exact_power_law() {
        let recs: Vec<SweepRecord> = (1..=8)
            .map(|i| {
                let p = 0.001 * i as f64;
                SweepRecord {
                    p,
                    witness_n: -1.5 * p * p,
                    negativity: 0.0,
                    log_negativity: 0.0,
                }
            })
            .collect();
        let fit = fit_quadratic_law(&recs, (0.0, 1.0)).unwrap();
        assert!((fit.exponent_fit - 2.0).abs() < 1e-12);
        assert!((fit.k_fit - 1.5).abs() < 1e-10);
        assert_eq!(fit.points_used, 8);
    }
}
