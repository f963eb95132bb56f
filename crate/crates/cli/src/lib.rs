//! Experiments, figure data and the reproduction report built on
//! [`ebitgap_core`], plus the file formats the `ebitgap` binary writes.

pub mod checks;
pub mod figure;
pub mod format;
pub mod report;
pub mod sampling;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] ebitgap_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Process exit code: 2 for invalid arguments, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        use ebitgap_core::Error as E;
        match self {
            CliError::Core(
                E::InvalidRange(_)
                | E::ResolutionTooSmall(_)
                | E::NoRestarts
                | E::UnsupportedCopies(_)
                | E::ParameterOutOfRange(_),
            ) => 2,
            _ => 1,
        }
    }
}

/// Flags shared by every subcommand.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Settings {
    pub seed: u64,
    /// Seesaw convergence tolerance.
    pub tol_eig: f64,
    pub witness_tol: f64,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            seed: 42,
            tol_eig: 1e-12,
            witness_tol: ebitgap_core::tol::WITNESS,
        }
    }
}
