//! Bounds on distillable entanglement and entanglement cost for the family
//! `σ(p) = (1 − p)·ρ_b + p·|ψ⟩⟨ψ|` on `C³ ⊗ C³`, where `ρ_b` is the bound
//! entangled state built from the complement of a five-member unextendible
//! product basis and `ψ` is an entangled pure state inside that complement.
//!
//! * [`linalg`]: dense complex matrices, partial transposition, subsystem
//!   regrouping and a Jacobi hermitian eigensolver.
//! * [`model`]: the product basis, `Π_b`, `ρ_b`, `ψ`, `Φ`, `τ`, `P` and `σ(p)`.
//! * [`measures`]: negativity, logarithmic negativity, PPT test, the
//!   projected distillability witness, Schmidt data, `−log₂ α`.
//! * [`overlap`]: seesaw maximization of product overlaps with a projector.
//! * [`perturbation`] and [`experiments`]: the quadratic onset of the
//!   witness eigenvalue and sweeps along `p`.
//!
//! The crate is `no_std` and needs only `alloc`.
#![no_std]

extern crate alloc;

mod error;
pub mod experiments;
pub mod linalg;
pub mod measures;
pub mod model;
pub mod overlap;
pub mod perturbation;
pub mod tol;

pub use error::{Error, Result};

pub type C64 = num_complex::Complex<f64>;
