//! Dense complex linear algebra for operators of dimension up to 81.

mod bipartite;
mod eig;
mod matrix;

pub use bipartite::{permute_to_copies_layout, BipartiteOperator, LocalDims, StateVector};
pub use eig::{eig_hermitian, Spectrum, CONVERGENCE, MAX_SWEEPS};
pub use matrix::{inner, kron_vec, norm, normalize, ComplexMatrix};
