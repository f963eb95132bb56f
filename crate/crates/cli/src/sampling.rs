use ebitgap_core::linalg::ComplexMatrix;
use ebitgap_core::C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` hermitian matrices with entries uniform in the unit square,
/// reproducible from `seed`.
pub fn random_hermitian_batch(seed: u64, count: usize, dim: usize) -> Vec<ComplexMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let m = ComplexMatrix::from_fn(dim, |_, _| {
                C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
            });
            (&m + &m.adjoint()).scale(0.5)
        })
        .collect()
}
