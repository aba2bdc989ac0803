//! Seeded inputs shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mrc_core::experiment::{sample_points_on_surface, sample_surface, PointSet};
use mrc_core::{PrimeField, PrimeFieldMatrix, DEFAULT_PRIME};

pub fn field() -> PrimeField {
    PrimeField::new(DEFAULT_PRIME).expect("prime")
}

/// Uniform `rows x cols` matrix over the default field.
pub fn random_matrix(rows: usize, cols: usize, seed: u64) -> PrimeFieldMatrix {
    let f = field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data = (0..rows * cols)
        .map(|_| rng.gen_range(0..f.modulus()))
        .collect();
    PrimeFieldMatrix::from_data(f, rows, cols, data).expect("dimensions agree")
}

/// `n` random points on a random quartic.
pub fn points_on_quartic(n: usize, seed: u64) -> PointSet {
    let f = field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let surface = sample_surface(f, &mut rng);
    sample_points_on_surface(&surface, n, f, &mut rng).expect("enough points")
}
