//! Seeded pseudorandom choices shared by the probabilistic tests.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::Scalar;

pub const DEFAULT_SEED: u64 = 0x5eed_0f_f0e5;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Point with coordinates drawn uniformly from `[0, 2^64)`.
pub fn random_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| Scalar::from_integer(BigInt::from(rng.gen::<u64>()))).collect()
}

/// Point with small integer coordinates in `[-bound, bound]`.
pub fn small_point(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vec<Scalar> {
    (0..n).map(|_| Scalar::from_integer(BigInt::from(rng.gen_range(-bound..=bound)))).collect()
}
