//! Seeded randomness. Every stochastic routine draws from a ChaCha8 stream
//! seeded with `ChaCha8Rng::seed_from_u64(seed)`, whose output is specified
//! independently of platform and word size.

use rand::{Rng, SeedableRng};
pub use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform draw in `[0, 1)`.
pub fn unit(rng: &mut ChaCha8Rng) -> f64 {
    rng.random::<f64>()
}

/// Inverse-CDF sample over `weights` in ascending index order. Returns `None`
/// when the weights sum to zero. Falls back to the last positive weight if
/// rounding leaves the draw above the accumulated total.
pub fn sample_index(rng: &mut ChaCha8Rng, weights: &[f64]) -> Option<usize> {
    let total: f64 = weights.iter().sum();
    if !(total > 0.0) {
        return None;
    }
    let target = unit(rng) * total;
    let mut acc = 0.0;
    for (i, &w) in weights.iter().enumerate() {
        acc += w;
        if target < acc && w > 0.0 {
            return Some(i);
        }
    }
    weights.iter().rposition(|&w| w > 0.0)
}
