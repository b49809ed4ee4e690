//! Seeded inputs for the benchmarks.

use foldcheck_core::generate::{coloured_gluing, random_cyclic_order, random_involution};
use foldcheck_core::{find_orientation, CyclicOrder, Permutation, Surface};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Connected orientable coloured gluings with `faces` faces.
pub fn orientable_surfaces(seed: u64, faces: usize, count: usize) -> Vec<Surface> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let Some(s) = coloured_gluing(&mut rng, faces) else {
            continue;
        };
        if s.is_connected() && find_orientation(&s).is_ok_and(|o| o.orientation().is_some()) {
            out.push(s);
        }
    }
    out
}

/// Random `(σ, ρ)` pairs on `2n` points.
pub fn order_pairs(seed: u64, n: usize, count: usize) -> Vec<(CyclicOrder, Permutation)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (random_cyclic_order(&mut rng, 2 * n), random_involution(&mut rng, 2 * n)))
        .collect()
}
