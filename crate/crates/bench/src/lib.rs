//! Deterministic workloads for the criterion benchmarks in `benches/`.

use lefschetz_core::constructions::{catalog_entry, fiber_sum_trivial_bundle, pullback_cover};
use lefschetz_core::{FibrationDescription, IntegerMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntegerMatrix {
    let data: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
    IntegerMatrix::from_rows(&data).expect("rectangular")
}

/// A connected multigraph with loops: a random spanning tree plus extra edges.
pub fn random_multigraph(rng: &mut impl Rng, vertices: usize, extra: usize) -> Vec<(usize, usize)> {
    let mut edges: Vec<_> = (1..vertices).map(|v| (rng.gen_range(0..v), v)).collect();
    edges.extend((0..extra).map(|_| (rng.gen_range(0..vertices), rng.gen_range(0..vertices))));
    edges
}

/// ELLIPTIC_12 summed once with a torus bundle and pulled back along a
/// degree-`d` cover: `12 d` singular fibers over a genus-1 base.
pub fn large_fibration(d: u64) -> FibrationDescription {
    let elliptic = catalog_entry("ELLIPTIC_12").expect("catalog entry").fibration;
    let summed = fiber_sum_trivial_bundle(&elliptic, 1).expect("positive extra genus");
    pullback_cover(&summed, d).expect("positive-genus base")
}
