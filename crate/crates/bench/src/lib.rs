//! Shared inputs for the criterion benches.

use stoplat::{gen, Poset};

/// The `k × k` grid `chain_k × chain_k`.
pub fn grid(k: usize) -> Poset {
    let c = Poset::chain(k).expect("k <= 64");
    c.product(&c).expect("k*k <= 64")
}

/// Deterministic random targets of size `n`.
pub fn targets(n: usize, count: usize, seed: u64) -> Vec<Poset> {
    let mut rng = gen::seeded(seed);
    (0..count)
        .map(|_| gen::random_poset(&mut rng, n, 0.35))
        .collect()
}
