//! Seeded random instances for property suites and `selftest`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::mwi::WeightVector;
use crate::poset::Poset;

pub type TestRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Natural order built from independent pairs `i < j` kept with probability
/// `density`, then closed.
pub fn random_natural_poset(rng: &mut impl Rng, n: usize, density: f64) -> Poset {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((i, j));
            }
        }
    }
    Poset::new(n, &pairs).expect("natural pairs are acyclic")
}

/// A random natural order relabelled by a uniform permutation.
pub fn random_poset(rng: &mut impl Rng, n: usize, density: f64) -> Poset {
    let natural = random_natural_poset(rng, n, density);
    let mut relabel: Vec<usize> = (0..n).collect();
    relabel.shuffle(rng);
    let pairs: Vec<_> = natural
        .pairs()
        .map(|(x, y)| (relabel[x], relabel[y]))
        .collect();
    Poset::new(n, &pairs).expect("relabelling preserves acyclicity")
}

/// Random poset with `n` and density themselves drawn at random.
pub fn random_poset_up_to(rng: &mut impl Rng, max_n: usize) -> Poset {
    let n = rng.gen_range(0..=max_n);
    let density = rng.gen_range(0.0..=0.7);
    random_poset(rng, n, density)
}

/// A suborder of `q`: each strict pair survives with probability `keep`,
/// then the survivors are closed (which stays inside `q`).
pub fn random_suborder(rng: &mut impl Rng, q: &Poset, keep: f64) -> Poset {
    let pairs: Vec<_> = q.pairs().filter(|_| rng.gen_bool(keep)).collect();
    Poset::new(q.len(), &pairs).expect("subrelation of a partial order is acyclic")
}

/// Weights in `lo..=hi` with no structure.
pub fn random_weights(rng: &mut impl Rng, n: usize, lo: i64, hi: i64) -> WeightVector {
    WeightVector::new((0..n).map(|_| rng.gen_range(lo..=hi)).collect())
}

/// Weights increasing on `q` (`u ≤_q v ⇒ ω(u) ≤ ω(v)`), possibly negative.
pub fn random_increasing_weights(rng: &mut impl Rng, q: &Poset) -> WeightVector {
    let tau = q.default_linear_extension();
    let mut w = vec![0i64; q.len()];
    for x in tau.order() {
        let floor = q.below(x).iter().map(|u| w[u]).max();
        let fresh = rng.gen_range(-6..=6);
        w[x] = match floor {
            Some(f) => f.max(fresh) + rng.gen_range(0..=2),
            None => fresh,
        };
    }
    WeightVector::new(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mwi::check_increasing;

    #[test]
    fn generators_respect_their_contracts() {
        let mut rng = seeded(7);
        for _ in 0..50 {
            let q = random_poset_up_to(&mut rng, 7);
            let p = random_suborder(&mut rng, &q, 0.5);
            assert!(p.is_extended_by(&q).unwrap());
            let w = random_increasing_weights(&mut rng, &q);
            assert!(check_increasing(&w, &q));
        }
    }

    #[test]
    fn same_seed_same_instances() {
        let a = random_poset(&mut seeded(3), 6, 0.4);
        let b = random_poset(&mut seeded(3), 6, 0.4);
        assert_eq!(a, b);
    }
}
