//! Minimum weight ideal (MWI) problems.

use crate::error::{Error, Result};
use crate::ideal_lattice::IdealFamily;
use crate::poset::Poset;
use crate::subset::Subset;

/// Integer weight per ground-set element; negative values are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn new(weights: Vec<i64>) -> Self {
        WeightVector(weights)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn get(&self, v: usize) -> i64 {
        self.0[v]
    }

    /// `ω(S) = Σ_{v∈S} ω(v)`.
    pub fn weight(&self, s: Subset) -> i64 {
        s.iter().map(|v| self.0[v]).sum()
    }

    pub fn negated(&self) -> WeightVector {
        WeightVector(self.0.iter().map(|w| -w).collect())
    }
}

impl From<Vec<i64>> for WeightVector {
    fn from(w: Vec<i64>) -> Self {
        WeightVector(w)
    }
}

/// An optimal value with its canonical-order-least witness and the number of
/// ideals scanned to find it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MwiSolution {
    pub value: i64,
    pub witness: Subset,
    pub searched: usize,
}

fn check_sizes(p: &Poset, weights: &WeightVector, k: usize) -> Result<()> {
    if weights.len() != p.len() {
        return Err(Error::SizeMismatch {
            left: p.len(),
            right: weights.len(),
        });
    }
    if k > p.len() {
        return Err(Error::Cardinality { k, n: p.len() });
    }
    Ok(())
}

fn best_in(
    family: &IdealFamily,
    weights: &WeightVector,
    k: usize,
    better: impl Fn(i64, i64) -> bool,
) -> MwiSolution {
    let mut best: Option<(i64, Subset)> = None;
    // members are visited in canonical order, so the first optimum found wins ties
    for &s in family.members().iter().filter(|s| s.len() == k) {
        let w = weights.weight(s);
        if best.is_none_or(|(bw, _)| better(w, bw)) {
            best = Some((w, s));
        }
    }
    let (value, witness) =
        best.expect("every poset has an ideal of each size 0..=n (prefixes of a linear extension)");
    MwiSolution {
        value,
        witness,
        searched: family.len(),
    }
}

/// `min { ω(I) : I ∈ ℐ(p), |I| = k }` by scanning every ideal of `p`.
pub fn mwi_bruteforce(p: &Poset, weights: &WeightVector, k: usize) -> Result<MwiSolution> {
    check_sizes(p, weights, k)?;
    Ok(best_in(&p.enumerate_ideals(), weights, k, |a, b| a < b))
}

/// `max { ω(I) : I ∈ ℐ(p), |I| = k }` by scanning every ideal of `p`.
pub fn max_weight_ideal(p: &Poset, weights: &WeightVector, k: usize) -> Result<MwiSolution> {
    check_sizes(p, weights, k)?;
    Ok(best_in(&p.enumerate_ideals(), weights, k, |a, b| a > b))
}

/// Brute-force solutions for every `k = 0..=n` from one enumeration.
pub fn mwi_all_k(p: &Poset, weights: &WeightVector) -> Result<Vec<MwiSolution>> {
    check_sizes(p, weights, 0)?;
    let family = p.enumerate_ideals();
    Ok((0..=p.len())
        .map(|k| best_in(&family, weights, k, |a, b| a < b))
        .collect())
}

/// MWI over `ℐ(target)` only, the range of the superreduction from `base`
/// towards `target`. The optimal value equals the brute-force value over
/// `ℐ(base)` whenever `ω` is increasing on `target`.
pub fn mwi_reduced(
    base: &Poset,
    target: &Poset,
    weights: &WeightVector,
    k: usize,
) -> Result<MwiSolution> {
    check_reduction(base, target, weights)?;
    check_sizes(target, weights, k)?;
    Ok(best_in(&target.enumerate_ideals(), weights, k, |a, b| {
        a < b
    }))
}

/// [`mwi_reduced`] for every `k = 0..=n`.
pub fn mwi_reduced_all_k(
    base: &Poset,
    target: &Poset,
    weights: &WeightVector,
) -> Result<Vec<MwiSolution>> {
    check_reduction(base, target, weights)?;
    mwi_all_k(target, weights)
}

fn check_reduction(base: &Poset, target: &Poset, weights: &WeightVector) -> Result<()> {
    if !base.is_extended_by(target)? {
        return Err(Error::NotAnExtension);
    }
    check_sizes(target, weights, 0)?;
    match first_decrease(weights, target) {
        Some((u, v)) => Err(Error::NotIncreasing(u, v)),
        None => Ok(()),
    }
}

/// `C = max(0, -min ω)` and `ω⁺ = ω + C`.
pub fn shift_nonnegative(weights: &WeightVector) -> (WeightVector, i64) {
    let c = weights.0.iter().copied().min().map_or(0, |m| (-m).max(0));
    (WeightVector(weights.0.iter().map(|w| w + c).collect()), c)
}

/// `u ≤_q v ⇒ ω(u) ≤ ω(v)`.
pub fn check_increasing(weights: &WeightVector, q: &Poset) -> bool {
    first_decrease(weights, q).is_none()
}

fn first_decrease(weights: &WeightVector, q: &Poset) -> Option<(usize, usize)> {
    q.pairs().find(|&(u, v)| weights.get(u) > weights.get(v))
}

/// The discrete-order case: the `k` lightest elements (index breaks ties).
pub fn greedy_discrete(weights: &WeightVector, k: usize) -> Result<MwiSolution> {
    let n = weights.len();
    if k > n {
        return Err(Error::Cardinality { k, n });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (weights.get(v), v));
    let witness: Subset = order[..k].iter().copied().collect();
    Ok(MwiSolution {
        value: weights.weight(witness),
        witness,
        searched: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> WeightVector {
        WeightVector::new(v.to_vec())
    }

    #[test]
    fn bruteforce_examples() {
        let d3 = Poset::discrete(3).unwrap();
        let sol = mwi_bruteforce(&d3, &w(&[5, 1, 3]), 2).unwrap();
        assert_eq!((sol.value, sol.witness), (4, Subset::from_bits(0b110)));
        assert_eq!(sol.searched, 8);

        let z = mwi_bruteforce(&d3, &w(&[5, 1, 3]), 0).unwrap();
        assert_eq!((z.value, z.witness), (0, Subset::EMPTY));

        let c3 = Poset::chain(3).unwrap();
        let sol = mwi_bruteforce(&c3, &w(&[5, 1, 3]), 2).unwrap();
        assert_eq!((sol.value, sol.witness), (6, Subset::from_bits(0b011)));
    }

    #[test]
    fn bruteforce_tie_break_is_canonical() {
        let d3 = Poset::discrete(3).unwrap();
        let sol = mwi_bruteforce(&d3, &w(&[1, 1, 1]), 1).unwrap();
        assert_eq!(sol.witness, Subset::from_bits(0b001));
    }

    #[test]
    fn size_errors() {
        let d3 = Poset::discrete(3).unwrap();
        assert_eq!(
            mwi_bruteforce(&d3, &w(&[1, 2]), 1),
            Err(Error::SizeMismatch { left: 3, right: 2 })
        );
        assert_eq!(
            mwi_bruteforce(&d3, &w(&[1, 2, 3]), 4),
            Err(Error::Cardinality { k: 4, n: 3 })
        );
        assert_eq!(
            greedy_discrete(&w(&[1]), 2),
            Err(Error::Cardinality { k: 2, n: 1 })
        );
    }

    #[test]
    fn reduced_examples() {
        let d2 = Poset::discrete(2).unwrap();
        let c2 = Poset::chain(2).unwrap();
        let sol = mwi_reduced(&d2, &c2, &w(&[1, 2]), 1).unwrap();
        assert_eq!(
            (sol.value, sol.witness, sol.searched),
            (1, Subset::from_bits(1), 3)
        );
        assert_eq!(mwi_bruteforce(&d2, &w(&[1, 2]), 1).unwrap().value, 1);

        let v = Poset::new(3, &[(0, 2), (1, 2)]).unwrap();
        let weights = w(&[4, -1, 7]);
        for k in 0..=3 {
            assert_eq!(
                mwi_reduced(&v, &v, &weights, k).unwrap(),
                mwi_bruteforce(&v, &weights, k).unwrap()
            );
        }
    }

    #[test]
    fn reduced_errors() {
        let d2 = Poset::discrete(2).unwrap();
        let c2 = Poset::chain(2).unwrap();
        assert_eq!(
            mwi_reduced(&d2, &c2, &w(&[2, 1]), 1),
            Err(Error::NotIncreasing(0, 1))
        );
        assert_eq!(
            mwi_reduced(&c2, &d2, &w(&[1, 2]), 1),
            Err(Error::NotAnExtension)
        );
        assert!(matches!(
            mwi_reduced(&d2, &Poset::chain(3).unwrap(), &w(&[1, 2]), 1),
            Err(Error::SizeMismatch { .. })
        ));
        assert_eq!(
            mwi_reduced(&d2, &c2, &w(&[1, 2]), 3),
            Err(Error::Cardinality { k: 3, n: 2 })
        );
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift_nonnegative(&w(&[-2, 3])), (w(&[0, 5]), 2));
        assert_eq!(shift_nonnegative(&w(&[0, 3])), (w(&[0, 3]), 0));
        assert_eq!(shift_nonnegative(&w(&[])), (w(&[]), 0));
    }

    #[test]
    fn increasing_examples() {
        let c2 = Poset::chain(2).unwrap();
        assert!(check_increasing(&w(&[1, 2]), &c2));
        assert!(!check_increasing(&w(&[2, 1]), &c2));
        assert!(check_increasing(
            &w(&[9, -3, 0]),
            &Poset::discrete(3).unwrap()
        ));
    }

    #[test]
    fn greedy_examples() {
        let sol = greedy_discrete(&w(&[5, 1, 3]), 2).unwrap();
        assert_eq!((sol.value, sol.witness), (4, Subset::from_bits(0b110)));
        let all = greedy_discrete(&w(&[5, 1, 3]), 3).unwrap();
        assert_eq!((all.value, all.witness), (9, Subset::full(3)));
        let none = greedy_discrete(&w(&[5, 1, 3]), 0).unwrap();
        assert_eq!((none.value, none.witness), (0, Subset::EMPTY));
    }

    #[test]
    fn max_is_negated_min() {
        let v = Poset::new(3, &[(0, 2), (1, 2)]).unwrap();
        let weights = w(&[4, -1, 7]);
        for k in 0..=3 {
            let min = mwi_bruteforce(&v, &weights, k).unwrap().value;
            let max = max_weight_ideal(&v, &weights.negated(), k).unwrap().value;
            assert_eq!(min, -max);
        }
    }
}
