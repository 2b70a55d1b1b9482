mod common;

use stoplat::mwi::{
    greedy_discrete, max_weight_ideal, mwi_all_k, mwi_bruteforce, mwi_reduced, shift_nonnegative,
};
use stoplat::{gen, Poset};

#[test]
fn reduced_equals_bruteforce_on_random_instances() {
    let mut rng = gen::seeded(20);
    for _ in 0..500 {
        let target = gen::random_poset_up_to(&mut rng, 7);
        let base = gen::random_suborder(&mut rng, &target, 0.4);
        let w = gen::random_increasing_weights(&mut rng, &target);
        let lt = common::closure(base.len(), &base.pairs().collect::<Vec<_>>());
        for k in 0..=base.len() {
            let oracle = common::min_weight_ideal(base.len(), &lt, w.as_slice(), k);
            let brute = mwi_bruteforce(&base, &w, k).unwrap();
            let reduced = mwi_reduced(&base, &target, &w, k).unwrap();
            assert_eq!(brute.value, oracle);
            assert_eq!(reduced.value, oracle);
            assert!(target.is_ideal(reduced.witness));
            assert_eq!(w.weight(reduced.witness), reduced.value);
            assert!(reduced.searched <= brute.searched);
            assert_eq!(reduced.searched == brute.searched, base == target);
        }
    }
}

#[test]
fn shift_adds_k_times_c() {
    let mut rng = gen::seeded(21);
    for _ in 0..200 {
        let p = gen::random_poset_up_to(&mut rng, 7);
        let w = gen::random_weights(&mut rng, p.len(), -10, 10);
        let (plus, c) = shift_nonnegative(&w);
        assert!(plus.as_slice().iter().all(|&x| x >= 0));
        let a = mwi_all_k(&p, &w).unwrap();
        let b = mwi_all_k(&p, &plus).unwrap();
        for k in 0..=p.len() {
            assert_eq!(b[k].value, a[k].value + k as i64 * c);
        }
    }
}

#[test]
fn min_is_negated_max_of_negated_weights() {
    let mut rng = gen::seeded(22);
    for _ in 0..200 {
        let p = gen::random_poset_up_to(&mut rng, 7);
        let w = gen::random_weights(&mut rng, p.len(), -10, 10);
        for k in 0..=p.len() {
            let min = mwi_bruteforce(&p, &w, k).unwrap().value;
            let max = max_weight_ideal(&p, &w.negated(), k).unwrap().value;
            assert_eq!(min, -max);
        }
    }
}

#[test]
fn greedy_matches_bruteforce_on_discrete_orders() {
    let mut rng = gen::seeded(23);
    for i in 0..200 {
        let n = i % 13;
        let w = gen::random_weights(&mut rng, n, -20, 20);
        let all = mwi_all_k(&Poset::discrete(n).unwrap(), &w).unwrap();
        for (k, b) in all.iter().enumerate() {
            let g = greedy_discrete(&w, k).unwrap();
            assert_eq!(g.value, b.value, "n={n} k={k}");
            assert_eq!(g.witness.len(), k);
        }
    }
}
