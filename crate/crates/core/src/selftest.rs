//! Built-in verification suites behind `stoplat selftest`.
//!
//! Each criterion runs a population of instances through the library and
//! reports one [`Outcome`]. The StOp axiom validators used by the
//! axiom suite are injectable through [`Checks`] so that a broken validator
//! shows up as a named failure.

use std::time::Instant;

use rand::Rng;

use crate::gen::{self, TestRng};
use crate::ideal_lattice::check_theorem2;
use crate::mwi::{self, WeightVector};
use crate::npo::{self, PUBLISHED_COUNTS};
use crate::poset::{Poset, TotalExtension};
use crate::reductions::{superreduction, verify_theorem5, ReductionSpec};
use crate::stop::{BoundaryFunctional, StOpMap};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// Property suites at `n ≤ 4`; a few seconds.
    Quick,
    /// Every acceptance population, including `NPO(7)`.
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

/// Axiom validators used by the axiom suite.
#[derive(Clone, Copy)]
pub struct Checks {
    pub axiom1: fn(&StOpMap) -> bool,
    pub axiom2: fn(&StOpMap, &BoundaryFunctional) -> Result<bool>,
    pub axiom3: fn(&StOpMap) -> bool,
    pub axiom4: fn(&StOpMap, &TotalExtension) -> Result<bool>,
}

impl Default for Checks {
    fn default() -> Self {
        Checks {
            axiom1: StOpMap::check_axiom1,
            axiom2: StOpMap::check_axiom2,
            axiom3: StOpMap::check_axiom3,
            axiom4: StOpMap::check_axiom4,
        }
    }
}

/// Reference values of `BPS(n)/|NPO(n)|` for `n = 1..=12`, as published.
pub const REFERENCE_RATIOS: [f64; 12] = [
    15.179, 25.528, 26.02, 20.422, 13.605, 8.1281, 4.5132, 2.3895, 1.2298, 0.62470, 0.31703,
    0.16236,
];

struct Params {
    npo_count_max: usize,
    npo_exhaustive: usize,
    random_targets: usize,
    random_max_n: usize,
    birkhoff_exhaustive: usize,
    birkhoff_random: usize,
    duality_n: usize,
    mwi_instances: usize,
    greedy_vectors: usize,
    greedy_max_n: usize,
    structure_max_n: usize,
    chain_max: usize,
    discrete_max: usize,
    union_pairs: usize,
}

impl Params {
    fn for_scope(scope: Scope) -> Self {
        match scope {
            Scope::Quick => Params {
                npo_count_max: 5,
                npo_exhaustive: 3,
                random_targets: 20,
                random_max_n: 4,
                birkhoff_exhaustive: 4,
                birkhoff_random: 50,
                duality_n: 3,
                mwi_instances: 50,
                greedy_vectors: 50,
                greedy_max_n: 8,
                structure_max_n: 4,
                chain_max: 10,
                discrete_max: 10,
                union_pairs: 20,
            },
            Scope::Full => Params {
                npo_count_max: 7,
                npo_exhaustive: 4,
                random_targets: 200,
                random_max_n: 7,
                birkhoff_exhaustive: 5,
                birkhoff_random: 500,
                duality_n: 4,
                mwi_instances: 500,
                greedy_vectors: 200,
                greedy_max_n: 12,
                structure_max_n: 5,
                chain_max: 20,
                discrete_max: 16,
                union_pairs: 100,
            },
        }
    }
}

pub fn run(scope: Scope, seed: u64) -> Vec<Outcome> {
    run_with(scope, seed, &Checks::default())
}

pub fn run_with(scope: Scope, seed: u64, checks: &Checks) -> Vec<Outcome> {
    let params = Params::for_scope(scope);
    let targets = stop_targets(&params, seed);
    let suites: Vec<(&'static str, SuiteFn<'_>)> = vec![
        ("npo_counts", Box::new(|| npo_counts(&params))),
        ("bps_table", Box::new(bps_table)),
        ("range_closure", Box::new(|| range_closure(&targets))),
        ("order_recovery", Box::new(|| order_recovery(&targets))),
        (
            "reduction_axioms",
            Box::new(|| reduction_axioms(&params, checks)),
        ),
        ("image_fixpoints", Box::new(|| fixpoints(&targets))),
        ("birkhoff_roundtrip", Box::new(|| birkhoff(&params, seed))),
        ("inclusion_duality", Box::new(|| inclusion_duality(&params))),
        ("mwi_oracles", Box::new(|| mwi_oracles(&params, seed))),
        ("npo_structure", Box::new(|| npo_structure(&params))),
        ("ideal_counts", Box::new(|| ideal_counts(&params, seed))),
    ];
    suites
        .into_iter()
        .map(|(name, f)| {
            let start = Instant::now();
            let (passed, detail) = match f() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            Outcome {
                name,
                passed,
                detail,
                millis: start.elapsed().as_millis(),
            }
        })
        .collect()
}

type Suite = Result<String, String>;
type SuiteFn<'a> = Box<dyn Fn() -> Suite + 'a>;

fn lib<T>(r: Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn rng(seed: u64, salt: u64) -> TestRng {
    gen::seeded(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn stop_targets(params: &Params, seed: u64) -> Vec<Poset> {
    let mut out = npo::collect_npo(params.npo_exhaustive).unwrap_or_default();
    let mut r = rng(seed, 1);
    out.extend(
        (0..params.random_targets).map(|_| gen::random_poset_up_to(&mut r, params.random_max_n)),
    );
    out
}

fn npo_counts(params: &Params) -> Suite {
    let mut last = String::new();
    for (n, &want) in PUBLISHED_COUNTS
        .iter()
        .enumerate()
        .take(params.npo_count_max + 1)
    {
        let c = lib(npo::count_npo(n, params.npo_count_max))?;
        if c != want {
            return Err(format!("npo{n}={c}, expected {want}"));
        }
        last = format!("npo{n}={c}");
    }
    Ok(last)
}

fn bps_table() -> Suite {
    let rows = lib(npo::bps_ratio_table(12, 6))?;
    let mut worst = 0.0f64;
    for row in &rows[1..] {
        let reference = REFERENCE_RATIOS[row.n - 1];
        let rel = (row.ratio - reference).abs() / reference;
        worst = worst.max(rel);
        if rel > 1e-3 {
            return Err(format!("n={} ratio {:.5} vs {reference}", row.n, row.ratio));
        }
    }
    Ok(format!("max relative deviation {worst:.2e}"))
}

fn superreduce_discrete(q: &Poset) -> Result<StOpMap> {
    let base = Poset::discrete(q.len())?;
    superreduction(&base, q, &q.default_linear_extension())
}

fn range_closure(targets: &[Poset]) -> Suite {
    for q in targets {
        let phi = lib(superreduce_discrete(q))?;
        if !phi.is_idempotent() {
            return Err(format!("superreduction to {:?} not idempotent", q.hasse()));
        }
        let range = lib(phi.range_of())?;
        if !range.is_union_intersection_closed() {
            return Err(format!("range for {:?} not closed", q.hasse()));
        }
        let order = lib(phi.stop_order())?;
        if order.enumerate_ideals() != range {
            return Err(format!(
                "ideals of StOp-order differ from range for {:?}",
                q.hasse()
            ));
        }
    }
    Ok(format!("{} targets", targets.len()))
}

fn order_recovery(targets: &[Poset]) -> Suite {
    for q in targets {
        if !lib(verify_theorem5(q))? {
            return Err(format!("StOp-order differs from target {:?}", q.hasse()));
        }
    }
    Ok(format!("{} targets", targets.len()))
}

fn reduction_axioms(params: &Params, checks: &Checks) -> Suite {
    let mut count = 0;
    for q in lib(npo::collect_npo(params.npo_exhaustive))? {
        let n = q.len();
        let base = lib(Poset::discrete(n))?;
        let tau = q.default_linear_extension();
        let weights =
            BoundaryFunctional::AdditiveWeight((0..n).map(|x| tau.value(x) as i64).collect());
        for a in 0..n {
            let phi = lib(ReductionSpec::new(&base, &q, &tau, a).and_then(|s| s.build_stop()))?;
            let fail =
                |axiom: &str| format!("{axiom} fails for target {:?}, anchor {a}", q.hasse());
            if !(checks.axiom1)(&phi) {
                return Err(fail("axiom 1"));
            }
            if !lib((checks.axiom2)(&phi, &weights))? {
                return Err(fail("axiom 2"));
            }
            if !(checks.axiom3)(&phi) {
                return Err(fail("axiom 3"));
            }
            if !lib((checks.axiom4)(&phi, &tau))? {
                return Err(fail("axiom 4"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} reductions"))
}

fn fixpoints(targets: &[Poset]) -> Suite {
    for q in targets {
        let phi = lib(superreduce_discrete(q))?;
        if phi.fixpoints() != phi.image() {
            return Err(format!("image differs from fixpoints for {:?}", q.hasse()));
        }
    }
    Ok(format!("{} idempotent maps", targets.len()))
}

fn birkhoff(params: &Params, seed: u64) -> Suite {
    let mut r = rng(seed, 2);
    let mut posets = lib(npo::collect_npo(params.birkhoff_exhaustive))?;
    posets.extend((0..params.birkhoff_random).map(|_| gen::random_poset_up_to(&mut r, 7)));
    for p in &posets {
        let family = p.enumerate_ideals();
        if lib(family.recover_order())? != *p || !lib(family.verify_birkhoff())? {
            return Err(format!("round trip fails for {:?}", p.hasse()));
        }
    }
    Ok(format!("{} posets", posets.len()))
}

fn inclusion_duality(params: &Params) -> Suite {
    let all = lib(npo::collect_npo(params.duality_n))?;
    for p in &all {
        for q in &all {
            if !lib(check_theorem2(p, q))? {
                return Err(format!("fails for {:?} vs {:?}", p.hasse(), q.hasse()));
            }
        }
    }
    Ok(format!("{} pairs", all.len() * all.len()))
}

fn mwi_oracles(params: &Params, seed: u64) -> Suite {
    let mut r = rng(seed, 3);
    for _ in 0..params.mwi_instances {
        let target = gen::random_poset_up_to(&mut r, 7);
        let base = gen::random_suborder(&mut r, &target, 0.4);
        let w = gen::random_increasing_weights(&mut r, &target);
        let brute = lib(mwi::mwi_all_k(&base, &w))?;
        let reduced = lib(mwi::mwi_reduced_all_k(&base, &target, &w))?;
        let (shifted, c) = mwi::shift_nonnegative(&w);
        let brute_shifted = lib(mwi::mwi_all_k(&base, &shifted))?;
        for k in 0..=base.len() {
            if brute[k].value != reduced[k].value {
                return Err(format!(
                    "k={k}: reduced {} vs brute {}",
                    reduced[k].value, brute[k].value
                ));
            }
            if brute_shifted[k].value != brute[k].value + k as i64 * c {
                return Err(format!("shift identity fails at k={k}"));
            }
        }
    }
    for _ in 0..params.greedy_vectors {
        let n = r.gen_range(0..=params.greedy_max_n);
        let w: WeightVector = gen::random_weights(&mut r, n, -20, 20);
        let d = lib(Poset::discrete(n))?;
        let brute = lib(mwi::mwi_all_k(&d, &w))?;
        for (k, b) in brute.iter().enumerate() {
            if lib(mwi::greedy_discrete(&w, k))?.value != b.value {
                return Err(format!("greedy differs at n={n}, k={k}"));
            }
        }
    }
    Ok(format!(
        "{} reduced instances, {} greedy vectors",
        params.mwi_instances, params.greedy_vectors
    ))
}

fn npo_structure(params: &Params) -> Suite {
    for n in 2..=params.structure_max_n {
        if !lib(npo::check_jordan_dedekind(n))? {
            return Err(format!("Jordan-Dedekind fails at n={n}"));
        }
        if !lib(npo::check_semimodular(n))? {
            return Err(format!("lower semimodularity fails at n={n}"));
        }
    }
    Ok(format!("n=2..{}", params.structure_max_n))
}

fn ideal_counts(params: &Params, seed: u64) -> Suite {
    for n in 0..=params.chain_max {
        if lib(Poset::chain(n))?.count_ideals() != n as u64 + 1 {
            return Err(format!("|I(chain_{n})| != {}", n + 1));
        }
    }
    for n in 0..=params.discrete_max {
        if lib(Poset::discrete(n))?.count_ideals() != 1u64 << n {
            return Err(format!("|I(discrete_{n})| != 2^{n}"));
        }
    }
    let mut r = rng(seed, 4);
    for _ in 0..params.union_pairs {
        let p = gen::random_poset_up_to(&mut r, 5);
        let q = gen::random_poset_up_to(&mut r, 5);
        let u = lib(p.disjoint_union(&q))?;
        if u.count_ideals() != p.count_ideals() * q.count_ideals() {
            return Err(format!(
                "disjoint union count fails for {:?} + {:?}",
                p.hasse(),
                q.hasse()
            ));
        }
    }
    Ok(format!("{} disjoint unions", params.union_pairs))
}
