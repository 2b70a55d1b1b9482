//! Natural partial orders: suborders of the chain `0 < 1 < … < n-1`.
//!
//! `NPO(n)` ordered by inclusion is dual to the lattice `NDL(n)` of
//! sublattices of `2^n` containing `ℐ(chain)`, so every `NDL` statement is
//! checked here on the `NPO` side.
//!
//! Enumeration adds elements in index order. Element `j` is the largest so
//! far, so its predecessor set may be any ideal of the poset already built on
//! `{0, …, j-1}`, and every such choice keeps the relation closed. Each
//! natural order therefore arises exactly once, and
//! `|NPO(n)| = Σ_{P ∈ NPO(n-1)} |ℐ(P)|`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poset::{close, Poset};
use crate::subset::Subset;

/// Largest `n` accepted by [`count_npo`] unless the caller raises it.
pub const COUNT_LIMIT: usize = 10;
/// Largest `n` accepted by [`collect_npo`].
pub const COLLECT_LIMIT: usize = 6;
/// Largest `n` for the exhaustive lattice-structure checks.
pub const STRUCTURE_LIMIT: usize = 5;
/// Largest `n` in the asymptotic comparison table.
pub const TABLE_LIMIT: usize = 12;

/// `|NPO(n)|` for `n = 0..=12` (OEIS A006455). Values past what the
/// enumerator computes in reasonable time are only ever used as labelled
/// published inputs to [`bps_ratio_table`].
pub const PUBLISHED_COUNTS: [u64; 13] = [
    1,
    1,
    2,
    7,
    40,
    357,
    4824,
    96428,
    2800472,
    116473461,
    6855780268,
    565505147444,
    64824245807684,
];

/// Streams `NPO(n)` in depth-first order of predecessor-set choices.
#[derive(Debug, Clone)]
pub struct NpoIterator {
    n: usize,
    down: Vec<Subset>,
    stack: Vec<Frame>,
    emitted_empty: bool,
}

#[derive(Debug, Clone)]
struct Frame {
    choices: Vec<Subset>,
    next: usize,
}

impl NpoIterator {
    pub fn new(n: usize) -> Result<Self> {
        if n > crate::MAX_ELEMENTS {
            return Err(Error::TooLarge(n));
        }
        let stack = if n == 0 {
            Vec::new()
        } else {
            vec![Frame {
                choices: vec![Subset::EMPTY],
                next: 0,
            }]
        };
        Ok(NpoIterator {
            n,
            down: vec![Subset::EMPTY; n],
            stack,
            emitted_empty: false,
        })
    }
}

impl Iterator for NpoIterator {
    type Item = Poset;

    fn next(&mut self) -> Option<Poset> {
        if self.n == 0 {
            if self.emitted_empty {
                return None;
            }
            self.emitted_empty = true;
            return Some(Poset::from_closed_down(Vec::new()));
        }
        loop {
            let j = self.stack.len().checked_sub(1)?;
            let frame = self.stack.last_mut()?;
            if frame.next == frame.choices.len() {
                self.stack.pop();
                continue;
            }
            self.down[j] = frame.choices[frame.next];
            frame.next += 1;
            if j + 1 == self.n {
                return Some(Poset::from_closed_down(self.down.clone()));
            }
            let choices = prefix_ideals(&self.down[..=j]);
            self.stack.push(Frame { choices, next: 0 });
        }
    }
}

/// Ideals of the natural poset on `{0, …, m-1}` given by closed down-sets.
fn prefix_ideals(down: &[Subset]) -> Vec<Subset> {
    fn rec(down: &[Subset], i: usize, cur: Subset, out: &mut Vec<Subset>) {
        if i == down.len() {
            out.push(cur);
            return;
        }
        rec(down, i + 1, cur, out);
        if down[i].is_subset(cur) {
            rec(down, i + 1, cur.with(i), out);
        }
    }
    let mut out = Vec::new();
    rec(down, 0, Subset::EMPTY, &mut out);
    out.sort_unstable();
    out
}

fn count_prefix_ideals(down: &[Subset], i: usize, cur: Subset) -> u64 {
    if i == down.len() {
        return 1;
    }
    let mut total = count_prefix_ideals(down, i + 1, cur);
    if down[i].is_subset(cur) {
        total += count_prefix_ideals(down, i + 1, cur.with(i));
    }
    total
}

// Levels below this depth fan out across the rayon pool.
const PARALLEL_DEPTH: usize = 3;

fn count_rec(down: &mut Vec<Subset>, n: usize) -> u64 {
    let j = down.len();
    if j + 1 == n {
        return count_prefix_ideals(down, 0, Subset::EMPTY);
    }
    let choices = prefix_ideals(down);
    if j < PARALLEL_DEPTH {
        choices
            .par_iter()
            .map(|&d| {
                let mut local = down.clone();
                local.push(d);
                count_rec(&mut local, n)
            })
            .sum()
    } else {
        let mut total = 0;
        for d in choices {
            down.push(d);
            total += count_rec(down, n);
            down.pop();
        }
        total
    }
}

/// `|NPO(n)|`, enumerated (not looked up). `limit` caps `n`.
pub fn count_npo(n: usize, limit: usize) -> Result<u64> {
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "n",
            value: n,
            limit,
        });
    }
    if n == 0 {
        return Ok(1);
    }
    Ok(count_rec(&mut Vec::with_capacity(n), n))
}

/// All of `NPO(n)` in stream order; `n` is capped at [`COLLECT_LIMIT`].
pub fn collect_npo(n: usize) -> Result<Vec<Poset>> {
    collect_npo_with_limit(n, COLLECT_LIMIT)
}

pub fn collect_npo_with_limit(n: usize, limit: usize) -> Result<Vec<Poset>> {
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "n",
            value: n,
            limit,
        });
    }
    Ok(NpoIterator::new(n)?.collect())
}

/// `x <_P y ⇒ x < y` as integers.
pub fn is_natural(p: &Poset) -> bool {
    p.pairs().all(|(x, y)| x < y)
}

/// Rank in `NPO(n)`: the number of strict pairs.
pub fn npo_rank(p: &Poset) -> usize {
    p.relation_size()
}

/// Rank of `ℐ(p)` in `NDL(n)`: `C(n,2) - npo_rank(p)`.
pub fn ndl_rank(p: &Poset) -> usize {
    let n = p.len();
    n * n.saturating_sub(1) / 2 - npo_rank(p)
}

/// Intersection of the strict relations.
pub fn npo_meet(p: &Poset, q: &Poset) -> Result<Poset> {
    same_size(p, q)?;
    let up = (0..p.len())
        .map(|x| p.above(x).intersection(q.above(x)))
        .collect();
    Ok(Poset::from_closed_up(up))
}

/// Transitive closure of the union of the strict relations.
pub fn npo_join(p: &Poset, q: &Poset) -> Result<Poset> {
    same_size(p, q)?;
    let mut up: Vec<Subset> = (0..p.len()).map(|x| p.above(x).union(q.above(x))).collect();
    close(&mut up);
    if let Some(x) = (0..up.len()).find(|&x| up[x].contains(x)) {
        return Err(Error::Cycle(x));
    }
    Ok(Poset::from_closed_up(up))
}

fn same_size(p: &Poset, q: &Poset) -> Result<()> {
    if p.len() != q.len() {
        return Err(Error::SizeMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    Ok(())
}

fn structure_limit(n: usize) -> Result<()> {
    if n > STRUCTURE_LIMIT {
        return Err(Error::LimitExceeded {
            what: "n",
            value: n,
            limit: STRUCTURE_LIMIT,
        });
    }
    Ok(())
}

/// `r(P) + r(Q) ≤ r(P∧Q) + r(P∨Q)` for every pair in `NPO(n)²`.
pub fn check_semimodular(n: usize) -> Result<bool> {
    Ok(semimodular_violation(n)?.is_none())
}

/// First pair violating lower semimodularity, if any.
pub fn semimodular_violation(n: usize) -> Result<Option<(Poset, Poset)>> {
    structure_limit(n)?;
    let all = collect_npo(n)?;
    let found = all.par_iter().find_map_first(|p| {
        all.iter().find_map(|q| {
            let meet = npo_meet(p, q).ok()?;
            let join = npo_join(p, q).ok()?;
            (npo_rank(p) + npo_rank(q) > npo_rank(&meet) + npo_rank(&join))
                .then(|| (p.clone(), q.clone()))
        })
    });
    Ok(found)
}

/// Encodes a natural order as a bitmask over pair slots `(i, j)`, `i < j`.
fn pair_mask(p: &Poset, slots: &HashMap<(usize, usize), usize>) -> u64 {
    p.pairs().fold(0u64, |m, e| m | 1u64 << slots[&e])
}

/// Every cover `P ⋖ P'` in `(NPO(n), ⊆)` raises the rank by exactly one.
pub fn check_jordan_dedekind(n: usize) -> Result<bool> {
    structure_limit(n)?;
    let slots: HashMap<(usize, usize), usize> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .enumerate()
        .map(|(k, e)| (e, k))
        .collect();
    let masks: Vec<u64> = collect_npo(n)?
        .iter()
        .map(|p| pair_mask(p, &slots))
        .collect();
    let proper = |a: u64, b: u64| a & !b == 0 && a != b;
    Ok(masks.par_iter().all(|&p| {
        masks.iter().filter(|&&q| proper(p, q)).all(|&q| {
            let is_cover = !masks.iter().any(|&r| proper(p, r) && proper(r, q));
            !is_cover || q.count_ones() == p.count_ones() + 1
        })
    }))
}

/// Constants `C_n` of the asymptotic count `C_n · n · 2^{n²/4}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BpsConstants {
    pub c_even: f64,
    pub c_odd: f64,
}

impl BpsConstants {
    pub const PUBLISHED: BpsConstants = BpsConstants {
        c_even: 12.7636300,
        c_odd: 12.7635965,
    };

    pub fn for_n(&self, n: usize) -> f64 {
        if n.is_multiple_of(2) {
            self.c_even
        } else {
            self.c_odd
        }
    }
}

impl Default for BpsConstants {
    fn default() -> Self {
        Self::PUBLISHED
    }
}

/// Largest `n` for which [`bps`] is evaluated.
pub const BPS_MAX_N: usize = 60;

/// `BPS(n) = C_n · n · 2^{n²/4}`.
pub fn bps(n: usize) -> Result<f64> {
    if n > BPS_MAX_N {
        return Err(Error::Overflow(n));
    }
    let nf = n as f64;
    Ok(BpsConstants::PUBLISHED.for_n(n) * nf * (nf * nf / 4.0).exp2())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BpsRow {
    pub n: usize,
    pub count: u64,
    /// `false` when `count` is the published value rather than enumerated.
    pub computed: bool,
    pub bps: f64,
    pub ratio: f64,
}

/// Rows `n = 0..=n_max` of `(n, |NPO(n)|, BPS(n), BPS(n)/|NPO(n)|)`. Counts
/// are enumerated for `n ≤ compute_limit` and taken from
/// [`PUBLISHED_COUNTS`] beyond.
pub fn bps_ratio_table(n_max: usize, compute_limit: usize) -> Result<Vec<BpsRow>> {
    if n_max > TABLE_LIMIT {
        return Err(Error::LimitExceeded {
            what: "n-max",
            value: n_max,
            limit: TABLE_LIMIT,
        });
    }
    (0..=n_max)
        .map(|n| {
            let computed = n <= compute_limit;
            let count = if computed {
                count_npo(n, compute_limit)?
            } else {
                PUBLISHED_COUNTS[n]
            };
            let bps = bps(n)?;
            Ok(BpsRow {
                n,
                count,
                computed,
                bps,
                ratio: bps / count as f64,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts_small() {
        assert_eq!(count_npo(0, COUNT_LIMIT).unwrap(), 1);
        assert_eq!(count_npo(1, COUNT_LIMIT).unwrap(), 1);
        assert_eq!(count_npo(3, COUNT_LIMIT).unwrap(), 7);
        assert_eq!(count_npo(5, COUNT_LIMIT).unwrap(), 357);
        assert!(matches!(
            count_npo(11, COUNT_LIMIT),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn stream_matches_count_and_is_duplicate_free() {
        for (n, &want) in PUBLISHED_COUNTS.iter().enumerate().take(6) {
            let all = collect_npo(n).unwrap();
            assert_eq!(all.len() as u64, want);
            assert!(all.iter().all(is_natural));
            let distinct: HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
        }
        assert!(matches!(collect_npo(7), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn stream_order_is_deterministic() {
        let a: Vec<_> = NpoIterator::new(4).unwrap().collect();
        let b: Vec<_> = NpoIterator::new(4).unwrap().collect();
        assert_eq!(a, b);
        assert_eq!(a[0], Poset::discrete(4).unwrap());
    }

    #[test]
    fn rank_examples() {
        let c3 = Poset::chain(3).unwrap();
        let d3 = Poset::discrete(3).unwrap();
        let v = Poset::new(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(npo_rank(&c3), 3);
        assert_eq!(npo_rank(&d3), 0);
        assert_eq!(npo_rank(&v), 2);
        assert_eq!(ndl_rank(&d3), 3);
        assert_eq!(ndl_rank(&c3), 0);
        assert_eq!(ndl_rank(&v), 1);
    }

    #[test]
    fn meet_join_examples() {
        let c3 = Poset::chain(3).unwrap();
        let d3 = Poset::discrete(3).unwrap();
        assert_eq!(npo_meet(&c3, &d3).unwrap(), d3);
        assert_eq!(npo_join(&c3, &d3).unwrap(), c3);
        let a = Poset::new(3, &[(0, 1)]).unwrap();
        let b = Poset::new(3, &[(1, 2)]).unwrap();
        assert_eq!(npo_join(&a, &b).unwrap(), c3);
        assert_eq!(npo_meet(&a, &a).unwrap(), a);
        assert_eq!(npo_join(&a, &a).unwrap(), a);
        assert!(matches!(
            npo_meet(&a, &Poset::chain(2).unwrap()),
            Err(Error::SizeMismatch { .. })
        ));
        let back = Poset::new(3, &[(1, 0)]).unwrap();
        assert_eq!(npo_join(&a, &back), Err(Error::Cycle(0)));
    }

    #[test]
    fn structure_checks() {
        for n in 1..=4 {
            assert!(check_semimodular(n).unwrap(), "semimodular n={n}");
            assert!(check_jordan_dedekind(n).unwrap(), "jordan-dedekind n={n}");
        }
        assert!(matches!(
            check_semimodular(6),
            Err(Error::LimitExceeded { .. })
        ));
        assert!(matches!(
            check_jordan_dedekind(6),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn not_modular() {
        // lower semimodular only: some pair has strict inequality
        let all = collect_npo(3).unwrap();
        let strict = all.iter().any(|p| {
            all.iter().any(|q| {
                npo_rank(p) + npo_rank(q)
                    < npo_rank(&npo_meet(p, q).unwrap()) + npo_rank(&npo_join(p, q).unwrap())
            })
        });
        assert!(strict);
    }

    #[test]
    fn bps_examples() {
        assert_eq!(bps(0).unwrap(), 0.0);
        assert!((bps(1).unwrap() - 15.179).abs() < 1e-3);
        assert!((bps(2).unwrap() - 51.055).abs() < 1e-3);
        assert_eq!(bps(61), Err(Error::Overflow(61)));
        assert!(bps(60).unwrap().is_finite());
    }

    #[test]
    fn table_rows() {
        let rows = bps_ratio_table(12, 6).unwrap();
        assert_eq!(rows.len(), 13);
        assert!(rows[..=6].iter().all(|r| r.computed));
        assert!(rows[7..].iter().all(|r| !r.computed));
        assert_eq!(rows[7].count, 96428);
        assert!((rows[7].ratio - 4.5132).abs() / 4.5132 < 1e-3);
        assert!((rows[10].ratio - 0.62470).abs() / 0.62470 < 1e-3);
        assert!((rows[12].ratio - 0.16236).abs() / 0.16236 < 1e-3);
        assert!(matches!(
            bps_ratio_table(13, 6),
            Err(Error::LimitExceeded { .. })
        ));
    }
}
