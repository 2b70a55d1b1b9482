//! Finite posets on `{0, …, n-1}`.
//!
//! The strict relation is stored twice, as up-sets and down-sets, and is kept
//! transitively closed. Reflexive pairs are implicit.

use crate::error::{Error, Result};
use crate::ideal_lattice::IdealFamily;
use crate::subset::Subset;

/// Ground sets are capped so that every subset fits in one [`Subset`] word.
pub const MAX_ELEMENTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    /// `up[x]` = `{y : x < y}`.
    up: Vec<Subset>,
    /// `down[y]` = `{x : x < y}`.
    down: Vec<Subset>,
}

impl Poset {
    /// Builds the transitive closure of `pairs`, each `(x, y)` meaning `x < y`.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge(n));
        }
        let mut up = vec![Subset::EMPTY; n];
        for &(x, y) in pairs {
            for i in [x, y] {
                if i >= n {
                    return Err(Error::Bounds { index: i, n });
                }
            }
            up[x].insert(y);
        }
        close(&mut up);
        if let Some(x) = (0..n).find(|&x| up[x].contains(x)) {
            return Err(Error::Cycle(x));
        }
        Ok(Self::from_closed_up(up))
    }

    /// Builds a poset from up-sets that are already closed and acyclic.
    pub(crate) fn from_closed_up(up: Vec<Subset>) -> Self {
        let n = up.len();
        let mut down = vec![Subset::EMPTY; n];
        for (x, u) in up.iter().enumerate() {
            for y in u.iter() {
                down[y].insert(x);
            }
        }
        debug_assert!(is_closed(&up));
        Poset { n, up, down }
    }

    /// Same as [`Poset::from_closed_up`], starting from down-sets.
    pub(crate) fn from_closed_down(down: Vec<Subset>) -> Self {
        let n = down.len();
        let mut up = vec![Subset::EMPTY; n];
        for (y, d) in down.iter().enumerate() {
            for x in d.iter() {
                up[x].insert(y);
            }
        }
        Self::from_closed_up(up)
    }

    /// The discrete order (antichain) on `n` elements.
    pub fn discrete(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    /// The chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge(n));
        }
        let up = (0..n)
            .map(|x| Subset::full(n).difference(Subset::full(x + 1)))
            .collect();
        Ok(Self::from_closed_up(up))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    /// `x < y`.
    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    /// `x <= y`.
    #[inline]
    pub fn le(&self, x: usize, y: usize) -> bool {
        x == y || self.lt(x, y)
    }

    /// Strict up-set of `x`.
    #[inline]
    pub fn above(&self, x: usize) -> Subset {
        self.up[x]
    }

    /// Strict down-set of `x`.
    #[inline]
    pub fn below(&self, x: usize) -> Subset {
        self.down[x]
    }

    /// Principal ideal `{y : y <= x}`.
    #[inline]
    pub fn principal_ideal(&self, x: usize) -> Subset {
        self.down[x].with(x)
    }

    /// Number of strict pairs.
    pub fn relation_size(&self) -> usize {
        self.up.iter().map(|u| u.len()).sum()
    }

    /// All strict pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(x, u)| u.iter().map(move |y| (x, y)))
    }

    /// Cover pairs (the Hasse diagram), lexicographically sorted.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        self.pairs()
            .filter(|&(x, y)| self.up[x].intersection(self.down[y]).is_empty())
            .collect()
    }

    /// Whether every strict pair of `self` is a strict pair of `other`.
    pub fn is_extended_by(&self, other: &Poset) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self.up.iter().zip(&other.up).all(|(a, b)| a.is_subset(*b)))
    }

    /// Greedy linear extension: always place the smallest-index element whose
    /// predecessors are all placed.
    pub fn default_linear_extension(&self) -> TotalExtension {
        let mut placed = Subset::EMPTY;
        let mut perm = vec![0; self.n];
        for pos in 0..self.n {
            let x = (0..self.n)
                .find(|&x| !placed.contains(x) && self.down[x].is_subset(placed))
                .expect("acyclic relation always has a minimal unplaced element");
            perm[x] = pos;
            placed.insert(x);
        }
        TotalExtension::from_perm_unchecked(perm)
    }

    /// `(y ∈ s and x < y) ⇒ x ∈ s`. Bits outside the ground set make `s` a non-ideal.
    pub fn is_ideal(&self, s: Subset) -> bool {
        s.is_subset(self.ground()) && s.iter().all(|y| self.down[y].is_subset(s))
    }

    /// Every ideal, in canonical order.
    pub fn enumerate_ideals(&self) -> IdealFamily {
        let order = self.default_linear_extension().order();
        let mut out = Vec::new();
        self.ideals_rec(&order, 0, Subset::EMPTY, &mut |s| out.push(s));
        out.sort_unstable();
        IdealFamily::from_sorted_unchecked(self.n, out)
    }

    /// `|ℐ(self)|` without materializing the family.
    pub fn count_ideals(&self) -> u64 {
        let order = self.default_linear_extension().order();
        let mut count = 0u64;
        self.ideals_rec(&order, 0, Subset::EMPTY, &mut |_| count += 1);
        count
    }

    // Decides the elements in linear-extension order. Inclusion is allowed
    // only once all predecessors are in, so every leaf is a distinct ideal.
    fn ideals_rec(&self, order: &[usize], i: usize, cur: Subset, emit: &mut impl FnMut(Subset)) {
        if i == order.len() {
            emit(cur);
            return;
        }
        let x = order[i];
        self.ideals_rec(order, i + 1, cur, emit);
        if self.down[x].is_subset(cur) {
            self.ideals_rec(order, i + 1, cur.with(x), emit);
        }
    }

    /// Disjoint union: `self` keeps its labels, `other` is shifted by `self.len()`.
    pub fn disjoint_union(&self, other: &Poset) -> Result<Poset> {
        let n = self.n + other.n;
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge(n));
        }
        let shift = self.n;
        let up = self
            .up
            .iter()
            .copied()
            .chain(
                other
                    .up
                    .iter()
                    .map(|u| Subset::from_bits(u.bits() << shift)),
            )
            .collect();
        Ok(Self::from_closed_up(up))
    }

    /// Coordinatewise product; pair `(a, b)` is element `a * other.len() + b`.
    pub fn product(&self, other: &Poset) -> Result<Poset> {
        let n = self.n * other.n;
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge(n));
        }
        let m = other.n;
        let mut up = vec![Subset::EMPTY; n];
        for a in 0..self.n {
            for b in 0..m {
                let me = a * m + b;
                for c in self.up[a].with(a).iter() {
                    for d in other.up[b].with(b).iter() {
                        up[me].insert(c * m + d);
                    }
                }
                up[me].remove(me);
            }
        }
        Ok(Self::from_closed_up(up))
    }
}

/// Whether `q` extends `p`, i.e. every strict pair of `p` is one of `q`.
pub fn is_extension(p: &Poset, q: &Poset) -> Result<bool> {
    p.is_extended_by(q)
}

/// Warshall-style closure over bitset rows.
pub(crate) fn close(up: &mut [Subset]) {
    for k in 0..up.len() {
        let row = up[k];
        for u in up.iter_mut() {
            if u.contains(k) {
                *u = u.union(row);
            }
        }
    }
}

fn is_closed(up: &[Subset]) -> bool {
    up.iter().all(|u| u.iter().all(|y| up[y].is_subset(*u)))
}

/// A bijection `τ: V → {0, …, n-1}` that is order-preserving for some poset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TotalExtension {
    /// `perm[x] = τ(x)`.
    perm: Vec<usize>,
    /// `inv[i] = τ⁻¹(i)`.
    inv: Vec<usize>,
}

impl TotalExtension {
    /// Validates that `perm` is a bijection extending `poset`.
    pub fn new(perm: Vec<usize>, poset: &Poset) -> Result<Self> {
        if perm.len() != poset.len() {
            return Err(Error::SizeMismatch {
                left: perm.len(),
                right: poset.len(),
            });
        }
        let n = perm.len();
        let mut seen = Subset::EMPTY;
        for &v in &perm {
            if v >= n || seen.contains(v) {
                return Err(Error::NotAnExtension);
            }
            seen.insert(v);
        }
        let tau = Self::from_perm_unchecked(perm);
        if !tau.extends(poset) {
            return Err(Error::NotAnExtension);
        }
        Ok(tau)
    }

    pub(crate) fn from_perm_unchecked(perm: Vec<usize>) -> Self {
        let mut inv = vec![0; perm.len()];
        for (x, &v) in perm.iter().enumerate() {
            inv[v] = x;
        }
        TotalExtension { perm, inv }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_perm_unchecked((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// `τ(x)`.
    #[inline]
    pub fn value(&self, x: usize) -> usize {
        self.perm[x]
    }

    /// `τ⁻¹(i)`.
    #[inline]
    pub fn element_at(&self, i: usize) -> usize {
        self.inv[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    /// Elements listed by increasing `τ`.
    pub fn order(&self) -> Vec<usize> {
        self.inv.clone()
    }

    /// `τ(S) = Σ_{x∈S} τ(x)`.
    pub fn weight(&self, s: Subset) -> u64 {
        s.iter().map(|x| self.perm[x] as u64).sum()
    }

    pub fn extends(&self, poset: &Poset) -> bool {
        self.perm.len() == poset.len() && poset.pairs().all(|(x, y)| self.perm[x] < self.perm[y])
    }
}
