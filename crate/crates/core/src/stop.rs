//! Steiner operations materialized as lookup tables over `ℐ(P)`.
//!
//! Every validator is a finite scan of the table, so axiom checks,
//! composition equality and idempotence are all decidable exactly.

use rayon::prelude::*;

use crate::error::{Axiom, Error, Result};
use crate::ideal_lattice::IdealFamily;
use crate::poset::{Poset, TotalExtension};
use crate::subset::Subset;

/// Simple undirected graph on `{0, …, n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Subset>,
}

impl Graph {
    /// Parallel edges collapse; self-loops are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > crate::MAX_ELEMENTS {
            return Err(Error::TooLarge(n));
        }
        let mut adj = vec![Subset::EMPTY; n];
        for &(u, v) in edges {
            for i in [u, v] {
                if i >= n {
                    return Err(Error::Bounds { index: i, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// The cycle `0 - 1 - … - (n-1) - 0`.
    pub fn cycle(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n)
            .map(|i| (i, (i + 1) % n))
            .filter(|(u, v)| u != v)
            .collect();
        Self::new(n, &edges)
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> Subset {
        self.adj[v]
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, a)| a.iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// `|Θ(S)|`: edges with exactly one end in `s`.
    pub fn edge_boundary(&self, s: Subset) -> usize {
        s.iter().map(|u| self.adj[u].difference(s).len()).sum()
    }

    /// `|Φ(S)|`: vertices outside `s` with a neighbor in `s`.
    pub fn vertex_boundary(&self, s: Subset) -> usize {
        s.iter()
            .fold(Subset::EMPTY, |acc, u| acc.union(self.adj[u]))
            .difference(s)
            .len()
    }
}

/// A boundary functional `∂: 2^V → ℤ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundaryFunctional {
    /// `ω(S) = Σ_{v∈S} ω(v)`.
    AdditiveWeight(Vec<i64>),
    EdgeBoundary(Graph),
    VertexBoundary(Graph),
}

impl BoundaryFunctional {
    pub fn ground_size(&self) -> usize {
        match self {
            BoundaryFunctional::AdditiveWeight(w) => w.len(),
            BoundaryFunctional::EdgeBoundary(g) | BoundaryFunctional::VertexBoundary(g) => g.len(),
        }
    }

    pub fn evaluate(&self, s: Subset) -> i64 {
        match self {
            BoundaryFunctional::AdditiveWeight(w) => s.iter().map(|v| w[v]).sum(),
            BoundaryFunctional::EdgeBoundary(g) => g.edge_boundary(s) as i64,
            BoundaryFunctional::VertexBoundary(g) => g.vertex_boundary(s) as i64,
        }
    }
}

/// A self-map on `ℐ(base)` given as a total table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StOpMap {
    base: Poset,
    domain: IdealFamily,
    /// `table[i]` is the domain index of the image of `domain[i]`.
    table: Vec<u32>,
}

impl StOpMap {
    pub fn identity(base: &Poset) -> Self {
        let domain = base.enumerate_ideals();
        let table = (0..domain.len() as u32).collect();
        StOpMap {
            base: base.clone(),
            domain,
            table,
        }
    }

    /// Tabulates `f` over `ℐ(base)`; every image must be an ideal of `base`.
    pub fn from_fn(base: &Poset, mut f: impl FnMut(Subset) -> Subset) -> Result<Self> {
        let domain = base.enumerate_ideals();
        let table = domain
            .members()
            .iter()
            .map(|&s| {
                let t = f(s);
                domain
                    .index_of(t)
                    .map(|i| i as u32)
                    .ok_or_else(|| Error::NotAnIdeal(t.to_string()))
            })
            .collect::<Result<_>>()?;
        Ok(StOpMap {
            base: base.clone(),
            domain,
            table,
        })
    }

    /// Builds a map from explicit `S -> T` entries, requiring exactly one
    /// entry per ideal of `base`.
    pub fn from_entries(base: &Poset, entries: &[(Subset, Subset)]) -> Result<Self> {
        let domain = base.enumerate_ideals();
        let mut table = vec![u32::MAX; domain.len()];
        for &(s, t) in entries {
            let i = domain
                .index_of(s)
                .ok_or_else(|| Error::NotAnIdeal(s.to_string()))?;
            let j = domain
                .index_of(t)
                .ok_or_else(|| Error::NotAnIdeal(t.to_string()))?;
            if table[i] != u32::MAX {
                return Err(Error::DuplicateEntry(s.to_string()));
            }
            table[i] = j as u32;
        }
        if let Some(i) = table.iter().position(|&j| j == u32::MAX) {
            return Err(Error::MissingEntry(domain.members()[i].to_string()));
        }
        Ok(StOpMap {
            base: base.clone(),
            domain,
            table,
        })
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    pub fn domain(&self) -> &IdealFamily {
        &self.domain
    }

    /// `φ(s)`, or `None` if `s` is not an ideal of the base.
    pub fn apply(&self, s: Subset) -> Option<Subset> {
        self.domain.index_of(s).map(|i| self.image_at(i))
    }

    #[inline]
    fn image_at(&self, i: usize) -> Subset {
        self.domain.members()[self.table[i] as usize]
    }

    /// `(S, φ(S))` in canonical domain order.
    pub fn entries(&self) -> impl Iterator<Item = (Subset, Subset)> + '_ {
        self.domain
            .members()
            .iter()
            .enumerate()
            .map(move |(i, &s)| (s, self.image_at(i)))
    }

    /// `|φ(S)| = |S|` everywhere.
    pub fn check_axiom1(&self) -> bool {
        self.entries().all(|(s, t)| s.len() == t.len())
    }

    /// `∂(φ(S)) ≤ ∂(S)` everywhere.
    pub fn check_axiom2(&self, boundary: &BoundaryFunctional) -> Result<bool> {
        if boundary.ground_size() != self.base.len() {
            return Err(Error::SizeMismatch {
                left: self.base.len(),
                right: boundary.ground_size(),
            });
        }
        Ok(self
            .entries()
            .all(|(s, t)| boundary.evaluate(t) <= boundary.evaluate(s)))
    }

    /// `S ⊆ T ⇒ φ(S) ⊆ φ(T)` over all domain pairs.
    pub fn check_axiom3(&self) -> bool {
        let members = self.domain.members();
        (0..members.len()).into_par_iter().all(|i| {
            let s = members[i];
            let fs = self.image_at(i);
            members
                .iter()
                .enumerate()
                .all(|(j, &t)| !s.is_subset(t) || fs.is_subset(self.image_at(j)))
        })
    }

    /// `τ(φ(S)) ≤ τ(S)`, with equality only at fixpoints.
    pub fn check_axiom4(&self, tau: &TotalExtension) -> Result<bool> {
        if !tau.extends(&self.base) {
            return Err(Error::NotAnExtension);
        }
        Ok(self.entries().all(|(s, t)| {
            let (ws, wt) = (tau.weight(s), tau.weight(t));
            wt < ws || (wt == ws && s == t)
        }))
    }

    /// `self ∘ other`: `S ↦ self(other(S))`.
    pub fn compose(&self, other: &StOpMap) -> Result<StOpMap> {
        if self.base != other.base {
            return Err(Error::BaseMismatch);
        }
        let table = other
            .table
            .iter()
            .map(|&j| self.table[j as usize])
            .collect();
        Ok(StOpMap {
            base: self.base.clone(),
            domain: self.domain.clone(),
            table,
        })
    }

    pub fn is_idempotent(&self) -> bool {
        self.table.iter().all(|&j| self.table[j as usize] == j)
    }

    /// Iterates `φ^k` until `φ^{k+1} = φ^k`, returning the stable power `φ^k`
    /// and `k`.
    ///
    /// Under Axiom 4 each point reaches a fixpoint after at most
    /// `Σ τ(x) = n(n-1)/2` strict decreases, so failing to stabilize within
    /// `1 + n(n-1)/2` powers means the map violates Axiom 4.
    pub fn idempotent_closure(&self) -> Result<(StOpMap, usize)> {
        let n = self.base.len();
        let bound = 1 + n * n.saturating_sub(1) / 2;
        let mut power = self.clone();
        for k in 1..=bound {
            let next = self.compose(&power)?;
            if next.table == power.table {
                return Ok((power, k));
            }
            power = next;
        }
        Err(Error::NonTerminating(bound))
    }

    /// `{T : φ(T) = T}`.
    pub fn fixpoints(&self) -> IdealFamily {
        let members = self
            .table
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i == j as usize)
            .map(|(i, _)| self.domain.members()[i])
            .collect();
        IdealFamily::from_sorted_unchecked(self.base.len(), members)
    }

    /// `{φ(S) : S ∈ domain}`, computed from the table values.
    pub fn image(&self) -> IdealFamily {
        let mut hit = vec![false; self.domain.len()];
        for &j in &self.table {
            hit[j as usize] = true;
        }
        let members = hit
            .iter()
            .zip(self.domain.members())
            .filter(|(&h, _)| h)
            .map(|(_, &s)| s)
            .collect();
        IdealFamily::from_sorted_unchecked(self.base.len(), members)
    }

    /// The range of an idempotent map, read off as its fixpoint set.
    pub fn range_of(&self) -> Result<IdealFamily> {
        if !self.is_idempotent() {
            return Err(Error::NotIdempotent);
        }
        Ok(self.fixpoints())
    }

    /// The unique `Q ⊇ base` with `Range(φ) = ℐ(Q)`.
    ///
    /// Requires idempotence and Axioms 1 and 3; Axiom 2 plays no role.
    pub fn stop_order(&self) -> Result<Poset> {
        if !self.is_idempotent() {
            return Err(Error::NotIdempotent);
        }
        if !self.check_axiom1() {
            return Err(Error::AxiomViolation(Axiom::Size));
        }
        if !self.check_axiom3() {
            return Err(Error::AxiomViolation(Axiom::Monotone));
        }
        let range = self.fixpoints();
        let q = range
            .recover_order()
            .map_err(|e| Error::Inconsistent(format!("range has no representing poset: {e}")))?;
        if !self.base.is_extended_by(&q)? {
            return Err(Error::Inconsistent(
                "recovered order does not extend the base".into(),
            ));
        }
        if q.enumerate_ideals() != range {
            return Err(Error::Inconsistent(
                "ideals of the recovered order differ from the range".into(),
            ));
        }
        Ok(q)
    }
}
