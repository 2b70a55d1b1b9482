//! Families of subsets as finite distributive lattices.
//!
//! A family closed under union and intersection is a sublattice of the
//! Boolean lattice and hence distributive. When it also contains `∅` and `V`
//! and separates every pair of elements, it is exactly the ideal family of
//! one poset, which [`IdealFamily::recover_order`] reconstructs.
//!
//! Closure and join-irreducibility checks compare members pairwise, so they
//! cost `O(|f|² log |f|)`. That is fine for families up to a few tens of
//! thousands of members.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::poset::{Poset, MAX_ELEMENTS};
use crate::subset::Subset;

/// A canonically sorted family of distinct subsets of `{0, …, n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealFamily {
    n: usize,
    members: Vec<Subset>,
}

impl IdealFamily {
    /// Sorts and deduplicates `members`.
    pub fn new(n: usize, mut members: Vec<Subset>) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge(n));
        }
        let ground = Subset::full(n);
        if let Some(bad) = members.iter().find(|s| !s.is_subset(ground)) {
            let index = bad.difference(ground).first().unwrap_or(n);
            return Err(Error::Bounds { index, n });
        }
        members.sort_unstable();
        members.dedup();
        Ok(IdealFamily { n, members })
    }

    pub(crate) fn from_sorted_unchecked(n: usize, members: Vec<Subset>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        IdealFamily { n, members }
    }

    /// Ground-set size.
    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, s: Subset) -> Option<usize> {
        self.members.binary_search(&s).ok()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.index_of(s).is_some()
    }

    /// `self ⊆ other` as families.
    pub fn is_subfamily_of(&self, other: &IdealFamily) -> bool {
        self.members.iter().all(|&s| other.contains(s))
    }

    /// Intersection of every member, i.e. the bottom of a closed family.
    fn meet_all(&self) -> Subset {
        self.members
            .iter()
            .fold(Subset::full(self.n), |acc, &s| acc.intersection(s))
    }

    pub fn is_union_intersection_closed(&self) -> bool {
        for (i, &s) in self.members.iter().enumerate() {
            for &t in &self.members[i + 1..] {
                if !self.contains(s.union(t)) || !self.contains(s.intersection(t)) {
                    return false;
                }
            }
        }
        true
    }

    fn require_lattice(&self) -> Result<()> {
        if self.is_empty() || !self.is_union_intersection_closed() {
            return Err(Error::NotALattice);
        }
        Ok(())
    }

    /// Members other than the bottom that have exactly one lower cover.
    ///
    /// In a union-closed family, `x` has a single lower cover iff the union of
    /// all members strictly below `x` is a proper subset of `x`.
    pub fn join_irreducibles(&self) -> Result<Vec<Subset>> {
        self.require_lattice()?;
        let bottom = self.meet_all();
        Ok(self
            .members
            .iter()
            .copied()
            .filter(|&x| x != bottom)
            .filter(|&x| {
                let below = self
                    .members
                    .iter()
                    .filter(|&&y| y.is_proper_subset(x))
                    .fold(Subset::EMPTY, |acc, &y| acc.union(y));
                below != x
            })
            .collect())
    }

    /// Birkhoff's map: the join-irreducibles lying below `x`.
    pub fn birkhoff_eta(&self, x: Subset) -> Result<Vec<Subset>> {
        if !self.contains(x) {
            return Err(Error::NotAMember(x.to_string()));
        }
        Ok(self
            .join_irreducibles()?
            .into_iter()
            .filter(|j| j.is_subset(x))
            .collect())
    }

    /// The poset `Q` with `x ≤ y` iff every member containing `y` contains `x`.
    ///
    /// `ℐ(Q)` always contains the family; equality holds exactly when the
    /// family is an ideal family.
    pub fn recover_order(&self) -> Result<Poset> {
        let ground = Subset::full(self.n);
        if !self.contains(Subset::EMPTY) || !self.contains(ground) {
            return Err(Error::MissingBounds);
        }
        let mut down = vec![ground; self.n];
        for &s in &self.members {
            for y in s.iter() {
                down[y] = down[y].intersection(s);
            }
        }
        for (y, d) in down.iter_mut().enumerate() {
            d.remove(y);
        }
        for y in 0..self.n {
            if let Some(x) = down[y].iter().find(|&x| down[x].contains(y)) {
                return Err(Error::NotAntisymmetric(x.min(y), x.max(y)));
            }
        }
        Ok(Poset::from_closed_down(down))
    }

    /// Whether `ℐ(recover_order(f)) = f` exactly.
    pub fn verify_birkhoff(&self) -> Result<bool> {
        let q = self.recover_order()?;
        Ok(q.enumerate_ideals() == *self)
    }

    /// Checks that `η` is an order isomorphism from the family onto the ideals
    /// of its join-irreducibles (ordered by inclusion).
    pub fn birkhoff_isomorphism_holds(&self) -> Result<bool> {
        let ji = self.join_irreducibles()?;
        if ji.len() > MAX_ELEMENTS {
            return Err(Error::TooLarge(ji.len()));
        }
        let mut pairs = Vec::new();
        for (i, a) in ji.iter().enumerate() {
            for (j, b) in ji.iter().enumerate() {
                if a.is_proper_subset(*b) {
                    pairs.push((i, j));
                }
            }
        }
        let ji_poset = Poset::new(ji.len(), &pairs)?;
        let eta: Vec<Subset> = self
            .members
            .iter()
            .map(|&x| {
                ji.iter()
                    .enumerate()
                    .filter(|(_, j)| j.is_subset(x))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();

        let image: HashSet<Subset> = eta.iter().copied().collect();
        if image.len() != eta.len() {
            return Ok(false);
        }
        let target = ji_poset.enumerate_ideals();
        if target.len() != image.len() || !target.members().iter().all(|s| image.contains(s)) {
            return Ok(false);
        }
        for (a, ea) in self.members.iter().zip(&eta) {
            for (b, eb) in self.members.iter().zip(&eta) {
                if a.is_subset(*b) != ea.is_subset(*eb) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Whether `p ⊆ q` agrees with `ℐ(q) ⊆ ℐ(p)`. Always true for valid posets.
pub fn check_theorem2(p: &Poset, q: &Poset) -> Result<bool> {
    let extends = p.is_extended_by(q)?;
    let reversed = q.enumerate_ideals().is_subfamily_of(&p.enumerate_ideals());
    Ok(extends == reversed)
}
