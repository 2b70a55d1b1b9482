//! Weight reductions `φ_{a,τ}` and their cyclic composition.
//!
//! Given `P ⊆ Q`, a total extension `τ` of `Q` and an anchor `a`, the
//! reduction swaps the `τ`-largest element of `I` lying `Q`-above `a` for
//! the `τ`-smallest missing element lying `Q`-below `a`. Reductions sharing
//! one `τ` are consistent, and cycling through all anchors until nothing
//! moves yields an idempotent StOp whose range is exactly `ℐ(Q)`.

use crate::error::{Error, Result};
use crate::poset::{Poset, TotalExtension};
use crate::stop::StOpMap;
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionSpec {
    base: Poset,
    target: Poset,
    tau: TotalExtension,
    anchor: usize,
}

impl ReductionSpec {
    pub fn new(base: &Poset, target: &Poset, tau: &TotalExtension, anchor: usize) -> Result<Self> {
        check_triple(base, target, tau)?;
        if anchor >= base.len() {
            return Err(Error::Bounds {
                index: anchor,
                n: base.len(),
            });
        }
        Ok(ReductionSpec {
            base: base.clone(),
            target: target.clone(),
            tau: tau.clone(),
            anchor,
        })
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    pub fn target(&self) -> &Poset {
        &self.target
    }

    pub fn tau(&self) -> &TotalExtension {
        &self.tau
    }

    pub fn anchor(&self) -> usize {
        self.anchor
    }

    /// `φ_{a,τ}(I)`.
    pub fn apply(&self, ideal: Subset) -> Result<Subset> {
        if !self.base.is_ideal(ideal) {
            return Err(Error::NotAnIdeal(ideal.to_string()));
        }
        Ok(reduce(&self.target, &self.tau, self.anchor, ideal))
    }

    /// The reduction tabulated over `ℐ(base)`.
    pub fn build_stop(&self) -> Result<StOpMap> {
        StOpMap::from_fn(&self.base, |i| {
            reduce(&self.target, &self.tau, self.anchor, i)
        })
    }
}

fn check_triple(base: &Poset, target: &Poset, tau: &TotalExtension) -> Result<()> {
    if !base.is_extended_by(target)? {
        return Err(Error::NotAnExtension);
    }
    if !tau.extends(target) {
        return Err(Error::NotAnExtension);
    }
    Ok(())
}

fn reduce(target: &Poset, tau: &TotalExtension, a: usize, ideal: Subset) -> Subset {
    let upper = ideal.intersection(target.above(a).with(a));
    let lower = target.below(a).difference(ideal);
    let by_tau = |x: &usize| tau.value(*x);
    match (
        upper.iter().max_by_key(by_tau),
        lower.iter().min_by_key(by_tau),
    ) {
        (Some(v_max), Some(v_min)) => ideal.without(v_max).with(v_min),
        _ => ideal,
    }
}

/// `φ_{a,τ}(I)` without building a [`ReductionSpec`].
pub fn apply_reduction(
    base: &Poset,
    target: &Poset,
    tau: &TotalExtension,
    anchor: usize,
    ideal: Subset,
) -> Result<Subset> {
    ReductionSpec::new(base, target, tau, anchor)?.apply(ideal)
}

/// `φ_{∞,τ}` with anchors visited in ascending `τ` order.
pub fn superreduction(base: &Poset, target: &Poset, tau: &TotalExtension) -> Result<StOpMap> {
    superreduction_with_order(base, target, tau, &tau.order())
}

/// Cyclic composition of `φ_{a,τ}` over `anchors` (any ordering of `V`),
/// repeated until one full cycle leaves the table unchanged.
pub fn superreduction_with_order(
    base: &Poset,
    target: &Poset,
    tau: &TotalExtension,
    anchors: &[usize],
) -> Result<StOpMap> {
    check_triple(base, target, tau)?;
    let steps = anchors
        .iter()
        .map(|&a| ReductionSpec::new(base, target, tau, a)?.build_stop())
        .collect::<Result<Vec<_>>>()?;

    let n = base.len();
    let max_cycles = 1 + n * n.saturating_sub(1) / 2;
    let mut current = StOpMap::identity(base);
    for _ in 0..=max_cycles {
        let mut next = current.clone();
        for step in &steps {
            next = step.compose(&next)?;
        }
        if next == current {
            if !current.is_idempotent() {
                return Err(Error::Inconsistent(
                    "stable superreduction is not idempotent".into(),
                ));
            }
            return Ok(current);
        }
        current = next;
    }
    Err(Error::Inconsistent(format!(
        "superreduction did not stabilize within {max_cycles} cycles"
    )))
}

/// Builds the superreduction from the discrete order towards `target` with
/// the default linear extension, and checks that its StOp-order is `target`.
pub fn verify_theorem5(target: &Poset) -> Result<bool> {
    Ok(realized_stop_order(target)? == *target)
}

/// The StOp-order of the discrete-to-`target` superreduction.
pub fn realized_stop_order(target: &Poset) -> Result<Poset> {
    let base = Poset::discrete(target.len())?;
    let tau = target.default_linear_extension();
    superreduction(&base, target, &tau)?.stop_order()
}
