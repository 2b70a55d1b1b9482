use std::fmt;

use thiserror::Error;

/// The four StOp axioms, used to report which one a map violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// Size preservation.
    Size,
    /// Boundary does not increase.
    Boundary,
    /// Monotone under inclusion.
    Monotone,
    /// Strict decrease of the total-extension weight off fixpoints.
    Weight,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Size => "axiom 1 (size)",
            Axiom::Boundary => "axiom 2 (boundary)",
            Axiom::Monotone => "axiom 3 (monotone)",
            Axiom::Weight => "axiom 4 (total extension)",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation contains a cycle through element {0}")]
    Cycle(usize),
    #[error("index {index} out of bounds for ground set of size {n}")]
    Bounds { index: usize, n: usize },
    #[error("ground set of size {0} exceeds the 64-element limit")]
    TooLarge(usize),
    #[error("ground set sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("family is not closed under union and intersection")]
    NotALattice,
    #[error("subset {0} is not a member of the family")]
    NotAMember(String),
    #[error(
        "elements {0} and {1} are never separated by a member; no poset represents the family"
    )]
    NotAntisymmetric(usize, usize),
    #[error("family must contain both the empty set and the full ground set")]
    MissingBounds,
    #[error("map is not an order extension of its poset")]
    NotAnExtension,
    #[error("maps are defined over different base posets")]
    BaseMismatch,
    #[error("iteration did not stabilize within {0} steps")]
    NonTerminating(usize),
    #[error("map is not idempotent")]
    NotIdempotent,
    #[error("map violates {0}")]
    AxiomViolation(Axiom),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("subset {0} is not an ideal of the base poset")]
    NotAnIdeal(String),
    #[error("weights are not increasing on the target: {0} <= {1} but w({0}) > w({1})")]
    NotIncreasing(usize, usize),
    #[error("{what} = {value} exceeds the configured limit {limit}")]
    LimitExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("value overflows double precision for n = {0}")]
    Overflow(usize),
    #[error("cardinality {k} out of range for ground set of size {n}")]
    Cardinality { k: usize, n: usize },
    #[error("no table entry for domain member {0}")]
    MissingEntry(String),
    #[error("more than one table entry for domain member {0}")]
    DuplicateEntry(String),
    #[error("graph edge {0}-{0} is a self-loop")]
    SelfLoop(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
