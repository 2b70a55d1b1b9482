//! Steiner operations (StOps) on ideal lattices of finite posets.
//!
//! A StOp is a self-map on the family of order ideals of a poset that keeps
//! set sizes, does not increase a boundary functional, and is monotone under
//! inclusion. The range of an idempotent StOp is again the ideal family of a
//! (stronger) partial order, its *StOp-order*. This crate makes that
//! machinery executable at desk scale:
//!
//! - [`poset`]: posets on `{0, …, n-1}` (n ≤ 64) with bitset relations,
//!   ideals, linear extensions and the two poset combinators.
//! - [`ideal_lattice`]: families of subsets viewed as distributive lattices,
//!   join-irreducibles, the Birkhoff map and recovery of the representing
//!   poset.
//! - [`stop`]: StOps as explicit tables, axiom validators, composition,
//!   idempotent closure, range and StOp-order extraction.
//! - [`reductions`]: the weight-reduction operators and superreductions,
//!   which realize any poset as a StOp-order.
//! - [`mwi`]: minimum weight ideal solvers.
//! - [`npo`]: enumeration and structure of natural partial orders, and the
//!   asymptotic count table.
//! - [`io`]: the plain-text file formats used by the `stoplat` tool.

pub mod error;
pub mod gen;
pub mod ideal_lattice;
pub mod io;
pub mod mwi;
pub mod npo;
pub mod poset;
pub mod reductions;
pub mod selftest;
pub mod stop;
pub mod subset;

pub use error::{Axiom, Error, Result};
pub use ideal_lattice::IdealFamily;
pub use mwi::{MwiSolution, WeightVector};
pub use npo::{BpsConstants, BpsRow, NpoIterator};
pub use poset::{Poset, TotalExtension, MAX_ELEMENTS};
pub use reductions::ReductionSpec;
pub use stop::{BoundaryFunctional, Graph, StOpMap};
pub use subset::Subset;
