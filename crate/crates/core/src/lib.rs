//! Neutrosophic multi sets and multi relations over finite universes.
//!
//! Each element of a universe carries parallel truth, indeterminacy, and
//! falsity sequences of a common length P. The crate provides the full set
//! algebra (union, intersection, algebraic sum and product, complement,
//! subset order), cartesian products, relations with sup-min/inf-max
//! composition, inverse, the reflexive/symmetric/transitive predicates,
//! transitive closure, a seeded law-verification harness, and canonical
//! JSON serialization.

pub mod doc;
pub mod error;
pub mod relation;
pub mod set;
pub mod triple;
pub mod verify;

pub use error::{Error, Result};
pub use relation::{cartesian_product, cartesian_square, NmRelation, RelationContext};
pub use set::NmSet;
pub use triple::{MultiValue, NeutroTriple, FILL};
pub use verify::{GenConfig, LawReport, Witness};
