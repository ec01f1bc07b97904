//! Order and chain polytopes of finite posets.
//!
//! The crate builds both polytopes from a poset, enumerates their face
//! lattices exactly, and provides the f-polynomial algebra used to compute
//! f-vectors recursively over ordinal sums and disjoint unions.

pub mod bitset;
pub mod corpus;
pub mod error;
pub mod expr;
pub mod face;
pub mod fcalc;
pub mod fpoly;
pub mod polytope;
pub mod poset;
pub mod subdirect;

pub use error::{Error, Result};
pub use fpoly::FPoly;
pub use poset::{in_family, random_poset, DecompositionTree, Poset};
