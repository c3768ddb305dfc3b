//! Exact computations with finite groups and groupoids: subgroup lattices,
//! double cosets, span categories composed by homotopy pullback, the Burnside
//! table of marks with its rational idempotents, transfer and indexing
//! systems, and functoriality checking for diagrams of commutative
//! ℚ-algebras indexed by spans of groupoids.
//!
//! All arithmetic is over element indices and exact rationals; there is no
//! floating point anywhere in the crate.

pub mod algebra;
pub mod error;
pub mod group;
pub mod groupoid;
pub mod marks;

pub use error::{Error, Result};
