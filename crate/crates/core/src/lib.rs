//! Skew diagrams, skew Schur functions and skew-equivalence.

pub mod diagrams;
pub mod error;
pub mod invariants;
pub mod classifier;
pub mod ops;
pub mod symfunc;

pub use diagrams::{Cell, Composition, Partition, SkewShape, Step};
pub use error::{Result, SkewError};
