//! Partitions, compositions and skew diagrams.

mod composition;
mod enumerate;
mod partition;
mod shape;

pub use composition::{Composition, Step};
pub use enumerate::{enumerate_all, enumerate_connected};
pub use partition::Partition;
pub use shape::{Cell, SkewShape};
