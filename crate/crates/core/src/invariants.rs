//! Necessary conditions for skew-equivalence: overlap compositions and partitions,
//! rectangle counts, Frobenius rank, and the full Schur fingerprint.

use serde::{Deserialize, Serialize};

use crate::diagrams::{Partition, SkewShape};
use crate::ops::{overlap_composition, row_ranges};
use crate::symfunc::{schur_expand_lr, SchurVector};

pub use crate::symfunc::frobenius_rank;

/// Row and column overlap data of a diagram.
///
/// Index `k - 1` of each list holds the data for windows of `k` consecutive rows
/// (or columns).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OverlapProfile {
    /// `r^{(k)}`, zeros included.
    pub row_comps: Vec<Vec<usize>>,
    /// `ρ^{(k)}`: the nonzero entries of `r^{(k)}` sorted.
    pub row_parts: Vec<Partition>,
    /// `c^{(k)}`.
    pub col_comps: Vec<Vec<usize>>,
    /// `γ^{(k)}`.
    pub col_parts: Vec<Partition>,
    /// `rect_counts[k-1][l-1]` = `a_{k,l}`, the number of `k × l` rectangles in the diagram.
    pub rect_counts: Vec<Vec<usize>>,
}

impl OverlapProfile {
    /// The part of the profile shared by skew-equivalent diagrams.
    pub fn partitions(&self) -> (&[Partition], &[Partition]) {
        (&self.row_parts, &self.col_parts)
    }
}

fn comps(d: &SkewShape) -> Vec<Vec<usize>> {
    let rows = row_ranges(d);
    (1..=rows.len()).map(|k| overlap_composition(&rows, k)).collect()
}

fn parts(c: &[Vec<usize>]) -> Vec<Partition> {
    c.iter().map(|r| Partition::from_unsorted(r.clone())).collect()
}

/// `a_{k,l} = Σ_{l' ≥ l} (ρ^{(k)})'_{l'}`.
fn rectangles(row_parts: &[Partition], cols: usize) -> Vec<Vec<usize>> {
    row_parts
        .iter()
        .map(|rho| {
            let t = rho.conjugate();
            (1..=cols).map(|l| (l..=t.len()).map(|lp| t.part(lp - 1)).sum()).collect()
        })
        .collect()
}

pub fn overlaps(d: &SkewShape) -> OverlapProfile {
    let row_comps = comps(d);
    let col_comps = comps(&d.transpose());
    let row_parts = parts(&row_comps);
    let col_parts = parts(&col_comps);
    let rect_counts = rectangles(&row_parts, d.num_cols());
    OverlapProfile { row_comps, row_parts, col_comps, col_parts, rect_counts }
}

/// `s_D` itself: two diagrams are skew-equivalent exactly when their fingerprints agree.
pub fn fingerprint(d: &SkewShape) -> SchurVector {
    schur_expand_lr(d)
}

/// JSON summary of the invariants of a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub rank: usize,
    pub rho: Vec<Vec<usize>>,
    pub gamma: Vec<Vec<usize>>,
    pub rect: Vec<Vec<usize>>,
}

pub fn invariant_report(d: &SkewShape) -> InvariantReport {
    let p = overlaps(d);
    InvariantReport {
        rank: frobenius_rank(d),
        rho: p.row_parts.iter().map(|x| x.parts().to_vec()).collect(),
        gamma: p.col_parts.iter().map(|x| x.parts().to_vec()).collect(),
        rect: p.rect_counts,
    }
}
