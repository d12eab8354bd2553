use std::collections::HashMap;

use super::lr::schur_expand_lr;
use super::ring::determinant;
use super::vector::SchurVector;
use crate::diagrams::{Composition, SkewShape};
use crate::error::{Result, SkewError};
use crate::ops::{HashRibbon, OutsideDecomposition};

/// The matrix `(s_{θ_i # θ_j})` of an outside decomposition.
pub fn hamel_goulden_matrix(pi: &OutsideDecomposition) -> Vec<Vec<SchurVector>> {
    let mut memo: HashMap<Composition, SchurVector> = HashMap::new();
    let n = pi.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match pi.hash_ribbon(i, j) {
                    HashRibbon::Empty => SchurVector::one(),
                    HashRibbon::Undefined => SchurVector::zero(),
                    HashRibbon::Interval(p, q) => {
                        let ribbon = pi.sub_ribbon(p, q);
                        memo.entry(ribbon)
                            .or_insert_with_key(|r| schur_expand_lr(&SkewShape::from_ribbon(r)))
                            .clone()
                    }
                })
                .collect()
        })
        .collect()
}

/// `s_D = det(s_{θ_i # θ_j})` for an outside decomposition `pi` of `d`.
pub fn hamel_goulden(d: &SkewShape, pi: &OutsideDecomposition) -> Result<SchurVector> {
    let covered: usize = pi.ribbons().iter().map(|r| r.weight()).sum();
    let span = d.content_range().map_or(0, |(lo, hi)| (hi - lo + 1) as usize);
    if covered != d.size() || pi.strip().weight() != span {
        return Err(SkewError::InvalidDecomposition(format!(
            "decomposition covers {covered} cells and {} diagonals, diagram has {} cells and {span} diagonals",
            pi.strip().weight(),
            d.size()
        )));
    }
    Ok(determinant(&hamel_goulden_matrix(pi)))
}
