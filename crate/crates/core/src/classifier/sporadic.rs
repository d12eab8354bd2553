use serde::Serialize;

use crate::diagrams::SkewShape;
use crate::error::{Result, SkewError};
use crate::invariants::fingerprint;

const FIXTURES: [&str; 6] = [
    include_str!("../../fixtures/sporadic/pair1.txt"),
    include_str!("../../fixtures/sporadic/pair2.txt"),
    include_str!("../../fixtures/sporadic/pair3.txt"),
    include_str!("../../fixtures/sporadic/pair4.txt"),
    include_str!("../../fixtures/sporadic/pair5.txt"),
    include_str!("../../fixtures/sporadic/pair6.txt"),
];

/// Two equivalent diagrams not produced by the known constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SporadicPair {
    pub id: usize,
    pub left: SkewShape,
    pub right: SkewShape,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SporadicResult {
    pub pair_id: usize,
    pub equal: bool,
}

/// Parses a fixture: two ASCII diagrams separated by a blank line.
pub fn parse_pair(id: usize, text: &str) -> Result<SporadicPair> {
    let blocks: Vec<&str> = text.split("\n\n").map(str::trim).filter(|b| !b.is_empty()).collect();
    let [a, b] = blocks.as_slice() else {
        return Err(SkewError::Parse(format!("fixture {id} must hold exactly two diagrams")));
    };
    Ok(SporadicPair { id, left: SkewShape::from_ascii(a)?, right: SkewShape::from_ascii(b)? })
}

/// The six fixture pairs, numbered from 1.
pub fn sporadic_pairs() -> Vec<SporadicPair> {
    FIXTURES
        .iter()
        .enumerate()
        .map(|(i, t)| parse_pair(i + 1, t).expect("bundled fixtures parse"))
        .collect()
}

/// Compares fingerprints of the pair, and of the pair after rotation and after
/// transposition.
pub fn verify_pair(pair: &SporadicPair) -> SporadicResult {
    let (a, b) = (&pair.left, &pair.right);
    let equal = fingerprint(a) == fingerprint(b)
        && fingerprint(&a.rotate180()) == fingerprint(&b.rotate180())
        && fingerprint(&a.transpose()) == fingerprint(&b.transpose());
    SporadicResult { pair_id: pair.id, equal }
}

/// Verifies all six pairs; fails with `FixtureMismatch` naming the first bad pair.
pub fn verify_sporadics() -> Result<Vec<SporadicResult>> {
    let results: Vec<SporadicResult> = sporadic_pairs().iter().map(verify_pair).collect();
    if let Some(bad) = results.iter().find(|r| !r.equal) {
        return Err(SkewError::FixtureMismatch(format!("pair {} is not skew-equivalent", bad.pair_id)));
    }
    Ok(results)
}
