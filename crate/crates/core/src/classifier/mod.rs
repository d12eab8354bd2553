//! Exhaustive skew-equivalence classification of connected diagrams of a given size.

mod explain;
mod sporadic;

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::diagrams::{enumerate_connected, Partition, SkewShape};
use crate::invariants::{fingerprint, frobenius_rank, overlaps};
use crate::symfunc::SchurVector;

pub use explain::{explain_by_generators, ClassExplanation, Explainer, Generator, PairExplanation};
pub use sporadic::{sporadic_pairs, verify_pair, verify_sporadics, SporadicPair, SporadicResult};

fn compact_list<S: Serializer>(members: &[SkewShape], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(members.iter().map(|m| m.to_compact()))
}

/// A skew-equivalence class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceClass {
    /// Canonical members in increasing order.
    #[serde(serialize_with = "compact_list")]
    pub members: Vec<SkewShape>,
    pub size: usize,
    pub rank: usize,
    pub power_of_two: bool,
    #[serde(skip)]
    pub fingerprint: SchurVector,
    #[serde(skip)]
    pub cells: usize,
    /// Whether `D ↦ D*` maps the class to itself.
    #[serde(skip)]
    pub closed_under_rotation: bool,
    /// Whether `D ↦ D^t` maps the class to itself.
    #[serde(skip)]
    pub closed_under_transpose: bool,
}

impl EquivalenceClass {
    fn new(mut members: Vec<SkewShape>, fingerprint: SchurVector) -> Self {
        members.sort();
        let size = members.len();
        let contains = |d: &SkewShape| members.binary_search(d).is_ok();
        let closed_under_rotation = members.iter().all(|m| contains(&m.rotate180()));
        let closed_under_transpose = members.iter().all(|m| contains(&m.transpose()));
        EquivalenceClass {
            rank: frobenius_rank(&members[0]),
            cells: members[0].size(),
            power_of_two: size.is_power_of_two(),
            closed_under_rotation,
            closed_under_transpose,
            members,
            size,
            fingerprint,
        }
    }

    pub fn is_ribbon_class(&self) -> bool {
        self.members.iter().all(|m| m.is_ribbon())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub classes: Vec<EquivalenceClass>,
    /// Class size to number of classes of that size.
    #[serde(skip)]
    pub histogram: BTreeMap<usize, usize>,
    /// Indices of classes whose size is not a power of two.
    #[serde(skip)]
    pub violations: Vec<usize>,
    pub sporadics: Vec<SporadicResult>,
}

impl ClassificationReport {
    pub fn total_diagrams(&self) -> usize {
        self.classes.iter().map(|c| c.size).sum()
    }

    /// Classes with more than one member.
    pub fn nontrivial(&self) -> impl Iterator<Item = &EquivalenceClass> {
        self.classes.iter().filter(|c| c.size > 1)
    }
}

/// Options for [`classify_with`].
#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Bucket by overlap partitions before comparing fingerprints.
    pub prefilter: bool,
    /// Verify the sporadic fixture pairs and attach the results.
    pub sporadics: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { jobs: None, prefilter: true, sporadics: true }
    }
}

type PrefilterKey = (Vec<Partition>, Vec<Partition>);

fn prefilter_key(d: &SkewShape) -> PrefilterKey {
    let p = overlaps(d);
    (p.row_parts, p.col_parts)
}

fn group_bucket(bucket: Vec<SkewShape>) -> Vec<EquivalenceClass> {
    let mut by_fp: HashMap<SchurVector, Vec<SkewShape>> = HashMap::new();
    for d in bucket {
        by_fp.entry(fingerprint(&d)).or_default().push(d);
    }
    by_fp.into_iter().map(|(fp, members)| EquivalenceClass::new(members, fp)).collect()
}

fn run(n: usize, opts: &ClassifyOptions) -> ClassificationReport {
    let diagrams = enumerate_connected(n);
    let buckets: Vec<Vec<SkewShape>> = if opts.prefilter {
        let keys: Vec<PrefilterKey> = diagrams.par_iter().map(prefilter_key).collect();
        let mut map: BTreeMap<PrefilterKey, Vec<SkewShape>> = BTreeMap::new();
        for (k, d) in keys.into_iter().zip(diagrams) {
            map.entry(k).or_default().push(d);
        }
        map.into_values().collect()
    } else {
        vec![diagrams]
    };
    let mut classes: Vec<EquivalenceClass> = if opts.prefilter {
        buckets.into_par_iter().flat_map_iter(group_bucket).collect()
    } else {
        let all = buckets.into_iter().next().unwrap_or_default();
        let fps: Vec<SchurVector> = all.par_iter().map(fingerprint).collect();
        let mut by_fp: HashMap<SchurVector, Vec<SkewShape>> = HashMap::new();
        for (fp, d) in fps.into_iter().zip(all) {
            by_fp.entry(fp).or_default().push(d);
        }
        by_fp.into_par_iter().map(|(fp, m)| EquivalenceClass::new(m, fp)).collect()
    };
    classes.sort_by(|a, b| a.members[0].cmp(&b.members[0]));
    let mut histogram = BTreeMap::new();
    for c in &classes {
        *histogram.entry(c.size).or_insert(0) += 1;
    }
    let violations = classes.iter().enumerate().filter(|(_, c)| !c.power_of_two).map(|(i, _)| i).collect();
    let sporadics = if opts.sporadics { sporadic_pairs().iter().map(verify_pair).collect() } else { Vec::new() };
    ClassificationReport { n, classes, histogram, violations, sporadics }
}

pub fn classify_with(n: usize, opts: &ClassifyOptions) -> ClassificationReport {
    match opts.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .expect("thread pool")
            .install(|| run(n, opts)),
        None => run(n, opts),
    }
}

/// Partition of the connected diagrams with `n` cells into skew-equivalence classes.
pub fn classify(n: usize) -> ClassificationReport {
    classify_with(n, &ClassifyOptions::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiet() -> ClassifyOptions {
        ClassifyOptions { sporadics: false, ..Default::default() }
    }

    #[test]
    fn small_sizes_are_rotation_pairs() {
        for n in 1..=3 {
            let r = classify_with(n, &quiet());
            assert_eq!(r.total_diagrams(), enumerate_connected(n).len());
            for c in &r.classes {
                assert!(c.size <= 2);
                if c.size == 2 {
                    assert_eq!(c.members[0].rotate180(), c.members[1]);
                }
            }
        }
    }

    #[test]
    fn prefilter_is_sound() {
        for n in 4..=7 {
            let a = classify_with(n, &quiet());
            let b = classify_with(n, &ClassifyOptions { prefilter: false, ..quiet() });
            let ma: Vec<_> = a.classes.iter().map(|c| &c.members).collect();
            let mb: Vec<_> = b.classes.iter().map(|c| &c.members).collect();
            assert_eq!(ma, mb);
        }
    }

    #[test]
    fn report_json_shape() {
        let r = classify_with(2, &quiet());
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["n"], 2);
        assert_eq!(json["classes"][0]["members"][0], "1,1/");
        assert!(json["classes"][0].get("fingerprint").is_none());
    }
}
