use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SkewError};

/// A weakly decreasing sequence of positive integers. The empty partition is allowed.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(SkewError::Parse(format!("partition parts must be positive: {parts:?}")));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(SkewError::Parse(format!("partition parts must be weakly decreasing: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from a weakly decreasing sequence, dropping trailing zeros.
    pub(crate) fn from_trimmed(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    /// Sorts arbitrary positive parts into a partition; zeros are discarded.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The i-th part (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (0..cols)
            .map(|j| self.0.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition(parts)
    }

    /// Inclusion order: `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Dominance order on partitions of equal weight: `self ≤ other`.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// Multiplicity of the part `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &[usize], i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::from_trimmed(cur.clone()));
                return;
            }
            for p in 0..=outer[i].min(cap) {
                cur.push(p);
                go(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.0, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::from_unsorted(parts.to_vec())
    }
}

#[macro_export]
/// `partition![3, 2, 1]`; panics if the parts are not a partition.
macro_rules! partition {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => { $crate::Partition::new(vec![$($p),+]).expect("valid partition") };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_and_weight() {
        let p = partition![4, 2, 1];
        assert_eq!(p.conjugate(), partition![3, 2, 1, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
        assert_eq!(p.weight(), 7);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn dominance() {
        assert!(partition![2, 2].dominated_by(&partition![3, 1]));
        assert!(!partition![3, 1].dominated_by(&partition![2, 2]));
        assert!(partition![2, 1, 1].dominated_by(&partition![2, 2]));
        assert!(!partition![3, 3].dominated_by(&partition![4, 1]));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn subpartitions_of_staircase() {
        // Catalan: partitions inside (n-1,...,1) number C_n.
        assert_eq!(partition![2, 1].subpartitions().len(), 5);
        assert_eq!(partition![3, 2, 1].subpartitions().len(), 14);
    }
}
