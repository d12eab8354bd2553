use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SkewError};

/// An ordered sequence of positive integers.
///
/// Read as a ribbon, `parts[0]` is the bottom row and the rows go up from there.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

/// One step between consecutive cells of a ribbon, read southwest to northeast.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Right,
    Up,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(SkewError::Parse(format!("composition parts must be positive: {parts:?}")));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
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

    /// The reverse composition; as a ribbon this is the 180 degree rotation.
    pub fn reverse(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// Partial sums `{α1, α1+α2, …}` excluding the total; a subset of `[n-1]`.
    pub fn partial_sums(&self) -> BTreeSet<usize> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            out.insert(acc);
        }
        out
    }

    /// Inverse of [`Composition::partial_sums`].
    pub fn from_subset(n: usize, subset: &BTreeSet<usize>) -> Result<Self> {
        if n == 0 {
            return if subset.is_empty() { Ok(Composition::empty()) } else {
                Err(SkewError::Parse("nonempty subset for n = 0".into()))
            };
        }
        if subset.iter().any(|&s| s == 0 || s >= n) {
            return Err(SkewError::Parse(format!("subset {subset:?} not inside [{}]", n - 1)));
        }
        let mut parts = Vec::with_capacity(subset.len() + 1);
        let mut prev = 0;
        for &s in subset.iter().chain(std::iter::once(&n)) {
            parts.push(s - prev);
            prev = s;
        }
        Ok(Composition(parts))
    }

    /// Steps between consecutive cells of the ribbon, southwest to northeast.
    pub fn steps(&self) -> Vec<Step> {
        let mut steps = Vec::with_capacity(self.weight().saturating_sub(1));
        for (i, &p) in self.0.iter().enumerate() {
            if i > 0 {
                steps.push(Step::Up);
            }
            steps.extend(std::iter::repeat_n(Step::Right, p - 1));
        }
        steps
    }

    /// Ribbon with the given steps (so `steps.len() + 1` cells).
    pub fn from_steps(steps: &[Step]) -> Composition {
        let mut parts = vec![1];
        for s in steps {
            match s {
                Step::Right => *parts.last_mut().unwrap() += 1,
                Step::Up => parts.push(1),
            }
        }
        Composition(parts)
    }

    /// Concatenation `α·β` of ribbons.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// Near-concatenation `α⊙β` of ribbons.
    pub fn near_concat(&self, other: &Composition) -> Composition {
        if self.is_empty() {
            return other.clone();
        }
        if other.is_empty() {
            return self.clone();
        }
        let mut parts = self.0.clone();
        *parts.last_mut().unwrap() += other.0[0];
        parts.extend_from_slice(&other.0[1..]);
        Composition(parts)
    }

    /// All compositions of `n` (there are `2^(n-1)` for `n ≥ 1`), ordered by descent set.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition::empty()];
        }
        (0u64..1 << (n - 1))
            .map(|mask| {
                let steps: Vec<Step> = (0..n - 1)
                    .map(|b| if mask >> b & 1 == 1 { Step::Up } else { Step::Right })
                    .collect();
                Composition::from_steps(&steps)
            })
            .collect()
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

#[macro_export]
/// `composition![1, 3, 2, 2]`; panics on a zero part.
macro_rules! composition {
    () => { $crate::Composition::empty() };
    ($($p:expr),+ $(,)?) => { $crate::Composition::new(vec![$($p),+]).expect("valid composition") };
}
