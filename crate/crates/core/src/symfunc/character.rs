use std::collections::HashMap;

use num_bigint::BigInt;

use super::vector::CharacterVector;
use crate::diagrams::{Partition, SkewShape};
use crate::error::{Result, SkewError};

/// `z_ν = Π_i i^{m_i} m_i!`.
pub fn z_nu(nu: &Partition) -> BigInt {
    let mut z = BigInt::from(1);
    for i in 1..=nu.part(0) {
        let m = nu.multiplicity(i);
        for k in 1..=m {
            z *= i * k;
        }
    }
    z
}

/// Murnaghan-Nakayama evaluation on beta-sets, memoized on the current outer shape.
struct Mn<'a> {
    inner: &'a [usize],
    nu: &'a [usize],
    memo: HashMap<(Vec<usize>, usize), i128>,
}

impl Mn<'_> {
    fn eval(&mut self, lambda: Vec<usize>, k: usize) -> i128 {
        if k == self.nu.len() {
            let equal = (0..lambda.len().max(self.inner.len()))
                .all(|i| lambda.get(i).copied().unwrap_or(0) == self.inner.get(i).copied().unwrap_or(0));
            return equal as i128;
        }
        if let Some(&v) = self.memo.get(&(lambda.clone(), k)) {
            return v;
        }
        let r = self.nu[k];
        let l = lambda.len();
        // Beta-set: β_i = λ_i + (l - 1 - i), strictly decreasing.
        let beta: Vec<usize> = (0..l).map(|i| lambda[i] + (l - 1 - i)).collect();
        let mut total = 0i128;
        for i in 0..l {
            let Some(target) = beta[i].checked_sub(r) else { continue };
            if beta.contains(&target) {
                continue;
            }
            let between = beta.iter().filter(|&&b| b > target && b < beta[i]).count();
            let mut next = beta.clone();
            next[i] = target;
            next.sort_unstable_by(|a, b| b.cmp(a));
            let shape: Vec<usize> = (0..l).map(|j| next[j] - (l - 1 - j)).collect();
            if (0..l).any(|j| shape[j] < self.inner.get(j).copied().unwrap_or(0)) {
                continue;
            }
            let mut trimmed = shape;
            while trimmed.last() == Some(&0) {
                trimmed.pop();
            }
            let v = self.eval(trimmed, k + 1);
            total += if between % 2 == 0 { v } else { -v };
        }
        self.memo.insert((lambda, k), total);
        total
    }
}

fn mn(d: &SkewShape, nu: &Partition) -> i128 {
    let mut m = Mn { inner: d.inner().parts(), nu: nu.parts(), memo: HashMap::new() };
    m.eval(d.outer().parts().to_vec(), 0)
}

/// `χ^D(ν)`, the signed count of border-strip tableaux of shape `D` and type `ν`.
pub fn character(d: &SkewShape, nu: &Partition) -> Result<BigInt> {
    if nu.weight() != d.size() {
        return Err(SkewError::WeightMismatch { diagram: d.size(), partition: nu.weight() });
    }
    Ok(BigInt::from(mn(d, nu)))
}

/// All values `χ^D(ν)` for `ν ⊢ |D|`, so that `s_D = Σ_ν z_ν^{-1} χ^D(ν) p_ν`.
pub fn character_vector(d: &SkewShape) -> CharacterVector {
    Partition::all(d.size())
        .into_iter()
        .map(|nu| {
            let v = BigInt::from(mn(d, &nu));
            (nu, v)
        })
        .collect()
}

/// Minimum number of ribbons in a ribbon decomposition of `D`: the least `ℓ(ν)`
/// with `χ^D(ν) ≠ 0`.
pub fn frobenius_rank(d: &SkewShape) -> usize {
    if d.is_empty() {
        return 0;
    }
    let mut nus = Partition::all(d.size());
    nus.sort_by_key(|nu| nu.len());
    nus.into_iter()
        .find(|nu| mn(d, nu) != 0)
        .map(|nu| nu.len())
        .expect("some character value is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn basic_values() {
        let row: SkewShape = "4/".parse().unwrap();
        assert_eq!(character(&row, &partition![4]).unwrap(), BigInt::from(1));
        let col: SkewShape = "1,1,1/".parse().unwrap();
        assert_eq!(character(&col, &partition![3]).unwrap(), BigInt::from(1));
        assert_eq!(character(&col, &partition![2, 1]).unwrap(), BigInt::from(-1));
        // Degree of the representation of shape (3,2): 5.
        assert_eq!(character(&"3,2/".parse().unwrap(), &partition![1, 1, 1, 1, 1]).unwrap(), BigInt::from(5));
        assert!(matches!(character(&row, &partition![3]), Err(SkewError::WeightMismatch { .. })));
        assert_eq!(z_nu(&partition![2, 2, 1]), BigInt::from(8));
        assert_eq!(z_nu(&partition![1, 1, 1]), BigInt::from(6));
    }

    #[test]
    fn staircase_vanishes_on_even_parts() {
        let d: SkewShape = "4,3,2,1/".parse().unwrap();
        for (nu, v) in character_vector(&d).iter() {
            assert!(nu.parts().iter().all(|p| p % 2 == 1), "{nu:?} -> {v}");
        }
    }

    #[test]
    fn ranks() {
        assert_eq!(frobenius_rank(&"2,2/".parse().unwrap()), 2);
        assert_eq!(frobenius_rank(&"3,3,3/".parse().unwrap()), 3);
        assert_eq!(frobenius_rank(&"3,2,2/1,1".parse().unwrap()), 1);
        assert_eq!(frobenius_rank(&SkewShape::single_cell()), 1);
    }
}
