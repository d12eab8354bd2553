use std::collections::HashMap;

use num_bigint::BigInt;

use super::vector::{MonomialVector, SchurVector};
use crate::diagrams::{Partition, SkewShape};

/// Number of column-strict tableaux of shape `d` with content `mu` (any order of parts).
pub fn kostka_number(d: &SkewShape, mu: &[usize]) -> BigInt {
    if mu.iter().sum::<usize>() != d.size() {
        return BigInt::from(0);
    }
    let outer = d.outer().parts().to_vec();
    let inner: Vec<usize> = (0..outer.len()).map(|i| d.inner().part(i)).collect();
    // Entries 1, 2, … are placed in turn, each as a horizontal strip.
    let mut states: HashMap<Vec<usize>, BigInt> = HashMap::new();
    states.insert(inner, BigInt::from(1));
    for &m in mu {
        let mut next: HashMap<Vec<usize>, BigInt> = HashMap::new();
        for (kappa, count) in states {
            for grown in horizontal_strips(&kappa, &outer, m) {
                *next.entry(grown).or_default() += &count;
            }
        }
        states = next;
    }
    states.remove(&outer).unwrap_or_default()
}

/// Shapes `κ'` with `κ ⊆ κ' ⊆ λ` and `κ'/κ` a horizontal strip of size `m`.
fn horizontal_strips(kappa: &[usize], lambda: &[usize], m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = kappa.to_vec();
    fn go(i: usize, left: usize, kappa: &[usize], lambda: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == kappa.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // Row i may grow up to the old length of row i-1 and up to λ_i.
        let cap = if i == 0 { lambda[0] } else { lambda[i].min(kappa[i - 1]) };
        let room = cap.saturating_sub(kappa[i]);
        for s in 0..=room.min(left) {
            cur[i] = kappa[i] + s;
            go(i + 1, left - s, kappa, lambda, cur, out);
        }
        cur[i] = kappa[i];
    }
    go(0, m, kappa, lambda, &mut cur, &mut out);
    out
}

/// `s_D` in the monomial basis, by direct tableau counting.
pub fn kostka_expand(d: &SkewShape) -> MonomialVector {
    Partition::all(d.size())
        .into_iter()
        .map(|mu| {
            let k = kostka_number(d, mu.parts());
            (mu, k)
        })
        .collect()
}

/// Converts a Schur expansion to the monomial basis with the Kostka matrix of
/// straight shapes.
pub fn schur_to_monomial(f: &SchurVector) -> MonomialVector {
    let mut out = MonomialVector::zero();
    for (lambda, c) in f.iter() {
        let shape = SkewShape::straight(lambda.clone());
        for mu in Partition::all(lambda.weight()) {
            if !mu.dominated_by(lambda) {
                continue;
            }
            let k = kostka_number(&shape, mu.parts());
            out.add_term(mu, c * k);
        }
    }
    out
}
