use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::lr::pieri;
use super::ring::determinant;
use super::vector::{HPolynomial, SchurVector};
use crate::diagrams::{Partition, SkewShape};

/// `det(h_{λ_i - μ_j - i + j})`.
pub fn jacobi_trudi(d: &SkewShape) -> HPolynomial {
    let lambda = d.outer();
    let mu = d.inner();
    let l = lambda.len();
    let matrix: Vec<Vec<HPolynomial>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| HPolynomial::h(lambda.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    determinant(&matrix)
}

/// `det(e_{λ'_i - μ'_j - i + j})`; the keys of the result are `e`-subscripts.
pub fn dual_jacobi_trudi(d: &SkewShape) -> HPolynomial {
    jacobi_trudi(&d.transpose())
}

/// `e_r` in the `h` basis: `det(h_{1-i+j})` of size `r`.
pub fn e_in_h(r: usize) -> HPolynomial {
    static CACHE: OnceLock<Mutex<HashMap<usize, HPolynomial>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&r) {
        return v.clone();
    }
    let v = jacobi_trudi(&SkewShape::straight(Partition::from_unsorted(vec![1; r])));
    cache.lock().unwrap().insert(r, v.clone());
    v
}

/// The involution `ω` on polynomials in the `h_r`: `h_r ↦ e_r`.
pub fn omega_h(f: &HPolynomial) -> HPolynomial {
    f.substitute(e_in_h)
}

/// The involution `ω` on Schur expansions: `s_λ ↦ s_{λ'}`.
pub fn omega_schur(f: &SchurVector) -> SchurVector {
    f.conjugate()
}

/// `h_λ` products expanded in Schur functions by repeated Pieri steps.
pub fn h_to_schur(f: &HPolynomial) -> SchurVector {
    let mut out = SchurVector::zero();
    for (mono, c) in f.iter() {
        let mut acc: HashMap<Partition, num_bigint::BigInt> = HashMap::new();
        acc.insert(Partition::empty(), c.clone());
        for &r in mono.parts() {
            let mut next: HashMap<Partition, num_bigint::BigInt> = HashMap::new();
            for (lambda, k) in acc {
                for nu in pieri(&lambda, r) {
                    *next.entry(nu).or_default() += &k;
                }
            }
            acc = next;
        }
        for (lambda, k) in acc {
            out.add_term(lambda, k);
        }
    }
    out
}

/// `s_λ` in the `h` basis (cached Jacobi-Trudi determinant of the straight shape).
pub fn straight_in_h(lambda: &Partition) -> HPolynomial {
    static CACHE: OnceLock<Mutex<HashMap<Partition, HPolynomial>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(lambda) {
        return v.clone();
    }
    let v = jacobi_trudi(&SkewShape::straight(lambda.clone()));
    cache.lock().unwrap().insert(lambda.clone(), v.clone());
    v
}

/// Schur expansion rewritten in the `h` basis.
pub fn schur_to_h(f: &SchurVector) -> HPolynomial {
    let mut out = HPolynomial::zero();
    for (lambda, c) in f.iter() {
        out = out + straight_in_h(lambda).scale(c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn small_determinants() {
        assert_eq!(jacobi_trudi(&"3/".parse().unwrap()), HPolynomial::h(3));
        let square = jacobi_trudi(&"2,2/".parse().unwrap());
        assert_eq!(square, &HPolynomial::h(2) * &HPolynomial::h(2) - &HPolynomial::h(3) * &HPolynomial::h(1));
        assert_eq!(jacobi_trudi(&SkewShape::empty()), HPolynomial::one());
        // e_2 = h_1^2 - h_2.
        assert_eq!(e_in_h(2), HPolynomial::monomial(&[1, 1]) - HPolynomial::h(2));
    }

    #[test]
    fn omega_is_an_involution() {
        let f = HPolynomial::monomial(&[3, 1]) - HPolynomial::monomial(&[2, 2]) + HPolynomial::h(4);
        assert_eq!(omega_h(&omega_h(&f)), f);
        assert_eq!(omega_h(&HPolynomial::h(3)), e_in_h(3));
        let sq = SchurVector::basis(partition![2, 2]);
        assert_eq!(omega_schur(&sq), sq);
    }

    #[test]
    fn basis_change_round_trip() {
        assert_eq!(
            h_to_schur(&HPolynomial::monomial(&[2, 1])),
            SchurVector::from_terms([(partition![3], 1), (partition![2, 1], 1)])
        );
        for lam in Partition::all(6) {
            let s = SchurVector::basis(lam.clone());
            assert_eq!(h_to_schur(&schur_to_h(&s)), s);
        }
        let d: SkewShape = "4,4,3,3,2/3,3,1".parse().unwrap();
        assert_eq!(h_to_schur(&jacobi_trudi(&d)), crate::symfunc::schur_expand_lr(&d));
    }
}
