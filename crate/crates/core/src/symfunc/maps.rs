use super::lr::schur_expand_lr;
use super::vector::{HPolynomial, SchurVector};
use crate::diagrams::{Composition, Partition, SkewShape};
use crate::error::Result;
use crate::ops::{amalgamate_power, compose_alpha_d};

/// `φ_ℓ`: `s_λ ↦ s_{λ + 1^ℓ}` when `ℓ(λ) ≤ ℓ`, and `0` otherwise.
pub fn phi_ell(f: &SchurVector, ell: usize) -> SchurVector {
    f.iter()
        .filter(|(lambda, _)| lambda.len() <= ell)
        .map(|(lambda, c)| {
            let parts = (0..ell).map(|i| lambda.part(i) + 1).collect();
            (Partition::from_unsorted(parts), c.clone())
        })
        .collect()
}

/// `[h_r](f)`: the coefficient of `h_r` when `f` is read as a polynomial in `h_r`
/// over the other `h_i`, i.e. the terms of `h_r`-degree exactly one, divided by `h_r`.
pub fn h_coeff(f: &HPolynomial, r: usize) -> HPolynomial {
    f.iter()
        .filter(|(mono, _)| mono.multiplicity(r) == 1)
        .map(|(mono, c)| {
            let rest: Vec<usize> = mono.parts().iter().copied().filter(|&p| p != r).collect();
            (Partition::from_unsorted(rest), c.clone())
        })
        .collect()
}

/// Expands the product `Π s_{D_i}` as the Schur function of a direct sum.
fn product_of_shapes(shapes: &[SkewShape]) -> SchurVector {
    schur_expand_lr(&SkewShape::direct_sum(shapes))
}

/// The algebra map `f ↦ f ∘ s_D`, determined by `h_r ↦ s_{(r)∘D}`.
pub fn circ_map(f: &HPolynomial, d: &SkewShape) -> SchurVector {
    let mut out = SchurVector::zero();
    for (mono, c) in f.iter() {
        let shapes: Vec<SkewShape> = mono
            .parts()
            .iter()
            .map(|&r| compose_alpha_d(&Composition::new(vec![r]).expect("positive part"), d))
            .collect();
        out = out + product_of_shapes(&shapes).scale(c);
    }
    out
}

/// `f ∘ω s_D`: homogenize `f` in the grading `deg(h_r) = deg(t) = 1`, then send
/// `h_r ↦ s_{D ⨿ω … ⨿ω D}` (`r` factors) and `t ↦ s_ω`.
pub fn circ_omega_map(f: &HPolynomial, d: &SkewShape, omega: &Composition) -> Result<SchurVector> {
    let degree = f.iter().map(|(mono, _)| mono.len()).max().unwrap_or(0);
    let omega_shape = SkewShape::from_ribbon(omega);
    let mut out = SchurVector::zero();
    for (mono, c) in f.iter() {
        let mut shapes = Vec::with_capacity(degree);
        for &r in mono.parts() {
            shapes.push(amalgamate_power(d, omega, r)?);
        }
        shapes.extend(std::iter::repeat_n(omega_shape.clone(), degree - mono.len()));
        out = out + product_of_shapes(&shapes).scale(c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::jacobi_trudi;
    use crate::{composition, partition};

    #[test]
    fn phi_and_coefficients() {
        assert_eq!(phi_ell(&SchurVector::basis(partition![2]), 2), SchurVector::basis(partition![3, 1]));
        assert!(phi_ell(&SchurVector::basis(partition![1, 1]), 1).is_zero());
        let f = HPolynomial::monomial(&[3, 1]) + HPolynomial::monomial(&[2, 2]);
        assert_eq!(h_coeff(&f, 3), HPolynomial::h(1));
        assert!(h_coeff(&HPolynomial::monomial(&[3, 3]), 3).is_zero());
    }

    #[test]
    fn circ_generators() {
        let beta = composition![2, 1];
        let ribbon = SkewShape::from_ribbon(&beta);
        for r in 1..=3 {
            let expected = schur_expand_lr(&compose_alpha_d(&Composition::new(vec![r]).unwrap(), &ribbon));
            assert_eq!(circ_map(&HPolynomial::h(r as i64), &ribbon), expected);
        }
        let d: SkewShape = "4,3/1".parse().unwrap();
        let omega = composition![1];
        for r in 1..=3 {
            let expected = schur_expand_lr(&amalgamate_power(&d, &omega, r).unwrap());
            assert_eq!(circ_omega_map(&HPolynomial::h(r as i64), &d, &omega).unwrap(), expected);
        }
    }

    #[test]
    fn square_circ_square() {
        let sq: SkewShape = "2,2/".parse().unwrap();
        let lhs = circ_map(&jacobi_trudi(&sq), &sq);
        let big: SkewShape = "5,5,4,4,2/3,1,1".parse().unwrap();
        let rhs = schur_expand_lr(&SkewShape::direct_sum(&[SkewShape::single_cell(), big]));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn amalgamated_composition() {
        use crate::ops::amalgamated_compose;
        let d: SkewShape = "4,3/1".parse().unwrap();
        let omega = composition![1];
        let alpha = composition![2, 1, 3];
        let lhs = schur_expand_lr(&amalgamated_compose(&alpha, &d, &omega).unwrap());
        let rhs = circ_omega_map(&jacobi_trudi(&SkewShape::from_ribbon(&alpha)), &d, &omega).unwrap();
        assert_eq!(lhs, rhs);

        let col = SkewShape::from_ribbon(&composition![1, 1]);
        let alpha = composition![1, 1, 1];
        let lhs = schur_expand_lr(&amalgamated_compose(&alpha, &col, &omega).unwrap());
        let rhs = circ_omega_map(&jacobi_trudi(&SkewShape::from_ribbon(&alpha)), &col, &omega).unwrap();
        assert_eq!(lhs, SchurVector::basis(partition![3, 3]));
        assert_eq!(rhs, SchurVector::from_terms([(partition![3, 3], 1), (partition![2, 2, 2], -1)]));
    }
}
