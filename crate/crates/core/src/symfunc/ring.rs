use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::lr::schur_multiply;
use super::vector::{HPolynomial, SchurVector};

/// Commutative ring operations needed by determinant expansion.
pub trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &BigInt) -> Self;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &BigInt) -> Self {
        self * c
    }
}

impl Ring for HPolynomial {
    fn zero() -> Self {
        HPolynomial::zero()
    }
    fn one() -> Self {
        HPolynomial::one()
    }
    fn is_zero(&self) -> bool {
        HPolynomial::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &BigInt) -> Self {
        HPolynomial::scale(self, c)
    }
}

impl Ring for SchurVector {
    fn zero() -> Self {
        SchurVector::zero()
    }
    fn one() -> Self {
        SchurVector::one()
    }
    fn is_zero(&self) -> bool {
        SchurVector::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        schur_multiply(self, other)
    }
    fn scale(&self, c: &BigInt) -> Self {
        SchurVector::scale(self, c)
    }
}

/// Determinant of a square matrix by Laplace expansion along rows, memoized on the
/// set of columns already used. Zero entries are skipped.
pub fn determinant<T: Ring>(matrix: &[Vec<T>]) -> T {
    let n = matrix.len();
    assert!(matrix.iter().all(|row| row.len() == n), "matrix must be square");
    assert!(n < 64, "matrix too large");
    let mut memo: HashMap<u64, T> = HashMap::new();
    minor(matrix, 0, 0, &mut memo)
}

fn minor<T: Ring>(m: &[Vec<T>], row: usize, used: u64, memo: &mut HashMap<u64, T>) -> T {
    if row == m.len() {
        return T::one();
    }
    if let Some(v) = memo.get(&used) {
        return v.clone();
    }
    let mut total = T::zero();
    let mut position = 0;
    for (col, entry) in m[row].iter().enumerate() {
        if used & (1 << col) != 0 {
            continue;
        }
        if !entry.is_zero() {
            let sub = minor(m, row + 1, used | (1 << col), memo);
            if !sub.is_zero() {
                let term = entry.mul(&sub);
                total = if position % 2 == 0 { total.add(&term) } else { total.sub(&term) };
            }
        }
        position += 1;
    }
    memo.insert(used, total.clone());
    total
}
