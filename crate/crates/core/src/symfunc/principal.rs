use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::vector::SchurVector;
use crate::diagrams::Partition;

/// A polynomial in `t` with rational coefficients, stored as an integer numerator
/// polynomial over a positive common denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalPolynomial {
    /// `numerator[k]` is the coefficient of `t^k`.
    pub numerator: Vec<BigInt>,
    pub denominator: BigInt,
}

impl PrincipalPolynomial {
    /// Exact value at an integer point; panics if it is not an integer.
    pub fn eval(&self, t: i64) -> BigInt {
        let t = BigInt::from(t);
        let mut acc = BigInt::zero();
        for c in self.numerator.iter().rev() {
            acc = acc * &t + c;
        }
        let (q, r) = acc.div_rem(&self.denominator);
        assert!(r.is_zero(), "principal specialization is integral at integer points");
        q
    }

    /// The largest `k` with `t^k` dividing the polynomial (`None` for zero).
    pub fn lowest_degree(&self) -> Option<usize> {
        self.numerator.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }
}

impl fmt::Display for PrincipalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .numerator
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{k}"),
            })
            .collect();
        let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        if self.denominator.is_one() {
            write!(f, "{body}")
        } else {
            write!(f, "({body})/{}", self.denominator)
        }
    }
}

/// `s_λ(1^t) = Π (t + c(x)) / Π h(x)` as rational coefficients.
fn straight_principal(lambda: &Partition) -> Vec<BigRational> {
    let conj = lambda.conjugate();
    let mut poly = vec![BigRational::one()];
    let mut hooks = BigInt::one();
    for i in 0..lambda.len() {
        for j in 0..lambda.part(i) {
            let content = BigRational::from_integer(BigInt::from(j as i64 - i as i64));
            let mut next = vec![BigRational::zero(); poly.len() + 1];
            for (k, c) in poly.iter().enumerate() {
                next[k + 1] += c;
                next[k] += c * &content;
            }
            poly = next;
            hooks *= (lambda.part(i) - j) + (conj.part(j) - i) - 1;
        }
    }
    let h = BigRational::from_integer(hooks);
    poly.into_iter().map(|c| c / &h).collect()
}

/// `f(1, …, 1, 0, 0, …)` with `t` ones, as a polynomial in `t`.
pub fn principal_eval(f: &SchurVector) -> PrincipalPolynomial {
    let mut total: Vec<BigRational> = Vec::new();
    for (lambda, c) in f.iter() {
        let p = straight_principal(lambda);
        if total.len() < p.len() {
            total.resize(p.len(), BigRational::zero());
        }
        let c = BigRational::from_integer(c.clone());
        for (k, v) in p.into_iter().enumerate() {
            total[k] += v * &c;
        }
    }
    while total.last().is_some_and(|c| c.is_zero()) {
        total.pop();
    }
    let denominator = total.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let numerator = total
        .iter()
        .map(|c| (c * BigRational::from_integer(denominator.clone())).to_integer())
        .collect();
    PrincipalPolynomial { numerator, denominator }
}
