use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagrams::Partition;

/// Sparse integer combination of basis elements indexed by partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
struct Terms(BTreeMap<Partition, BigInt>);

impl Terms {
    fn add_term(&mut self, key: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.0.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn scaled(&self, c: &BigInt) -> Terms {
        if c.is_zero() {
            return Terms::default();
        }
        Terms(self.0.iter().map(|(k, v)| (k.clone(), v * c)).collect())
    }

    fn merged(mut self, other: &Terms, sign: i32) -> Terms {
        for (k, v) in &other.0 {
            self.add_term(k.clone(), if sign < 0 { -v.clone() } else { v.clone() });
        }
        self
    }
}

/// Coefficients are written as JSON integers when they fit in 64 bits, else as strings.
mod coeff_json {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(c: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match c.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&c.to_string()),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Int(i64),
        Text(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(BigInt::from(v)),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SchurEntry {
    partition: Vec<usize>,
    #[serde(with = "coeff_json")]
    coeff: BigInt,
}

#[derive(Serialize, Deserialize)]
struct HEntry {
    subscripts: Vec<usize>,
    #[serde(with = "coeff_json")]
    coeff: BigInt,
}

macro_rules! sparse_type {
    ($name:ident, $entry:ident, $field:ident) => {
        impl $name {
            pub fn zero() -> Self {
                $name(Terms::default())
            }

            /// The basis element indexed by the empty partition.
            pub fn one() -> Self {
                Self::term(Partition::empty(), BigInt::one())
            }

            pub fn term(key: Partition, coeff: impl Into<BigInt>) -> Self {
                let mut t = Terms::default();
                t.add_term(key, coeff.into());
                $name(t)
            }

            pub fn basis(key: Partition) -> Self {
                Self::term(key, 1)
            }

            pub fn from_terms<I, C>(terms: I) -> Self
            where
                I: IntoIterator<Item = (Partition, C)>,
                C: Into<BigInt>,
            {
                let mut t = Terms::default();
                for (k, c) in terms {
                    t.add_term(k, c.into());
                }
                $name(t)
            }

            pub fn add_term(&mut self, key: Partition, coeff: impl Into<BigInt>) {
                self.0.add_term(key, coeff.into());
            }

            pub fn coeff(&self, key: &Partition) -> BigInt {
                self.0 .0.get(key).cloned().unwrap_or_default()
            }

            pub fn is_zero(&self) -> bool {
                self.0 .0.is_empty()
            }

            /// Number of nonzero terms.
            pub fn len(&self) -> usize {
                self.0 .0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0 .0.is_empty()
            }

            /// Terms in increasing lexicographic order of their index.
            pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Partition, &BigInt)> {
                self.0 .0.iter()
            }

            pub fn scale(&self, c: &BigInt) -> Self {
                $name(self.0.scaled(c))
            }

            pub fn is_nonnegative(&self) -> bool {
                self.0 .0.values().all(|c| !c.is_negative())
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                $name(self.0.clone().merged(&rhs.0, 1))
            }
        }

        impl Add for $name {
            type Output = $name;
            fn add(self, rhs: $name) -> $name {
                $name(self.0.merged(&rhs.0, 1))
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                $name(self.0.clone().merged(&rhs.0, -1))
            }
        }

        impl Sub for $name {
            type Output = $name;
            fn sub(self, rhs: $name) -> $name {
                $name(self.0.merged(&rhs.0, -1))
            }
        }

        impl Neg for $name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.scaled(&BigInt::from(-1)))
            }
        }

        impl FromIterator<(Partition, BigInt)> for $name {
            fn from_iter<I: IntoIterator<Item = (Partition, BigInt)>>(iter: I) -> Self {
                Self::from_terms(iter)
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.len()))?;
                for (k, c) in self.iter().rev() {
                    seq.serialize_element(&$entry { $field: k.parts().to_vec(), coeff: c.clone() })?;
                }
                seq.end()
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let entries: Vec<$entry> = Vec::deserialize(d)?;
                Ok(Self::from_terms(entries.into_iter().map(|e| (Partition::from_unsorted(e.$field), e.coeff))))
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.is_zero() {
                    return f.write_str("0");
                }
                for (i, (k, c)) in self.iter().rev().enumerate() {
                    let sign = if c.is_negative() { "-" } else { "+" };
                    if i > 0 {
                        write!(f, " {sign} ")?;
                    } else if c.is_negative() {
                        f.write_str("-")?;
                    }
                    let a = c.abs();
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    write!(f, "{}", Self::format_key(k))?;
                }
                Ok(())
            }
        }
    };
}

/// Integer combination of Schur functions `s_λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SchurVector(Terms);

sparse_type!(SchurVector, SchurEntry, partition);

impl SchurVector {
    fn format_key(k: &Partition) -> String {
        let body: Vec<String> = k.parts().iter().map(|p| p.to_string()).collect();
        format!("s({})", body.join(","))
    }

    /// `s_λ ↦ s_{λ'}`.
    pub fn conjugate(&self) -> SchurVector {
        self.iter().map(|(k, c)| (k.conjugate(), c.clone())).collect()
    }

    /// Common degree of all terms, if homogeneous.
    pub fn degree(&self) -> Option<usize> {
        let mut degrees = self.iter().map(|(k, _)| k.weight());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }
}

/// Integer polynomial in `h_1, h_2, …`; a monomial is the multiset of its subscripts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HPolynomial(Terms);

sparse_type!(HPolynomial, HEntry, subscripts);

impl HPolynomial {
    fn format_key(k: &Partition) -> String {
        if k.is_empty() {
            return "1".into();
        }
        k.parts().iter().map(|p| format!("h{p}")).collect::<Vec<_>>().join("")
    }

    /// `h_r` (with `h_0 = 1` and `h_r = 0` for `r < 0`).
    pub fn h(r: i64) -> HPolynomial {
        match r {
            r if r < 0 => HPolynomial::zero(),
            0 => HPolynomial::one(),
            r => HPolynomial::basis(Partition::from_unsorted(vec![r as usize])),
        }
    }

    pub fn monomial(subscripts: &[usize]) -> HPolynomial {
        HPolynomial::basis(Partition::from_unsorted(subscripts.to_vec()))
    }

    /// Substitutes each `h_r` by `image(r)` and multiplies out.
    pub fn substitute<T, F>(&self, mut image: F) -> T
    where
        T: super::Ring,
        F: FnMut(usize) -> T,
    {
        let mut cache: BTreeMap<usize, T> = BTreeMap::new();
        let mut total = T::zero();
        for (mono, c) in self.iter() {
            let mut prod = T::one();
            for &r in mono.parts() {
                let img = cache.entry(r).or_insert_with(|| image(r));
                prod = prod.mul(img);
                if prod.is_zero() {
                    break;
                }
            }
            total = total.add(&prod.scale(c));
        }
        total
    }
}

/// Integer combination of monomial symmetric functions `m_μ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MonomialVector(Terms);

sparse_type!(MonomialVector, SchurEntry, partition);

impl MonomialVector {
    fn format_key(k: &Partition) -> String {
        let body: Vec<String> = k.parts().iter().map(|p| p.to_string()).collect();
        format!("m({})", body.join(","))
    }
}

/// Character values `χ(ν)` indexed by cycle type `ν`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CharacterVector(Terms);

sparse_type!(CharacterVector, SchurEntry, partition);

impl CharacterVector {
    fn format_key(k: &Partition) -> String {
        let body: Vec<String> = k.parts().iter().map(|p| p.to_string()).collect();
        format!("χ({})", body.join(","))
    }
}

impl Mul for &HPolynomial {
    type Output = HPolynomial;
    fn mul(self, rhs: &HPolynomial) -> HPolynomial {
        let mut out = Terms::default();
        for (a, ca) in self.iter() {
            for (b, cb) in rhs.iter() {
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                out.add_term(Partition::from_unsorted(parts), ca * cb);
            }
        }
        HPolynomial(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn arithmetic_and_display() {
        let a = SchurVector::from_terms([(partition![2, 1], 2), (partition![3], 1)]);
        let b = SchurVector::from_terms([(partition![2, 1], -2)]);
        assert_eq!((&a + &b), SchurVector::basis(partition![3]));
        assert_eq!(a.to_string(), "s(3) + 2s(2,1)");
        let h = &HPolynomial::h(2) * &HPolynomial::h(2) - &HPolynomial::h(3) * &HPolynomial::h(1);
        assert_eq!(h.to_string(), "-h3h1 + h2h2");
        assert!(HPolynomial::h(-1).is_zero());
        assert_eq!(HPolynomial::h(0), HPolynomial::one());
    }

    #[test]
    fn json_order_is_descending() {
        let a = SchurVector::from_terms([(partition![1, 1], 1), (partition![2], 3)]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"[{"partition":[2],"coeff":3},{"partition":[1,1],"coeff":1}]"#);
        let back: SchurVector = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
        let h = HPolynomial::h(1);
        assert_eq!(serde_json::to_string(&h).unwrap(), r#"[{"subscripts":[1],"coeff":1}]"#);
    }
}
