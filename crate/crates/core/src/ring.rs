//! Virtual modules: integer combinations of the indecomposables `V_1..V_q`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::tensor;

/// An element of the representation ring expressed in the basis of
/// indecomposables. `V_0` denotes zero and is never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement {
    group: GroupSpec,
    coeffs: BTreeMap<u64, BigInt>,
}

impl RingElement {
    pub fn zero(group: GroupSpec) -> Self {
        RingElement {
            group,
            coeffs: BTreeMap::new(),
        }
    }

    /// The trivial module `V_1`, the ring unit.
    pub fn one(group: GroupSpec) -> Self {
        RingElement::basis_unchecked(group, 1)
    }

    /// The indecomposable `V_r`.
    pub fn basis(group: GroupSpec, r: u64) -> Result<Self> {
        group.check_index(r)?;
        Ok(Self::basis_unchecked(group, r))
    }

    pub(crate) fn basis_unchecked(group: GroupSpec, r: u64) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(r, BigInt::one());
        RingElement { group, coeffs }
    }

    /// Builds an element from `(index, coefficient)` pairs. Indices `<= 0`
    /// stand for `V_0` and are dropped; repeated indices accumulate.
    pub fn from_terms<I, C>(group: GroupSpec, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = RingElement::zero(group);
        for (index, c) in terms {
            if index <= 0 {
                continue;
            }
            let index = index as u64;
            group.check_index(index)?;
            out.add_term(index, c.into());
        }
        Ok(out)
    }

    pub(crate) fn add_term(&mut self, index: u64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(index).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&index);
        }
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, r: u64) -> BigInt {
        self.coeffs.get(&r).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending index order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&r, c)| (r, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest index with a nonzero coefficient.
    pub fn top_index(&self) -> Option<u64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Whether every coefficient is non-negative, i.e. this is an actual module.
    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Image under the dimension homomorphism `V_r -> r`.
    pub fn dim(&self) -> BigInt {
        self.coeffs.iter().map(|(&r, c)| c * BigInt::from(r)).sum()
    }

    fn check_group(&self, other: &RingElement) -> Result<()> {
        if self.group == other.group {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.check_group(other)?;
        let mut out = self.clone();
        for (&r, c) in &other.coeffs {
            out.add_term(r, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RingElement {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, c: &BigInt) -> RingElement {
        if c.is_zero() {
            return RingElement::zero(self.group);
        }
        RingElement {
            group: self.group,
            coeffs: self.coeffs.iter().map(|(&r, v)| (r, v * c)).collect(),
        }
    }

    /// Bilinear extension of the tensor product of indecomposables.
    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check_group(other)?;
        let mut acc: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (&r, a) in &self.coeffs {
            for (&s, b) in &other.coeffs {
                let ab = a * b;
                for &(t, mult) in tensor::decompose(self.group.p(), r, s).iter() {
                    *acc.entry(t).or_insert_with(BigInt::zero) += &ab * BigInt::from(mult);
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(RingElement {
            group: self.group,
            coeffs: acc,
        })
    }

    pub fn pow(&self, e: u32) -> RingElement {
        let mut acc = RingElement::one(self.group);
        for _ in 0..e {
            acc = acc.mul(self).expect("same group");
        }
        acc
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("ring elements always serialize")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Renders as `V12 - V8 + V2`, highest index first; the zero element is `0`.
impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (r, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "V{r}")?;
        }
        Ok(())
    }
}

fn big_to_number(c: &BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&c.to_string()).expect("integer literal")
}

impl Serialize for RingElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Coeffs<'a>(&'a BTreeMap<u64, BigInt>);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for (r, c) in self.0 {
                    map.serialize_entry(&r.to_string(), &big_to_number(c))?;
                }
                map.end()
            }
        }
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("p", &self.group.p())?;
        map.serialize_entry("alpha", &self.group.alpha())?;
        map.serialize_entry("coeffs", &Coeffs(&self.coeffs))?;
        map.end()
    }
}

#[derive(Deserialize)]
struct RawElement {
    p: u64,
    alpha: u32,
    coeffs: BTreeMap<String, serde_json::Number>,
}

impl<'de> Deserialize<'de> for RingElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawElement::deserialize(deserializer)?;
        let group = GroupSpec::new(raw.p, raw.alpha).map_err(de::Error::custom)?;
        let mut out = RingElement::zero(group);
        for (key, value) in raw.coeffs {
            let r: u64 = key.parse().map_err(de::Error::custom)?;
            group.check_index(r).map_err(de::Error::custom)?;
            let c = BigInt::from_str(&value.to_string())
                .map_err(|_| de::Error::custom(format!("non-integer coefficient {value}")))?;
            out.add_term(r, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(p: u64, alpha: u32) -> GroupSpec {
        GroupSpec::new(p, alpha).unwrap()
    }

    fn v(group: GroupSpec, terms: &[(i64, i64)]) -> RingElement {
        RingElement::from_terms(group, terms.iter().copied()).unwrap()
    }

    #[test]
    fn addition_prunes_zeros() {
        let g = g(5, 2);
        let x = v(g, &[(2, 1)]);
        assert!(x.add(&x.neg()).unwrap().is_zero());
        let three = v(g, &[(3, 1)]);
        assert_eq!(three.add(&three).unwrap(), v(g, &[(3, 2)]));
        let lhs = v(g, &[(12, 1), (8, -1)]).add(&v(g, &[(2, 1)])).unwrap();
        assert_eq!(lhs, v(g, &[(12, 1), (8, -1), (2, 1)]));
    }

    #[test]
    fn mismatched_groups_are_rejected() {
        let a = RingElement::one(g(2, 2));
        let b = RingElement::one(g(3, 2));
        assert_eq!(a.add(&b), Err(Error::GroupMismatch));
        assert_eq!(a.mul(&b), Err(Error::GroupMismatch));
    }

    #[test]
    fn dimension_of_examples() {
        let g = g(5, 3);
        assert_eq!(v(g, &[(12, 1), (8, -1), (2, 1)]).dim(), BigInt::from(6));
        assert_eq!(RingElement::zero(g).dim(), BigInt::zero());
    }

    #[test]
    fn v0_and_negative_indices_vanish() {
        let g = g(3, 2);
        assert_eq!(v(g, &[(0, 5), (-2, 1), (4, 1)]), v(g, &[(4, 1)]));
        assert!(RingElement::from_terms(g, [(10i64, 1i64)]).is_err());
    }

    #[test]
    fn display_uses_ascii_minus() {
        let g = g(5, 3);
        assert_eq!(
            v(g, &[(12, 1), (8, -1), (2, 1)]).to_string(),
            "V12 - V8 + V2"
        );
        assert_eq!(
            v(g, &[(11, 1), (9, -1), (1, 2)]).to_string(),
            "V11 - V9 + 2V1"
        );
        assert_eq!(v(g, &[(3, -2)]).to_string(), "-2V3");
        assert_eq!(RingElement::zero(g).to_string(), "0");
    }

    #[test]
    fn json_layout_is_sorted_numerically() {
        let g = g(5, 3);
        let x = v(g, &[(12, 1), (8, -1), (100, 3)]);
        assert_eq!(
            x.to_json_string(),
            r#"{"p":5,"alpha":3,"coeffs":{"8":-1,"12":1,"100":3}}"#
        );
        assert_eq!(RingElement::from_json_str(&x.to_json_string()).unwrap(), x);
    }

    #[test]
    fn json_handles_big_coefficients() {
        let g = g(2, 3);
        let huge = BigInt::from(10).pow(40);
        let mut x = RingElement::zero(g);
        x.add_term(3, huge.clone());
        let s = x.to_json_string();
        assert!(s.contains("10000000000000000000000000000000000000000"));
        assert_eq!(RingElement::from_json_str(&s).unwrap().coeff(3), huge);
    }

    #[test]
    fn json_rejects_out_of_range_index() {
        assert!(RingElement::from_json_str(r#"{"p":2,"alpha":1,"coeffs":{"3":1}}"#).is_err());
        assert!(RingElement::from_json_str(r#"{"p":2,"alpha":1,"coeffs":{"1":1.5}}"#).is_err());
    }
}
