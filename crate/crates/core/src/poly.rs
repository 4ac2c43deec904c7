//! Dense univariate polynomials with integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ring::RingElement;

/// Coefficients indexed by degree, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c X^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The indeterminate `X`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation at a ring element; constants become multiples of `V_1`.
    pub fn eval_ring(&self, x: &RingElement) -> RingElement {
        let unit = RingElement::one(x.group());
        self.coeffs
            .iter()
            .rev()
            .fold(RingElement::zero(x.group()), |acc, c| {
                acc.mul(x)
                    .expect("same group")
                    .add(&unit.scale(c))
                    .expect("same group")
            })
    }

    /// Quotient by `divisor`, which must be nonzero and divide `self` exactly
    /// over the integers.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Result<IntPolynomial> {
        let (dd, lead) = match (divisor.degree(), divisor.leading()) {
            (Some(d), Some(l)) => (d, l.clone()),
            _ => return Err(Error::Parse("division by the zero polynomial".into())),
        };
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok(IntPolynomial::zero());
        };
        if nd < dd {
            return Err(Error::Parse("divisor does not divide".into()));
        }
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::Parse("divisor does not divide".into()));
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &qk * d;
            }
            quot[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::Parse("divisor does not divide".into()));
        }
        Ok(IntPolynomial::new(quot))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

/// Renders highest degree first, e.g. `X^4 - 3X^2 + 1`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{k}")?,
            }
        }
        Ok(())
    }
}

/// JSON array of coefficients, constant term first.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let nums: Vec<serde_json::Number> = self
            .coeffs
            .iter()
            .map(|c| serde_json::Number::from_str(&c.to_string()).expect("integer literal"))
            .collect();
        nums.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let nums = Vec::<serde_json::Number>::deserialize(deserializer)?;
        nums.iter()
            .map(|n| {
                BigInt::from_str(&n.to_string())
                    .map_err(|_| serde::de::Error::custom(format!("non-integer coefficient {n}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(IntPolynomial::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_and_reports_degree() {
        let p = IntPolynomial::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(IntPolynomial::from_i64(&[0, 0]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = IntPolynomial::from_i64(&[-1, 1]);
        let b = IntPolynomial::from_i64(&[1, 1]);
        assert_eq!(&a * &b, IntPolynomial::from_i64(&[-1, 0, 1]));
        assert_eq!(&a + &b, IntPolynomial::from_i64(&[0, 2]));
        assert_eq!(&a - &a, IntPolynomial::zero());
        assert_eq!((&a * &b).div_exact(&a).unwrap(), b);
        assert!(b.div_exact(&IntPolynomial::from_i64(&[0, 2])).is_err());
        assert!(IntPolynomial::from_i64(&[1, 0, 1]).div_exact(&a).is_err());
    }

    #[test]
    fn display_and_json() {
        let p = IntPolynomial::from_i64(&[1, 0, -3, 0, 1]);
        assert_eq!(p.to_string(), "X^4 - 3X^2 + 1");
        assert_eq!(IntPolynomial::from_i64(&[-1]).to_string(), "-1");
        assert_eq!(serde_json::to_string(&p).unwrap(), "[1,0,-3,0,1]");
        let back: IntPolynomial = serde_json::from_str("[1,0,-3,0,1]").unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn evaluation() {
        let p = IntPolynomial::from_i64(&[-1, 0, 6, 0, -5, 0, 1]);
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(7));
    }
}
