//! The "pick-a-number" digit identity for an arbitrary base.
//!
//! Running the curly-U splitting with any base `b >= 2` on `n` produces an
//! index set `J` with `n = sum over j in J of prod (d_i + 1)`, where `d_i`
//! are the base-`b` digits of `j - 1`.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::checked_pow;

fn check_base(base: u64) -> Result<()> {
    if base < 2 {
        Err(Error::InvalidBase(base))
    } else {
        Ok(())
    }
}

/// Little-endian digits of `n` in `base`, no leading zeros (`0` gives `[]`).
pub fn to_digits(n: u64, base: u64) -> Result<Vec<u64>> {
    check_base(base)?;
    let mut out = Vec::new();
    let mut n = n;
    while n > 0 {
        out.push(n % base);
        n /= base;
    }
    Ok(out)
}

/// The curly-U recursion at level `beta`: split r = m b^beta + j
/// (0 <= j < b^beta) into the two branches m b^beta +- j when b does not
/// divide m and j != 0, otherwise pass r down unchanged.
pub(crate) fn curly_set(r: u64, base: u64, beta: u32) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    curly_into(r, base, beta, &mut out);
    out
}

fn curly_into(r: u64, base: u64, beta: u32, out: &mut BTreeSet<u64>) {
    if beta == 0 {
        assert!(out.insert(r), "curly-U recursion produced index {r} twice");
        return;
    }
    let Some(pb) = checked_pow(base, beta) else {
        // b^beta exceeds every u64, so m = 0.
        return curly_into(r, base, beta - 1, out);
    };
    let (m, j) = (r / pb, r % pb);
    if j != 0 && m % base != 0 {
        curly_into(r, base, beta - 1, out);
        curly_into(m * pb - j, base, beta - 1, out);
    } else {
        curly_into(r, base, beta - 1, out);
    }
}

fn trick_level(n: u64, base: u64) -> u32 {
    let mut beta = 0;
    let mut pb: u128 = 1;
    while pb <= n as u128 {
        pb *= base as u128;
        beta += 1;
    }
    beta
}

/// The index set `J` for `n`, with the smallest level `beta` such that
/// `base^beta > n`.
pub fn trick_set(n: u64, base: u64) -> Result<BTreeSet<u64>> {
    check_base(base)?;
    if n == 0 {
        return Err(Error::ArgumentOutOfRange {
            value: 0,
            what: "n (must be at least 1)",
        });
    }
    Ok(curly_set(n, base, trick_level(n, base)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrickTerm {
    pub j: u64,
    /// Little-endian digits of `j - 1`.
    pub digits: Vec<u64>,
    pub product: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrickCertificate {
    pub n: u64,
    pub base: u64,
    /// Sorted by decreasing `j`.
    pub terms: Vec<TrickTerm>,
    pub sum: u64,
}

impl TrickCertificate {
    /// The index set, ascending.
    pub fn j_set(&self) -> Vec<u64> {
        let mut js: Vec<u64> = self.terms.iter().map(|t| t.j).collect();
        js.sort_unstable();
        js
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }
}

/// Builds the certificate and checks that the products sum to `n`.
pub fn trick_certificate(n: u64, base: u64) -> Result<TrickCertificate> {
    let js = trick_set(n, base)?;
    let mut terms = Vec::with_capacity(js.len());
    let mut sum: u128 = 0;
    for &j in js.iter().rev() {
        let digits = to_digits(j - 1, base)?;
        // prod (d_i + 1) <= j, so this cannot overflow.
        let product: u64 = digits.iter().map(|d| d + 1).product();
        sum += product as u128;
        terms.push(TrickTerm { j, digits, product });
    }
    if sum != n as u128 {
        return Err(Error::IdentityViolation {
            n,
            base,
            sum: sum as u64,
        });
    }
    Ok(TrickCertificate {
        n,
        base,
        terms,
        sum: sum as u64,
    })
}

/// Checks every `n` in `1..=max_n`, returning the first failure.
pub fn verify_trick_range(max_n: u64, base: u64) -> Result<()> {
    check_base(base)?;
    (1..=max_n)
        .into_par_iter()
        .try_for_each(|n| trick_certificate(n, base).map(|_| ()))
}

impl fmt::Display for TrickCertificate {
    /// `62 = (3)(3)(2) + (3)(2)(3) + ...`; a single-factor product is printed bare.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} =", self.n)?;
        for (i, t) in self.terms.iter().enumerate() {
            f.write_str(if i == 0 { " " } else { " + " })?;
            match t.digits.len() {
                0 => f.write_str("1")?,
                1 => write!(f, "{}", t.digits[0] + 1)?,
                _ => {
                    for d in t.digits.iter().rev() {
                        write!(f, "({})", d + 1)?;
                    }
                }
            }
        }
        Ok(())
    }
}
