use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Data of the cyclic `p`-group `C_q` with `q = p^alpha`.
///
/// Indices of indecomposables are bounded by `q`, and `q` is capped at
/// `2^31` so tensor multiplicities (at most `q^2`) fit in machine words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupSpec {
    p: u64,
    alpha: u32,
    q: u64,
}

pub(crate) const MAX_ORDER: u64 = 1 << 31;

impl GroupSpec {
    pub fn new(p: u64, alpha: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if alpha == 0 {
            return Err(Error::ZeroAlpha);
        }
        let q = checked_pow(p, alpha)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(Error::OrderTooLarge { p, alpha })?;
        Ok(GroupSpec { p, alpha, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `p^k` for `k <= alpha`.
    pub fn p_pow(&self, k: u32) -> u64 {
        debug_assert!(k <= self.alpha);
        self.p.pow(k)
    }

    pub(crate) fn check_level(&self, level: u32) -> Result<()> {
        if level < self.alpha {
            Ok(())
        } else {
            Err(Error::LevelOutOfRange {
                level,
                alpha: self.alpha,
            })
        }
    }

    pub(crate) fn check_index(&self, index: u64) -> Result<()> {
        if (1..=self.q).contains(&index) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index, max: self.q })
        }
    }

    /// Base-`p` digits of `n`, little-endian, padded to `alpha` places.
    pub fn digits(&self, n: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.alpha as usize);
        let mut n = n;
        for _ in 0..self.alpha {
            out.push(n % self.p);
            n /= self.p;
        }
        out
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{} (p = {}, alpha = {})", self.q, self.p, self.alpha)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructs_valid_groups() {
        let g = GroupSpec::new(5, 3).unwrap();
        assert_eq!(g.q(), 125);
        assert_eq!(g.p_pow(2), 25);
        assert_eq!(g.digits(61), vec![1, 2, 2]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(GroupSpec::new(4, 2), Err(Error::NotPrime(4)));
        assert_eq!(GroupSpec::new(1, 2), Err(Error::NotPrime(1)));
        assert_eq!(GroupSpec::new(3, 0), Err(Error::ZeroAlpha));
        assert!(matches!(
            GroupSpec::new(2, 40),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
