//! Ideals of induced representations and the ranks of their quotients.
//!
//! For `C_q` the ideal lives in the V-basis of rank `q`. For `C_m` with `p`
//! not dividing `m`, representations are modelled by characters, so the ring
//! is `Z[Y]/(Y^m - 1)` with basis `Y^0..Y^{m-1}`. A general `C_n = C_m x C_q`
//! uses the tensor basis `Y^i (x) V_j` at coordinate `i*q + (j - 1)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{checked_pow, is_prime, GroupSpec, MAX_ORDER};
use crate::lattice::{smith_normal_form, z_rank, LatticeBasis};
use crate::poly::IntPolynomial;
use crate::ring::RingElement;
use crate::ubasis::u_element;

/// `C_n` in characteristic `p`, split as `n = m * p^alpha` with `p` not dividing `m`.
/// `alpha = 0` is allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclicGroupSpec {
    n: u64,
    m: u64,
    p: u64,
    alpha: u32,
}

impl CyclicGroupSpec {
    pub fn new(n: u64, p: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ArgumentOutOfRange {
                value: 0,
                what: "group order n",
            });
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let (mut m, mut alpha) = (n, 0);
        while m % p == 0 {
            m /= p;
            alpha += 1;
        }
        Self::from_parts(m, p, alpha)
    }

    pub fn from_parts(m: u64, p: u64, alpha: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 || m.is_multiple_of(p) {
            return Err(Error::InvalidFactorization(format!("{p} divides m = {m}")));
        }
        let n = checked_pow(p, alpha)
            .and_then(|q| q.checked_mul(m))
            .filter(|&n| n <= MAX_ORDER)
            .ok_or(Error::OrderTooLarge { p, alpha })?;
        Ok(CyclicGroupSpec { n, m, p, alpha })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn q(&self) -> u64 {
        self.n / self.m
    }

    /// The Sylow `p` part, absent when `p` does not divide `n`.
    pub fn p_part(&self) -> Option<GroupSpec> {
        (self.alpha > 0).then(|| GroupSpec::new(self.p, self.alpha).expect("validated"))
    }
}

impl fmt::Display for CyclicGroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "C_{} = C_{} x C_{}^{} in characteristic {}",
            self.n, self.m, self.p, self.alpha, self.p
        )
    }
}

/// Span of `V_i` for `p | i`.
pub fn induced_ideal_q(group: GroupSpec) -> LatticeBasis {
    let (p, q) = (group.p(), group.q());
    LatticeBasis::standard(
        q as usize,
        (p..=q).step_by(p as usize).map(|i| (i - 1) as usize),
    )
}

fn coordinates(x: &RingElement) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); x.group().q() as usize];
    for (i, c) in x.terms() {
        v[(i - 1) as usize] = c.clone();
    }
    v
}

/// Whether the products `U_{(m-1)p+1} U_p` span the induced ideal.
pub fn principal_generation_check(group: GroupSpec) -> Result<bool> {
    let (p, q) = (group.p(), group.q());
    let up = u_element(group, p)?;
    let mut gens = Vec::new();
    for m in 1..=q / p {
        gens.push(coordinates(&u_element(group, (m - 1) * p + 1)?.mul(&up)?));
    }
    let products = LatticeBasis::new(q as usize, gens);
    Ok(products.same_span(&induced_ideal_q(group)))
}

fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Characters induced from the maximal subgroups `C_{m/l}` of `C_m`.
pub fn semisimple_ideal(m: u64) -> Result<LatticeBasis> {
    if m == 0 {
        return Err(Error::ArgumentOutOfRange {
            value: 0,
            what: "m",
        });
    }
    let rank = m as usize;
    let mut gens = Vec::new();
    for (l, _) in prime_factors(m) {
        let d = (m / l) as usize;
        for j in 0..d {
            let mut v = vec![BigInt::zero(); rank];
            for i in (j..rank).step_by(d) {
                v[i] = BigInt::one();
            }
            gens.push(v);
        }
    }
    Ok(LatticeBasis::new(rank, gens))
}

/// The ideal of representations induced from proper subgroups of `C_n`.
pub fn general_ideal(spec: CyclicGroupSpec) -> LatticeBasis {
    let (m, q) = (spec.m() as usize, spec.q() as usize);
    let n = m * q;
    let semi = semisimple_ideal(spec.m()).expect("m >= 1");
    let mut gens = Vec::new();
    for g in &semi.generators {
        for j in 0..q {
            let mut v = vec![BigInt::zero(); n];
            for (i, c) in g.iter().enumerate() {
                v[i * q + j] = c.clone();
            }
            gens.push(v);
        }
    }
    if let Some(group) = spec.p_part() {
        let induced = induce_coordinates(group);
        for i in 0..m {
            for &j in &induced {
                let mut v = vec![BigInt::zero(); n];
                v[i * q + j] = BigInt::one();
                gens.push(v);
            }
        }
    }
    LatticeBasis::new(n, gens)
}

fn induce_coordinates(group: GroupSpec) -> Vec<usize> {
    let p = group.p();
    (p..=group.q())
        .step_by(p as usize)
        .map(|i| (i - 1) as usize)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankReport {
    pub n: u64,
    pub p: u64,
    pub ideal_rank: u64,
    pub quotient_rank: u64,
    pub phi_n: u64,
    #[serde(with = "big_list")]
    pub invariant_factors: Vec<BigInt>,
}

mod big_list {
    use std::str::FromStr;

    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let nums: Vec<serde_json::Number> = xs
            .iter()
            .map(|x| serde_json::Number::from_str(&x.to_string()).unwrap())
            .collect();
        nums.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<serde_json::Number>::deserialize(d)?
            .iter()
            .map(|n| BigInt::from_str(&n.to_string()).map_err(serde::de::Error::custom))
            .collect()
    }
}

impl RankReport {
    pub fn torsion_free(&self) -> bool {
        self.invariant_factors.iter().all(One::is_one)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// `n` minus the rank of the induced ideal.
pub fn non_induced_rank(spec: CyclicGroupSpec) -> u64 {
    spec.n() - z_rank(&general_ideal(spec)) as u64
}

pub fn rank_report(spec: CyclicGroupSpec) -> RankReport {
    let ideal = general_ideal(spec);
    let invariant_factors = if ideal.generators.is_empty() {
        Vec::new()
    } else {
        smith_normal_form(&ideal.to_matrix())
    };
    let ideal_rank = invariant_factors.len() as u64;
    RankReport {
        n: spec.n(),
        p: spec.p(),
        ideal_rank,
        quotient_rank: spec.n() - ideal_rank,
        phi_n: euler_phi(spec.n()),
        invariant_factors,
    }
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small: Vec<u64> = (1..)
        .take_while(|d| d * d <= n)
        .filter(|d| n.is_multiple_of(*d))
        .collect();
    let large: Vec<u64> = small
        .iter()
        .rev()
        .map(|d| n / d)
        .filter(|&e| e * e != n)
        .collect();
    small.extend(large);
    small
}

/// `Phi_n`, by dividing `Y^n - 1` by `Phi_d` for every proper divisor `d`.
pub fn cyclotomic(n: u64) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::ArgumentOutOfRange {
            value: 0,
            what: "cyclotomic index",
        });
    }
    let mut cache: BTreeMap<u64, IntPolynomial> = BTreeMap::new();
    for d in divisors(n) {
        let mut phi = &IntPolynomial::monomial(BigInt::one(), d as usize) - &IntPolynomial::one();
        for e in divisors(d).into_iter().filter(|&e| e < d) {
            phi = phi.div_exact(&cache[&e])?;
        }
        cache.insert(d, phi);
    }
    Ok(cache.remove(&n).expect("n divides itself"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(b: &LatticeBasis) -> Vec<Vec<i64>> {
        b.generators
            .iter()
            .map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect()
    }

    #[test]
    fn induced_generators() {
        let b = induced_ideal_q(GroupSpec::new(2, 3).unwrap());
        assert_eq!(b.ambient_rank, 8);
        let hot: Vec<usize> = b
            .generators
            .iter()
            .map(|v| v.iter().position(One::is_one).unwrap() + 1)
            .collect();
        assert_eq!(hot, vec![2, 4, 6, 8]);
        assert_eq!(z_rank(&induced_ideal_q(GroupSpec::new(3, 2).unwrap())), 3);
        assert_eq!(
            induced_ideal_q(GroupSpec::new(3, 1).unwrap())
                .generators
                .len(),
            1
        );
    }

    #[test]
    fn principal() {
        for (p, a) in [(2, 2), (3, 2), (5, 2), (2, 4), (3, 3)] {
            assert!(
                principal_generation_check(GroupSpec::new(p, a).unwrap()).unwrap(),
                "{p}^{a}"
            );
        }
    }

    #[test]
    fn semisimple_examples() {
        assert!(semisimple_ideal(1).unwrap().generators.is_empty());
        assert_eq!(ints(&semisimple_ideal(5).unwrap()), vec![vec![1; 5]]);
        assert_eq!(
            ints(&semisimple_ideal(4).unwrap()),
            vec![vec![1, 0, 1, 0], vec![0, 1, 0, 1]]
        );
        let d = smith_normal_form(&semisimple_ideal(4).unwrap().to_matrix());
        assert_eq!(d, vec![BigInt::one(), BigInt::one()]);
        assert!(semisimple_ideal(0).is_err());
    }

    #[test]
    fn factorizations() {
        let s = CyclicGroupSpec::new(12, 2).unwrap();
        assert_eq!((s.m(), s.q(), s.alpha()), (3, 4, 2));
        assert_eq!(CyclicGroupSpec::new(7, 3).unwrap().alpha(), 0);
        assert!(CyclicGroupSpec::from_parts(6, 2, 1).is_err());
        assert!(CyclicGroupSpec::new(0, 2).is_err());
        assert!(CyclicGroupSpec::new(6, 4).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(non_induced_rank(CyclicGroupSpec::new(9, 3).unwrap()), 6);
        assert_eq!(non_induced_rank(CyclicGroupSpec::new(12, 2).unwrap()), 4);
        assert_eq!(non_induced_rank(CyclicGroupSpec::new(7, 2).unwrap()), 6);
        assert_eq!(non_induced_rank(CyclicGroupSpec::new(1, 2).unwrap()), 1);
        let r = rank_report(CyclicGroupSpec::new(12, 2).unwrap());
        assert!(r.torsion_free());
        assert_eq!(
            r.to_json_string(),
            r#"{"n":12,"p":2,"ideal_rank":8,"quotient_rank":4,"phi_n":4,"invariant_factors":[1,1,1,1,1,1,1,1]}"#
        );
    }

    #[test]
    fn totient_and_cyclotomic() {
        assert_eq!([1, 9, 12, 360].map(euler_phi), [1, 6, 4, 96]);
        assert_eq!(cyclotomic(1).unwrap().to_string(), "X - 1");
        assert_eq!(cyclotomic(4).unwrap().to_string(), "X^2 + 1");
        for n in 1..=100 {
            assert_eq!(
                cyclotomic(n).unwrap().degree(),
                Some(euler_phi(n) as usize),
                "n={n}"
            );
        }
    }
}
