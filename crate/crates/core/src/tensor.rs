//! Tensor products of indecomposables for `C_{p^alpha}` in characteristic `p`.
//!
//! Products are reduced level by level. For `r <= s` let `beta` be minimal
//! with `s <= p^(beta+1)`. Writing `r = r0 p^beta + r1`, `s = s0 p^beta + s1`
//! and `V_{r1} (x) V_{s1} = sum_j a_j V_{b_j}`, the product is
//!
//! ```text
//!   c1 V_{p^(beta+1)}
//! + |r1 - s1|            sum_{i=1}^{d1} V_{(s0-r0+2i) p^beta}
//! + max(0, r1 - s1)      V_{(s0-r0) p^beta}
//! + (p^beta - s1 - r1)   sum_{i=1}^{d2} V_{(s0-r0+2i-1) p^beta}
//! + sum_j a_j [ sum_{i=1}^{d1} (V_{(s0-r0+2i) p^beta + b_j} + V_{(s0-r0+2i) p^beta - b_j})
//!               + V_{(s0-r0) p^beta + b_j} ]
//! ```
//!
//! with `(c1, d1, d2) = (0, r0, r0)` when `r0 + s0 < p` and
//! `(r + s - p^(beta+1), p - s0 - 1, p - s0)` otherwise. The third line
//! carries no `b_j`; this is the reading that agrees with the Jordan types
//! computed in [`crate::oracle`]. The coefficient `p^beta - s1 - r1` may be
//! negative; the cancellation leaves a non-negative result. The case
//! `s = p^(beta+1)` is handled separately as `r V_s`.
//!
//! Products with `r, s <= p` use `V_r = [r]_{chi_0}` and the recurrence
//! `[n] = chi_0 [n-1] - [n-2]`, applied to `V_s` with the `chi_0` table.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::ring::RingElement;

/// A decomposition as `(index, multiplicity)` pairs in ascending index order.
pub type Decomposition = Arc<[(u64, u64)]>;

type Signed = BTreeMap<u64, i64>;

fn push(acc: &mut Signed, index: i64, c: i64) {
    if index <= 0 || c == 0 {
        return;
    }
    let slot = acc.entry(index as u64).or_insert(0);
    *slot += c;
    if *slot == 0 {
        acc.remove(&(index as u64));
    }
}

/// Terms of `chi_k V_s` where `pk = p^k` and `1 <= s <= p^(k+1)`.
fn chi_table(p: u64, pk: u64, s: u64) -> [(i64, i64); 3] {
    debug_assert!(s >= 1 && s <= p * pk);
    let (p, pk, s) = (p as i64, pk as i64, s as i64);
    if s <= pk {
        [(s + pk, 1), (pk - s, -1), (0, 0)]
    } else if s < (p - 1) * pk {
        [(s + pk, 1), (s - pk, 1), (0, 0)]
    } else {
        [(s - pk, 1), (p * pk, 2), (2 * p * pk - (s + pk), -1)]
    }
}

/// The element `chi_k = V_{p^k+1} - V_{p^k-1}`.
pub fn chi(group: GroupSpec, k: u32) -> Result<RingElement> {
    group.check_level(k)?;
    let pk = group.p_pow(k) as i64;
    RingElement::from_terms(group, [(pk + 1, 1i64), (pk - 1, -1)])
}

/// `chi_k V_s` from the three-case table, valid for `1 <= s <= p^(k+1)`.
pub fn mul_chi_v(group: GroupSpec, k: u32, s: u64) -> Result<RingElement> {
    group.check_level(k)?;
    let pk = group.p_pow(k);
    if !(1..=pk * group.p()).contains(&s) {
        return Err(Error::IndexOutOfRange {
            index: s,
            max: pk * group.p(),
        });
    }
    RingElement::from_terms(group, chi_table(group.p(), pk, s))
}

/// Digit data driving one step of the level reduction, for `r <= s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionParameters {
    pub beta: u32,
    pub r0: u64,
    pub r1: u64,
    pub s0: u64,
    pub s1: u64,
    pub c1: u64,
    pub d1: u64,
    pub d2: u64,
    /// `V_{r1} (x) V_{s1}` as `(a_j, b_j)` pairs.
    pub base_product: Vec<(u64, u64)>,
}

/// The reduction data for `V_r (x) V_s`, or `None` when the product is
/// handled directly (both factors at most `p`, or `max(r, s)` a power of `p`
/// at the reduction level).
pub fn reduction_parameters(
    group: GroupSpec,
    r: u64,
    s: u64,
) -> Result<Option<ReductionParameters>> {
    group.check_index(r)?;
    group.check_index(s)?;
    let (r, s) = if r <= s { (r, s) } else { (s, r) };
    Ok(reduction_digits(group.p(), r, s).map(|(beta, pb)| {
        let (r0, r1, s0, s1) = (r / pb, r % pb, s / pb, s % pb);
        let (c1, d1, d2) = if r0 + s0 < group.p() {
            (0, r0, r0)
        } else {
            (r + s - pb * group.p(), group.p() - s0 - 1, group.p() - s0)
        };
        let base_product = if r1 == 0 || s1 == 0 {
            Vec::new()
        } else {
            decompose(group.p(), r1, s1)
                .iter()
                .map(|&(b, a)| (a, b))
                .collect()
        };
        ReductionParameters {
            beta,
            r0,
            r1,
            s0,
            s1,
            c1,
            d1,
            d2,
            base_product,
        }
    }))
}

/// `(beta, p^beta)` for the reduction step of `r <= s`, if one applies.
fn reduction_digits(p: u64, r: u64, s: u64) -> Option<(u32, u64)> {
    if s <= p {
        return None;
    }
    let mut beta = 1;
    let mut pb = p;
    while pb * p < s {
        pb *= p;
        beta += 1;
    }
    if pb * p == s {
        return None;
    }
    debug_assert!(r <= s);
    Some((beta, pb))
}

/// The decomposition of `V_r (x) V_s` into indecomposables.
pub fn tensor(group: GroupSpec, r: u64, s: u64) -> Result<RingElement> {
    group.check_index(r)?;
    group.check_index(s)?;
    let d = decompose(group.p(), r, s);
    RingElement::from_terms(group, d.iter().map(|&(t, m)| (t as i64, BigInt::from(m))))
}

type Memo = RwLock<HashMap<(u64, u64, u64), Decomposition>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Memoized decomposition of `V_r (x) V_s` in characteristic `p`. The result
/// does not depend on the ambient group beyond `p`, so the cache is keyed on
/// `(p, min(r, s), max(r, s))`. Inputs are assumed valid.
pub(crate) fn decompose(p: u64, r: u64, s: u64) -> Decomposition {
    let (r, s) = if r <= s { (r, s) } else { (s, r) };
    let key = (p, r, s);
    if let Some(hit) = memo().read().expect("memo lock").get(&key) {
        return hit.clone();
    }
    let computed = compute(p, r, s);
    memo()
        .write()
        .expect("memo lock")
        .entry(key)
        .or_insert(computed)
        .clone()
}

fn finish(acc: Signed) -> Decomposition {
    acc.into_iter()
        .map(|(t, m)| {
            assert!(
                m > 0,
                "tensor rule produced a negative multiplicity at V_{t}"
            );
            (t, m as u64)
        })
        .collect()
}

fn compute(p: u64, r: u64, s: u64) -> Decomposition {
    if r == 1 {
        return Arc::from([(s, 1)]);
    }
    if s <= p {
        return finish(small_product(p, r, s));
    }
    let Some((_, pb)) = reduction_digits(p, r, s) else {
        // s is a power of p, and V_r (x) V_{p^m} = r V_{p^m} for r <= p^m.
        return Arc::from([(s, r)]);
    };
    let (r0, r1, s0, s1) = (
        (r / pb) as i64,
        (r % pb) as i64,
        (s / pb) as i64,
        (s % pb) as i64,
    );
    let (pi, pbi) = (p as i64, pb as i64);
    let (c1, d1, d2) = if r0 + s0 < pi {
        (0, r0, r0)
    } else {
        (r as i64 + s as i64 - pbi * pi, pi - s0 - 1, pi - s0)
    };
    let base = (s0 - r0) * pbi;
    let mut acc = Signed::new();
    push(&mut acc, pbi * pi, c1);
    for i in 1..=d1 {
        push(&mut acc, base + 2 * i * pbi, (r1 - s1).abs());
    }
    push(&mut acc, base, (r1 - s1).max(0));
    for i in 1..=d2 {
        push(&mut acc, base + (2 * i - 1) * pbi, pbi - s1 - r1);
    }
    if r1 > 0 && s1 > 0 {
        for &(b, a) in decompose(p, r1 as u64, s1 as u64).iter() {
            let (a, b) = (a as i64, b as i64);
            for i in 1..=d1 {
                push(&mut acc, base + 2 * i * pbi + b, a);
                push(&mut acc, base + 2 * i * pbi - b, a);
            }
            push(&mut acc, base + b, a);
        }
    }
    finish(acc)
}

/// `V_r (x) V_s` for `r, s <= p` as `[r]_{chi_0} V_s`.
fn small_product(p: u64, r: u64, s: u64) -> Signed {
    let apply_chi0 = |x: &Signed| {
        let mut out = Signed::new();
        for (&t, &c) in x {
            for (idx, m) in chi_table(p, 1, t) {
                push(&mut out, idx, m * c);
            }
        }
        out
    };
    let mut prev = Signed::new();
    let mut cur = Signed::from([(s, 1)]);
    for _ in 1..r {
        let mut next = apply_chi0(&cur);
        for (&t, &c) in &prev {
            push(&mut next, t as i64, -c);
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `chi_i^s` for `0 < s < p` via the binomial expansion
/// `sum_{0 <= nu <= s/2} C(s, nu) (V_{(s-2nu)p^i+1} - V_{(s-2nu)p^i-1})`.
pub fn chi_power(group: GroupSpec, i: u32, s: u64) -> Result<RingElement> {
    group.check_level(i)?;
    if s == 0 || s >= group.p() {
        return Err(Error::ArgumentOutOfRange {
            value: s,
            what: "chi power must satisfy 0 < s < p",
        });
    }
    let pi = group.p_pow(i) as i64;
    let mut terms = Vec::new();
    let mut binom = BigInt::from(1);
    for nu in 0..=s / 2 {
        let k = (s - 2 * nu) as i64;
        terms.push((k * pi + 1, binom.clone()));
        terms.push((k * pi - 1, -binom.clone()));
        binom = binom * BigInt::from(s - nu) / BigInt::from(nu + 1);
    }
    RingElement::from_terms(group, terms)
}

/// Induction of `W_r` from the subgroup of order `p^beta`: `V_{r p^(alpha-beta)}`.
pub fn induce(group: GroupSpec, beta: u32, r: u64) -> Result<RingElement> {
    group.check_level(beta)?;
    let order = group.p_pow(beta);
    if !(1..=order).contains(&r) {
        return Err(Error::IndexOutOfRange {
            index: r,
            max: order,
        });
    }
    RingElement::basis(group, r * group.p_pow(group.alpha() - beta))
}
