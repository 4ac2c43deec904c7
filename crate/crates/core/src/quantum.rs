//! Quantum numbers `[n]` and the relations they satisfy inside the ring.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::poly::IntPolynomial;
use crate::ring::RingElement;
use crate::tensor::chi;

/// `[n]` from `[0] = 0`, `[1] = 1`, `[n] = X [n-1] - [n-2]`.
pub fn quantum_number(n: u64) -> IntPolynomial {
    let x = IntPolynomial::x();
    let (mut prev, mut cur) = (IntPolynomial::zero(), IntPolynomial::one());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `[n] = sum_i (-1)^i C(n-1-i, i) X^(n-1-2i)`; terms whose binomial
/// vanishes are skipped.
pub fn quantum_closed_form(n: u64) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::ArgumentOutOfRange {
            value: 0,
            what: "closed form needs n >= 1",
        });
    }
    let top = n - 1;
    let mut coeffs = vec![BigInt::zero(); top as usize + 1];
    for i in 0..=n.div_ceil(2) {
        if 2 * i > top {
            break;
        }
        let c = binomial(top - i, i);
        coeffs[(top - 2 * i) as usize] = if i % 2 == 0 { c } else { -c };
    }
    Ok(IntPolynomial::new(coeffs))
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::from(1), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

/// `[n]` evaluated at a ring element with the same three-term recurrence.
pub fn eval_at_element(n: u64, x: &RingElement) -> RingElement {
    let group = x.group();
    let (mut prev, mut cur) = (RingElement::zero(group), RingElement::one(group));
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = x
            .mul(&cur)
            .expect("same group")
            .sub(&prev)
            .expect("same group");
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn two() -> BigInt {
    BigInt::from(2)
}

/// The relation at level `j`,
/// `F_j = (X_j - 2 (V_{p^j} - V_{p^j - 1})) [p]_{X_j}` at `X_i = chi_i`.
///
/// `V_{p^j}` and `V_{p^j - 1}` are polynomials in `chi_0, .., chi_(j-1)`;
/// for `j = 1` the bracket is `X_1 - 2[p]_{X_0} + 2[p-1]_{X_0}` and for
/// `j = 0` it is `X_0 - 2`. Vanishes in the ring for `0 <= j < alpha`.
pub fn relation_f(group: GroupSpec, j: u32) -> Result<RingElement> {
    group.check_level(j)?;
    let pj = group.p_pow(j) as i64;
    let x = chi(group, j)?;
    let lower = RingElement::from_terms(group, [(pj, two()), (pj - 1, -two())])?;
    x.sub(&lower)?.mul(&eval_at_element(group.p(), &x))
}

/// `F_0 = (X_0 - 2) [p]_{X_0}` at `X_0 = chi_0`.
pub fn relation_f0(group: GroupSpec) -> RingElement {
    relation_f(group, 0).expect("level 0 exists")
}

/// Every relation `F_0, .., F_(alpha-1)` evaluated in the ring, in order.
pub fn all_relations(group: GroupSpec) -> Vec<RingElement> {
    std::iter::once(relation_f0(group))
        .chain((1..group.alpha()).map(|j| relation_f(group, j).expect("level in range")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::tensor;

    fn g(p: u64, alpha: u32) -> GroupSpec {
        GroupSpec::new(p, alpha).unwrap()
    }

    #[test]
    fn first_quantum_numbers() {
        let table: [&[i64]; 8] = [
            &[],
            &[1],
            &[0, 1],
            &[-1, 0, 1],
            &[0, -2, 0, 1],
            &[1, 0, -3, 0, 1],
            &[0, 3, 0, -4, 0, 1],
            &[-1, 0, 6, 0, -5, 0, 1],
        ];
        for (n, coeffs) in table.iter().enumerate() {
            assert_eq!(
                quantum_number(n as u64),
                IntPolynomial::from_i64(coeffs),
                "n={n}"
            );
        }
        assert_eq!(quantum_number(5).to_string(), "X^4 - 3X^2 + 1");
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            quantum_closed_form(3).unwrap(),
            IntPolynomial::from_i64(&[-1, 0, 1])
        );
        assert_eq!(quantum_closed_form(2).unwrap(), IntPolynomial::x());
        assert_eq!(
            quantum_closed_form(6).unwrap(),
            IntPolynomial::from_i64(&[0, 3, 0, -4, 0, 1])
        );
        assert!(quantum_closed_form(0).is_err());
    }

    #[test]
    fn evaluates_to_n_at_two() {
        assert_eq!(quantum_number(7).eval(&BigInt::from(2)), BigInt::from(7));
        for n in 0..=60 {
            assert_eq!(quantum_number(n).eval(&BigInt::from(2)), BigInt::from(n));
        }
    }

    #[test]
    fn quantum_at_chi0_is_indecomposable() {
        for p in [2, 3, 5, 7] {
            let group = g(p, 2);
            let x0 = chi(group, 0).unwrap();
            for r in 1..=p {
                assert_eq!(
                    eval_at_element(r, &x0),
                    RingElement::basis(group, r).unwrap()
                );
            }
        }
    }

    #[test]
    fn quantum_at_chi_k() {
        let group = g(5, 3);
        assert_eq!(
            eval_at_element(1, &chi(group, 2).unwrap()),
            RingElement::one(group)
        );
        for k in 0..3 {
            let x = chi(group, k).unwrap();
            let pk = group.p_pow(k) as i64;
            for s in 1..5i64 {
                let expect =
                    RingElement::from_terms(group, [(s * pk + 1, 1), (s * pk - 1, -1)]).unwrap();
                // mu^s + mu^-s = [s+1] - [s-1] at chi_k
                let got = eval_at_element(s as u64 + 1, &x)
                    .sub(&eval_at_element(s as u64 - 1, &x))
                    .unwrap();
                assert_eq!(got, expect, "k={k} s={s}");
            }
        }
    }

    #[test]
    fn horner_agrees_with_recurrence() {
        let group = g(3, 3);
        let x = chi(group, 1).unwrap();
        for n in 0..6 {
            assert_eq!(quantum_number(n).eval_ring(&x), eval_at_element(n, &x));
        }
    }

    #[test]
    fn relations_vanish() {
        for (p, alpha) in [(2, 4), (3, 3), (5, 3), (7, 2)] {
            for f in all_relations(g(p, alpha)) {
                assert!(f.is_zero(), "p={p} alpha={alpha}: {f}");
            }
        }
        assert!(relation_f(g(2, 2), 1).unwrap().is_zero());
        assert!(relation_f(g(3, 2), 1).unwrap().is_zero());
        assert!(relation_f(g(5, 3), 2).unwrap().is_zero());
        for p in [2, 3, 5] {
            assert!(relation_f0(g(p, 2)).is_zero(), "p={p}");
        }
        let two_v2 = RingElement::basis(g(2, 3), 2)
            .unwrap()
            .scale(&BigInt::from(2));
        assert_eq!(tensor(g(2, 3), 2, 2).unwrap(), two_v2);
    }

    /// `(X_j - 2[p]_{X_(j-1)} + sign 2[p-1]_{X_(j-1)}) [p]_{X_j}`
    fn single_level_relation(group: GroupSpec, j: u32, sign: i64) -> RingElement {
        let below = chi(group, j - 1).unwrap();
        let here = chi(group, j).unwrap();
        let lower = eval_at_element(group.p(), &below)
            .sub(&eval_at_element(group.p() - 1, &below).scale(&BigInt::from(sign)))
            .unwrap()
            .scale(&two());
        here.sub(&lower)
            .unwrap()
            .mul(&eval_at_element(group.p(), &here))
            .unwrap()
    }

    #[test]
    fn relation_in_the_level_below_only() {
        // With a plus sign on [p-1] the one-level form works at j = 1 only.
        for p in [2, 3, 5] {
            assert!(single_level_relation(g(p, 3), 1, 1).is_zero());
            assert!(!single_level_relation(g(p, 3), 2, 1).is_zero());
        }
        // With a minus sign it already fails at j = 1: 4V_1 - 4V_3 for q = 4.
        let group = g(2, 2);
        assert_eq!(
            single_level_relation(group, 1, -1),
            RingElement::from_terms(group, [(1, 4), (3, -4)]).unwrap()
        );
    }

    #[test]
    fn relation_f0_for_p2() {
        // (chi_0 - 2) [2]_{chi_0} = V_2 V_2 - 2 V_2
        let group = g(2, 3);
        let v2 = RingElement::basis(group, 2).unwrap();
        let expect = v2.mul(&v2).unwrap().sub(&v2.scale(&two())).unwrap();
        assert_eq!(relation_f0(group), expect);
        assert!(expect.is_zero());
    }

    #[test]
    fn relation_level_bounds() {
        assert!(relation_f(g(3, 2), 0).unwrap().is_zero());
        assert!(relation_f(g(3, 2), 2).is_err());
        assert_eq!(all_relations(g(5, 3)).len(), 3);
    }
}
