//! The U-basis `U_r = prod_i [r_i + 1]_{chi_i}` (digits of `r - 1`), cousins,
//! the curly-U recursion and the change of basis between V and U.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::digits::{curly_set, to_digits};
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::matrix::IntMatrix;
use crate::quantum::eval_at_element;
use crate::ring::RingElement;
use crate::tensor::chi;

/// A set of U-basis indices, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UIndexSet(BTreeSet<u64>);

impl UIndexSet {
    pub fn indices(&self) -> &BTreeSet<u64> {
        &self.0
    }

    pub fn contains(&self, j: u64) -> bool {
        self.0.contains(&j)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = u64> + '_ {
        self.0.iter().copied()
    }
}

impl From<BTreeSet<u64>> for UIndexSet {
    fn from(s: BTreeSet<u64>) -> Self {
        UIndexSet(s)
    }
}

impl fmt::Display for UIndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

pub fn u_element(group: GroupSpec, r: u64) -> Result<RingElement> {
    group.check_index(r)?;
    let digits = group.digits(r - 1);
    let mut acc = RingElement::one(group);
    // Highest level first keeps each partial product inside the chi tables.
    for (level, &d) in digits.iter().enumerate().rev() {
        if d == 0 {
            continue;
        }
        let factor = eval_at_element(d + 1, &chi(group, level as u32)?);
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

/// All values of `n_k b^k +- n_{k-1} b^{k-1} +- ... +- n_0`.
pub fn cousins(n: u64, base: u64) -> Result<BTreeSet<u64>> {
    let digits = to_digits(n, base)?;
    let Some((&lead, rest)) = digits.split_last() else {
        return Ok(BTreeSet::from([0]));
    };
    let mut place: u128 = 1;
    let mut lower = Vec::with_capacity(rest.len());
    for &d in rest {
        lower.push(d as u128 * place);
        place *= base as u128;
    }
    let mut set = BTreeSet::from([lead as u128 * place]);
    for term in lower.into_iter().filter(|&t| t != 0) {
        set = set.iter().flat_map(|&x| [x + term, x - term]).collect();
    }
    set.into_iter()
        .map(|x| {
            u64::try_from(x).map_err(|_| Error::ArgumentOutOfRange {
                value: n,
                what: "cousins of n",
            })
        })
        .collect()
}

/// The U-indices appearing in V_r, read off from cousins:
/// `j` such that `q - r` is a cousin of `q - j`.
pub fn v_in_u(group: GroupSpec, r: u64) -> Result<UIndexSet> {
    group.check_index(r)?;
    let q = group.q();
    let mut out = BTreeSet::new();
    for j in 1..=q {
        if cousins(q - j, group.p())?.contains(&(q - r)) {
            out.insert(j);
        }
    }
    Ok(out.into())
}

pub fn curly_u(group: GroupSpec, r: u64, beta: u32) -> Result<UIndexSet> {
    group.check_index(r)?;
    if beta > group.alpha() {
        return Err(Error::LevelOutOfRange {
            level: beta,
            alpha: group.alpha(),
        });
    }
    Ok(curly_set(r, group.p(), beta).into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Row `i` expresses `V_i` in the U-basis.
    VToU,
    /// Row `i` expresses `U_i` in the V-basis.
    UToV,
}

impl FromStr for Direction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "v-to-u" => Ok(Direction::VToU),
            "u-to-v" => Ok(Direction::UToV),
            other => Err(Error::Parse(format!("unknown direction {other:?}"))),
        }
    }
}

/// `q x q` matrix with row/column `i - 1` for index `i`.
pub fn change_of_basis(group: GroupSpec, direction: Direction) -> Result<IntMatrix> {
    let q = group.q();
    let n = q as usize;
    let mut m = IntMatrix::zeros(n, n);
    match direction {
        Direction::VToU => {
            // Invert the cousin relation: each column j marks the rows r
            // with q - r a cousin of q - j.
            let cols: Vec<(u64, BTreeSet<u64>)> = (1..=q)
                .into_par_iter()
                .map(|j| cousins(q - j, group.p()).map(|c| (j, c)))
                .collect::<Result<_>>()?;
            for (j, cous) in cols {
                for c in cous.into_iter().filter(|&c| c < q) {
                    m.set((q - c - 1) as usize, (j - 1) as usize, BigInt::from(1));
                }
            }
        }
        Direction::UToV => {
            let rows: Vec<RingElement> = (1..=q)
                .into_par_iter()
                .map(|r| u_element(group, r))
                .collect::<Result<_>>()?;
            for (i, u) in rows.iter().enumerate() {
                for (j, c) in u.terms() {
                    m.set(i, (j - 1) as usize, c.clone());
                }
            }
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(p: u64, alpha: u32) -> GroupSpec {
        GroupSpec::new(p, alpha).unwrap()
    }

    fn set(xs: &[u64]) -> UIndexSet {
        xs.iter().copied().collect::<BTreeSet<_>>().into()
    }

    #[test]
    fn u_twelve() {
        let u = u_element(g(5, 2), 12).unwrap();
        assert_eq!(u.to_string(), "V12 - V8 + V2");
        assert_eq!(u.dim(), BigInt::from(6));
        assert_eq!(u_element(g(5, 3), 12).unwrap().to_string(), "V12 - V8 + V2");
        assert_eq!(u_element(g(3, 2), 1).unwrap().to_string(), "V1");
        assert!(u_element(g(3, 2), 10).is_err());
    }

    #[test]
    fn pure_digit_indices_are_v() {
        let grp = g(3, 3);
        for k in 0..3 {
            for a in 1..3 {
                let r = a * 3u64.pow(k);
                assert_eq!(
                    u_element(grp, r).unwrap(),
                    RingElement::basis(grp, r).unwrap()
                );
                assert_eq!(v_in_u(grp, r).unwrap(), set(&[r]));
            }
        }
    }

    #[test]
    fn cousin_examples() {
        assert_eq!(cousins(63, 5).unwrap(), BTreeSet::from([37, 43, 57, 63]));
        assert_eq!(cousins(4, 5).unwrap(), BTreeSet::from([4]));
        assert_eq!(cousins(50, 5).unwrap(), BTreeSet::from([50]));
        assert_eq!(cousins(0, 5).unwrap(), BTreeSet::from([0]));
        assert!(cousins(3, 1).is_err());
    }

    #[test]
    fn sixty_two() {
        let grp = g(5, 3);
        assert_eq!(v_in_u(grp, 62).unwrap(), set(&[32, 38, 58, 62]));
        assert_eq!(curly_u(grp, 62, 3).unwrap(), set(&[32, 38, 58, 62]));
        assert_eq!(curly_u(grp, 62, 2).unwrap(), set(&[32, 38, 58, 62]));
        assert_eq!(curly_u(grp, 62, 1).unwrap(), set(&[58, 62]));
        assert_eq!(curly_u(grp, 62, 0).unwrap(), set(&[62]));
        assert!(curly_u(grp, 62, 4).is_err());
        for r in 1..=5 {
            assert_eq!(v_in_u(grp, r).unwrap(), set(&[r]));
        }
    }

    #[test]
    fn set_sizes_need_not_be_powers_of_two() {
        // 7 splits into 7 and 1 at level 2; 1 has no further branch.
        let grp = g(2, 3);
        assert_eq!(v_in_u(grp, 7).unwrap(), set(&[1, 5, 7]));
        let sum = [1, 5, 7].iter().fold(RingElement::zero(grp), |acc, &j| {
            acc.add(&u_element(grp, j).unwrap()).unwrap()
        });
        assert_eq!(sum, RingElement::basis(grp, 7).unwrap());
        assert_eq!(v_in_u(g(3, 3), 10).unwrap().len(), 3);
    }

    #[test]
    fn v_expands_back() {
        for grp in [g(2, 4), g(3, 3), g(5, 2)] {
            for r in 1..=grp.q() {
                let mut sum = RingElement::zero(grp);
                for j in v_in_u(grp, r).unwrap().iter() {
                    sum = sum.add(&u_element(grp, j).unwrap()).unwrap();
                }
                assert_eq!(sum, RingElement::basis(grp, r).unwrap(), "{grp} r={r}");
                assert_eq!(
                    curly_u(grp, r, grp.alpha()).unwrap(),
                    v_in_u(grp, r).unwrap()
                );
            }
        }
    }

    #[test]
    fn matrices_invert() {
        for grp in [g(2, 3), g(3, 2), g(3, 3), g(5, 2), g(7, 2)] {
            let vu = change_of_basis(grp, Direction::VToU).unwrap();
            let uv = change_of_basis(grp, Direction::UToV).unwrap();
            assert!(vu.is_lower_triangular() && vu.has_unit_diagonal() && vu.is_binary());
            assert!(uv.is_lower_triangular() && uv.has_unit_diagonal());
            let n = grp.q() as usize;
            assert_eq!(vu.mul(&uv).unwrap(), IntMatrix::identity(n));
            assert_eq!(uv.mul(&vu).unwrap(), IntMatrix::identity(n));
        }
        let uv = change_of_basis(g(5, 2), Direction::UToV).unwrap();
        let row: Vec<i64> = uv
            .row(11)
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect();
        let mut want = vec![0; 25];
        want[11] = 1;
        want[7] = -1;
        want[1] = 1;
        assert_eq!(row, want);
    }

    #[test]
    fn direction_names() {
        assert_eq!("v-to-u".parse::<Direction>().unwrap(), Direction::VToU);
        assert!("sideways".parse::<Direction>().is_err());
    }
}
