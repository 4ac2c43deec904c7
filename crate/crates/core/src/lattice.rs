//! Integer lattices: Hermite and Smith normal forms, ranks and spans.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::matrix::IntMatrix;

/// A finitely generated sublattice of `Z^ambient_rank`, as a generating set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeBasis {
    pub ambient_rank: usize,
    #[serde(with = "big_rows")]
    pub generators: Vec<Vec<BigInt>>,
}

mod big_rows {
    use std::str::FromStr;

    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(rows: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        let nums: Vec<Vec<serde_json::Number>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| serde_json::Number::from_str(&x.to_string()).unwrap())
                    .collect()
            })
            .collect();
        nums.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        let nums = Vec::<Vec<serde_json::Number>>::deserialize(d)?;
        nums.iter()
            .map(|r| {
                r.iter()
                    .map(|n| BigInt::from_str(&n.to_string()).map_err(serde::de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

impl LatticeBasis {
    pub fn new(ambient_rank: usize, generators: Vec<Vec<BigInt>>) -> Self {
        assert!(
            generators.iter().all(|g| g.len() == ambient_rank),
            "generator length"
        );
        LatticeBasis {
            ambient_rank,
            generators,
        }
    }

    pub fn empty(ambient_rank: usize) -> Self {
        LatticeBasis {
            ambient_rank,
            generators: Vec::new(),
        }
    }

    /// Span of the standard basis vectors at the given coordinates.
    pub fn standard(ambient_rank: usize, coords: impl IntoIterator<Item = usize>) -> Self {
        let generators = coords
            .into_iter()
            .map(|c| {
                let mut v = vec![BigInt::zero(); ambient_rank];
                v[c] = BigInt::one();
                v
            })
            .collect();
        LatticeBasis {
            ambient_rank,
            generators,
        }
    }

    pub fn to_matrix(&self) -> IntMatrix {
        if self.generators.is_empty() {
            IntMatrix::zeros(0, self.ambient_rank)
        } else {
            IntMatrix::from_rows(&self.generators)
        }
    }

    pub fn hermite_form(&self) -> Vec<Vec<BigInt>> {
        hermite_normal_form(&self.generators)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        let mut rows = self.generators.clone();
        rows.push(v.to_vec());
        hermite_normal_form(&rows) == self.hermite_form()
    }

    pub fn same_span(&self, other: &LatticeBasis) -> bool {
        self.ambient_rank == other.ambient_rank && self.hermite_form() == other.hermite_form()
    }
}

/// Row-style Hermite normal form: nonzero rows only, pivots positive and
/// strictly increasing, entries above each pivot reduced into `[0, pivot)`.
pub fn hermite_normal_form(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut top = 0;
    for col in 0..cols {
        // Smallest nonzero entry at or below `top` becomes the pivot.
        while let Some(pivot) = (top..a.len())
            .filter(|&i| !a[i][col].is_zero())
            .min_by(|&i, &j| a[i][col].abs().cmp(&a[j][col].abs()))
        {
            a.swap(top, pivot);
            let mut done = true;
            for i in top + 1..a.len() {
                if a[i][col].is_zero() {
                    continue;
                }
                let q = a[i][col].div_floor(&a[top][col]);
                let (head, tail) = a.split_at_mut(i);
                sub_scaled(&mut tail[0], &head[top], &q);
                if !a[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if top == a.len() || a[top][col].is_zero() {
            continue;
        }
        if a[top][col].is_negative() {
            for x in &mut a[top] {
                *x = -&*x;
            }
        }
        for i in 0..top {
            let q = a[i][col].div_floor(&a[top][col]);
            if !q.is_zero() {
                let (head, tail) = a.split_at_mut(top);
                sub_scaled(&mut head[i], &tail[0], &q);
            }
        }
        top += 1;
    }
    a.truncate(top);
    a
}

fn sub_scaled(row: &mut [BigInt], pivot: &[BigInt], q: &BigInt) {
    for (x, y) in row.iter_mut().zip(pivot) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

trait SnfScalar: Clone + Zero + One + Signed + Integer + CheckedAdd + CheckedSub + CheckedMul {}
impl SnfScalar for i64 {}
impl SnfScalar for BigInt {}

/// Invariant factors `d_1 | d_2 | ...` (nonzero, positive) of an integer matrix.
/// Elimination runs in `i64` with overflow checks and restarts over big
/// integers if any intermediate value overflows.
pub fn smith_normal_form(m: &IntMatrix) -> Vec<BigInt> {
    let small: Option<Vec<Vec<i64>>> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(|x| i64::try_from(x).ok()).collect())
        .collect();
    if let Some(d) = small.and_then(snf_diagonal) {
        return d.into_iter().map(BigInt::from).collect();
    }
    snf_diagonal(m.to_rows()).expect("big integers never overflow")
}

fn snf_diagonal<T: SnfScalar>(mut a: Vec<Vec<T>>) -> Option<Vec<T>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(
            &a,
            t,
            (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j))),
        ) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let pivot = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&pivot);
                let (head, tail) = a.split_at_mut(i);
                for j in t..cols {
                    if head[t][j].is_zero() {
                        continue;
                    }
                    tail[0][j] = tail[0][j].checked_sub(&q.checked_mul(&head[t][j])?)?;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&pivot);
                for row in a.iter_mut().skip(t) {
                    if row[t].is_zero() {
                        continue;
                    }
                    row[j] = row[j].checked_sub(&q.checked_mul(&row[t])?)?;
                }
                clean &= a[t][j].is_zero();
            }
            if clean {
                break;
            }
            // A remainder smaller than the pivot appeared; move it to (t, t).
            let cands = (t + 1..rows)
                .map(|i| (i, t))
                .chain((t + 1..cols).map(|j| (t, j)));
            let (pi, pj) = min_abs_entry(&a, t, cands).expect("remainder exists");
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
        }
        t += 1;
    }
    let mut d: Vec<T> = (0..t).map(|i| a[i][i].abs()).collect();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = (d[i].clone() / g.clone()).checked_mul(&d[j])?;
            d[i] = g;
            d[j] = l;
        }
    }
    Some(d)
}

fn min_abs_entry<T: SnfScalar>(
    a: &[Vec<T>],
    _t: usize,
    cells: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), T)> = None;
    for (i, j) in cells {
        let x = &a[i][j];
        if x.is_zero() {
            continue;
        }
        let ax = x.abs();
        if best.as_ref().is_none_or(|(_, b)| ax < *b) {
            let unit = ax.is_one();
            best = Some(((i, j), ax));
            if unit {
                break;
            }
        }
    }
    best.map(|(c, _)| c)
}

/// Rank of the span of `b` over the integers.
pub fn z_rank(b: &LatticeBasis) -> usize {
    if b.generators.is_empty() {
        return 0;
    }
    smith_normal_form(&b.to_matrix()).len()
}
