//! Ground truth for tensor products by linear algebra over `F_p`.
//!
//! The generator of `C_q` acts on `V_r` as the unipotent Jordan block
//! `J_r(1)`, so `V_r (x) V_s` is the space of `J_r(1) (x) J_s(1)` and its
//! decomposition is the Jordan type of `N = J_r(1) (x) J_s(1) - I`. Nothing
//! here calls into [`crate::tensor`].
//!
//! Two routes are provided. [`jordan_type_by_ranks`] takes the rank sequence
//! of the powers of `N` on the full `rs`-dimensional space. [`jordan_type`]
//! works with a presentation instead: identifying the space with
//! `F_p[x, y]/(x^r, y^s)`, `N` is multiplication by `f = x + y + xy`.
//! Over `F_p[t]` with `t` acting as `f`, eliminating `y = (t - x)(1 + x)^-1`
//! gives `F_p[t][x]/(x^r, (t - x)^s)`, the cokernel of the `r x r` matrix of
//! multiplication by `(t - x)^s` on `1, x, .., x^(r-1)`. Its invariant
//! factors are `t^lambda` for the Jordan block sizes `lambda`. Entry
//! `(i, j)` of that matrix is `(-1)^(i-j) C(s, i-j) t^(s-i+j)`, so elimination
//! only ever touches the constant parts, pivoting on the entry of least
//! `t`-degree.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{is_prime, GroupSpec};
use crate::ring::RingElement;
use crate::tensor;

pub const DEFAULT_BUDGET: u64 = 16384;

/// Multiset of Jordan block sizes, stored in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JordanType {
    blocks: Vec<u64>,
}

impl JordanType {
    pub fn new(mut blocks: Vec<u64>) -> Self {
        blocks.retain(|&b| b > 0);
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        JordanType { blocks }
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn dim(&self) -> u64 {
        self.blocks.iter().sum()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block size to multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<u64, u64> {
        let mut out = BTreeMap::new();
        for &b in &self.blocks {
            *out.entry(b).or_insert(0) += 1;
        }
        out
    }

    /// Reads an actual module (non-negative combination of `V_r`) as a
    /// Jordan type. Returns `None` for virtual elements with negative terms
    /// or multiplicities too large to enumerate.
    pub fn from_module(x: &RingElement) -> Option<Self> {
        let mut blocks = Vec::new();
        for (r, c) in x.terms() {
            let c: u64 = c.try_into().ok()?;
            blocks.extend(std::iter::repeat_n(r, usize::try_from(c).ok()?));
        }
        Some(JordanType::new(blocks))
    }
}

/// Dense matrix over `F_p`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixFp {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl MatrixFp {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        MatrixFp {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// The unipotent Jordan block `J_n(1)` (ones on the superdiagonal).
    pub fn unipotent_block(p: u64, n: usize) -> Self {
        let mut m = Self::identity(p, n);
        for i in 1..n {
            m.set(i - 1, i, 1);
        }
        m
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(p, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: u64) {
        self.data[i * self.cols + j] = x % self.p;
    }

    pub fn kronecker(&self, other: &MatrixFp) -> MatrixFp {
        assert_eq!(self.p, other.p);
        let mut out = Self::zeros(self.p, self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a == 0 {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.get(i2, j2);
                        if b != 0 {
                            out.set(i1 * other.rows + i2, j1 * other.cols + j2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// `self - I` for a square matrix.
    pub fn minus_identity(&self) -> MatrixFp {
        assert_eq!(self.rows, self.cols);
        let mut out = self.clone();
        for i in 0..self.rows {
            let x = out.get(i, i);
            out.set(i, i, x + self.p - 1);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Columns as sparse `(row, value)` lists.
    fn sparse_columns(&self) -> Vec<Vec<(usize, u64)>> {
        let mut cols = vec![Vec::new(); self.cols];
        for i in 0..self.rows {
            for (j, col) in cols.iter_mut().enumerate() {
                let x = self.get(i, j);
                if x != 0 {
                    col.push((i, x));
                }
            }
        }
        cols
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Rank over `F_p` by Gaussian elimination.
pub fn rank_fp(m: &MatrixFp) -> usize {
    let p = m.p;
    let mut a = m.data.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| a[i * cols + col] != 0) else {
            continue;
        };
        if pivot != rank {
            for j in col..cols {
                a.swap(pivot * cols + j, rank * cols + j);
            }
        }
        let inv = inv_mod(a[rank * cols + col], p);
        for i in rank + 1..rows {
            let x = a[i * cols + col];
            if x == 0 {
                continue;
            }
            let f = x * inv % p;
            for j in col..cols {
                let y = a[rank * cols + j];
                if y != 0 {
                    a[i * cols + j] = (a[i * cols + j] + p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn check_oracle_args(p: u64, r: u64, s: u64, budget: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if r == 0 || s == 0 {
        return Err(Error::IndexOutOfRange {
            index: 0,
            max: u64::MAX,
        });
    }
    let dim = r.saturating_mul(s);
    if dim > budget {
        return Err(Error::BudgetExceeded { dim, budget });
    }
    Ok(())
}

/// `J_r(1) (x) J_s(1)` over `F_p`, the action of the generator on `V_r (x) V_s`.
pub fn tensor_generator_matrix(p: u64, r: u64, s: u64, budget: u64) -> Result<MatrixFp> {
    check_oracle_args(p, r, s, budget)?;
    Ok(MatrixFp::unipotent_block(p, r as usize)
        .kronecker(&MatrixFp::unipotent_block(p, s as usize)))
}

/// Ranks of `N^0, N^1, ...` down to the first zero, for nilpotent square `n`.
/// Powers are built column by column by applying `n` to the previous power.
pub fn nilpotent_rank_sequence(n: &MatrixFp) -> Vec<usize> {
    assert_eq!(n.rows, n.cols);
    let p = n.p;
    let dim = n.rows;
    let sparse = n.sparse_columns();
    let mut power = MatrixFp::identity(p, dim);
    let mut ranks = vec![dim];
    while *ranks.last().unwrap() > 0 {
        assert!(ranks.len() <= dim + 1, "matrix is not nilpotent");
        let mut next = MatrixFp::zeros(p, dim, dim);
        for c in 0..dim {
            for (j, col) in sparse.iter().enumerate() {
                let vj = power.get(j, c);
                if vj == 0 {
                    continue;
                }
                for &(i, x) in col {
                    let cur = next.get(i, c);
                    next.set(i, c, cur + vj * x);
                }
            }
        }
        power = next;
        ranks.push(rank_fp(&power));
    }
    ranks
}

/// Jordan type from the rank sequence: the number of blocks of size `k` is
/// `rank(N^(k-1)) - 2 rank(N^k) + rank(N^(k+1))`.
pub fn jordan_type_by_ranks(p: u64, r: u64, s: u64, budget: u64) -> Result<JordanType> {
    let n = tensor_generator_matrix(p, r, s, budget)?.minus_identity();
    let ranks = nilpotent_rank_sequence(&n);
    let at = |k: usize| ranks.get(k).copied().unwrap_or(0) as i64;
    let mut blocks = Vec::new();
    for k in 1..ranks.len() {
        let mult = at(k - 1) - 2 * at(k) + at(k + 1);
        debug_assert!(mult >= 0);
        blocks.extend(std::iter::repeat_n(k as u64, mult as usize));
    }
    Ok(JordanType::new(blocks))
}

/// `C(s, l) mod p` for `l < len`, by Pascal's rule.
fn binomials_mod(p: u64, s: u64, len: usize) -> Vec<u64> {
    let mut row = vec![0u64; len];
    if len == 0 {
        return row;
    }
    row[0] = 1;
    for n in 1..=s {
        let top = (n as usize).min(len - 1);
        for l in (1..=top).rev() {
            row[l] = (row[l] + row[l - 1]) % p;
        }
    }
    row
}

/// Jordan type of `J_r(1) (x) J_s(1) - I` over `F_p` via the invariant
/// factors of the presentation matrix described in the module docs.
pub fn jordan_type(p: u64, r: u64, s: u64, budget: u64) -> Result<JordanType> {
    check_oracle_args(p, r, s, budget)?;
    let (r, s) = if r <= s { (r, s) } else { (s, r) };
    let n = r as usize;
    let binom = binomials_mod(p, s, n);
    let mut c = vec![0u64; n * n];
    for i in 0..n {
        for j in 0..=i {
            let b = binom[i - j];
            c[i * n + j] = if (i - j) % 2 == 0 { b } else { (p - b) % p };
        }
    }
    let mut row_alive = vec![true; n];
    let mut col_alive = vec![true; n];
    let mut blocks = Vec::with_capacity(n);
    for _ in 0..n {
        // Least t-degree s - i + j means largest i - j.
        let mut best: Option<(usize, usize)> = None;
        for i in (0..n).filter(|&i| row_alive[i]) {
            for j in (0..n).filter(|&j| col_alive[j]) {
                if c[i * n + j] != 0 && best.is_none_or(|(bi, bj)| i + bj > bi + j) {
                    best = Some((i, j));
                }
                if best.is_some_and(|(bi, bj)| bi + j >= i + bj) {
                    // Columns further right only have smaller i - j on this row.
                    break;
                }
            }
        }
        let (pi, pj) = best.expect("presentation matrix has full rank");
        let degree = s + pj as u64 - pi as u64;
        blocks.push(degree);
        let inv = inv_mod(c[pi * n + pj], p);
        for i in 0..n {
            if i == pi || !row_alive[i] || c[i * n + pj] == 0 {
                continue;
            }
            let f = c[i * n + pj] * inv % p;
            for j in 0..n {
                if !col_alive[j] {
                    continue;
                }
                let y = c[pi * n + j];
                if y != 0 {
                    c[i * n + j] = (c[i * n + j] + p - f * y % p) % p;
                }
            }
        }
        row_alive[pi] = false;
        col_alive[pj] = false;
    }
    Ok(JordanType::new(blocks))
}

/// One disagreement between the engine and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub r: u64,
    pub s: u64,
    pub expected: JordanType,
    pub got: RingElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub group: GroupSpec,
    pub pairs_checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// The mismatch list as JSON; `[]` on success.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.mismatches).expect("mismatches serialize")
    }
}

/// All pairs `1 <= r <= s <= q` with `r s <= budget`.
pub fn sweep_pairs(group: GroupSpec, budget: u64) -> Vec<(u64, u64)> {
    let q = group.q();
    (1..=q)
        .flat_map(|s| (1..=s).map(move |r| (r, s)))
        .filter(|&(r, s)| r * s <= budget)
        .collect()
}

/// Compares [`tensor::tensor`] with [`jordan_type`] on every pair of
/// [`sweep_pairs`].
pub fn verify_engine(group: GroupSpec, budget: u64) -> VerificationReport {
    let pairs = sweep_pairs(group, budget);
    let mismatches: Vec<Mismatch> = pairs
        .par_iter()
        .filter_map(|&(r, s)| {
            let expected = jordan_type(group.p(), r, s, budget).expect("pair within budget");
            let got = tensor::tensor(group, r, s).expect("indices in range");
            (JordanType::from_module(&got).as_ref() != Some(&expected)).then_some(Mismatch {
                r,
                s,
                expected,
                got,
            })
        })
        .collect();
    VerificationReport {
        group,
        pairs_checked: pairs.len(),
        mismatches,
    }
}
