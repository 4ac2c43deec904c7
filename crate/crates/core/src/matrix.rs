//! Dense integer matrices and their text, CSV and PBM renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    /// `█` for 1 and `·` for 0; other entries as right-aligned integers.
    Text,
    Csv,
    /// Plain (P1) portable bitmap, 1 = filled.
    Pbm,
}

impl FromStr for RenderFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(RenderFormat::Text),
            "csv" => Ok(RenderFormat::Csv),
            "pbm" => Ok(RenderFormat::Pbm),
            other => Err(Error::Parse(format!("unknown matrix format {other:?}"))),
        }
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<BigInt>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Matrix product, `None` on a dimension mismatch.
    pub fn mul(&self, other: &IntMatrix) -> Option<IntMatrix> {
        if self.cols != other.rows {
            return None;
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Some(out)
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    pub fn has_unit_diagonal(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| self.get(i, i).is_one())
    }

    pub fn is_binary(&self) -> bool {
        self.data.iter().all(|x| x.is_zero() || x.is_one())
    }

    pub fn render(&self, format: RenderFormat) -> Result<Vec<u8>> {
        let mut out = String::new();
        match format {
            RenderFormat::Csv => {
                for i in 0..self.rows {
                    let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
                    writeln!(out, "{}", cells.join(",")).unwrap();
                }
            }
            RenderFormat::Pbm => {
                if let Some(bad) = self.data.iter().find(|x| !(x.is_zero() || x.is_one())) {
                    return Err(Error::NonBinaryEntry(bad.to_string()));
                }
                writeln!(out, "P1\n{} {}", self.cols, self.rows).unwrap();
                for i in 0..self.rows {
                    let cells: Vec<&str> = self
                        .row(i)
                        .iter()
                        .map(|x| if x.is_zero() { "0" } else { "1" })
                        .collect();
                    writeln!(out, "{}", cells.join(" ")).unwrap();
                }
            }
            RenderFormat::Text if self.is_binary() => {
                for i in 0..self.rows {
                    let line: String = self
                        .row(i)
                        .iter()
                        .map(|x| if x.is_zero() { '·' } else { '█' })
                        .collect();
                    writeln!(out, "{line}").unwrap();
                }
            }
            RenderFormat::Text => {
                let width = self
                    .data
                    .iter()
                    .map(|x| x.to_string().len())
                    .max()
                    .unwrap_or(1);
                for i in 0..self.rows {
                    let cells: Vec<String> = self
                        .row(i)
                        .iter()
                        .map(|x| {
                            let s = if x.is_zero() {
                                "·".to_string()
                            } else {
                                x.to_string()
                            };
                            format!("{s:>width$}")
                        })
                        .collect();
                    writeln!(out, "{}", cells.join(" ")).unwrap();
                }
            }
        }
        Ok(out.into_bytes())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_identity() {
        let id = IntMatrix::identity(2);
        assert_eq!(
            String::from_utf8(id.render(RenderFormat::Text).unwrap()).unwrap(),
            "█·\n·█\n"
        );
        assert_eq!(
            String::from_utf8(id.render(RenderFormat::Csv).unwrap()).unwrap(),
            "1,0\n0,1\n"
        );
        assert_eq!(
            String::from_utf8(id.render(RenderFormat::Pbm).unwrap()).unwrap(),
            "P1\n2 2\n1 0\n0 1\n"
        );
    }

    #[test]
    fn non_binary_entries() {
        let m = IntMatrix::from_i64_rows(&[vec![1, 0], vec![-1, 1]]);
        assert_eq!(
            m.render(RenderFormat::Pbm),
            Err(Error::NonBinaryEntry("-1".into()))
        );
        assert_eq!(
            String::from_utf8(m.render(RenderFormat::Csv).unwrap()).unwrap(),
            "1,0\n-1,1\n"
        );
        assert_eq!(
            String::from_utf8(m.render(RenderFormat::Text).unwrap()).unwrap(),
            " 1  ·\n-1  1\n"
        );
    }

    #[test]
    fn products_and_shape_checks() {
        let a = IntMatrix::from_i64_rows(&[vec![1, 0], vec![2, 1]]);
        let b = IntMatrix::from_i64_rows(&[vec![1, 0], vec![-2, 1]]);
        assert_eq!(a.mul(&b).unwrap(), IntMatrix::identity(2));
        assert!(a.is_lower_triangular() && a.has_unit_diagonal());
        assert!(!a.is_binary());
        assert!(a.mul(&IntMatrix::zeros(3, 1)).is_none());
    }

    #[test]
    fn format_names() {
        assert_eq!("pbm".parse::<RenderFormat>().unwrap(), RenderFormat::Pbm);
        assert!("png".parse::<RenderFormat>().is_err());
    }
}
