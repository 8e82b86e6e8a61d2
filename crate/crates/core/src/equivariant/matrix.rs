//! Dense square matrices over Q.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{q, QStr, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    dim: usize,
    data: Vec<Q>,
}

impl QMatrix {
    pub fn new(rows: Vec<Vec<Q>>) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::NotSquare { rows: dim, cols: row.len() });
            }
            data.extend(row);
        }
        Ok(Self { dim, data })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Self { dim, data: vec![Q::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Q::one();
        }
        m
    }

    pub fn scalar(c: Q) -> Self {
        Self { dim: 1, data: vec![c] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.dim + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Q>> {
        self.data.chunks(self.dim.max(1)).take(self.dim).map(<[Q]>::to_vec).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "matrix dimensions differ");
        let n = self.dim;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, mut r: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.dim);
        while r > 0 {
            if r & 1 == 1 {
                acc = acc.mul(&base);
            }
            r >>= 1;
            if r > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> Q {
        (0..self.dim).fold(Q::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn add_scaled_identity(&self, c: &Q) -> Self {
        let mut m = self.clone();
        for i in 0..self.dim {
            m.data[i * self.dim + i] += c;
        }
        m
    }

    pub fn block_diag(blocks: &[QMatrix]) -> Self {
        let n = blocks.iter().map(|b| b.dim).sum();
        let mut out = Self::zero(n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.dim {
                for j in 0..b.dim {
                    out.set(off + i, off + j, b.get(i, j).clone());
                }
            }
            off += b.dim;
        }
        out
    }

    /// Determinant by Laplace expansion along the first row. Exponential;
    /// intended only as an independent check for small matrices.
    pub fn det_cofactor(&self) -> Q {
        fn go(m: &[Vec<Q>]) -> Q {
            match m.len() {
                0 => Q::one(),
                1 => m[0][0].clone(),
                n => {
                    let mut acc = Q::zero();
                    for j in 0..n {
                        if m[0][j].is_zero() {
                            continue;
                        }
                        let minor: Vec<Vec<Q>> = m[1..]
                            .iter()
                            .map(|row| {
                                row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect()
                            })
                            .collect();
                        let term = &m[0][j] * go(&minor);
                        if j % 2 == 0 {
                            acc += term;
                        } else {
                            acc -= term;
                        }
                    }
                    acc
                }
            }
        }
        go(&self.rows())
    }

    /// Coefficients `c_0 = 1, c_1, …, c_d` of `det(xI - M) = Σ c_i x^{d-i}`
    /// by the Faddeev–LeVerrier recursion.
    pub fn char_poly_coeffs(&self) -> Vec<Q> {
        let n = self.dim;
        let mut coeffs = vec![Q::one()];
        let mut m_k = Self::zero(n);
        for k in 1..=n {
            m_k = self.mul(&m_k).add_scaled_identity(&coeffs[k - 1]);
            let c = -self.mul(&m_k).trace() / q(k as i64);
            coeffs.push(c);
        }
        coeffs
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows();
        let n = self.dim;
        let mut rank = 0;
        for col in 0..n {
            let Some(pivot) = (rank..n).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = Q::one() / &rows[rank][col];
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && !row[col].is_zero() {
                    let f = &row[col] * &inv;
                    for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                        *x -= &f * p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl Serialize for QMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<QStr>> = self.rows().into_iter().map(|r| r.into_iter().map(QStr).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<QStr>>::deserialize(d)?;
        Self::new(rows.into_iter().map(|r| r.into_iter().map(|x| x.0).collect()).collect())
            .map_err(serde::de::Error::custom)
    }
}
