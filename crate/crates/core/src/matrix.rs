//! Dense matrices over [`Scalar`] with exact Gaussian elimination for rank,
//! determinant, inverse and linear solves.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidInput("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn diag(entries: &[Scalar]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn map(&self, f: impl FnMut(&Scalar) -> Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn to_float(&self) -> Matrix {
        self.map(|s| s.to_float())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.shape_check(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.shape_check(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        self.map(|v| v * s)
    }

    pub fn neg(&self) -> Matrix {
        self.map(|v| -v)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = Scalar::zero();
            for k in 0..self.cols {
                acc += &(self.get(r, k) * other.get(k, c));
            }
            acc
        }))
    }

    /// Standard column action y = M x.
    pub fn matvec(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "matvec {}x{} with vector {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for c in 0..self.cols {
                    acc += &(self.get(r, c) * &x[c]);
                }
                acc
            })
            .collect())
    }

    pub fn trace(&self) -> Result<Scalar> {
        self.square_check()?;
        let mut acc = Scalar::zero();
        for i in 0..self.rows {
            acc += self.get(i, i);
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn frobenius_sq(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for s in &self.data {
            acc += &(s * s);
        }
        acc
    }

    fn shape_check(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    fn square_check(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} not square",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    fn pivot_nonzero(v: &Scalar) -> bool {
        match v {
            Scalar::Rational(_) => !v.is_zero(),
            Scalar::Float(f) => f.abs() > 1e-12,
        }
    }

    /// Row-echelon elimination; returns (echelon data, rank, det of the
    /// square part accounting for row swaps).
    fn eliminate(&self) -> (Vec<Scalar>, usize, Scalar) {
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let at = |a: &Vec<Scalar>, r: usize, c: usize| a[r * cols + c].clone();
        let mut rank = 0usize;
        let mut det = Scalar::one();
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let pivot_row = (rank..rows).find(|&r| Self::pivot_nonzero(&at(&a, r, col)));
            let Some(p) = pivot_row else {
                det = Scalar::zero();
                continue;
            };
            if p != rank {
                for c in 0..cols {
                    a.swap(rank * cols + c, p * cols + c);
                }
                det = -det;
            }
            let pv = at(&a, rank, col);
            det = &det * &pv;
            for r in rank + 1..rows {
                let f = &at(&a, r, col) / &pv;
                if f.is_zero() {
                    continue;
                }
                for c in col..cols {
                    let v = &at(&a, r, c) - &(&f * &at(&a, rank, c));
                    a[r * cols + c] = v;
                }
            }
            rank += 1;
        }
        if rank < rows.min(cols) {
            det = Scalar::zero();
        }
        (a, rank, det)
    }

    pub fn rank(&self) -> usize {
        self.eliminate().1
    }

    pub fn det(&self) -> Result<Scalar> {
        self.square_check()?;
        Ok(self.eliminate().2)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        self.square_check()?;
        let n = self.rows;
        // Gauss-Jordan on [A | I]
        let mut aug = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        for col in 0..n {
            let p = (col..n).find(|&r| Self::pivot_nonzero(aug.get(r, col)));
            let Some(p) = p else {
                return Err(Error::SingularMatrix);
            };
            if p != col {
                for c in 0..2 * n {
                    let tmp = aug.get(col, c).clone();
                    aug.set(col, c, aug.get(p, c).clone());
                    aug.set(p, c, tmp);
                }
            }
            let pv = aug.get(col, col).clone();
            for c in 0..2 * n {
                aug.set(col, c, aug.get(col, c) / &pv);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = aug.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for c in 0..2 * n {
                    let v = aug.get(r, c) - &(&f * aug.get(col, c));
                    aug.set(r, c, v);
                }
            }
        }
        Ok(Matrix::from_fn(n, n, |r, c| aug.get(r, c + n).clone()))
    }

    pub fn solve(&self, rhs: &[Scalar]) -> Result<Vec<Scalar>> {
        let inv = self.inverse()?;
        inv.matvec(rhs)
    }

    pub fn leading_principal_minors(&self) -> Result<Vec<Scalar>> {
        self.square_check()?;
        (1..=self.rows)
            .map(|m| Matrix::from_fn(m, m, |r, c| self.get(r, c).clone()).det())
            .collect()
    }
}
