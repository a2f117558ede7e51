//! Dense matrices over an exact field, with the row-reduction routines the
//! representation and moduli computations rely on: rank, kernel, inverse,
//! and linear solving. Everything is exact; pivoting picks the first
//! nonzero entry.

use crate::field::{Field, FieldError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Mat<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Mat<F> {
    pub fn zero(f: &F, rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![f.zero(); rows * cols],
        }
    }

    pub fn identity(f: &F, n: usize) -> Self {
        let mut m = Mat::zero(f, n, n);
        for i in 0..n {
            m.set(i, i, f.one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut g: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(g(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(f: &F, rows: Vec<Vec<F::Elem>>) -> Result<Self, MatError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatError::Shape("ragged row lengths".into()));
        }
        let _ = f;
        Ok(Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self, f: &F) -> bool {
        self.data.iter().all(|e| f.is_zero(e))
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, f: &F, other: &Self) -> Result<Self, MatError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatError::Shape(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f.add(a, b))
                .collect(),
        })
    }

    pub fn sub(&self, f: &F, other: &Self) -> Result<Self, MatError> {
        self.add(f, &other.neg(f))
    }

    pub fn neg(&self, f: &F) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.neg(a)).collect(),
        }
    }

    pub fn scale(&self, f: &F, c: &F::Elem) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, c)).collect(),
        }
    }

    pub fn mul(&self, f: &F, other: &Self) -> Result<Self, MatError> {
        if self.cols != other.rows {
            return Err(MatError::Shape(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), &f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Assemble a 2x2 block matrix; block shapes must be coherent.
    pub fn block2x2(f: &F, blocks: [[&Mat<F>; 2]; 2]) -> Result<Self, MatError> {
        let r0 = blocks[0][0].rows;
        let r1 = blocks[1][0].rows;
        let c0 = blocks[0][0].cols;
        let c1 = blocks[0][1].cols;
        if blocks[0][1].rows != r0
            || blocks[1][1].rows != r1
            || blocks[1][0].cols != c0
            || blocks[1][1].cols != c1
        {
            return Err(MatError::Shape("incoherent block shapes".into()));
        }
        let mut out = Mat::zero(f, r0 + r1, c0 + c1);
        for (bi, roff) in [(0usize, 0usize), (1, r0)] {
            for (bj, coff) in [(0usize, 0usize), (1, c0)] {
                let b = blocks[bi][bj];
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        out.set(roff + i, coff + j, b.get(i, j).clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self, f: &F) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
                continue;
            };
            if pr != row {
                for j in 0..m.cols {
                    let a = m.get(row, j).clone();
                    let b = m.get(pr, j).clone();
                    m.set(row, j, b);
                    m.set(pr, j, a);
                }
            }
            let inv = f
                .inv(m.get(row, col))
                .expect("pivot is nonzero by construction");
            for j in col..m.cols {
                m.set(row, j, f.mul(m.get(row, j), &inv));
            }
            for r in 0..m.rows {
                if r != row && !f.is_zero(m.get(r, col)) {
                    let factor = m.get(r, col).clone();
                    for j in col..m.cols {
                        let v = f.sub(m.get(r, j), &f.mul(&factor, m.get(row, j)));
                        m.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, f: &F) -> usize {
        self.rref(f).1.len()
    }

    /// Basis of the right kernel, one column per basis vector.
    pub fn kernel_basis(&self, f: &F) -> Mat<F> {
        let (r, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zero(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, f.one());
            for (prow, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, f.neg(r.get(prow, fc)));
            }
        }
        out
    }

    /// One solution of `self * x = rhs` for each rhs column, if consistent.
    pub fn solve(&self, f: &F, rhs: &Mat<F>) -> Result<Option<Mat<F>>, MatError> {
        if rhs.rows != self.rows {
            return Err(MatError::Shape("rhs row count".into()));
        }
        let mut aug = Mat::zero(f, self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            for j in 0..rhs.cols {
                aug.set(i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        let (r, pivots) = aug.rref(f);
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Mat::zero(f, self.cols, rhs.cols);
        for (prow, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, r.get(prow, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self, f: &F) -> Option<Mat<F>> {
        if self.rows != self.cols {
            return None;
        }
        let x = self
            .solve(f, &Mat::identity(f, self.rows))
            .expect("square shapes are coherent")?;
        if x.mul(f, self).ok()? == Mat::identity(f, self.rows) {
            Some(x)
        } else {
            None
        }
    }

    pub fn render(&self, f: &F) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| f.render(self.get(i, j))).collect())
            .collect()
    }

    pub fn parse(f: &F, rows: &[Vec<String>]) -> Result<Self, MatError> {
        let parsed: Result<Vec<Vec<F::Elem>>, FieldError> = rows
            .iter()
            .map(|row| row.iter().map(|s| f.parse(s)).collect())
            .collect();
        Mat::from_rows(f, parsed?)
    }
}
