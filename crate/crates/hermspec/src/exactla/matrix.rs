//! Dense matrices over the Gaussian integers and Gaussian rationals.

use std::fmt;


use super::Error;
use crate::gaussint::{parse_gauss_literal, GaussInt, GaussRat};

// ----------------------------------------------------------------- GMatrix

/// A dense matrix over `Z[i]`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussInt>,
}

impl GMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        GMatrix { rows, cols, data: vec![GaussInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scaled_identity(n, GaussInt::one())
    }

    pub fn scaled_identity(n: usize, z: GaussInt) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, z.clone());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        GMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<GaussInt>>) -> Result<Self, Error> {
        if rows.is_empty() {
            return Err(Error::Shape("matrix needs at least one row".into()));
        }
        let cols = rows[0].len();
        if cols == 0 {
            return Err(Error::Shape("matrix needs at least one column".into()));
        }
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let nrows = rows.len();
        Ok(GMatrix { rows: nrows, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, z: GaussInt) {
        self.data[i * self.cols + j] = z;
    }

    pub fn trace(&self) -> GaussInt {
        assert!(self.is_square(), "trace of a non-square matrix");
        let mut t = GaussInt::zero();
        for i in 0..self.rows {
            t += self.get(i, i);
        }
        t
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.conj_transpose()
    }

    pub fn add(&self, rhs: &GMatrix) -> GMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + rhs.get(i, j))
    }

    pub fn sub(&self, rhs: &GMatrix) -> GMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - rhs.get(i, j))
    }

    pub fn mul(&self, rhs: &GMatrix) -> GMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = GaussInt::zero();
            for k in 0..self.cols {
                acc += &(self.get(i, k) * rhs.get(k, j));
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[GaussInt]) -> Vec<GaussInt> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = GaussInt::zero();
                for k in 0..self.cols {
                    acc += &(self.get(i, k) * &v[k]);
                }
                acc
            })
            .collect()
    }

    pub fn col(&self, j: usize) -> Vec<GaussInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|z| z.is_zero())
    }

    pub fn to_qmatrix(&self) -> QMatrix {
        QMatrix::from_fn(self.rows, self.cols, |i, j| {
            GaussRat::from_int(self.get(i, j).clone())
        })
    }

    pub(crate) fn swap_rows(&mut self, i: usize, j: usize) {
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    pub(crate) fn swap_cols(&mut self, i: usize, j: usize) {
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// `row_dst += μ · row_src`.
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, mu: &GaussInt) {
        for k in 0..self.cols {
            let delta = self.get(src, k) * mu;
            let v = self.get(dst, k) + &delta;
            self.set(dst, k, v);
        }
    }

    /// `col_dst += μ · col_src`.
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, mu: &GaussInt) {
        for r in 0..self.rows {
            let delta = self.get(r, src) * mu;
            let v = self.get(r, dst) + &delta;
            self.set(r, dst, v);
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, u: &GaussInt) {
        for k in 0..self.cols {
            let v = self.get(i, k) * u;
            self.set(i, k, v);
        }
    }

    pub(crate) fn scale_col(&mut self, j: usize, u: &GaussInt) {
        for r in 0..self.rows {
            let v = self.get(r, j) * u;
            self.set(r, j, v);
        }
    }
}

impl fmt::Display for GMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(", "))?;
        }
        Ok(())
    }
}

/// Parses matrix text: one row per line, comma-separated Gaussian
/// literals; blank lines and `#` comments are ignored.
pub fn parse_matrix(text: &str) -> Result<GMatrix, Error> {
    let mut rows: Vec<Vec<GaussInt>> = Vec::new();
    let mut width: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let entries: Result<Vec<GaussInt>, _> = line
            .split(',')
            .map(|cell| parse_gauss_literal(cell.trim()))
            .collect();
        let entries = entries.map_err(|e| Error::MatrixParse {
            line: line_no,
            reason: e.to_string(),
        })?;
        if let Some(w) = width {
            if entries.len() != w {
                return Err(Error::MatrixParse {
                    line: line_no,
                    reason: format!("expected {} entries, found {}", w, entries.len()),
                });
            }
        } else {
            width = Some(entries.len());
        }
        rows.push(entries);
    }
    if rows.is_empty() {
        return Err(Error::MatrixParse { line: 0, reason: "no rows found".into() });
    }
    GMatrix::from_rows(rows)
}

// -------------------------------------------------------------- determinant

/// Fraction-free Bareiss determinant over `Z[i]`; every interior division
/// is exact.
pub fn det(m: &GMatrix) -> Result<GaussInt, Error> {
    if !m.is_square() {
        return Err(Error::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(GaussInt::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = GaussInt::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return Ok(GaussInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a.get(k, k) * a.get(i, j) - a.get(i, k) * a.get(k, j);
                let v = num
                    .checked_div(&prev)
                    .expect("Bareiss interior division is exact");
                a.set(i, j, v);
            }
        }
        prev = a.get(k, k).clone();
    }
    let d = a.get(n - 1, n - 1).clone();
    Ok(if negate { -d } else { d })
}

// ----------------------------------------------------------------- QMatrix

/// A dense matrix over `Q(i)`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussRat>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![GaussRat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, GaussRat::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussRat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        QMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussRat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussRat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = &GaussRat> {
        self.data.iter()
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn mul(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = GaussRat::zero();
            for k in 0..self.cols {
                acc = &acc + &(self.get(i, k) * rhs.get(k, j));
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[GaussRat]) -> Vec<GaussRat> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = GaussRat::zero();
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * &v[k]);
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, c: &GaussRat) -> QMatrix {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    /// `Some(GMatrix)` when every entry is a Gaussian integer.
    pub fn to_gmatrix(&self) -> Option<GMatrix> {
        let mut out = GMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).as_gauss_int()?);
            }
        }
        Some(out)
    }

    /// Exact determinant via Gaussian elimination over `Q(i)`.
    pub fn det(&self) -> Result<GaussRat, Error> {
        if !self.is_square() {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut acc = GaussRat::one();
        for k in 0..n {
            let pivot_row = match (k..n).find(|&i| !a.get(i, k).is_zero()) {
                Some(i) => i,
                None => return Ok(GaussRat::zero()),
            };
            if pivot_row != k {
                for j in 0..n {
                    let tmp = a.get(k, j).clone();
                    a.set(k, j, a.get(pivot_row, j).clone());
                    a.set(pivot_row, j, tmp);
                }
                acc = -&acc;
            }
            let pivot = a.get(k, k).clone();
            acc = &acc * &pivot;
            let inv = pivot.inv().expect("pivot is nonzero");
            for i in k + 1..n {
                if a.get(i, k).is_zero() {
                    continue;
                }
                let factor = a.get(i, k) * &inv;
                for j in k..n {
                    let v = a.get(i, j) - &(&factor * a.get(k, j));
                    a.set(i, j, v);
                }
            }
        }
        Ok(acc)
    }

    /// Exact inverse by Gauss–Jordan elimination.  The error carries the
    /// (zero) determinant of a singular input.
    pub fn inverse(&self) -> Result<QMatrix, Error> {
        if !self.is_square() {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = QMatrix::identity(n);
        for k in 0..n {
            let pivot_row = match (k..n).find(|&i| !a.get(i, k).is_zero()) {
                Some(i) => i,
                None => return Err(Error::Singular { det: GaussRat::zero() }),
            };
            if pivot_row != k {
                for j in 0..n {
                    let tmp = a.get(k, j).clone();
                    a.set(k, j, a.get(pivot_row, j).clone());
                    a.set(pivot_row, j, tmp);
                    let tmp = inv.get(k, j).clone();
                    inv.set(k, j, inv.get(pivot_row, j).clone());
                    inv.set(pivot_row, j, tmp);
                }
            }
            let scale = a.get(k, k).inv().expect("pivot is nonzero");
            for j in 0..n {
                let v = a.get(k, j) * &scale;
                a.set(k, j, v);
                let v = inv.get(k, j) * &scale;
                inv.set(k, j, v);
            }
            for i in 0..n {
                if i == k || a.get(i, k).is_zero() {
                    continue;
                }
                let factor = a.get(i, k).clone();
                for j in 0..n {
                    let v = a.get(i, j) - &(&factor * a.get(k, j));
                    a.set(i, j, v);
                    let v = inv.get(i, j) - &(&factor * inv.get(k, j));
                    inv.set(i, j, v);
                }
            }
        }
        Ok(inv)
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(", "))?;
        }
        Ok(())
    }
}

/// Exact inverse of a Gaussian-integer matrix (as a rational matrix).
pub fn inverse(m: &GMatrix) -> Result<QMatrix, Error> {
    m.to_qmatrix().inverse()
}
