use super::field::{Field, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact field.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type ExactMatrix = Matrix<Scalar>;

/// Result of row reduction.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<T> {
    pub reduced: Matrix<T>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl<T: Field> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    /// Builds a matrix from rows of equal length; `cols` is used when `rows` is empty.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Result<Self> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch("matrix product".into()));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        (0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data })
    }
}

/// Reduced row-echelon form by Gauss–Jordan elimination.
pub fn rref<T: Field>(m: &Matrix<T>) -> Rref<T> {
    let (rows, pivots) = rref_rows(m.to_rows(), m.cols());
    let rank = pivots.len();
    let mut full = rows;
    full.resize(m.rows(), vec![T::zero(); m.cols()]);
    Rref { reduced: Matrix::from_rows(full, m.cols()).expect("shape"), rank, pivots }
}

/// Row-reduces a list of rows; returns the nonzero reduced rows and their pivot columns.
pub fn rref_rows<T: Field>(mut rows: Vec<Vec<T>>, cols: usize) -> (Vec<Vec<T>>, Vec<usize>) {
    let n = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = T::one().div(&rows[r][c]);
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = x.mul(&inv);
                }
            }
        }
        let support: Vec<usize> = (c..cols).filter(|&j| !rows[r][j].is_zero()).collect();
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &support {
                row[j] = row[j].sub(&f.mul(&pivot_row[j]));
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank<T: Field>(m: &Matrix<T>) -> usize {
    rref_rows(m.to_rows(), m.cols()).1.len()
}

/// Basis of the right kernel, one vector per free column.
pub fn kernel_basis<T: Field>(m: &Matrix<T>) -> Vec<Vec<T>> {
    let (rows, pivots) = rref_rows(m.to_rows(), m.cols());
    kernel_from_rref(&rows, &pivots, m.cols())
}

pub fn kernel_from_rref<T: Field>(rows: &[Vec<T>], pivots: &[usize], cols: usize) -> Vec<Vec<T>> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for f in 0..cols {
        if is_pivot[f] {
            continue;
        }
        let mut v = vec![T::zero(); cols];
        v[f] = T::one();
        for (i, &p) in pivots.iter().enumerate() {
            let e = &rows[i][f];
            if !e.is_zero() {
                v[p] = e.neg();
            }
        }
        out.push(v);
    }
    out
}

/// Determinant by elimination; `None` for non-square input.
pub fn determinant<T: Field>(m: &Matrix<T>) -> Option<T> {
    if m.rows() != m.cols() {
        return None;
    }
    let n = m.rows();
    let mut a = m.to_rows();
    let mut det = T::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return Some(T::zero()) };
        if p != c {
            a.swap(p, c);
            det = det.neg();
        }
        let piv = a[c][c].clone();
        det = det.mul(&piv);
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].div(&piv);
            for j in c..n {
                let v = a[i][j].sub(&f.mul(&a[c][j]));
                a[i][j] = v;
            }
        }
    }
    Some(det)
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse<T: Field>(m: &Matrix<T>) -> Option<Matrix<T>> {
    let n = m.rows();
    if n != m.cols() {
        return None;
    }
    let rows: Vec<Vec<T>> = (0..n)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.extend((0..n).map(|j| if i == j { T::one() } else { T::zero() }));
            r
        })
        .collect();
    let (red, pivots) = rref_rows(rows, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    let data = red.into_iter().flat_map(|r| r.into_iter().skip(n)).collect();
    Matrix::new(n, n, data).ok()
}

/// Solves `m x = b`; returns one solution or `None`.
pub fn solve<T: Field>(m: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    let cols = m.cols();
    let rows: Vec<Vec<T>> = (0..m.rows())
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let (red, pivots) = rref_rows(rows, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![T::zero(); cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = red[i][cols].clone();
    }
    Some(x)
}

/// Basis of the row space in reduced form.
pub fn row_space<T: Field>(rows: Vec<Vec<T>>, cols: usize) -> Vec<Vec<T>> {
    rref_rows(rows, cols).0
}
