use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{Elt, Field};

/// Dense row-major matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elt>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<u32> = self.row(r).iter().map(|e| e.value()).collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<Elt>) -> Result<Mat> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch);
        }
        Ok(Mat { field, rows, cols, data })
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        Mat { field, rows, cols, data: vec![Elt::ZERO; rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        Mat::from_fn(field, n, n, |i, j| if i == j { Elt::ONE } else { Elt::ZERO })
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Elt) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { field, rows, cols, data }
    }

    pub fn diagonal(field: Field, diag: &[Elt]) -> Mat {
        Mat::from_fn(field, diag.len(), diag.len(), |i, j| if i == j { diag[i] } else { Elt::ZERO })
    }

    pub fn field(&self) -> &Field {
        &self.field
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

    /// Row-major entries.
    pub fn entries(&self) -> &[Elt] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elt) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Elt> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field.clone(), self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Submatrix made of the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Mat {
        Mat::from_fn(self.field.clone(), self.rows, cols.len(), |i, j| self.get(i, cols[j]))
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch);
        }
        let f = &self.field;
        let mut out = Mat::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(t, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Elt]) -> Result<Vec<Elt>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows).map(|i| self.field.dot(self.row(i).iter().zip(v))).collect())
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Elt]) -> Result<Vec<Elt>> {
        if v.len() != self.rows {
            return Err(Error::LengthMismatch { expected: self.rows, got: v.len() });
        }
        let f = &self.field;
        let mut out = vec![Elt::ZERO; self.cols];
        for (i, &c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(self.row(i)) {
                *o = f.add(*o, f.mul(c, x));
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch);
        }
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(Mat { field: f.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: Elt) -> Mat {
        let f = &self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Mat { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Mat {
        self.scale(self.field.neg(Elt::ONE))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| self.get(i, j) == if i == j { Elt::ONE } else { Elt::ZERO })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    /// Determinant by Gaussian elimination; zero exactly when singular.
    pub fn det(&self) -> Result<Elt> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let f = &self.field;
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = Elt::ONE;
        for c in 0..n {
            let Some(piv) = (c..n).find(|&r| !a[r * n + c].is_zero()) else {
                return Ok(Elt::ZERO);
            };
            if piv != c {
                for j in 0..n {
                    a.swap(c * n + j, piv * n + j);
                }
                det = f.neg(det);
            }
            let pv = a[c * n + c];
            det = f.mul(det, pv);
            let pinv = f.inv(pv)?;
            for r in c + 1..n {
                let factor = f.mul(a[r * n + c], pinv);
                if factor.is_zero() {
                    continue;
                }
                for j in c..n {
                    a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[c * n + j]));
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss-Jordan elimination on `[A | I]`.
    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let f = &self.field;
        let n = self.rows;
        let w = 2 * n;
        let mut a = vec![Elt::ZERO; n * w];
        for i in 0..n {
            a[i * w..i * w + n].copy_from_slice(self.row(i));
            a[i * w + n + i] = Elt::ONE;
        }
        for c in 0..n {
            let piv = (c..n).find(|&r| !a[r * w + c].is_zero()).ok_or(Error::Singular)?;
            if piv != c {
                for j in 0..w {
                    a.swap(c * w + j, piv * w + j);
                }
            }
            let pinv = f.inv(a[c * w + c])?;
            for j in 0..w {
                a[c * w + j] = f.mul(a[c * w + j], pinv);
            }
            for r in 0..n {
                if r == c {
                    continue;
                }
                let factor = a[r * w + c];
                if factor.is_zero() {
                    continue;
                }
                for j in 0..w {
                    a[r * w + j] = f.sub(a[r * w + j], f.mul(factor, a[c * w + j]));
                }
            }
        }
        Ok(Mat::from_fn(f.clone(), n, n, |i, j| a[i * w + n + j]))
    }

    pub fn rank(&self) -> usize {
        let f = &self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut rank = 0;
        for c in 0..cols {
            let Some(piv) = (rank..rows).find(|&r| !a[r * cols + c].is_zero()) else {
                continue;
            };
            for j in 0..cols {
                a.swap(rank * cols + j, piv * cols + j);
            }
            let pinv = f.inv(a[rank * cols + c]).expect("pivot is nonzero");
            for r in rank + 1..rows {
                let factor = f.mul(a[r * cols + c], pinv);
                if factor.is_zero() {
                    continue;
                }
                for j in c..cols {
                    a[r * cols + j] = f.sub(a[r * cols + j], f.mul(factor, a[rank * cols + j]));
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }
}
