//! Dense row-major matrices over exact scalars.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Scalars usable as matrix entries.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_i64(v: i64) -> Self;
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

/// Row-major `rows × cols` matrix. Either dimension may be zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RatMatrix = Matrix<BigRational>;
pub type IntMatrix = Matrix<BigInt>;

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows * cols != data.len() {
            return Err(Error::Shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from small integer literals, row-major.
    ///
    /// Panics if `data.len() != rows * cols`.
    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols, "from_i64: wrong entry count");
        Matrix { rows, cols, data: data.iter().map(|&v| T::from_i64(v)).collect() }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn diagonal(rows: usize, cols: usize, diag: &[T]) -> Self {
        Self::from_fn(rows, cols, |r, c| if r == c && r < diag.len() { diag[r].clone() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
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

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let prod = a.clone() * rhs.get(k, c);
                    let idx = r * out.cols + c;
                    out.data[idx] = std::mem::replace(&mut out.data[idx], T::zero()) + &prod;
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, rhs: &Self, op: &str, f: impl Fn(T, &T) -> T) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(Error::Shape(format!("cannot {op} {}x{} and {}x{}", self.rows, self.cols, rhs.rows, rhs.cols)));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| f(a.clone(), b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, "subtract", |a, b| a - b)
    }

    pub fn scale(&self, s: &T) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.clone() * s).collect() }
    }

    /// `[self | rhs]`.
    pub fn hstack(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows {
            return Err(Error::Shape(format!("hstack: {} rows vs {} rows", self.rows, rhs.rows)));
        }
        let split = self.cols;
        Ok(Self::from_fn(self.rows, self.cols + rhs.cols, |r, c| {
            if c < split {
                self.get(r, c).clone()
            } else {
                rhs.get(r, c - split).clone()
            }
        }))
    }

    /// `[self ; rhs]`.
    pub fn vstack(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.cols {
            return Err(Error::Shape(format!("vstack: {} cols vs {} cols", self.cols, rhs.cols)));
        }
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Ok(Matrix { rows: self.rows + rhs.rows, cols: self.cols, data })
    }

    pub fn block_diag(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows + rhs.rows, self.cols + rhs.cols, |r, c| match (r < self.rows, c < self.cols) {
            (true, true) => self.get(r, c).clone(),
            (false, false) => rhs.get(r - self.rows, c - self.cols).clone(),
            _ => T::zero(),
        })
    }

    /// Kronecker product `self ⊗ rhs`. With column-major `vec`,
    /// `vec(L·S·R) = (Rᵀ ⊗ L)·vec(S)`.
    pub fn kron(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            self.get(r / rhs.rows, c / rhs.cols).clone() * rhs.get(r % rhs.rows, c % rhs.cols)
        })
    }

    /// Stacks the columns into a single column.
    pub fn vec(&self) -> Self {
        Self::from_fn(self.rows * self.cols, 1, |i, _| self.get(i % self.rows, i / self.rows).clone())
    }

    /// Inverse of [`Matrix::vec`].
    pub fn unvec(v: &Self, rows: usize, cols: usize) -> Self {
        assert_eq!(v.rows, rows * cols, "unvec: length mismatch");
        Self::from_fn(rows, cols, |r, c| v.get(c * rows + r, 0).clone())
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.rows, idx.len(), |r, c| self.get(r, idx[c]).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), self.cols, |r, c| self.get(idx[r], c).clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_columns(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// `row[dst] += factor * row[src]`.
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &T) {
        if factor.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.get(src, c).clone() * factor;
            let idx = dst * self.cols + c;
            self.data[idx] = std::mem::replace(&mut self.data[idx], T::zero()) + &v;
        }
    }

    /// `col[dst] += factor * col[src]`.
    pub fn add_column_multiple(&mut self, dst: usize, src: usize, factor: &T) {
        if factor.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self.get(r, src).clone() * factor;
            let idx = r * self.cols + dst;
            self.data[idx] = std::mem::replace(&mut self.data[idx], T::zero()) + &v;
        }
    }

    pub fn scale_row(&mut self, r: usize, factor: &T) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            self.data[idx] = std::mem::replace(&mut self.data[idx], T::zero()) * factor;
        }
    }

    pub fn negate_column(&mut self, c: usize) {
        for r in 0..self.rows {
            let idx = r * self.cols + c;
            self.data[idx] = -std::mem::replace(&mut self.data[idx], T::zero());
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            self.data[idx] = -std::mem::replace(&mut self.data[idx], T::zero());
        }
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl IntMatrix {
    pub fn to_rational(&self) -> RatMatrix {
        self.map(|v| BigRational::from_integer(v.clone()))
    }
}

impl RatMatrix {
    /// `None` if some entry is not an integer.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        let mut data = Vec::with_capacity(self.data.len());
        for v in &self.data {
            if !v.is_integer() {
                return None;
            }
            data.push(v.to_integer());
        }
        Some(Matrix { rows: self.rows, cols: self.cols, data })
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.checked_mul(rhs).expect("matrix product shape")
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.checked_add(rhs).expect("matrix sum shape")
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.checked_sub(rhs).expect("matrix difference shape")
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        self.map(|v| -v.clone())
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "[{}x{} empty]", self.rows, self.cols);
        }
        let cells: Vec<String> = self.data.iter().map(|v| v.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for r in 0..self.rows {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", cells[r * self.cols + c])?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matrix{}x{}{:?}",
            self.rows,
            self.cols,
            self.to_rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>()
        )
    }
}
