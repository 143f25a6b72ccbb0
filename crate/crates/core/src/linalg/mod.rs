//! Dense matrices over a ring, with exact elimination for rational entries.

mod constants;
mod exact;

pub use constants::{constants, ConstantMatrices};
pub use exact::SolveResult;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeStruct;

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use crate::scalar::Rational;

/// Ring operations needed by [`Matrix`]. Multiplication need not commute.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
}

impl Ring for Quaternion {
    fn zero() -> Self {
        Quaternion::zero()
    }
    fn one() -> Self {
        Quaternion::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        Quaternion::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Quaternion::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Quaternion::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Quaternion::neg(self)
    }
    fn is_zero(&self) -> bool {
        Quaternion::is_zero(self)
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { op: "construct", lhs: (rows, cols), rhs: (entries.len(), 1) });
        }
        Ok(Matrix { rows, cols, entries })
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        Matrix { rows: rows.len(), cols, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn column(values: Vec<T>) -> Self {
        Matrix { rows: values.len(), cols: 1, entries: values }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Matrix<T> {
        Matrix::from_fn(self.rows, 1, |i, _| self.get(i, j).clone())
    }

    pub fn transpose(&self) -> Matrix<T> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    /// Left scalar multiple `s·A`.
    pub fn scale(&self, s: &T) -> Matrix<T> {
        self.map(|x| s.mul(x))
    }

    pub fn try_mul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { op: "multiply", lhs: self.shape(), rhs: rhs.shape() });
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, k| acc.add(&self.get(i, k).mul(rhs.get(k, j))))
        }))
    }

    pub fn try_add(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        self.zip(rhs, "add", T::add)
    }

    pub fn try_sub(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        self.zip(rhs, "subtract", T::sub)
    }

    fn zip(&self, rhs: &Matrix<T>, op: &'static str, f: impl Fn(&T, &T) -> T) -> Result<Matrix<T>> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch { op, lhs: self.shape(), rhs: rhs.shape() });
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    /// Assembles `[[tl, tr], [bl, br]]`. Panics if the blocks do not fit.
    pub fn block(tl: &Matrix<T>, tr: &Matrix<T>, bl: &Matrix<T>, br: &Matrix<T>) -> Matrix<T> {
        assert!(tl.rows == tr.rows && bl.rows == br.rows, "block rows disagree");
        assert!(tl.cols == bl.cols && tr.cols == br.cols, "block columns disagree");
        let (top, left) = (tl.rows, tl.cols);
        Matrix::from_fn(top + bl.rows, left + tr.cols, |i, j| {
            match (i < top, j < left) {
                (true, true) => tl.get(i, j),
                (true, false) => tr.get(i, j - left),
                (false, true) => bl.get(i - top, j),
                (false, false) => br.get(i - top, j - left),
            }
            .clone()
        })
    }

    pub fn block_diag(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
        Matrix::block(a, &Matrix::zeros(a.rows, b.cols), &Matrix::zeros(b.rows, a.cols), b)
    }

    /// Stacks `top` over `bottom`.
    pub fn vstack(top: &Matrix<T>, bottom: &Matrix<T>) -> Matrix<T> {
        assert_eq!(top.cols, bottom.cols, "vstack column mismatch");
        let mut entries = top.entries.clone();
        entries.extend(bottom.entries.iter().cloned());
        Matrix { rows: top.rows + bottom.rows, cols: top.cols, entries }
    }

    pub fn submatrix(&self, row0: usize, col0: usize, rows: usize, cols: usize) -> Matrix<T> {
        Matrix::from_fn(rows, cols, |i, j| self.get(row0 + i, col0 + j).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(T::is_zero)
    }
}

impl Matrix<Rational> {
    /// Convenience constructor for integer literals.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from(x)).collect()).collect())
    }

    /// Embeds each entry as a scalar quaternion.
    pub fn to_quaternion(&self) -> Matrix<Quaternion> {
        self.map(|r| Quaternion::scalar(r.clone()))
    }
}

impl Matrix<Quaternion> {
    /// Right-multiplies every entry by `q`.
    pub fn right_mul_entries(&self, q: &Quaternion) -> Matrix<Quaternion> {
        self.map(|m| m.mul(q))
    }
}

macro_rules! matrix_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<T: Ring> $tr for &Matrix<T> {
            type Output = Matrix<T>;
            fn $method(self, rhs: &Matrix<T>) -> Matrix<T> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<T: Ring> $tr for Matrix<T> {
            type Output = Matrix<T>;
            fn $method(self, rhs: Matrix<T>) -> Matrix<T> {
                (&self).$method(&rhs)
            }
        }
    };
}
matrix_op!(Mul, mul, try_mul);
matrix_op!(Add, add, try_add);
matrix_op!(Sub, sub, try_sub);

impl Mul<&Matrix<Quaternion>> for &Matrix<Rational> {
    type Output = Matrix<Quaternion>;
    fn mul(self, rhs: &Matrix<Quaternion>) -> Matrix<Quaternion> {
        &self.to_quaternion() * rhs
    }
}

impl Mul<&Matrix<Rational>> for &Matrix<Quaternion> {
    type Output = Matrix<Quaternion>;
    fn mul(self, rhs: &Matrix<Rational>) -> Matrix<Quaternion> {
        self * &rhs.to_quaternion()
    }
}

impl<T: Ring> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(T::neg)
    }
}

impl<T: Ring> Neg for Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(T::neg)
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    /// Right-aligned columns, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| cells[i * self.cols + j].chars().count()).max().unwrap_or(0))
            .collect();
        for i in 0..self.rows {
            let line: Vec<String> =
                (0..self.cols).map(|j| format!("{:>w$}", cells[i * self.cols + j], w = widths[j])).collect();
            writeln!(f, "{}", line.join("  ").trim_end())?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

impl<T: fmt::Display> serde::Serialize for Matrix<T> {
    /// `{"rows": m, "cols": n, "entries": [[...row strings...], ...]}`.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .entries
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect();
        let mut s = serializer.serialize_struct("Matrix", 3)?;
        s.serialize_field("rows", &self.rows)?;
        s.serialize_field("cols", &self.cols)?;
        s.serialize_field("entries", &rows)?;
        s.end()
    }
}
