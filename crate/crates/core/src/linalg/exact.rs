//! Exact determinant, rank and linear solve over the rationals.
//!
//! Elimination always picks the leftmost column that still has a nonzero
//! entry at or below the current row, and within it the topmost such entry.
//! Results (in particular affine solution families) are therefore
//! reproducible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Rational;

/// Solution set of `A·x = b`.
#[derive(Debug, Clone, PartialEq)]
pub enum SolveResult {
    Unique(Matrix<Rational>),
    /// `particular + span(nullspace)`; the nullspace is nonempty.
    Affine {
        particular: Matrix<Rational>,
        nullspace: Vec<Matrix<Rational>>,
        rank: usize,
    },
    Inconsistent { rank: usize },
}

impl SolveResult {
    pub fn rank(&self) -> usize {
        match self {
            SolveResult::Unique(x) => x.rows(),
            SolveResult::Affine { rank, .. } | SolveResult::Inconsistent { rank } => *rank,
        }
    }
}

impl Matrix<Rational> {
    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// The matrix is first scaled by the lcm `L` of all denominators, so the
    /// elimination runs on integers; the result is divided by `L^n`.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows(), cols: self.cols() });
        }
        let n = self.rows();
        let lcm = self.entries().iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| self.row(i).iter().map(|r| r.numer() * (&lcm / r.denom())).collect())
            .collect();
        let det = bareiss(&mut m);
        let scale = Rational::from(num_traits::pow(lcm, n));
        Ok(Rational::from(det).checked_div(&scale).expect("lcm is nonzero"))
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone_rows();
        eliminate(&mut work, self.cols()).len()
    }

    /// Solves `self · x = rhs` for a column `rhs`.
    pub fn solve(&self, rhs: &Matrix<Rational>) -> Result<SolveResult> {
        if rhs.cols() != 1 || rhs.rows() != self.rows() {
            return Err(Error::DimensionMismatch { op: "solve", lhs: self.shape(), rhs: rhs.shape() });
        }
        let n = self.cols();
        let mut work: Vec<Vec<Rational>> = (0..self.rows())
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.push(rhs.get(i, 0).clone());
                row
            })
            .collect();
        let pivots = eliminate(&mut work, n);
        let rank = pivots.len();
        if work[rank..].iter().any(|row| !row[n].is_zero()) {
            return Ok(SolveResult::Inconsistent { rank });
        }

        let mut particular = vec![Rational::zero(); n];
        for (r, &c) in pivots.iter().enumerate() {
            particular[c] = work[r][n].clone();
        }
        let particular = Matrix::column(particular);
        if rank == n {
            return Ok(SolveResult::Unique(particular));
        }

        let nullspace = (0..n)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![Rational::zero(); n];
                v[free] = Rational::one();
                for (r, &c) in pivots.iter().enumerate() {
                    v[c] = -&work[r][free];
                }
                Matrix::column(v)
            })
            .collect();
        Ok(SolveResult::Affine { particular, nullspace, rank })
    }

    fn clone_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows()).map(|i| self.row(i).to_vec()).collect()
    }
}

/// Reduces `rows` to reduced row echelon form in the first `cols` columns and
/// returns the pivot columns in row order. Extra trailing columns are carried.
fn eliminate(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &(&factor * p);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn bareiss(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}
