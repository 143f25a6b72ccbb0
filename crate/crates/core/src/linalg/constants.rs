use std::sync::OnceLock;

use super::Matrix;
use crate::quaternion::Quaternion;
use crate::scalar::Rational;

/// Fixed matrices used by the 8×8 representations.
#[derive(Debug, Clone)]
pub struct ConstantMatrices {
    /// Left representation of `e1`.
    pub theta: Matrix<Rational>,
    /// `diag(1, 1, -1, -1)`; maps the coefficient vector of `y*` to that of `y`.
    pub alpha: Matrix<Rational>,
    /// `diag(I4, alpha)`.
    pub p: Matrix<Rational>,
    pub a1: Matrix<Rational>,
    pub a2: Matrix<Rational>,
    /// `diag(-a1, a1)`.
    pub m1: Matrix<Rational>,
    /// `diag(-a2, a2)`.
    pub m2: Matrix<Rational>,
    /// `(1, -e1, -e2, -e3)ᵗ`.
    pub m: Matrix<Quaternion>,
    /// `(θM ; -M)`, with `θM` computed.
    pub m8: Matrix<Quaternion>,
}

pub fn constants() -> &'static ConstantMatrices {
    static CONSTANTS: OnceLock<ConstantMatrices> = OnceLock::new();
    CONSTANTS.get_or_init(build)
}

fn build() -> ConstantMatrices {
    let theta = Matrix::from_i64(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
    let alpha = Matrix::from_i64(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, -1]]);
    let p = Matrix::block_diag(&Matrix::identity(4), &alpha);
    let a1 = Matrix::from_i64(&[&[0, -1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
    let a2 = Matrix::from_i64(&[&[0, -1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
    let m1 = Matrix::block_diag(&-&a1, &a1);
    let m2 = Matrix::block_diag(&-&a2, &a2);
    let m = Matrix::column(vec![
        Quaternion::one(),
        Quaternion::e1().neg(),
        Quaternion::e2().neg(),
        Quaternion::e3().neg(),
    ]);
    let theta_m = &theta * &m;
    let m8 = Matrix::vstack(&theta_m, &-&m);
    ConstantMatrices { theta, alpha, p, a1, a2, m1, m2, m, m8 }
}
