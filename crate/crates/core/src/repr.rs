//! Real matrix representations of `H` (4×4) and `H_C` (8×8).
//!
//! `λ(a)` and `ρ(a)` are the matrices of `x ↦ ax` and `x ↦ xa` acting on
//! coefficient vectors. `Γ(X)` and `Θ(X)` do the same for left and right
//! multiplication in `H_C` under the twisted product, up to the fixed
//! permutation-sign matrix `P` on the right side: `vec(XA) = P·Θ(A)·P·vec(X)`.

use crate::linalg::{constants, Matrix};
use crate::quaternion::{Biquaternion, Quaternion};
use crate::scalar::Rational;

/// Left matrix representation; its columns are the coefficients of
/// `a, a·e1, a·e2, a·e3`.
pub fn lambda(a: &Quaternion) -> Matrix<Rational> {
    let [a0, a1, a2, a3] = a.coeffs();
    Matrix::from_rows(vec![
        vec![a0.clone(), -a1, -a2, -a3],
        vec![a1.clone(), a0.clone(), -a3, a2.clone()],
        vec![a2.clone(), a3.clone(), a0.clone(), -a1],
        vec![a3.clone(), -a2, a1.clone(), a0.clone()],
    ])
}

/// Right matrix representation; its columns are the coefficients of
/// `a, e1·a, e2·a, e3·a`.
pub fn rho(a: &Quaternion) -> Matrix<Rational> {
    let [a0, a1, a2, a3] = a.coeffs();
    Matrix::from_rows(vec![
        vec![a0.clone(), -a1, -a2, -a3],
        vec![a1.clone(), a0.clone(), a3.clone(), -a2],
        vec![a2.clone(), -a3, a0.clone(), a1.clone()],
        vec![a3.clone(), a2.clone(), -a1, a0.clone()],
    ])
}

/// `Γ(x + iy) = [[λ(x), -λ(y*)], [λ(y), λ(x*)]]`.
pub fn gamma(q: &Biquaternion) -> Matrix<Rational> {
    let (x, y) = (&q.re, &q.im);
    Matrix::block(&lambda(x), &-lambda(&y.star()), &lambda(y), &lambda(&x.star()))
}

/// `Θ(x + iy) = [[ρ(x), -ρ(y)], [ρ(y*), ρ(x*)]]`.
pub fn theta(q: &Biquaternion) -> Matrix<Rational> {
    let (x, y) = (&q.re, &q.im);
    Matrix::block(&rho(x), &-rho(y), &rho(&y.star()), &rho(&x.star()))
}

/// `ε(a + ib) = [[ρᵗ(a), ρᵗ(b)], [-ρᵗ(b), ρᵗ(a)]]`.
///
/// Multiplicative for [`Biquaternion::mul_classical`], but not for the
/// twisted product in either order.
pub fn epsilon(q: &Biquaternion) -> Matrix<Rational> {
    let a = rho(&q.re).transpose();
    let b = rho(&q.im).transpose();
    Matrix::block(&a, &b, &-&b, &a)
}

/// `Γ(X)` with its two off-diagonal blocks exchanged and every block kept
/// intact: `[[λ(x), λ(y)], [-λ(y*), λ(x*)]]`.
///
/// Since `λ(a)ᵗ = λ(conj a)`, this is the ordinary transpose of `Γ(conj X)`.
/// It is the transpose that makes `M8` an eigencolumn: see
/// [`reconstruct_gamma`].
pub fn gamma_adjoint(q: &Biquaternion) -> Matrix<Rational> {
    gamma(&q.conj()).transpose()
}

/// Coefficient column `(a0, a1, a2, a3)ᵗ`.
pub fn vec_quat(x: &Quaternion) -> Matrix<Rational> {
    Matrix::column(x.coeffs().to_vec())
}

/// Stacked coefficient column `(vec x ; vec y)` of `x + iy`.
pub fn vec_biquat(x: &Biquaternion) -> Matrix<Rational> {
    Matrix::vstack(&vec_quat(&x.re), &vec_quat(&x.im))
}

/// Inverse of [`vec_quat`]. Panics unless `v` is 4×1.
pub fn quat_from_vec(v: &Matrix<Rational>) -> Quaternion {
    assert_eq!(v.shape(), (4, 1), "expected a 4x1 column");
    Quaternion(std::array::from_fn(|k| v.get(k, 0).clone()))
}

/// Inverse of [`vec_biquat`]. Panics unless `v` is 8×1.
pub fn biquat_from_vec(v: &Matrix<Rational>) -> Biquaternion {
    assert_eq!(v.shape(), (8, 1), "expected an 8x1 column");
    Biquaternion::new(quat_from_vec(&v.submatrix(0, 0, 4, 1)), quat_from_vec(&v.submatrix(4, 0, 4, 1)))
}

/// Evaluates `-1/4 · left · middle · right` to a single quaternion.
fn quarter_sandwich(left: &Matrix<Quaternion>, middle: &Matrix<Rational>, right: &Matrix<Quaternion>) -> Quaternion {
    let one_by_one = &(left * middle) * right;
    assert_eq!(one_by_one.shape(), (1, 1));
    one_by_one.get(0, 0).scale(&Rational::new(-1, 4).expect("nonzero"))
}

/// `-1/4 · M8ᵗ · gamma_adjoint(Q*) · M8`.
///
/// Because `gamma_adjoint(Q*)·M8 = M8·κ(Q)` entrywise and `M8ᵗM8 = -4`, this
/// returns the collapse `κ(Q) = x + e1·y`, not `Q` itself.
pub fn reconstruct_gamma(q: &Biquaternion) -> Quaternion {
    let m8 = &constants().m8;
    quarter_sandwich(&m8.transpose(), &gamma_adjoint(&q.star()), m8)
}

/// `-1/4 · N1 · Θ(conj Q*) · N2` with `N1 = M8ᵗM2ᵗ`, `N2 = M1ᵗM8`.
///
/// Follows from [`reconstruct_gamma`] and `Γᵗ(X) = M1·Θ(X)·M2`; equals
/// `κ(Q)`.
pub fn reconstruct_theta(q: &Biquaternion) -> Quaternion {
    let (n1, n2) = theta_sandwich_ends();
    quarter_sandwich(&n1, &theta(&q.star().conj()), &n2)
}

fn theta_sandwich_ends() -> (Matrix<Quaternion>, Matrix<Quaternion>) {
    let c = constants();
    let n1 = &c.m8.transpose() * &c.m2.transpose();
    let n2 = &c.m1.transpose() * &c.m8;
    (n1, n2)
}

/// Transposed-form reconstruction read with the full 8×8 transpose,
/// `-1/4 · M8ᵗ · Γ(Q*)ᵗ · M8`. Does not equal `κ(Q)` in general.
pub fn reconstruct_gamma_full_transpose(q: &Biquaternion) -> Quaternion {
    let m8 = &constants().m8;
    quarter_sandwich(&m8.transpose(), &gamma(&q.star()).transpose(), m8)
}

/// Untransposed form `-1/4 · M8ᵗ · Γ(Q*) · M8`. Does not equal `κ(Q)` in general.
pub fn reconstruct_gamma_untransposed(q: &Biquaternion) -> Quaternion {
    let m8 = &constants().m8;
    quarter_sandwich(&m8.transpose(), &gamma(&q.star()), m8)
}

/// `-1/4 · N1 · Θ(Q*)ᵗ · N2` read literally. Coincides with
/// [`reconstruct_gamma_untransposed`], so it does not recover `κ(Q)`.
pub fn reconstruct_theta_literal(q: &Biquaternion) -> Quaternion {
    let (n1, n2) = theta_sandwich_ends();
    quarter_sandwich(&n1, &theta(&q.star()).transpose(), &n2)
}
