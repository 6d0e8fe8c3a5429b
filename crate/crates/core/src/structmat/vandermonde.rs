use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Elt, Field};

use super::lfsr::u_weights;
use super::matrix::Mat;
use super::poly::Poly;
use super::toeplitz::toeplitz_lower;
use super::ensure_distinct;

/// The `n x cols` matrix with entry `(i, j) = alpha_i^j`.
pub fn vandermonde(field: &Field, alpha: &[Elt], cols: usize) -> Mat {
    Mat::from_fn(field.clone(), alpha.len(), cols, |i, j| field.pow_u(alpha[i], j as u64))
}

/// `prod_{i<j} (alpha_j - alpha_i)`, the determinant of the square
/// Vandermonde matrix.
pub fn vandermonde_det(field: &Field, alpha: &[Elt]) -> Elt {
    let mut acc = Elt::ONE;
    for (i, &a) in alpha.iter().enumerate() {
        for &b in &alpha[i + 1..] {
            acc = field.mul(acc, field.sub(b, a));
        }
    }
    acc
}

fn check_points(alpha: &[Elt]) -> Result<()> {
    if alpha.is_empty() {
        return Err(Error::EmptyPoints);
    }
    ensure_distinct(alpha)?;
    if alpha.iter().any(|a| a.is_zero()) {
        return Err(Error::ZeroEvaluationPoint);
    }
    Ok(())
}

/// Inverse of the square Vandermonde matrix from the closed form
/// `V^{-1}[h][i] = -u_i alpha_i^{-(h+1)} G_h(alpha_i)`, where `G_h` keeps the
/// terms of `G` of degree at most `h`. Points must be distinct and nonzero.
pub fn vandermonde_inverse_explicit(field: &Field, alpha: &[Elt]) -> Result<Mat> {
    check_points(alpha)?;
    let n = alpha.len();
    let g = Poly::from_roots(field, alpha)?;
    let u = u_weights(field, alpha)?;
    let inv_alpha: Vec<Elt> = alpha.iter().map(|&a| field.inv(a)).collect::<Result<_>>()?;
    let mut out = Mat::zeros(field.clone(), n, n);
    for i in 0..n {
        // G_h(a) a^{-(h+1)} built incrementally in h
        let mut gh = Elt::ZERO;
        let mut a_pow = Elt::ONE;
        let mut inv_pow = inv_alpha[i];
        for h in 0..n {
            gh = field.add(gh, field.mul(g.coeff(h), a_pow));
            a_pow = field.mul(a_pow, alpha[i]);
            out.set(h, i, field.neg(field.mul(u[i], field.mul(gh, inv_pow))));
            inv_pow = field.mul(inv_pow, inv_alpha[i]);
        }
    }
    Ok(out)
}

/// Inverse of the square Vandermonde matrix as the product
/// `-T(d_0, ..., d_{n-1}) * [alpha_j^{-(i+1)}] * diag(u)`.
pub fn vandermonde_inverse_factored(field: &Field, alpha: &[Elt]) -> Result<Mat> {
    check_points(alpha)?;
    let n = alpha.len();
    let g = Poly::from_roots(field, alpha)?;
    let u = u_weights(field, alpha)?;
    let t = toeplitz_lower(field, &g.coeffs()[..n], n);
    let mut w = Mat::zeros(field.clone(), n, n);
    for (j, &a) in alpha.iter().enumerate() {
        for i in 0..n {
            w.set(i, j, field.pow(a, -(i as i64) - 1)?);
        }
    }
    Ok(t.mul(&w)?.mul(&Mat::diagonal(field.clone(), &u))?.neg())
}

/// `det(V_t) / det(V)`, where `V_t` is the square Vandermonde matrix with its
/// last power row `alpha^{n-1}` replaced by `alpha^t`. Equals `w_t`.
pub fn bordered_vandermonde_ratio(field: &Field, alpha: &[Elt], t: i64) -> Result<Elt> {
    if alpha.is_empty() {
        return Err(Error::EmptyPoints);
    }
    ensure_distinct(alpha)?;
    if t < 0 && alpha.iter().any(|a| a.is_zero()) {
        return Err(Error::ZeroRootNegativePower);
    }
    let n = alpha.len();
    let mut rows = Mat::zeros(field.clone(), n, n);
    for (j, &a) in alpha.iter().enumerate() {
        for i in 0..n - 1 {
            rows.set(i, j, field.pow_u(a, i as u64));
        }
        rows.set(n - 1, j, field.pow(a, t)?);
    }
    field.div(rows.det()?, vandermonde_det(field, alpha))
}
