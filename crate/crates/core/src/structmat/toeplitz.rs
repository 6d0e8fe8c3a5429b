use crate::error::{Error, Result};
use crate::field::{Elt, Field};

use super::lfsr::WSeq;
use super::matrix::Mat;
use super::poly::Poly;

/// Lower-triangular Toeplitz matrix with first column `col`, truncated or
/// zero-padded to `size`.
pub fn toeplitz_lower(field: &Field, col: &[Elt], size: usize) -> Mat {
    Mat::from_fn(field.clone(), size, size, |i, j| {
        if i >= j {
            col.get(i - j).copied().unwrap_or(Elt::ZERO)
        } else {
            Elt::ZERO
        }
    })
}

pub fn is_lower_toeplitz(m: &Mat) -> bool {
    if !m.is_square() {
        return false;
    }
    let n = m.rows();
    for i in 0..n {
        for j in 0..n {
            let want = if i >= j { m.get(i - j, 0) } else { Elt::ZERO };
            if m.get(i, j) != want {
                return false;
            }
        }
    }
    true
}

/// Inverse of `T(1, c_1, c_2, ...)` at any `size`, where `c_j` are the
/// descending coefficients of `G(x) = prod (x - alpha_i)` (zero past `c_n`).
/// The inverse is lower Toeplitz with first column `w_{n-1}, ..., w_{n+size-2}`.
///
/// `col` must agree with `(1, c_1, ..., c_n)` on its first `size` entries.
pub fn toeplitz_inverse_unit(field: &Field, col: &[Elt], size: usize, alpha: &[Elt]) -> Result<Mat> {
    if col.first() != Some(&Elt::ONE) {
        return Err(Error::LeadingNotOne);
    }
    let c = Poly::from_roots(field, alpha)?.coeffs_descending();
    for i in 0..size {
        let given = col.get(i).copied().unwrap_or(Elt::ZERO);
        let want = c.get(i).copied().unwrap_or(Elt::ZERO);
        if given != want {
            return Err(Error::CoefficientMismatch);
        }
    }
    if size == 0 {
        return Ok(Mat::zeros(field.clone(), 0, 0));
    }
    let n = alpha.len() as i64;
    let w = WSeq::new(field, alpha, n - 1, n + size as i64 - 2)?;
    let first: alloc::vec::Vec<Elt> = w.iter().map(|(_, v)| v).collect();
    Ok(toeplitz_lower(field, &first, size))
}

/// Inverse of the `n x n` matrix `T(c_n, c_{n-1}, ..., c_1)`, which is
/// `-T(w_{-1}, ..., w_{-n})`. Needs `c_n != 0`, i.e. no zero point.
pub fn toeplitz_inverse_reversed(field: &Field, col: &[Elt], alpha: &[Elt]) -> Result<Mat> {
    let n = alpha.len();
    if col.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: col.len() });
    }
    let c = Poly::from_roots(field, alpha)?.coeffs_descending();
    if col.iter().zip(c[1..].iter().rev()).any(|(a, b)| a != b) {
        return Err(Error::CoefficientMismatch);
    }
    if n == 0 {
        return Ok(Mat::zeros(field.clone(), 0, 0));
    }
    let w = WSeq::new(field, alpha, -(n as i64), -1)?;
    let first: alloc::vec::Vec<Elt> = (1..=n as i64).map(|s| field.neg(w.at(-s))).collect();
    Ok(toeplitz_lower(field, &first, n))
}
