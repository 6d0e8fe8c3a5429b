//! Polynomials, dense exact matrices, linear recurrences and the structured
//! inverses built on the sequence `w_t = sum_i u_i alpha_i^t`,
//! `u_i = 1 / G'(alpha_i)`, `G(x) = prod_i (x - alpha_i)`.

mod lfsr;
mod matrix;
mod poly;
mod toeplitz;
mod vandermonde;

pub use lfsr::{u_weights, wseq_direct, wseq_lfsr, Lfsr, WSeq};
pub use matrix::Mat;
pub use poly::Poly;
pub use toeplitz::{is_lower_toeplitz, toeplitz_inverse_reversed, toeplitz_inverse_unit, toeplitz_lower};
pub use vandermonde::{
    bordered_vandermonde_ratio, vandermonde, vandermonde_det, vandermonde_inverse_explicit,
    vandermonde_inverse_factored,
};

use crate::error::{Error, Result};
use crate::field::Elt;

pub(crate) fn ensure_distinct(points: &[Elt]) -> Result<()> {
    for (i, a) in points.iter().enumerate() {
        if points[i + 1..].contains(a) {
            return Err(Error::DuplicateRoots);
        }
    }
    Ok(())
}
