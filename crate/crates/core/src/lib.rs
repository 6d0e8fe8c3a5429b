//! Exact finite-field toolkit for arbitrary-twist generalized Reed-Solomon
//! (A-TGRS) codes.
//!
//! The crate is `no_std` and only needs `alloc`. It is organised in three
//! layers:
//!
//! * [`field`]: prime and prime-power fields `GF(p^m)` with `q <= 2^20`.
//! * [`structmat`]: polynomials, dense matrices, LFSRs, the `w`-sequence
//!   `w_t = sum_i u_i alpha_i^t`, and closed-form inverses of Vandermonde and
//!   lower-triangular Toeplitz matrices.
//! * [`tgrs`]: code construction, the determinant MDS criterion together with a
//!   brute-force minor oracle, single-twist reductions, novelty classification
//!   and the parity-check matrix of the `x^{q-2}` twisted code.
//!
//! ```
//! use tgrs_core::field::Field;
//! use tgrs_core::tgrs::{CodeSpec, Method, TwistMatrix};
//!
//! let gf = Field::new(11, 1, None).unwrap();
//! let alpha = gf.elts(&[1, 2, 3, 5, 6, 8, 9, 10]).unwrap();
//! let mut twist = TwistMatrix::zero(7, 1);
//! twist.set(4, 1, gf.elt(4).unwrap());
//! twist.set(5, 1, gf.elt(6).unwrap());
//! twist.set(6, 1, gf.elt(10).unwrap());
//! let spec = CodeSpec::new(gf, alpha, None, twist).unwrap();
//! let report = spec.is_mds(Method::Both, true).unwrap();
//! assert!(report.is_mds);
//! ```

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod field;
pub mod structmat;
pub mod tgrs;

pub use error::{Error, Result};
pub use field::{Elt, Field};
pub use structmat::{Mat, Poly, WSeq};
