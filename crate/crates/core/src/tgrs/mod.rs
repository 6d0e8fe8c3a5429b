//! Arbitrary-twist GRS codes: construction, the determinant MDS criterion
//! and its brute-force minor oracle, single-twist reductions, the novelty
//! classifier and the parity-check matrix of the `x^{q-2}` twisted code.

mod criterion;
mod novelty;
mod parity;
mod special;
mod subset;

use alloc::vec;
use alloc::vec::Vec;

pub use criterion::{criterion_det, g_entry_companion, g_entry_wsum, MdsChecker, MdsReport, Method};
pub use novelty::{classify_novelty, KnownShape, Novelty};
pub use parity::{parity_b_coefficients, parity_check_zhang, twisted_inverse_generator};
pub use special::{
    inverse_twist_mds, reduced_criterion_det, special_case_failing, special_case_mds, special_case_scalar,
};
pub use subset::{subset_context, KSubsets, SubsetCtx};

use crate::error::{Error, Result};
use crate::field::{Elt, Field};
use crate::structmat::{ensure_distinct, Mat, Poly};

/// The `k x (n-k)` twist matrix `A(eta)`. Rows are indexed `0..k`, columns
/// `1..=n-k`: entry `(m, j)` adds `eta_{m,j} x^{k-1+j}` to the basis
/// monomial `x^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistMatrix {
    k: usize,
    r: usize,
    data: Vec<Elt>,
}

impl TwistMatrix {
    pub fn zero(k: usize, r: usize) -> TwistMatrix {
        TwistMatrix { k, r, data: vec![Elt::ZERO; k * r] }
    }

    pub fn from_rows(rows: &[Vec<Elt>]) -> Result<TwistMatrix> {
        let k = rows.len();
        let r = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != r) {
            return Err(Error::DimensionMismatch);
        }
        Ok(TwistMatrix { k, r, data: rows.concat() })
    }

    pub fn rows(&self) -> usize {
        self.k
    }

    pub fn cols(&self) -> usize {
        self.r
    }

    /// `eta_{m,j}` with `0 <= m < k`, `1 <= j <= n-k`.
    pub fn get(&self, m: usize, j: usize) -> Elt {
        assert!(m < self.k && (1..=self.r).contains(&j), "twist index ({m},{j}) out of range");
        self.data[m * self.r + j - 1]
    }

    pub fn set(&mut self, m: usize, j: usize, v: Elt) {
        assert!(m < self.k && (1..=self.r).contains(&j), "twist index ({m},{j}) out of range");
        self.data[m * self.r + j - 1] = v;
    }

    pub fn row(&self, m: usize) -> &[Elt] {
        &self.data[m * self.r..(m + 1) * self.r]
    }

    /// Nonzero positions `(m, j)` in row-major order, `j` 1-based.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for m in 0..self.k {
            for j in 1..=self.r {
                if !self.get(m, j).is_zero() {
                    out.push((m, j));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }
}

/// A fully specified A-TGRS code over `field`.
#[derive(Clone, Debug)]
pub struct CodeSpec {
    field: Field,
    alpha: Vec<Elt>,
    v: Vec<Elt>,
    twist: TwistMatrix,
}

impl CodeSpec {
    /// `v` defaults to all ones. Requires `3 <= k < n <= q` with `k` the
    /// number of twist rows and `n = alpha.len()`.
    pub fn new(field: Field, alpha: Vec<Elt>, v: Option<Vec<Elt>>, twist: TwistMatrix) -> Result<CodeSpec> {
        let n = alpha.len();
        let k = twist.rows();
        if k < 3 || k >= n || n as u64 > field.q() as u64 {
            return Err(Error::InvalidParameters("need 3 <= k < n <= q"));
        }
        if twist.cols() != n - k {
            return Err(Error::DimensionMismatch);
        }
        let v = v.unwrap_or_else(|| vec![Elt::ONE; n]);
        if v.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: v.len() });
        }
        for &e in alpha.iter().chain(&v).chain(&twist.data) {
            if !field.contains(e) {
                return Err(Error::ElementOutOfRange { value: e.value() as u64, q: field.q() });
            }
        }
        ensure_distinct(&alpha)?;
        if v.iter().any(|e| e.is_zero()) {
            return Err(Error::ZeroMultiplier);
        }
        Ok(CodeSpec { field, alpha, v, twist })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn k(&self) -> usize {
        self.twist.rows()
    }

    pub fn alpha(&self) -> &[Elt] {
        &self.alpha
    }

    pub fn v(&self) -> &[Elt] {
        &self.v
    }

    pub fn twist(&self) -> &TwistMatrix {
        &self.twist
    }

    /// The same code with a different twist matrix of the same shape.
    pub fn with_twist(&self, twist: TwistMatrix) -> Result<CodeSpec> {
        CodeSpec::new(self.field.clone(), self.alpha.clone(), Some(self.v.clone()), twist)
    }

    /// `k x n` generator, entry `(m, j) = v_j (alpha_j^m + sum_i eta_{m,i} alpha_j^{k-1+i})`.
    pub fn generator_matrix(&self) -> Mat {
        let f = &self.field;
        let (k, r) = (self.k(), self.twist.cols());
        Mat::from_fn(f.clone(), k, self.n(), |m, j| {
            let a = self.alpha[j];
            let mut e = f.pow_u(a, m as u64);
            for i in 1..=r {
                let eta = self.twist.get(m, i);
                if !eta.is_zero() {
                    e = f.add(e, f.mul(eta, f.pow_u(a, (k - 1 + i) as u64)));
                }
            }
            f.mul(self.v[j], e)
        })
    }

    /// `message * G`.
    pub fn encode(&self, message: &[Elt]) -> Result<Vec<Elt>> {
        if message.len() != self.k() {
            return Err(Error::LengthMismatch { expected: self.k(), got: message.len() });
        }
        self.generator_matrix().vec_mul(message)
    }

    /// `sum_i f_i x^i + sum_i f_i sum_j eta_{i,j} x^{k-1+j}`.
    pub fn twisted_polynomial(&self, message: &[Elt]) -> Result<Poly> {
        let (k, r) = (self.k(), self.twist.cols());
        if message.len() != k {
            return Err(Error::LengthMismatch { expected: k, got: message.len() });
        }
        let f = &self.field;
        let mut coeffs = vec![Elt::ZERO; self.n()];
        coeffs[..k].copy_from_slice(message);
        for (m, &fm) in message.iter().enumerate() {
            for j in 1..=r {
                let add = f.mul(fm, self.twist.get(m, j));
                coeffs[k - 1 + j] = f.add(coeffs[k - 1 + j], add);
            }
        }
        Ok(Poly::new(f.clone(), coeffs))
    }

    /// `(v_1 f(alpha_1), ..., v_n f(alpha_n))` for the twisted polynomial of
    /// `message`.
    pub fn encode_by_evaluation(&self, message: &[Elt]) -> Result<Vec<Elt>> {
        let p = self.twisted_polynomial(message)?;
        Ok(self.alpha.iter().zip(&self.v).map(|(&a, &v)| self.field.mul(v, p.eval(a))).collect())
    }

    /// Runs the MDS check. `full_report` keeps going after the first failing
    /// subset so the report lists all of them.
    pub fn is_mds(&self, method: Method, full_report: bool) -> Result<MdsReport> {
        MdsChecker::new(self).run(method, full_report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structmat::vandermonde;

    fn gf11() -> Field {
        Field::prime(11).unwrap()
    }

    fn table_alpha(f: &Field) -> Vec<Elt> {
        f.elts(&[1, 2, 3, 5, 6, 8, 9, 10]).unwrap()
    }

    #[test]
    fn twist_matrix_access() {
        let f = gf11();
        let mut t = TwistMatrix::zero(3, 2);
        assert!(t.is_zero());
        t.set(2, 2, f.elt(5).unwrap());
        t.set(0, 1, f.elt(1).unwrap());
        assert_eq!(t.support(), [(0, 1), (2, 2)]);
        assert_eq!(t.row(2), &[Elt::ZERO, f.elt(5).unwrap()]);
        assert_eq!(TwistMatrix::from_rows(&[vec![Elt::ONE], vec![]]), Err(Error::DimensionMismatch));
    }

    #[test]
    fn spec_validation() {
        let f = gf11();
        let a = table_alpha(&f);
        assert_eq!(
            CodeSpec::new(f.clone(), a.clone(), None, TwistMatrix::zero(2, 6)).unwrap_err(),
            Error::InvalidParameters("need 3 <= k < n <= q")
        );
        assert_eq!(CodeSpec::new(f.clone(), a.clone(), None, TwistMatrix::zero(3, 4)).unwrap_err(), Error::DimensionMismatch);
        let mut dup = a.clone();
        dup[7] = dup[0];
        assert_eq!(CodeSpec::new(f.clone(), dup, None, TwistMatrix::zero(3, 5)).unwrap_err(), Error::DuplicateRoots);
        let mut v = vec![Elt::ONE; 8];
        v[3] = Elt::ZERO;
        assert_eq!(CodeSpec::new(f.clone(), a.clone(), Some(v), TwistMatrix::zero(3, 5)).unwrap_err(), Error::ZeroMultiplier);
        assert_eq!(
            CodeSpec::new(f, a, Some(vec![Elt::ONE; 3]), TwistMatrix::zero(3, 5)).unwrap_err(),
            Error::LengthMismatch { expected: 8, got: 3 }
        );
    }

    #[test]
    fn zero_twist_is_grs() {
        let f = gf11();
        let a = table_alpha(&f);
        let spec = CodeSpec::new(f.clone(), a.clone(), None, TwistMatrix::zero(4, 4)).unwrap();
        let g = spec.generator_matrix();
        let v = vandermonde(&f, &a, 4).transpose();
        assert_eq!(g, v);
    }

    #[test]
    fn generator_factorization() {
        let f = gf11();
        let a = table_alpha(&f);
        let rows: Vec<Vec<Elt>> = [[0, 0, 0, 4], [0, 0, 0, 7], [0, 0, 0, 3], [0, 0, 2, 6]]
            .iter()
            .map(|r| f.elts(r).unwrap())
            .collect();
        let v = f.elts(&[1, 3, 5, 7, 9, 2, 4, 6]).unwrap();
        let spec = CodeSpec::new(f.clone(), a.clone(), Some(v.clone()), TwistMatrix::from_rows(&rows).unwrap()).unwrap();
        let (k, n) = (4, 8);
        let ia = Mat::from_fn(f.clone(), k, n, |i, j| {
            if j < k {
                if i == j { Elt::ONE } else { Elt::ZERO }
            } else {
                rows[i][j - k]
            }
        });
        let vn = vandermonde(&f, &a, n).transpose();
        let expect = ia.mul(&vn).unwrap().mul(&Mat::diagonal(f.clone(), &v)).unwrap();
        assert_eq!(spec.generator_matrix(), expect);
        // row 3 at alpha = 2: 2^3 + 2*2^6 + 6*2^7
        assert_eq!(spec.generator_matrix().get(3, 1).value(), (8 + 2 * 64 + 6 * 128) * 3 % 11);
    }

    #[test]
    fn last_twist_column_only() {
        let f = Field::prime(13).unwrap();
        let a = f.elts(&[1, 2, 3, 4, 5]).unwrap();
        let mut t = TwistMatrix::zero(4, 1);
        let eta = f.elt(7).unwrap();
        t.set(0, 1, eta);
        let spec = CodeSpec::new(f.clone(), a.clone(), None, t).unwrap();
        let g = spec.generator_matrix();
        for (j, &x) in a.iter().enumerate() {
            assert_eq!(g.get(0, j), f.add(Elt::ONE, f.mul(eta, f.pow_u(x, 4))));
        }
    }

    #[test]
    fn encode_paths_agree() {
        let f = Field::new(2, 4, None).unwrap();
        let a = f.elts(&[0, 1, 2, 4, 7, 9, 11, 15]).unwrap();
        let rows: Vec<Vec<Elt>> = (0..5).map(|m| f.elts(&[(m * 3 + 1) % 16, m % 2, 5]).unwrap()).collect();
        let v = f.elts(&[3, 1, 2, 5, 8, 13, 10, 6]).unwrap();
        let spec = CodeSpec::new(f.clone(), a, Some(v), TwistMatrix::from_rows(&rows).unwrap()).unwrap();
        let msg = f.elts(&[9, 0, 14, 2, 7]).unwrap();
        assert_eq!(spec.encode(&msg).unwrap(), spec.encode_by_evaluation(&msg).unwrap());
        let zero = vec![Elt::ZERO; 5];
        assert!(spec.encode(&zero).unwrap().iter().all(|e| e.is_zero()));
        let mut e2 = zero.clone();
        e2[2] = Elt::ONE;
        assert_eq!(spec.encode(&e2).unwrap(), spec.generator_matrix().row(2));
        assert_eq!(spec.encode(&msg[..3]), Err(Error::LengthMismatch { expected: 5, got: 3 }));
    }
}
