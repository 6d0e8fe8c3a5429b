use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{Elt, Field};

use super::ensure_distinct;

/// Dense polynomial, ascending coefficients, no trailing zeros. The zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elt>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs.iter().map(|c| c.value()).collect::<Vec<_>>())
    }
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Elt>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Field) -> Poly {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> Poly {
        Poly { field, coeffs: vec![Elt::ONE] }
    }

    /// `c x^d`.
    pub fn monomial(field: Field, c: Elt, d: usize) -> Poly {
        let mut coeffs = vec![Elt::ZERO; d + 1];
        coeffs[d] = c;
        Poly::new(field, coeffs)
    }

    /// The monic `prod (x - r)` over the given distinct roots.
    pub fn from_roots(field: &Field, roots: &[Elt]) -> Result<Poly> {
        ensure_distinct(roots)?;
        let mut coeffs = vec![Elt::ONE];
        for &r in roots {
            let neg_r = field.neg(r);
            let mut next = vec![Elt::ZERO; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] = field.add(next[i + 1], c);
                next[i] = field.add(next[i], field.mul(c, neg_r));
            }
            coeffs = next;
        }
        Ok(Poly::new(field.clone(), coeffs))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Elt {
        self.coeffs.get(i).copied().unwrap_or(Elt::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&Elt::ONE)
    }

    /// Coefficients from the leading one down: `(c_0, c_1, ..., c_n)` for
    /// `c_0 x^n + c_1 x^{n-1} + ... + c_n`.
    pub fn coeffs_descending(&self) -> Vec<Elt> {
        self.coeffs.iter().rev().copied().collect()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Elt) -> Elt {
        let f = &self.field;
        self.coeffs.iter().rev().fold(Elt::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// The truncation `sum_{j <= h} c_j x^j`.
    pub fn truncated(&self, h: usize) -> Poly {
        let end = (h + 1).min(self.coeffs.len());
        Poly::new(self.field.clone(), self.coeffs[..end].to_vec())
    }

    /// Formal derivative; coefficient `j c_j` is reduced in the prime subfield.
    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &c)| f.mul(f.from_int(j as i64), c))
            .collect();
        Poly::new(f.clone(), coeffs)
    }

    pub fn scale(&self, c: Elt) -> Poly {
        let f = &self.field;
        Poly::new(f.clone(), self.coeffs.iter().map(|&x| f.mul(x, c)).collect())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Ok(Poly::new(f.clone(), coeffs))
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(f.clone()));
        }
        let mut out = vec![Elt::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Poly::new(f.clone(), out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(f: &Field, v: &[u64]) -> Poly {
        Poly::new(f.clone(), f.elts(v).unwrap())
    }

    #[test]
    fn from_roots_values() {
        let gf11 = Field::prime(11).unwrap();
        let g = Poly::from_roots(&gf11, &gf11.elts(&[1, 2]).unwrap()).unwrap();
        assert_eq!(g, p(&gf11, &[2, 8, 1]));
        let g = Poly::from_roots(&gf11, &gf11.elts(&[0]).unwrap()).unwrap();
        assert_eq!(g, p(&gf11, &[0, 1]));

        let gf7 = Field::prime(7).unwrap();
        let roots = gf7.elts(&[1, 2, 3]).unwrap();
        let g = Poly::from_roots(&gf7, &roots).unwrap();
        assert_eq!(g, p(&gf7, &[1, 4, 1, 1]));
        for r in roots {
            assert!(g.eval(r).is_zero());
        }
        assert_eq!(
            Poly::from_roots(&gf7, &gf7.elts(&[3, 1, 3]).unwrap()),
            Err(Error::DuplicateRoots)
        );
    }

    #[test]
    fn derivative_and_eval() {
        let gf11 = Field::prime(11).unwrap();
        let g = p(&gf11, &[2, 8, 1]);
        assert_eq!(g.derivative(), p(&gf11, &[8, 2]));
        assert_eq!(g.eval(gf11.elt(3).unwrap()), gf11.elt(2).unwrap());

        let gf2 = Field::prime(2).unwrap();
        assert!(p(&gf2, &[0, 0, 1]).derivative().is_zero());
    }

    #[test]
    fn canonical_form() {
        let gf5 = Field::prime(5).unwrap();
        let a = p(&gf5, &[1, 2, 0, 0]);
        assert_eq!(a.degree(), Some(1));
        assert_eq!(p(&gf5, &[0, 0]).degree(), None);
        let b = p(&gf5, &[4, 3]);
        assert!(a.add(&b).unwrap().is_zero());
        assert_eq!(a.mul(&b).unwrap(), p(&gf5, &[4, 1, 1]));
        assert_eq!(a.truncated(0), p(&gf5, &[1]));
    }

    #[test]
    fn mismatched_fields() {
        let a = p(&Field::prime(5).unwrap(), &[1]);
        let b = p(&Field::prime(7).unwrap(), &[1]);
        assert_eq!(a.add(&b), Err(Error::FieldMismatch));
        assert_eq!(a.mul(&b), Err(Error::FieldMismatch));
    }
}
