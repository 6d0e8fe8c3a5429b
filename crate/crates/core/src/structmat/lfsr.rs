use alloc::vec;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::field::{Elt, Field};

use super::poly::Poly;

/// An `n`-th order linear feedback shift register over a finite field:
///
/// `s_{t+n} = a_{n-1} s_{t+n-1} + ... + a_1 s_{t+1} + a_0 s_t`.
///
/// The register holds the window `s_t, ..., s_{t+n-1}` and can be clocked in
/// both directions; stepping backwards needs `a_0 != 0`.
#[derive(Clone, Debug)]
pub struct Lfsr {
    field: Field,
    taps: Vec<Elt>,
    state: Vec<Elt>,
    position: i64,
}

impl Lfsr {
    /// `taps = (a_0, ..., a_{n-1})`, `initial = (s_0, ..., s_{n-1})`.
    pub fn new(field: Field, taps: Vec<Elt>, initial: Vec<Elt>) -> Result<Lfsr> {
        if taps.is_empty() {
            return Err(Error::InvalidParameters("LFSR order must be at least 1"));
        }
        if initial.len() != taps.len() {
            return Err(Error::LengthMismatch { expected: taps.len(), got: initial.len() });
        }
        Ok(Lfsr { field, taps, state: initial, position: 0 })
    }

    pub fn order(&self) -> usize {
        self.taps.len()
    }

    /// Index `t` of the first element of the window.
    pub fn position(&self) -> i64 {
        self.position
    }

    /// The window `s_t, ..., s_{t+n-1}`.
    pub fn state(&self) -> &[Elt] {
        &self.state
    }

    /// Produces `s_{t+n}` and slides the window forward by one.
    pub fn step_forward(&mut self) -> Elt {
        let next = self.field.dot(self.taps.iter().zip(&self.state));
        self.state.rotate_left(1);
        *self.state.last_mut().unwrap() = next;
        self.position += 1;
        next
    }

    /// Produces `s_{t-1}` and slides the window back by one.
    pub fn step_backward(&mut self) -> Result<Elt> {
        let f = &self.field;
        let a0_inv = f.inv(self.taps[0])?;
        let n = self.taps.len();
        // s_{t-1+n} = a_0 s_{t-1} + sum_{i>=1} a_i s_{t-1+i}
        let tail = f.dot(self.taps[1..].iter().zip(&self.state[..n - 1]));
        let prev = f.mul(f.sub(self.state[n - 1], tail), a0_inv);
        self.state.rotate_right(1);
        self.state[0] = prev;
        self.position -= 1;
        Ok(prev)
    }
}

/// `u_i = 1 / G'(alpha_i)` for `G = prod (x - alpha_j)`.
pub fn u_weights(field: &Field, alpha: &[Elt]) -> Result<Vec<Elt>> {
    let g = Poly::from_roots(field, alpha)?;
    let dg = g.derivative();
    alpha.iter().map(|&a| field.inv(dg.eval(a))).collect()
}

/// `w_t = sum_i u_i alpha_i^t`, evaluated directly.
pub fn wseq_direct(field: &Field, alpha: &[Elt], t: i64) -> Result<Elt> {
    if alpha.is_empty() {
        return Err(Error::EmptyPoints);
    }
    if t < 0 && alpha.iter().any(|a| a.is_zero()) {
        return Err(Error::ZeroRootNegativePower);
    }
    let u = u_weights(field, alpha)?;
    let mut acc = Elt::ZERO;
    for (&ui, &a) in u.iter().zip(alpha) {
        acc = field.add(acc, field.mul(ui, field.pow(a, t)?));
    }
    Ok(acc)
}

/// A contiguous window of the sequence `w_t` generated by its recurrence
/// `w_t = -(d_{n-1} w_{t-1} + ... + d_0 w_{t-n})` from the initial values
/// `w_0 = ... = w_{n-2} = 0`, `w_{n-1} = 1`, where the `d_j` are the
/// coefficients of the monic `G(x) = prod (x - alpha_i)`.
#[derive(Clone, Debug)]
pub struct WSeq {
    field: Field,
    alpha: Vec<Elt>,
    gpoly: Poly,
    u: Vec<Elt>,
    lo: i64,
    values: Vec<Elt>,
}

/// Builds the window `[lo, hi]` of `w_t` with an LFSR. Negative indices are
/// reached by running the register backwards, which divides by
/// `d_0 = (-1)^n prod alpha_i` and therefore needs every point nonzero.
pub fn wseq_lfsr(field: &Field, alpha: &[Elt], lo: i64, hi: i64) -> Result<WSeq> {
    WSeq::new(field, alpha, lo, hi)
}

impl WSeq {
    pub fn new(field: &Field, alpha: &[Elt], lo: i64, hi: i64) -> Result<WSeq> {
        if alpha.is_empty() {
            return Err(Error::EmptyPoints);
        }
        if lo > hi {
            return Err(Error::InvalidParameters("window start exceeds window end"));
        }
        let gpoly = Poly::from_roots(field, alpha)?;
        let n = alpha.len();
        if lo < 0 && gpoly.coeff(0).is_zero() {
            return Err(Error::ZeroRootNegativePower);
        }
        let u = u_weights(field, alpha)?;

        let taps: Vec<Elt> = (0..n).map(|j| field.neg(gpoly.coeff(j))).collect();
        let mut initial = vec![Elt::ZERO; n];
        initial[n - 1] = Elt::ONE;
        let len = (hi - lo + 1) as usize;
        let mut values = vec![Elt::ZERO; len];
        let mut put = |t: i64, v: Elt| {
            if (lo..=hi).contains(&t) {
                values[(t - lo) as usize] = v;
            }
        };
        for (t, &v) in initial.iter().enumerate() {
            put(t as i64, v);
        }

        let mut fwd = Lfsr::new(field.clone(), taps.clone(), initial.clone())?;
        let mut t = n as i64 - 1;
        while t < hi {
            t += 1;
            put(t, fwd.step_forward());
        }
        if lo < 0 {
            let mut back = Lfsr::new(field.clone(), taps, initial)?;
            let mut t = 0;
            while t > lo {
                t -= 1;
                put(t, back.step_backward().map_err(|_| Error::ZeroRootNegativePower)?);
            }
        }

        Ok(WSeq { field: field.clone(), alpha: alpha.to_vec(), gpoly, u, lo, values })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn alpha(&self) -> &[Elt] {
        &self.alpha
    }

    /// The monic `G(x) = prod (x - alpha_i)`.
    pub fn gpoly(&self) -> &Poly {
        &self.gpoly
    }

    pub fn u(&self) -> &[Elt] {
        &self.u
    }

    pub fn range(&self) -> RangeInclusive<i64> {
        self.lo..=self.lo + self.values.len() as i64 - 1
    }

    /// `w_t` if `t` lies in the window.
    pub fn get(&self, t: i64) -> Option<Elt> {
        if t < self.lo {
            return None;
        }
        self.values.get((t - self.lo) as usize).copied()
    }

    /// `w_t`, panicking outside the window.
    pub fn at(&self, t: i64) -> Elt {
        self.get(t)
            .unwrap_or_else(|| panic!("w_{t} outside window {:?}", self.range()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, Elt)> + '_ {
        self.values.iter().enumerate().map(move |(i, &v)| (self.lo + i as i64, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u_weights_small() {
        let f = Field::prime(7).unwrap();
        assert_eq!(u_weights(&f, &f.elts(&[1, 2]).unwrap()).unwrap(), f.elts(&[6, 1]).unwrap());
        for a in f.elements() {
            assert_eq!(u_weights(&f, &[a]).unwrap(), [Elt::ONE]);
        }
    }

    #[test]
    fn w_three_points_gf11() {
        let f = Field::prime(11).unwrap();
        let alpha = f.elts(&[1, 2, 3]).unwrap();
        let g = Poly::from_roots(&f, &alpha).unwrap();
        assert_eq!(g.coeffs(), f.elts(&[5, 0, 5, 1]).unwrap());
        let six = f.elt(6).unwrap();
        assert_eq!(wseq_direct(&f, &alpha, 3).unwrap(), six);
        let w = WSeq::new(&f, &alpha, 0, 3).unwrap();
        assert_eq!(w.at(3), six);
        assert_eq!((w.at(0), w.at(1), w.at(2)), (Elt::ZERO, Elt::ZERO, Elt::ONE));
    }

    #[test]
    fn table_alpha_initial_values_and_w_minus_one() {
        let f = Field::prime(11).unwrap();
        let alpha = f.elts(&[1, 2, 3, 5, 6, 8, 9, 10]).unwrap();
        let n = alpha.len() as i64;
        for t in 0..n - 1 {
            assert!(wseq_direct(&f, &alpha, t).unwrap().is_zero());
        }
        assert_eq!(wseq_direct(&f, &alpha, n - 1).unwrap(), Elt::ONE);
        let w = WSeq::new(&f, &alpha, -1, 0).unwrap();
        let cn = w.gpoly().coeff(0);
        assert_eq!(w.at(-1), f.neg(f.inv(cn).unwrap()));
        assert_eq!(w.at(-1), wseq_direct(&f, &alpha, -1).unwrap());
    }

    #[test]
    fn single_point_is_geometric() {
        let f = Field::prime(13).unwrap();
        let a = f.elt(5).unwrap();
        let w = WSeq::new(&f, &[a], -4, 10).unwrap();
        for (t, v) in w.iter() {
            assert_eq!(v, f.pow(a, t).unwrap());
        }
    }

    #[test]
    fn negative_index_with_zero_point() {
        let f = Field::prime(11).unwrap();
        let alpha = f.elts(&[0, 4, 7]).unwrap();
        assert_eq!(WSeq::new(&f, &alpha, -1, 5).unwrap_err(), Error::ZeroRootNegativePower);
        assert_eq!(wseq_direct(&f, &alpha, -2), Err(Error::ZeroRootNegativePower));
        assert!(WSeq::new(&f, &alpha, 0, 5).is_ok());
        assert_eq!(WSeq::new(&f, &[], 0, 5).unwrap_err(), Error::EmptyPoints);
        assert_eq!(WSeq::new(&f, &alpha, 3, 2).unwrap_err(), Error::InvalidParameters("window start exceeds window end"));
    }

    #[test]
    fn lfsr_round_trip() {
        // Fibonacci mod 13: s_{t+2} = s_{t+1} + s_t
        let f = Field::prime(13).unwrap();
        let mut r = Lfsr::new(f.clone(), vec![Elt::ONE, Elt::ONE], vec![Elt::ZERO, Elt::ONE]).unwrap();
        let fwd: Vec<u32> = (0..6).map(|_| r.step_forward().value()).collect();
        assert_eq!(fwd, [1, 2, 3, 5, 8, 0]);
        assert_eq!(r.position(), 6);
        for _ in 0..6 {
            r.step_backward().unwrap();
        }
        assert_eq!(r.state(), &[Elt::ZERO, Elt::ONE]);
        assert_eq!(r.step_backward().unwrap(), Elt::ONE);
        let mut z = Lfsr::new(f, vec![Elt::ZERO, Elt::ONE], vec![Elt::ZERO, Elt::ONE]).unwrap();
        assert_eq!(z.step_backward(), Err(Error::DivisionByZero));
    }
}
