use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Elt, Field};
use crate::structmat::{ensure_distinct, u_weights, Mat, WSeq};

fn check_inputs(field: &Field, n: usize, k: usize, alpha: &[Elt], v: &[Elt]) -> Result<()> {
    if alpha.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: alpha.len() });
    }
    if v.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: v.len() });
    }
    if k < 1 || k >= n || n as u64 > field.q() as u64 {
        return Err(Error::InvalidParameters("need 1 <= k < n <= q"));
    }
    ensure_distinct(alpha)?;
    if v.iter().any(|e| e.is_zero()) {
        return Err(Error::ZeroMultiplier);
    }
    Ok(())
}

/// Generator of the code spanned by `x^0, ..., x^{k-2}` and
/// `x^{k-1} + eta x^{q-2}`: rows `v_i alpha_i^j` for `j < k-1`, last row
/// `v_i (alpha_i^{k-1} + eta alpha_i^{q-2})`.
pub fn twisted_inverse_generator(field: &Field, k: usize, eta: Elt, alpha: &[Elt], v: &[Elt]) -> Result<Mat> {
    let n = alpha.len();
    check_inputs(field, n, k, alpha, v)?;
    let top = (field.q() - 2) as u64;
    Ok(Mat::from_fn(field.clone(), k, n, |i, j| {
        let a = alpha[j];
        let mut e = field.pow_u(a, i as u64);
        if i == k - 1 {
            e = field.add(e, field.mul(eta, field.pow_u(a, top)));
        }
        field.mul(v[j], e)
    }))
}

/// Solves `sum_{r<=j} b_r w_{n-1+j-r} = [j = 0]` for `j = 0..len`, the
/// lower-triangular Toeplitz system whose matrix is `T(w_{n-1}, w_n, ...)`.
/// Its solution is `(1, c_1, ..., c_{len-1})`.
pub fn parity_b_coefficients(field: &Field, alpha: &[Elt], len: usize) -> Result<Vec<Elt>> {
    if len == 0 {
        return Ok(Vec::new());
    }
    let n = alpha.len() as i64;
    let w = WSeq::new(field, alpha, n - 1, n - 2 + len as i64)?;
    let lead = field.inv(w.at(n - 1))?;
    let mut b: Vec<Elt> = Vec::with_capacity(len);
    for j in 0..len {
        let mut acc = if j == 0 { Elt::ONE } else { Elt::ZERO };
        for (r, &br) in b.iter().enumerate() {
            acc = field.sub(acc, field.mul(br, w.at(n - 1 + (j - r) as i64)));
        }
        b.push(field.mul(acc, lead));
    }
    Ok(b)
}

/// Parity-check matrix of the code generated by
/// [`twisted_inverse_generator`]. The first row is `(u_i / v_i) f(alpha_i)` with
///
/// `f(x) = sum_{j<k-l} b_j x^{n-l-1-j} - w_{n-1} / (eta w_{-1})`,
///
/// the remaining `n-k-1` rows are `(u_i alpha_i / v_i) alpha_i^j`. Only
/// `l = k-1` makes this orthogonal to the generator.
pub fn parity_check_zhang(
    field: &Field,
    n: usize,
    k: usize,
    l: usize,
    eta: Elt,
    alpha: &[Elt],
    v: &[Elt],
) -> Result<Mat> {
    check_inputs(field, n, k, alpha, v)?;
    if l >= k {
        return Err(Error::InvalidParameters("need l <= k-1"));
    }
    if eta.is_zero() {
        return Err(Error::ZeroTwist);
    }
    if alpha.iter().any(|a| a.is_zero()) {
        return Err(Error::ZeroEvaluationPoint);
    }
    let u = u_weights(field, alpha)?;
    let w = WSeq::new(field, alpha, -1, n as i64 - 1)?;
    let constant = field.neg(field.div(w.at(n as i64 - 1), field.mul(eta, w.at(-1)))?);
    let b = parity_b_coefficients(field, alpha, k - l)?;

    let mut h = Mat::zeros(field.clone(), n - k, n);
    for i in 0..n {
        let a = alpha[i];
        let scale = field.div(u[i], v[i])?;
        let mut fa = constant;
        for (j, &bj) in b.iter().enumerate() {
            fa = field.add(fa, field.mul(bj, field.pow_u(a, (n - l - 1 - j) as u64)));
        }
        h.set(0, i, field.mul(scale, fa));
        let mut p = field.mul(scale, a);
        for row in 1..n - k {
            h.set(row, i, p);
            p = field.mul(p, a);
        }
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structmat::Poly;
    use alloc::vec;

    fn setup() -> (Field, Vec<Elt>, Vec<Elt>) {
        let f = Field::prime(13).unwrap();
        let alpha = f.elts(&[1, 2, 3, 4, 6, 7, 9, 11, 12]).unwrap();
        let v = f.elts(&[1, 5, 2, 2, 7, 3, 12, 1, 9]).unwrap();
        (f, alpha, v)
    }

    #[test]
    fn b_coefficients_are_c() {
        let (f, alpha, _) = setup();
        let c = Poly::from_roots(&f, &alpha).unwrap().coeffs_descending();
        for len in 1..=alpha.len() {
            assert_eq!(parity_b_coefficients(&f, &alpha, len).unwrap(), c[..len]);
        }
    }

    #[test]
    fn constant_is_cn_over_eta() {
        let (f, alpha, _) = setup();
        let cn = Poly::from_roots(&f, &alpha).unwrap().coeff(0);
        let w = WSeq::new(&f, &alpha, -1, 8).unwrap();
        let eta = f.elt(5).unwrap();
        let closed_form = f.neg(f.div(w.at(8), f.mul(eta, w.at(-1))).unwrap());
        assert_eq!(closed_form, f.div(cn, eta).unwrap());
    }

    #[test]
    fn orthogonal_only_at_top_l() {
        let (f, alpha, v) = setup();
        let (n, k) = (9, 4);
        let eta = f.elt(6).unwrap();
        let g = twisted_inverse_generator(&f, k, eta, &alpha, &v).unwrap();
        for l in 0..k {
            let h = parity_check_zhang(&f, n, k, l, eta, &alpha, &v).unwrap();
            assert_eq!(h.rank(), n - k);
            assert_eq!(h.mul(&g.transpose()).unwrap().is_zero(), l == k - 1, "l = {l}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        let (f, mut alpha, v) = setup();
        let eta = f.elt(6).unwrap();
        assert_eq!(parity_check_zhang(&f, 9, 4, 3, Elt::ZERO, &alpha, &v), Err(Error::ZeroTwist));
        assert_eq!(parity_check_zhang(&f, 9, 4, 4, eta, &alpha, &v), Err(Error::InvalidParameters("need l <= k-1")));
        assert_eq!(parity_check_zhang(&f, 8, 4, 3, eta, &alpha, &v), Err(Error::LengthMismatch { expected: 8, got: 9 }));
        alpha[0] = Elt::ZERO;
        assert_eq!(parity_check_zhang(&f, 9, 4, 3, eta, &alpha, &v), Err(Error::ZeroEvaluationPoint));
        let ones = vec![Elt::ONE; 9];
        assert!(twisted_inverse_generator(&f, 4, eta, &alpha, &ones).is_ok());
    }
}
