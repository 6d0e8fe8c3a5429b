use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Elt, Field};
use crate::structmat::{ensure_distinct, Mat, Poly};

use super::criterion::g_entry_wsum;
use super::subset::{subset_context, KSubsets, SubsetCtx};
use super::{CodeSpec, TwistMatrix};

fn single_twist(spec: &CodeSpec, h: usize, t: usize) -> Result<Elt> {
    let support = spec.twist().support();
    if support.len() != 1 || support[0] != (h, t + 1) {
        return Err(Error::NotSingleTwist);
    }
    Ok(spec.twist().get(h, t + 1))
}

/// `eta * sum_{i=0}^{t} c_{k-h+t-i} w_{k-1+i}` for the single twist
/// `eta_{h,t+1} = eta`, with `c_j = 0` for `j > k`. The subset's minor
/// vanishes exactly when this equals one.
pub fn special_case_scalar(sc: &SubsetCtx, eta: Elt, h: usize, t: usize) -> Elt {
    let f = sc.gpoly().field();
    let k = sc.k();
    let mut acc = Elt::ZERO;
    for i in 0..=t {
        let c = sc.c_at(k - h + t - i);
        acc = f.add(acc, f.mul(c, sc.w().at((k - 1 + i) as i64)));
    }
    f.mul(eta, acc)
}

/// Subsets on which the single-twist condition fails, lexicographic.
pub fn special_case_failing(spec: &CodeSpec, hook: usize, twistpos: usize) -> Result<Vec<Vec<usize>>> {
    let eta = single_twist(spec, hook, twistpos)?;
    let mut out = Vec::new();
    for subset in KSubsets::new(spec.n(), spec.k()) {
        let sc = subset_context(spec, &subset)?;
        if special_case_scalar(&sc, eta, hook, twistpos) == Elt::ONE {
            out.push(subset);
        }
    }
    Ok(out)
}

/// MDS test for a code whose only nonzero twist is `eta_{hook, twistpos+1}`.
pub fn special_case_mds(spec: &CodeSpec, hook: usize, twistpos: usize) -> Result<bool> {
    let eta = single_twist(spec, hook, twistpos)?;
    for subset in KSubsets::new(spec.n(), spec.k()) {
        let sc = subset_context(spec, &subset)?;
        if special_case_scalar(&sc, eta, hook, twistpos) == Elt::ONE {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The criterion restricted to the nonzero rows `R` of the twist matrix:
/// `det(I + [g_{a, b+1}])` for `a, b` in `R`. Rows outside `R` contribute an
/// identity block, so this equals [`criterion_det`](super::criterion_det).
pub fn reduced_criterion_det(sc: &SubsetCtx, twist: &TwistMatrix) -> Result<Elt> {
    let f = sc.gpoly().field();
    let rows: Vec<usize> = (0..twist.rows()).filter(|&m| twist.row(m).iter().any(|e| !e.is_zero())).collect();
    let mut m = Mat::identity(f.clone(), rows.len());
    for (a, &ra) in rows.iter().enumerate() {
        for (b, &rb) in rows.iter().enumerate() {
            let g = g_entry_wsum(sc, twist, ra, rb + 1)?;
            m.set(a, b, f.add(m.get(a, b), g));
        }
    }
    m.det()
}

/// MDS test for the code spanned by `x^0, ..., x^{k-2}, x^{k-1} + eta x^{q-2}`
/// on nonzero points: every `k`-subset needs `eta / c_k != 1`, where `c_k` is
/// the constant term of the subset polynomial.
pub fn inverse_twist_mds(field: &Field, k: usize, eta: Elt, alpha: &[Elt]) -> Result<bool> {
    ensure_distinct(alpha)?;
    if alpha.iter().any(|a| a.is_zero()) {
        return Err(Error::ZeroEvaluationPoint);
    }
    for subset in KSubsets::new(alpha.len(), k) {
        let points: Vec<Elt> = subset.iter().map(|&i| alpha[i]).collect();
        let ck = Poly::from_roots(field, &points)?.coeff(0);
        if field.div(eta, ck)? == Elt::ONE {
            return Ok(false);
        }
    }
    Ok(true)
}
