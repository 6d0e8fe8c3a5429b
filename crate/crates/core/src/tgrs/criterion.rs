use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Elt;
use crate::structmat::Mat;

use super::novelty::{classify_novelty, Novelty};
use super::subset::{subset_context, KSubsets, SubsetCtx};
use super::{CodeSpec, TwistMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// `det(I_k + [g_{m,t}])` per subset.
    Criterion,
    /// Every `k x k` minor of the generator.
    BruteForce,
    /// Both, failing on any disagreement.
    Both,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Criterion => "criterion",
            Method::BruteForce => "brute-force",
            Method::Both => "both",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdsReport {
    pub is_mds: bool,
    /// 0-based, lexicographic. Only the first one unless a full report was
    /// requested.
    pub failing_subsets: Vec<Vec<usize>>,
    pub method: Method,
    pub novelty: Novelty,
}

fn check_mt(sc: &SubsetCtx, twist: &TwistMatrix, m: usize, t: usize) -> Result<()> {
    let k = sc.k();
    if twist.rows() != k || m >= k || t == 0 || t > k {
        return Err(Error::IndexOutOfRange);
    }
    Ok(())
}

/// `a^l_{m,t} = sum_{i+j=l, 1<=i<=n-k, 0<=j<=t-1} eta_{m,i} d_j` for
/// `l = t..=n-k+t-1`.
fn a_coeffs(sc: &SubsetCtx, twist: &TwistMatrix, m: usize, t: usize) -> Vec<Elt> {
    let f = sc.gpoly().field();
    let r = twist.cols();
    let d = sc.d();
    let mut out = vec![Elt::ZERO; r];
    for (idx, l) in (t..t + r).enumerate() {
        let mut acc = Elt::ZERO;
        for j in 0..t {
            if l > j && l - j <= r {
                acc = f.add(acc, f.mul(twist.get(m, l - j), d[j]));
            }
        }
        out[idx] = acc;
    }
    out
}

/// `g_{m,t} = -[F_{m,t}(A_I)]_{k-1,k-1}` with
/// `F_{m,t}(x) = sum_{l=t}^{n-k+t-1} a^l_{m,t} x^{l-t}`, evaluated on the
/// companion matrix by Horner's rule.
pub fn g_entry_companion(sc: &SubsetCtx, twist: &TwistMatrix, m: usize, t: usize) -> Result<Elt> {
    check_mt(sc, twist, m, t)?;
    let f = sc.gpoly().field();
    let k = sc.k();
    let a = a_coeffs(sc, twist, m, t);
    let mut acc = Mat::zeros(f.clone(), k, k);
    for &coef in a.iter().rev() {
        acc = acc.mul(sc.companion())?.add(&Mat::identity(f.clone(), k).scale(coef))?;
    }
    Ok(f.neg(acc.get(k - 1, k - 1)))
}

/// `g_{m,t} = -sum_{l=t}^{n-k+t-1} a^l_{m,t} w_{k-1-t+l}`.
pub fn g_entry_wsum(sc: &SubsetCtx, twist: &TwistMatrix, m: usize, t: usize) -> Result<Elt> {
    check_mt(sc, twist, m, t)?;
    let f = sc.gpoly().field();
    let k = sc.k() as i64;
    let a = a_coeffs(sc, twist, m, t);
    let mut acc = Elt::ZERO;
    for (idx, &coef) in a.iter().enumerate() {
        let l = (t + idx) as i64;
        acc = f.add(acc, f.mul(coef, sc.w().at(k - 1 - t as i64 + l)));
    }
    Ok(f.neg(acc))
}

/// `M = det(I_k + B)`, `B[m][t-1] = g_{m,t}`. Zero exactly when the minor of
/// the generator on the subset vanishes.
pub fn criterion_det(sc: &SubsetCtx, twist: &TwistMatrix) -> Result<Elt> {
    let k = sc.k();
    let f = sc.gpoly().field();
    let mut b = Mat::identity(f.clone(), k);
    for m in 0..k {
        if twist.row(m).iter().all(|e| e.is_zero()) {
            continue;
        }
        for t in 1..=k {
            let g = g_entry_wsum(sc, twist, m, t)?;
            b.set(m, t - 1, f.add(b.get(m, t - 1), g));
        }
    }
    b.det()
}

/// Per-subset MDS checks for one code, with the generator built once.
/// Subsets may be checked in any order and from several threads.
#[derive(Clone, Debug)]
pub struct MdsChecker<'a> {
    spec: &'a CodeSpec,
    generator: Mat,
}

impl<'a> MdsChecker<'a> {
    pub fn new(spec: &'a CodeSpec) -> MdsChecker<'a> {
        MdsChecker { spec, generator: spec.generator_matrix() }
    }

    pub fn spec(&self) -> &CodeSpec {
        self.spec
    }

    pub fn subsets(&self) -> KSubsets {
        KSubsets::new(self.spec.n(), self.spec.k())
    }

    fn criterion_fails(&self, subset: &[usize]) -> Result<bool> {
        let sc = subset_context(self.spec, subset)?;
        Ok(criterion_det(&sc, self.spec.twist())?.is_zero())
    }

    fn minor_fails(&self, subset: &[usize]) -> Result<bool> {
        Ok(self.generator.select_columns(subset).det()?.is_zero())
    }

    /// Whether the subset's minor vanishes according to `method`.
    pub fn subset_fails(&self, subset: &[usize], method: Method) -> Result<bool> {
        match method {
            Method::Criterion => self.criterion_fails(subset),
            Method::BruteForce => self.minor_fails(subset),
            Method::Both => {
                let a = self.criterion_fails(subset)?;
                if a != self.minor_fails(subset)? {
                    return Err(Error::MethodDisagreement { subset: subset.to_vec() });
                }
                Ok(a)
            }
        }
    }

    pub fn run(&self, method: Method, full_report: bool) -> Result<MdsReport> {
        let mut failing = Vec::new();
        for subset in self.subsets() {
            if self.subset_fails(&subset, method)? {
                failing.push(subset);
                if !full_report {
                    break;
                }
            }
        }
        Ok(self.report(method, failing))
    }

    /// Wraps externally collected failing subsets; sorts them.
    pub fn report(&self, method: Method, mut failing: Vec<Vec<usize>>) -> MdsReport {
        failing.sort();
        MdsReport {
            is_mds: failing.is_empty(),
            failing_subsets: failing,
            method,
            novelty: classify_novelty(self.spec.twist()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn spec(f: &Field, alpha: &[u64], rows: &[&[u64]]) -> CodeSpec {
        let rows: Vec<Vec<Elt>> = rows.iter().map(|r| f.elts(r).unwrap()).collect();
        CodeSpec::new(f.clone(), f.elts(alpha).unwrap(), None, TwistMatrix::from_rows(&rows).unwrap()).unwrap()
    }

    #[test]
    fn zero_twist() {
        let f = Field::prime(11).unwrap();
        let s = spec(&f, &[1, 2, 3, 5, 6, 8, 9, 10], &[&[0; 4], &[0; 4], &[0; 4], &[0; 4]]);
        let sc = subset_context(&s, &[1, 3, 4, 7]).unwrap();
        for m in 0..4 {
            for t in 1..=4 {
                assert!(g_entry_companion(&sc, s.twist(), m, t).unwrap().is_zero());
                assert!(g_entry_wsum(&sc, s.twist(), m, t).unwrap().is_zero());
            }
        }
        assert_eq!(criterion_det(&sc, s.twist()).unwrap(), Elt::ONE);
        assert!(s.is_mds(Method::Both, true).unwrap().is_mds);
        assert_eq!(g_entry_wsum(&sc, s.twist(), 4, 1), Err(Error::IndexOutOfRange));
        assert_eq!(g_entry_wsum(&sc, s.twist(), 0, 0), Err(Error::IndexOutOfRange));
        assert_eq!(g_entry_companion(&sc, s.twist(), 0, 5), Err(Error::IndexOutOfRange));
    }

    #[test]
    fn single_twist_first_entry() {
        let f = Field::prime(13).unwrap();
        let s = spec(&f, &[1, 2, 4, 5, 7, 11], &[&[6, 0, 0], &[0; 3], &[0; 3]]);
        let eta = f.elt(6).unwrap();
        for subset in KSubsets::new(6, 3) {
            let sc = subset_context(&s, &subset).unwrap();
            let ck = sc.c_at(3);
            let want = f.neg(f.mul(eta, ck));
            assert_eq!(g_entry_companion(&sc, s.twist(), 0, 1).unwrap(), want);
            assert_eq!(g_entry_wsum(&sc, s.twist(), 0, 1).unwrap(), want);
            assert_eq!(criterion_det(&sc, s.twist()).unwrap(), f.sub(Elt::ONE, f.mul(eta, ck)));
        }
    }

    #[test]
    fn single_twist_last_row() {
        let f = Field::prime(13).unwrap();
        let s = spec(&f, &[1, 2, 4, 5, 7, 11, 12], &[&[0; 3], &[0; 3], &[0; 3], &[9, 0, 0]]);
        let eta = f.elt(9).unwrap();
        for subset in KSubsets::new(7, 4) {
            let sc = subset_context(&s, &subset).unwrap();
            let want = f.neg(f.mul(eta, sc.c_at(1)));
            assert_eq!(g_entry_wsum(&sc, s.twist(), 3, 4).unwrap(), want);
            assert_eq!(g_entry_companion(&sc, s.twist(), 3, 4).unwrap(), want);
        }
    }

    #[test]
    fn planted_failure_reported() {
        let f = Field::prime(11).unwrap();
        let alpha = f.elts(&[1, 2, 3, 5, 6, 8, 9, 10]).unwrap();
        let base = CodeSpec::new(f.clone(), alpha, None, TwistMatrix::zero(3, 5)).unwrap();
        let target = [1, 4, 6];
        let ck = subset_context(&base, &target).unwrap().c_at(3);
        let mut t = TwistMatrix::zero(3, 5);
        t.set(0, 1, f.inv(ck).unwrap());
        let s = base.with_twist(t).unwrap();
        let rep = s.is_mds(Method::Both, true).unwrap();
        assert!(!rep.is_mds);
        assert!(rep.failing_subsets.contains(&target.to_vec()));
        let first = s.is_mds(Method::Criterion, false).unwrap();
        assert_eq!(first.failing_subsets.len(), 1);
        assert_eq!(first.failing_subsets[0], rep.failing_subsets[0]);
    }

    #[test]
    fn zero_point_paths() {
        let f = Field::new(2, 4, None).unwrap();
        let s = spec(&f, &[0, 1, 2, 3, 5, 8, 13], &[&[3, 0, 1], &[0, 7, 0], &[0, 0, 0], &[11, 0, 2]]);
        let mut crit = Vec::new();
        let mut brute = Vec::new();
        let checker = MdsChecker::new(&s);
        for subset in checker.subsets() {
            let sc = subset_context(&s, &subset).unwrap();
            for m in 0..4 {
                for t in 1..=4 {
                    assert_eq!(g_entry_companion(&sc, s.twist(), m, t), g_entry_wsum(&sc, s.twist(), m, t));
                }
            }
            if checker.subset_fails(&subset, Method::Criterion).unwrap() {
                crit.push(subset.clone());
            }
            if checker.subset_fails(&subset, Method::BruteForce).unwrap() {
                brute.push(subset);
            }
        }
        assert_eq!(crit, brute);
    }
}
