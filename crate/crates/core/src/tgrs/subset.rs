use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Elt;
use crate::structmat::{Mat, Poly, WSeq};

use super::CodeSpec;

/// Streams the `k`-subsets of `0..n` in lexicographic order.
#[derive(Clone, Debug)]
pub struct KSubsets {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl KSubsets {
    pub fn new(n: usize, k: usize) -> KSubsets {
        let cur = if k <= n { Some((0..k).collect()) } else { None };
        KSubsets { n, cur }
    }
}

impl Iterator for KSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.take()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.cur = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Everything the criterion needs about one `k`-subset `I` of positions.
#[derive(Clone, Debug)]
pub struct SubsetCtx {
    subset: Vec<usize>,
    gpoly: Poly,
    c: Vec<Elt>,
    d: Vec<Elt>,
    companion: Mat,
    w: WSeq,
}

impl SubsetCtx {
    /// Sorted 0-based positions.
    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn k(&self) -> usize {
        self.subset.len()
    }

    /// `G(x) = prod_{i in I} (x - alpha_i)`.
    pub fn gpoly(&self) -> &Poly {
        &self.gpoly
    }

    /// `c_0 = 1, c_1, ..., c_k`, descending.
    pub fn c(&self) -> &[Elt] {
        &self.c
    }

    /// `c_j`, zero for `j > k`.
    pub fn c_at(&self, j: usize) -> Elt {
        self.c.get(j).copied().unwrap_or(Elt::ZERO)
    }

    /// `d_j = c_{k-j}`, `j = 0..=k`.
    pub fn d(&self) -> &[Elt] {
        &self.d
    }

    /// `A_I`: ones on the superdiagonal, last row `(-c_k, ..., -c_1)`.
    pub fn companion(&self) -> &Mat {
        &self.companion
    }

    /// `w_t` over the subset's points on `[0, n-2+k]`.
    pub fn w(&self) -> &WSeq {
        &self.w
    }
}

pub fn subset_context(spec: &CodeSpec, subset: &[usize]) -> Result<SubsetCtx> {
    let (n, k) = (spec.n(), spec.k());
    if subset.len() != k || subset.windows(2).any(|p| p[0] >= p[1]) || subset.iter().any(|&i| i >= n) {
        return Err(Error::IndexOutOfRange);
    }
    let f = spec.field();
    let points: Vec<Elt> = subset.iter().map(|&i| spec.alpha()[i]).collect();
    let gpoly = Poly::from_roots(f, &points)?;
    let c = gpoly.coeffs_descending();
    let d = gpoly.coeffs().to_vec();
    let companion = Mat::from_fn(f.clone(), k, k, |i, j| {
        if i + 1 == j {
            Elt::ONE
        } else if i == k - 1 {
            f.neg(d[j])
        } else {
            Elt::ZERO
        }
    });
    let w = WSeq::new(f, &points, 0, (n + k - 2) as i64)?;
    Ok(SubsetCtx { subset: subset.to_vec(), gpoly, c, d, companion, w })
}
