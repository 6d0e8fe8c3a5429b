use rayon::prelude::*;
use tgrs_core::tgrs::{CodeSpec, MdsChecker, MdsReport, Method};

use crate::error::{CliError, Result};

const BLOCK: usize = 2048;

pub fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Internal(e.to_string()))
}

/// Same result as [`CodeSpec::is_mds`], with subsets checked on `jobs`
/// threads. Subsets are taken in lexicographic blocks and scanned in order,
/// so the first failing subset is the same one the sequential run finds.
pub fn check_mds(spec: &CodeSpec, method: Method, full_report: bool, jobs: usize) -> Result<MdsReport> {
    if jobs <= 1 {
        return Ok(spec.is_mds(method, full_report)?);
    }
    let checker = MdsChecker::new(spec);
    let mut subsets = checker.subsets();
    let mut failing = Vec::new();
    pool(jobs)?.install(|| -> Result<()> {
        loop {
            let block: Vec<Vec<usize>> = subsets.by_ref().take(BLOCK).collect();
            if block.is_empty() {
                return Ok(());
            }
            let verdicts: Vec<bool> = block
                .par_iter()
                .map(|s| checker.subset_fails(s, method))
                .collect::<std::result::Result<_, _>>()?;
            for (s, bad) in block.into_iter().zip(verdicts) {
                if bad {
                    failing.push(s);
                    if !full_report {
                        return Ok(());
                    }
                }
            }
        }
    })?;
    Ok(checker.report(method, failing))
}

#[cfg(test)]
mod tests {
    use super::*;
    use tgrs_core::tgrs::TwistMatrix;
    use tgrs_core::Field;

    #[test]
    fn parallel_matches_sequential() {
        let f = Field::prime(13).unwrap();
        let alpha = f.elts(&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10]).unwrap();
        let mut t = TwistMatrix::zero(5, 5);
        t.set(0, 1, f.elt(3).unwrap());
        t.set(2, 4, f.elt(7).unwrap());
        t.set(4, 2, f.elt(1).unwrap());
        let spec = CodeSpec::new(f, alpha, None, t).unwrap();
        for full in [false, true] {
            let seq = spec.is_mds(Method::Criterion, full).unwrap();
            assert_eq!(check_mds(&spec, Method::Criterion, full, 4).unwrap(), seq);
        }
        assert!(!spec.is_mds(Method::Criterion, false).unwrap().is_mds);
    }
}
