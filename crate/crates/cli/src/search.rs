//! Search over twist matrices with a prescribed support or weight bound.

use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use tgrs_core::tgrs::{classify_novelty, CodeSpec, KSubsets, Method, Novelty, TwistMatrix};

use crate::error::{CliError, Result};
use crate::files::{code_base, FieldDesc};
use crate::report::{twist_rows, Candidate, ReportDoc, RunReport};
use crate::verify::pool;

/// Largest candidate count an exhaustive search may enumerate.
pub const EXHAUSTIVE_LIMIT: u64 = 10_000_000;

const BLOCK: usize = 1024;

#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    #[default]
    Any,
    /// Condition (i) or (ii).
    Novel,
    ConditionI,
    ConditionIi,
}

impl Filter {
    fn keeps(self, n: Novelty) -> bool {
        match self {
            Filter::Any => true,
            Filter::Novel => n.is_novel(),
            Filter::ConditionI => n == Novelty::ConditionI,
            Filter::ConditionIi => n == Novelty::ConditionII,
        }
    }
}

/// Either `support` (positions `[row, col]`, row `0..k`, col `1..=n-k`, all
/// required nonzero) or `max_weight` (every support of at most that many
/// positions) must be given.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchConfig {
    pub field: FieldDesc,
    pub n: usize,
    pub k: usize,
    pub alpha: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub support: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_weight: Option<usize>,
    #[serde(default)]
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default)]
    pub filter: Filter,
}

enum Shape {
    Fixed(Vec<(usize, usize)>),
    Weight(usize),
}

struct Plan {
    base: CodeSpec,
    shape: Shape,
    positions: Vec<(usize, usize)>,
}

impl SearchConfig {
    fn plan(&self) -> Result<Plan> {
        let (f, alpha, v) = code_base(&self.field, self.n, self.k, &self.alpha, self.v.as_deref())?;
        let (n, k) = (self.n, self.k);
        let base = CodeSpec::new(f, alpha, Some(v), TwistMatrix::zero(k, n - k))?;
        let positions: Vec<(usize, usize)> = (0..k).flat_map(|m| (1..=n - k).map(move |j| (m, j))).collect();
        let shape = match (&self.support, self.max_weight) {
            (Some(s), None) => {
                let mut s: Vec<(usize, usize)> = s.iter().map(|p| (p[0], p[1])).collect();
                if let Some(&(m, j)) = s.iter().find(|&&(m, j)| m >= k || j == 0 || j > n - k) {
                    return Err(CliError::invalid("support", format!("position [{m}, {j}] outside {k} x {}", n - k)));
                }
                s.sort();
                if s.windows(2).any(|w| w[0] == w[1]) {
                    return Err(CliError::invalid("support", "repeated position"));
                }
                Shape::Fixed(s)
            }
            (None, Some(w)) => {
                if w > positions.len() {
                    return Err(CliError::invalid("max_weight", format!("exceeds the {} twist positions", positions.len())));
                }
                Shape::Weight(w)
            }
            _ => return Err(CliError::invalid("support", "give exactly one of `support` and `max_weight`")),
        };
        Ok(Plan { base, shape, positions })
    }
}

impl Plan {
    fn q1(&self) -> u64 {
        self.base.field().q() as u64 - 1
    }

    fn supports(&self) -> Box<dyn Iterator<Item = Vec<(usize, usize)>> + '_> {
        match &self.shape {
            Shape::Fixed(s) => Box::new(std::iter::once(s.clone())),
            Shape::Weight(w) => Box::new((0..=*w).flat_map(move |size| {
                KSubsets::new(self.positions.len(), size).map(move |idx| idx.iter().map(|&i| self.positions[i]).collect())
            })),
        }
    }

    fn exhaustive_size(&self) -> u128 {
        let q1 = self.q1() as u128;
        let p = self.positions.len() as u128;
        match &self.shape {
            Shape::Fixed(s) => q1.saturating_pow(s.len() as u32),
            Shape::Weight(w) => {
                let mut total = 0u128;
                let mut binom = 1u128;
                for size in 0..=*w as u128 {
                    total = total.saturating_add(binom.saturating_mul(q1.saturating_pow(size as u32)));
                    binom = binom * (p - size) / (size + 1);
                }
                total
            }
        }
    }

    fn twist(&self, support: &[(usize, usize)], values: &[u64]) -> TwistMatrix {
        let f = self.base.field();
        let mut t = TwistMatrix::zero(self.base.k(), self.base.n() - self.base.k());
        for (&(m, j), &v) in support.iter().zip(values) {
            t.set(m, j, f.elt(v).unwrap());
        }
        t
    }

    /// Odometer over values `1..q` at each support position, last position
    /// fastest, supports in order.
    fn exhaustive(&self) -> impl Iterator<Item = TwistMatrix> + '_ {
        let q1 = self.q1();
        self.supports().flat_map(move |support| {
            let mut digits = vec![1u64; support.len()];
            let mut done = false;
            std::iter::from_fn(move || {
                if done {
                    return None;
                }
                let t = self.twist(&support, &digits);
                done = true;
                for d in digits.iter_mut().rev() {
                    if *d < q1 {
                        *d += 1;
                        done = false;
                        break;
                    }
                    *d = 1;
                }
                Some(t)
            })
        })
    }

    fn random(&self, rng: &mut ChaCha8Rng) -> TwistMatrix {
        let q1 = self.q1();
        let support: Vec<(usize, usize)> = match &self.shape {
            Shape::Fixed(s) => s.clone(),
            Shape::Weight(w) => {
                let size = rng.random_range(0..=*w);
                let mut idx = sample(rng, self.positions.len(), size).into_vec();
                idx.sort();
                idx.into_iter().map(|i| self.positions[i]).collect()
            }
        };
        let values: Vec<u64> = support.iter().map(|_| rng.random_range(1..=q1)).collect();
        self.twist(&support, &values)
    }
}

fn evaluate(base: &CodeSpec, twist: TwistMatrix, filter: Filter) -> Result<Option<Candidate>> {
    if !filter.keeps(classify_novelty(&twist)) {
        return Ok(None);
    }
    let spec = base.with_twist(twist)?;
    let report = spec.is_mds(Method::Criterion, false)?;
    Ok(report.is_mds.then(|| Candidate { eta: twist_rows(spec.twist()), report: ReportDoc::from(&report) }))
}

/// Runs the search. Candidates are evaluated in blocks on `jobs` threads and
/// kept in enumeration order, so the output does not depend on `jobs`.
pub fn run_search(cfg: &SearchConfig, jobs: usize, timing: bool) -> Result<RunReport> {
    let start = Instant::now();
    let plan = cfg.plan()?;
    let (candidates, seed): (Box<dyn Iterator<Item = TwistMatrix> + '_>, Option<u64>) = match cfg.mode {
        Mode::Exhaustive => {
            let size = plan.exhaustive_size();
            if size > EXHAUSTIVE_LIMIT as u128 {
                return Err(CliError::SearchSpaceTooLarge { size, limit: EXHAUSTIVE_LIMIT });
            }
            (Box::new(plan.exhaustive()), None)
        }
        Mode::Random => {
            let samples = cfg.samples.ok_or_else(|| CliError::invalid("samples", "random mode needs `samples`"))?;
            let seed = cfg.seed.unwrap_or_else(|| {
                std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map_or(0, |d| d.as_nanos() as u64)
            });
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let plan = &plan;
            (Box::new((0..samples).map(move |_| plan.random(&mut rng))), Some(seed))
        }
    };

    let mut candidates = candidates;
    let workers = pool(jobs)?;
    let mut evaluated = 0u64;
    let mut results = Vec::new();
    loop {
        let block: Vec<TwistMatrix> = candidates.by_ref().take(BLOCK).collect();
        if block.is_empty() {
            break;
        }
        evaluated += block.len() as u64;
        let kept: Vec<Option<Candidate>> = workers.install(|| {
            block
                .into_par_iter()
                .map(|t| evaluate(&plan.base, t, cfg.filter))
                .collect::<Result<_>>()
        })?;
        results.extend(kept.into_iter().flatten());
        if evaluated % (BLOCK as u64 * 64) == 0 {
            eprintln!("searched {evaluated} candidates, {} kept", results.len());
        }
    }

    Ok(RunReport {
        command: "search".into(),
        seed,
        duration_ms: timing.then(|| start.elapsed().as_millis() as u64),
        evaluated,
        results,
    })
}
