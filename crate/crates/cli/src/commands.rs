//! Subcommand bodies. Each returns what goes to standard output plus the
//! exit status; the binary only parses flags and prints.

use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;
use tgrs_core::structmat::{
    toeplitz_inverse_reversed, toeplitz_inverse_unit, toeplitz_lower, vandermonde, vandermonde_inverse_explicit,
    wseq_direct, Mat, Poly, WSeq,
};
use tgrs_core::tgrs::Method;
use tgrs_core::Error as CoreError;

use crate::error::{CliError, Result};
use crate::files::{read_json, PointsFile, SpecFile};
use crate::report::ReportDoc;
use crate::search::{run_search, SearchConfig};
use crate::textfmt::format_matrix;
use crate::verify::check_mds;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_MDS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Criterion,
    Brute,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Criterion => Method::Criterion,
            MethodArg::Brute => Method::BruteForce,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InvertKind {
    Vandermonde,
    Toeplitz,
    ToeplitzReversed,
}

#[derive(Debug)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

pub fn verify(path: &Path, method: MethodArg, full_report: bool, jobs: usize, format: Format) -> Result<Output> {
    let spec = read_json::<SpecFile>(path)?.build()?;
    let report = check_mds(&spec, method.into(), full_report, jobs)?;
    let doc = ReportDoc::from(&report);
    let stdout = match format {
        Format::Text => doc.to_text(),
        Format::Structured => json(&doc),
    };
    Ok(Output { stdout, code: if report.is_mds { EXIT_OK } else { EXIT_NOT_MDS } })
}

pub fn search(path: &Path, seed: Option<u64>, jobs: usize, timing: bool, format: Format) -> Result<Output> {
    let mut cfg: SearchConfig = read_json(path)?;
    if seed.is_some() {
        cfg.seed = seed;
    }
    let report = run_search(&cfg, jobs, timing)?;
    let stdout = match format {
        Format::Text => report.to_text(),
        Format::Structured => json(&report),
    };
    Ok(Output { stdout, code: EXIT_OK })
}

#[derive(Serialize)]
struct MatrixDoc {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<u32>>,
}

fn check_identity(product: Mat) -> Result<()> {
    if product.is_identity() {
        Ok(())
    } else {
        Err(CliError::Internal("inverse times input is not the identity".into()))
    }
}

pub fn invert(kind: InvertKind, path: &Path, format: Format) -> Result<Output> {
    let input: PointsFile = read_json(path)?;
    let (f, alpha) = input.build()?;
    let n = alpha.len();
    let c = Poly::from_roots(&f, &alpha)?.coeffs_descending();
    let inv = match kind {
        InvertKind::Vandermonde => {
            let inv = vandermonde_inverse_explicit(&f, &alpha)?;
            check_identity(inv.mul(&vandermonde(&f, &alpha, n))?)?;
            inv
        }
        InvertKind::Toeplitz => {
            let size = input.size.unwrap_or(n);
            if size == 0 {
                return Err(CliError::invalid("size", "must be at least 1"));
            }
            let inv = toeplitz_inverse_unit(&f, &c, size, &alpha)?;
            check_identity(inv.mul(&toeplitz_lower(&f, &c, size))?)?;
            inv
        }
        InvertKind::ToeplitzReversed => {
            if alpha.iter().any(|a| a.is_zero()) {
                return Err(CoreError::ZeroEvaluationPoint.into());
            }
            let col: Vec<_> = c[1..].iter().rev().copied().collect();
            let inv = toeplitz_inverse_reversed(&f, &col, &alpha)?;
            check_identity(inv.mul(&toeplitz_lower(&f, &col, n))?)?;
            inv
        }
    };
    let stdout = match format {
        Format::Text => format_matrix(&inv),
        Format::Structured => json(&MatrixDoc {
            rows: inv.rows(),
            cols: inv.cols(),
            entries: (0..inv.rows()).map(|i| inv.row(i).iter().map(|e| e.value()).collect()).collect(),
        }),
    };
    Ok(Output { stdout, code: EXIT_OK })
}

#[derive(Serialize)]
struct WseqDoc {
    lo: i64,
    hi: i64,
    w: Vec<u32>,
}

pub fn wseq(path: &Path, lo: i64, hi: i64, format: Format) -> Result<Output> {
    if lo > hi {
        return Err(CliError::invalid("lo", format!("lo = {lo} exceeds hi = {hi}")));
    }
    let input: PointsFile = read_json(path)?;
    let (f, alpha) = input.build()?;
    let w = WSeq::new(&f, &alpha, lo, hi)?;
    for t in [lo, hi] {
        if w.at(t) != wseq_direct(&f, &alpha, t)? {
            return Err(CliError::Internal(format!("recurrence and direct sum differ at t = {t}")));
        }
    }
    let stdout = match format {
        Format::Text => w.iter().map(|(t, v)| format!("{t} {v}\n")).collect(),
        Format::Structured => json(&WseqDoc { lo, hi, w: w.iter().map(|(_, v)| v.value()).collect() }),
    };
    Ok(Output { stdout, code: EXIT_OK })
}
