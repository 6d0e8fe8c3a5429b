//! JSON input documents.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use tgrs_core::tgrs::{CodeSpec, TwistMatrix};
use tgrs_core::{Elt, Error as CoreError, Field};

use crate::error::{CliError, Result};

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse { path: path.into(), msg: e.to_string() })
}

/// `GF(p^m)`. `modulus` lists the monic defining polynomial's coefficients
/// in ascending degree, leading 1 included; omitted means the smallest
/// irreducible.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FieldDesc {
    pub p: u64,
    #[serde(default = "one")]
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

fn one() -> u32 {
    1
}

impl FieldDesc {
    pub fn build(&self) -> Result<Field> {
        Field::new(self.p, self.m, self.modulus.as_deref()).map_err(|e| CliError::invalid("field", e.to_string()))
    }
}

pub fn elts(field: &Field, name: &'static str, values: &[u64]) -> Result<Vec<Elt>> {
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            field
                .elt(v)
                .map_err(|_| CliError::invalid(name, format!("entry {i} = {v} is not an element of GF({})", field.q())))
        })
        .collect()
}

pub fn check_distinct(name: &'static str, values: &[Elt]) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    if values.iter().all(|v| seen.insert(*v)) {
        Ok(())
    } else {
        Err(CliError::invalid(name, format!("{name} not distinct")))
    }
}

/// A code: `{"field", "n", "k", "alpha", "v"?, "eta"}` with `eta` given as
/// `k` rows of `n - k` entries.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub field: FieldDesc,
    pub n: usize,
    pub k: usize,
    pub alpha: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<Vec<u64>>,
    pub eta: Vec<Vec<u64>>,
}

/// Checks the shared `field, n, k, alpha, v` part of a code description.
pub fn code_base(
    field: &FieldDesc,
    n: usize,
    k: usize,
    alpha: &[u64],
    v: Option<&[u64]>,
) -> Result<(Field, Vec<Elt>, Vec<Elt>)> {
    let f = field.build()?;
    if alpha.len() != n {
        return Err(CliError::invalid("alpha", format!("expected {n} points, got {}", alpha.len())));
    }
    if n as u64 > f.q() as u64 {
        return Err(CliError::invalid("n", format!("n = {n} exceeds q = {}", f.q())));
    }
    if k < 3 || k >= n {
        return Err(CliError::invalid("k", format!("need 3 <= k < n, got k = {k}, n = {n}")));
    }
    let alpha = elts(&f, "alpha", alpha)?;
    check_distinct("alpha", &alpha)?;
    let v = match v {
        None => vec![Elt::ONE; n],
        Some(v) => {
            if v.len() != n {
                return Err(CliError::invalid("v", format!("expected {n} multipliers, got {}", v.len())));
            }
            let v = elts(&f, "v", v)?;
            if v.iter().any(|e| e.is_zero()) {
                return Err(CliError::invalid("v", "multipliers must be nonzero"));
            }
            v
        }
    };
    Ok((f, alpha, v))
}

impl SpecFile {
    pub fn build(&self) -> Result<CodeSpec> {
        let (f, alpha, v) = code_base(&self.field, self.n, self.k, &self.alpha, self.v.as_deref())?;
        let (n, k) = (self.n, self.k);
        if self.eta.len() != k || self.eta.iter().any(|r| r.len() != n - k) {
            return Err(CliError::invalid("eta", format!("expected {k} rows of {} entries", n - k)));
        }
        let rows = self.eta.iter().map(|r| elts(&f, "eta", r)).collect::<Result<Vec<_>>>()?;
        let twist = TwistMatrix::from_rows(&rows)?;
        CodeSpec::new(f, alpha, Some(v), twist).map_err(|e| match e {
            CoreError::DuplicateRoots => CliError::invalid("alpha", "alpha not distinct"),
            other => other.into(),
        })
    }
}

/// Input for `invert` and `wseq`: a field and points, plus the Toeplitz size.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointsFile {
    pub field: FieldDesc,
    pub alpha: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
}

impl PointsFile {
    pub fn build(&self) -> Result<(Field, Vec<Elt>)> {
        let f = self.field.build()?;
        if self.alpha.is_empty() {
            return Err(CliError::invalid("alpha", "no points given"));
        }
        let alpha = elts(&f, "alpha", &self.alpha)?;
        check_distinct("alpha", &alpha)?;
        Ok((f, alpha))
    }
}
