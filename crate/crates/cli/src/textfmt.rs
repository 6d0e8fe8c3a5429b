//! Plain-text matrix and polynomial formats.
//!
//! A matrix is a header line `rows cols` followed by one line per row of
//! space-separated element integers. A polynomial is one line of
//! coefficients in ascending degree.

use std::fmt::Write;

use tgrs_core::structmat::{Mat, Poly};
use tgrs_core::{Elt, Field};

use crate::error::{CliError, Result};

pub fn format_matrix(m: &Mat) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", m.rows(), m.cols()).unwrap();
    for i in 0..m.rows() {
        writeln!(out, "{}", join(m.row(i))).unwrap();
    }
    out
}

pub fn parse_matrix(field: &Field, text: &str) -> Result<Mat> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| CliError::invalid("matrix", "empty input"))?;
    let dims = parse_ints(header)?;
    let [rows, cols] = dims[..] else {
        return Err(CliError::invalid("matrix", "header must be `rows cols`"));
    };
    let (rows, cols) = (rows as usize, cols as usize);
    let mut data = Vec::with_capacity(rows * cols);
    for (i, line) in lines.enumerate() {
        let vals = parse_elts(field, line)?;
        if vals.len() != cols {
            return Err(CliError::invalid("matrix", format!("row {i} has {} entries, expected {cols}", vals.len())));
        }
        data.extend(vals);
    }
    if data.len() != rows * cols {
        return Err(CliError::invalid("matrix", format!("expected {rows} rows")));
    }
    Ok(Mat::new(field.clone(), rows, cols, data)?)
}

pub fn format_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    join(p.coeffs())
}

pub fn parse_poly(field: &Field, text: &str) -> Result<Poly> {
    Ok(Poly::new(field.clone(), parse_elts(field, text)?))
}

fn join(elts: &[Elt]) -> String {
    elts.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
}

fn parse_ints(line: &str) -> Result<Vec<u64>> {
    line.split_whitespace()
        .map(|s| s.parse::<u64>().map_err(|_| CliError::invalid("matrix", format!("`{s}` is not an integer"))))
        .collect()
}

fn parse_elts(field: &Field, line: &str) -> Result<Vec<Elt>> {
    parse_ints(line)?.into_iter().map(|v| Ok(field.elt(v)?)).collect()
}
