use core::fmt;

use alloc::vec::Vec;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    NotPrime(u64),
    /// The supplied (or searched) modulus is reducible over `GF(p)`.
    NotIrreducible,
    /// Modulus has the wrong length or is not monic.
    InvalidModulus,
    InvalidDegree(u32),
    OrderTooLarge(u64),
    ElementOutOfRange { value: u64, q: u32 },
    DivisionByZero,
    FieldMismatch,
    DuplicateRoots,
    EmptyPoints,
    ZeroRootNegativePower,
    ZeroEvaluationPoint,
    Singular,
    NotSquare { rows: usize, cols: usize },
    DimensionMismatch,
    LeadingNotOne,
    /// A Toeplitz column does not agree with the coefficients of `prod (x - alpha_i)`.
    CoefficientMismatch,
    IndexOutOfRange,
    LengthMismatch { expected: usize, got: usize },
    InvalidParameters(&'static str),
    ZeroMultiplier,
    ZeroTwist,
    NotSingleTwist,
    /// Criterion and brute-force disagreed on a subset (0-based indices).
    MethodDisagreement { subset: Vec<usize> },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::NotIrreducible => f.write_str("modulus is not irreducible"),
            Error::InvalidModulus => f.write_str("modulus must be monic of degree m"),
            Error::InvalidDegree(m) => write!(f, "invalid extension degree {m}"),
            Error::OrderTooLarge(q) => write!(f, "field order {q} exceeds 2^20"),
            Error::ElementOutOfRange { value, q } => {
                write!(f, "element {value} is outside [0, {q})")
            }
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::FieldMismatch => f.write_str("operands belong to different fields"),
            Error::DuplicateRoots => f.write_str("alpha not distinct"),
            Error::EmptyPoints => f.write_str("evaluation point list is empty"),
            Error::ZeroRootNegativePower => {
                f.write_str("negative index requires every point to be nonzero")
            }
            Error::ZeroEvaluationPoint => f.write_str("evaluation point 0 is not allowed here"),
            Error::Singular => f.write_str("matrix is singular"),
            Error::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            Error::DimensionMismatch => f.write_str("matrix dimensions do not match"),
            Error::LeadingNotOne => f.write_str("Toeplitz diagonal must be 1"),
            Error::CoefficientMismatch => {
                f.write_str("column does not match the coefficients of prod (x - alpha_i)")
            }
            Error::IndexOutOfRange => f.write_str("index out of range"),
            Error::LengthMismatch { expected, got } => {
                write!(f, "expected length {expected}, got {got}")
            }
            Error::InvalidParameters(msg) => f.write_str(msg),
            Error::ZeroMultiplier => f.write_str("column multipliers v must be nonzero"),
            Error::ZeroTwist => f.write_str("twist coefficient eta must be nonzero"),
            Error::NotSingleTwist => f.write_str("twist matrix must have exactly one nonzero entry"),
            Error::MethodDisagreement { subset } => {
                write!(f, "criterion and brute force disagree on subset {subset:?}")
            }
        }
    }
}

impl core::error::Error for Error {}
