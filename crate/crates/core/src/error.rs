use alloc::string::String;
use core::fmt;

use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    DimensionMismatch { context: &'static str, expected: usize, found: usize },
    NotAntisymmetric { i: usize, j: usize },
    JacobiFails { i: usize, j: usize, l: usize },
    LevelOutOfRange { level: usize, max: usize },
    IndexOutOfRange { index: usize, level: usize },
    NotInSubspace { context: String },
    /// A validator found violations; the report names each one.
    Invalid(Report),
    /// The reconstruction of a simplicial object from Moore data hit incompatible face values.
    Inconsistent { level: usize, detail: String },
    MooreLengthExceedsTruncation { length: usize, truncation: usize },
    OracleMismatch(Report),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::DimensionMismatch { context, expected, found } => {
                write!(f, "{context}: expected dimension {expected}, found {found}")
            }
            AlgebraError::NotAntisymmetric { i, j } => {
                write!(f, "structure constants not antisymmetric at basis pair ({i}, {j})")
            }
            AlgebraError::JacobiFails { i, j, l } => {
                write!(f, "Jacobi identity fails on basis triple ({i}, {j}, {l})")
            }
            AlgebraError::LevelOutOfRange { level, max } => {
                write!(f, "level {level} out of range (max {max})")
            }
            AlgebraError::IndexOutOfRange { index, level } => {
                write!(f, "index {index} out of range at level {level}")
            }
            AlgebraError::NotInSubspace { context } => write!(f, "vector outside {context}"),
            AlgebraError::Invalid(r) => write!(f, "validation failed:\n{r}"),
            AlgebraError::Inconsistent { level, detail } => {
                write!(f, "inconsistent reconstruction at level {level}: {detail}")
            }
            AlgebraError::MooreLengthExceedsTruncation { length, truncation } => write!(
                f,
                "Moore length {length} needs truncation at least {}, got {truncation}",
                length + 1
            ),
            AlgebraError::OracleMismatch(r) => write!(f, "oracle mismatch:\n{r}"),
        }
    }
}

impl core::error::Error for AlgebraError {}
