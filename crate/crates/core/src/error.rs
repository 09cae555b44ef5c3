use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by vector construction, the similarity metrics and the bound chain.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimilarityError {
    #[error("vector has no components")]
    EmptyVector,
    #[error("component {index} is not finite ({value})")]
    NonFinite { index: usize, value: f64 },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("{metric} is undefined for a zero vector")]
    ZeroVector { metric: &'static str },
    #[error("{metric} denominator is zero")]
    ZeroDenominator { metric: &'static str },
    #[error("tanimoto value {0} lies outside [0, 1]")]
    TanimotoOutOfDomain(f64),
    #[error("permutation enumeration supports dim <= {max}, got {dim}")]
    DimensionTooLarge { dim: usize, max: usize },
    #[error("unknown metric `{0}` (expected recos, cos, decos or tanimoto)")]
    UnknownMetric(String),
}

/// Errors raised by rank correlation and the paired comparison statistics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum StatsError {
    #[error("input is empty")]
    Empty,
    #[error("value at position {index} is not finite")]
    NonFinite { index: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("need at least {needed} observations, got {got}")]
    TooFew { needed: usize, got: usize },
    #[error("zero variance: {0}")]
    ZeroVariance(&'static str),
    #[error("all differences are zero; the test has no non-tied observations")]
    AllZero,
    #[error("p-value {value} at position {index} lies outside [0, 1]")]
    PValueOutOfRange { index: usize, value: f64 },
    #[error("need at least 2 distinct datasets, got {0}")]
    TooFewDatasets(usize),
}

/// Errors raised while reading or writing the on-disk formats.
#[derive(Debug, Error)]
pub enum DataError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },
    #[error("vector literal: {0}")]
    Literal(String),
    #[error("duplicate entry ({model}, {method}, {dataset}) at line {line}")]
    Duplicate {
        model: String,
        method: String,
        dataset: String,
        line: u64,
    },
    #[error("dataset needs at least 2 records, got {0}")]
    TooFewRecords(usize),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// Errors raised by the evaluation harness.
#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("record {record}: {source}")]
    Metric {
        record: usize,
        #[source]
        source: SimilarityError,
    },
    #[error(transparent)]
    Stats(#[from] StatsError),
    #[error("method `{0}` not present in results table")]
    UnknownMethod(String),
    #[error("cell ({model}, {dataset}) present for `{present}` but missing for `{missing}`")]
    Coverage {
        model: String,
        dataset: String,
        present: String,
        missing: String,
    },
}
