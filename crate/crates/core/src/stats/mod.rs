//! Paired comparison statistics over per-cell score differences.
//!
//! All tests default to the one-sided alternative "A > B", i.e. the
//! differences `A − B` are shifted upward.

mod descriptive;
mod dist;
mod effect;
mod lodo;
mod multiple;
mod hypothesis;

use std::fmt;
use std::str::FromStr;

pub use descriptive::{descriptive_stats, quantile_linear, DescriptiveStats};
pub use dist::{binomial_upper_tail, normal_sf, student_t_sf};
pub use effect::{cohens_d_paired, cohens_d_pooled};
pub use lodo::{leave_one_dataset_out, LodoResult};
pub use multiple::benjamini_hochberg;
pub use hypothesis::{paired_t_test, sign_test, wilcoxon_signed_rank};

use crate::error::StatsError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Alternative {
    #[default]
    Greater,
    Less,
    TwoSided,
}

impl Alternative {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Greater => "greater",
            Self::Less => "less",
            Self::TwoSided => "two-sided",
        }
    }
}

impl fmt::Display for Alternative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Alternative {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "greater" => Ok(Self::Greater),
            "less" => Ok(Self::Less),
            "two-sided" | "two_sided" => Ok(Self::TwoSided),
            other => Err(format!("unknown alternative `{other}`")),
        }
    }
}

/// Identifies the (model, dataset) cell a difference came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CellLabel {
    pub model: String,
    pub dataset: String,
}

impl CellLabel {
    pub fn new(model: impl Into<String>, dataset: impl Into<String>) -> Self {
        Self {
            model: model.into(),
            dataset: dataset.into(),
        }
    }
}

/// Per-cell differences `A − B` with their cell labels.
#[derive(Debug, Clone, PartialEq)]
pub struct PairedDiffs {
    diffs: Vec<f64>,
    labels: Vec<CellLabel>,
}

impl PairedDiffs {
    pub fn new(diffs: Vec<f64>, labels: Vec<CellLabel>) -> Result<Self, StatsError> {
        if diffs.len() != labels.len() {
            return Err(StatsError::LengthMismatch {
                left: diffs.len(),
                right: labels.len(),
            });
        }
        if let Some(index) = diffs.iter().position(|d| !d.is_finite()) {
            return Err(StatsError::NonFinite { index });
        }
        Ok(Self { diffs, labels })
    }

    /// Differences with no cell labels; every label is empty.
    pub fn unlabeled(diffs: Vec<f64>) -> Result<Self, StatsError> {
        let labels = vec![CellLabel::default(); diffs.len()];
        Self::new(diffs, labels)
    }

    pub fn diffs(&self) -> &[f64] {
        &self.diffs
    }

    pub fn labels(&self) -> &[CellLabel] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.diffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diffs.is_empty()
    }

    pub fn negated(&self) -> Self {
        Self {
            diffs: self.diffs.iter().map(|d| -d).collect(),
            labels: self.labels.clone(),
        }
    }
}

/// Outcome of one hypothesis test.
#[derive(Debug, Clone, PartialEq)]
pub struct TestResult {
    pub method_name: &'static str,
    pub statistic: f64,
    pub p_value: f64,
    pub effect_size: f64,
    /// Observations that entered the test (after discarding ties where applicable).
    pub n_used: usize,
    /// Degrees of freedom, for t-based tests.
    pub df: Option<f64>,
    pub alternative: Alternative,
}

pub(crate) fn mean(x: &[f64]) -> f64 {
    x.iter().sum::<f64>() / x.len() as f64
}

/// Sample standard deviation (n − 1 denominator).
pub(crate) fn sample_sd(x: &[f64]) -> f64 {
    sample_var(x).sqrt()
}

pub(crate) fn sample_var(x: &[f64]) -> f64 {
    let m = mean(x);
    x.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / (x.len() as f64 - 1.0)
}
