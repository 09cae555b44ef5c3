use std::collections::BTreeSet;

use super::hypothesis::one_sample_t;
use super::{Alternative, PairedDiffs, TestResult};
use crate::error::StatsError;

/// Leave-one-dataset-out robustness analysis.
#[derive(Debug, Clone, PartialEq)]
pub struct LodoResult {
    /// One-sample t-test of the per-exclusion means against zero.
    pub test: TestResult,
    /// `(excluded dataset, mean difference over the remaining cells)`, sorted by dataset.
    pub exclusion_means: Vec<(String, f64)>,
    /// Mean of the per-exclusion means.
    pub mean_improvement: f64,
}

/// For each dataset, averages the differences of every cell outside it, then
/// tests those averages against zero with a one-sample t-test
/// (`df = #datasets − 1`).
pub fn leave_one_dataset_out(d: &PairedDiffs, alternative: Alternative) -> Result<LodoResult, StatsError> {
    let datasets: BTreeSet<&str> = d.labels().iter().map(|l| l.dataset.as_str()).collect();
    if datasets.len() < 2 {
        return Err(StatsError::TooFewDatasets(datasets.len()));
    }
    let exclusion_means: Vec<(String, f64)> = datasets
        .iter()
        .map(|&excluded| {
            let (sum, count) = d
                .diffs()
                .iter()
                .zip(d.labels())
                .filter(|(_, l)| l.dataset != excluded)
                .fold((0.0, 0usize), |(s, c), (x, _)| (s + x, c + 1));
            (excluded.to_string(), sum / count as f64)
        })
        .collect();
    let means: Vec<f64> = exclusion_means.iter().map(|(_, m)| *m).collect();
    let test = one_sample_t(&means, alternative, "leave_one_dataset_out")?;
    Ok(LodoResult {
        test,
        mean_improvement: super::mean(&means),
        exclusion_means,
    })
}
