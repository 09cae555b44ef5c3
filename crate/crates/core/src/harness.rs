//! Benchmark evaluation over pair datasets and method comparison over score tables.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::error::{HarnessError, StatsError};
use crate::io::{Centi, PairDataset, ResultsTable};
use crate::metrics::{similarity, MetricKind};
use crate::rank::spearman_rho;
use crate::stats::{
    benjamini_hochberg, cohens_d_pooled, descriptive_stats, leave_one_dataset_out, paired_t_test,
    sign_test, wilcoxon_signed_rank, Alternative, CellLabel, DescriptiveStats, LodoResult,
    PairedDiffs, TestResult,
};

/// Rounds half away from zero to `decimals` places. Display-layer only.
pub fn round_half_away(x: f64, decimals: i32) -> f64 {
    let scale = 10f64.powi(decimals);
    (x * scale).round() / scale
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub dataset: String,
    pub metric: MetricKind,
    /// Spearman ρ × 100, unrounded.
    pub rho_x100: f64,
    pub n_pairs: usize,
}

impl EvalReport {
    /// `rho_x100` rounded to two decimals for presentation.
    pub fn rho_x100_rounded(&self) -> f64 {
        round_half_away(self.rho_x100, 2)
    }
}

/// Scores every pair with `metric` and correlates the scores with the gold column.
///
/// Pairs are scored in parallel, but the score sequence is assembled in record
/// order before ranking, so the result does not depend on scheduling.
pub fn evaluate(dataset: &PairDataset, metric: MetricKind) -> Result<EvalReport, HarnessError> {
    let scored: Vec<_> = dataset
        .records()
        .par_iter()
        .map(|r| similarity(metric, &r.u, &r.v))
        .collect();
    let mut sims = Vec::with_capacity(scored.len());
    for (record, s) in scored.into_iter().enumerate() {
        sims.push(s.map_err(|source| HarnessError::Metric { record, source })?);
    }
    let gold: Vec<f64> = dataset.records().iter().map(|r| r.gold).collect();
    let rho = spearman_rho(&sims, &gold)?;
    Ok(EvalReport {
        dataset: dataset.name().to_string(),
        metric,
        rho_x100: 100.0 * rho,
        n_pairs: dataset.len(),
    })
}

/// Everything reported when comparing method A against method B.
///
/// Tests that cannot run on the given differences (e.g. all ties) hold the
/// reason as an `Err`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub method_a: String,
    pub method_b: String,
    pub diffs: PairedDiffs,
    pub descriptive: DescriptiveStats,
    pub wilcoxon: Result<TestResult, StatsError>,
    pub sign: Result<TestResult, StatsError>,
    pub t_test: Result<TestResult, StatsError>,
    /// Between-groups Cohen's d of A's scores against B's scores.
    pub pooled_d: Result<f64, StatsError>,
    /// BH-adjusted p-values keyed by test name, over the tests that ran.
    pub bh_adjusted: BTreeMap<&'static str, f64>,
    pub lodo: Result<LodoResult, StatsError>,
    pub micro_avg_a: f64,
    pub micro_avg_b: f64,
}

impl ComparisonReport {
    /// True when every test produced a result.
    pub fn all_tests_ran(&self) -> bool {
        self.wilcoxon.is_ok()
            && self.sign.is_ok()
            && self.t_test.is_ok()
            && self.pooled_d.is_ok()
            && self.lodo.is_ok()
    }
}

/// Compares `method_a` against `method_b` with the one-sided alternative A > B.
pub fn compare(results: &ResultsTable, method_a: &str, method_b: &str) -> Result<ComparisonReport, HarnessError> {
    compare_with(results, method_a, method_b, Alternative::Greater)
}

fn method_cells<'a>(results: &'a ResultsTable, method: &'a str) -> HashMap<(&'a str, &'a str), Centi> {
    results
        .method_rows(method)
        .map(|r| ((r.model.as_str(), r.dataset.as_str()), r.score))
        .collect()
}

pub fn compare_with(
    results: &ResultsTable,
    method_a: &str,
    method_b: &str,
    alternative: Alternative,
) -> Result<ComparisonReport, HarnessError> {
    let a_cells = method_cells(results, method_a);
    let b_cells = method_cells(results, method_b);
    if a_cells.is_empty() {
        return Err(HarnessError::UnknownMethod(method_a.to_string()));
    }
    if b_cells.is_empty() {
        return Err(HarnessError::UnknownMethod(method_b.to_string()));
    }
    for r in results.method_rows(method_b) {
        if !a_cells.contains_key(&(r.model.as_str(), r.dataset.as_str())) {
            return Err(HarnessError::Coverage {
                model: r.model.clone(),
                dataset: r.dataset.clone(),
                present: method_b.to_string(),
                missing: method_a.to_string(),
            });
        }
    }

    let mut diffs = Vec::new();
    let mut labels = Vec::new();
    let mut a_scores = Vec::new();
    let mut b_scores = Vec::new();
    for r in results.method_rows(method_a) {
        let b = *b_cells
            .get(&(r.model.as_str(), r.dataset.as_str()))
            .ok_or_else(|| HarnessError::Coverage {
                model: r.model.clone(),
                dataset: r.dataset.clone(),
                present: method_a.to_string(),
                missing: method_b.to_string(),
            })?;
        // exact: both scores are whole hundredths
        diffs.push((r.score.hundredths() - b.hundredths()) as f64 / 100.0);
        labels.push(CellLabel::new(&r.model, &r.dataset));
        a_scores.push(r.score.to_f64());
        b_scores.push(b.to_f64());
    }
    let diffs = PairedDiffs::new(diffs, labels)?;

    let descriptive = descriptive_stats(&diffs)?;
    let wilcoxon = wilcoxon_signed_rank(&diffs, alternative);
    let sign = sign_test(&diffs, alternative);
    let t_test = paired_t_test(&diffs, alternative);

    let ran: Vec<&TestResult> = [&wilcoxon, &sign, &t_test]
        .into_iter()
        .filter_map(|r| r.as_ref().ok())
        .collect();
    let raw: Vec<f64> = ran.iter().map(|t| t.p_value).collect();
    let adjusted = benjamini_hochberg(&raw)?;
    let bh_adjusted = ran.iter().map(|t| t.method_name).zip(adjusted).collect();

    let mean_centi = |xs: &[f64]| xs.iter().sum::<f64>() / xs.len() as f64;

    Ok(ComparisonReport {
        method_a: method_a.to_string(),
        method_b: method_b.to_string(),
        descriptive,
        wilcoxon,
        sign,
        t_test,
        pooled_d: cohens_d_pooled(&a_scores, &b_scores),
        bh_adjusted,
        lodo: leave_one_dataset_out(&diffs, alternative),
        micro_avg_a: mean_centi(&a_scores),
        micro_avg_b: mean_centi(&b_scores),
        diffs,
    })
}
