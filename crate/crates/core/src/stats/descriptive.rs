use super::{mean, sample_sd, PairedDiffs};
use crate::error::StatsError;

/// Summary of a set of paired differences.
///
/// Quartiles use linear interpolation between order statistics at position
/// `p(n − 1)` (0-based), the default quantile rule of most statistics packages.
#[derive(Debug, Clone, PartialEq)]
pub struct DescriptiveStats {
    pub n: usize,
    pub mean: f64,
    pub sd: f64,
    pub se: f64,
    pub median: f64,
    pub min: f64,
    pub max: f64,
    pub q1: f64,
    pub q3: f64,
    pub iqr: f64,
    pub wins: usize,
    pub ties: usize,
    pub losses: usize,
    /// `wins / (wins + losses)`; NaN when every difference is a tie.
    pub win_rate_excl_ties: f64,
    /// `wins / n`
    pub win_rate_all: f64,
}

/// Quantile of sorted data by linear interpolation at 0-based position `p(n − 1)`.
pub fn quantile_linear(sorted: &[f64], p: f64) -> f64 {
    debug_assert!(!sorted.is_empty());
    let h = p * (sorted.len() - 1) as f64;
    let lo = h.floor() as usize;
    let hi = (lo + 1).min(sorted.len() - 1);
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

pub fn descriptive_stats(d: &PairedDiffs) -> Result<DescriptiveStats, StatsError> {
    let x = d.diffs();
    if x.is_empty() {
        return Err(StatsError::Empty);
    }
    let n = x.len();
    let mut sorted = x.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);

    let sd = if n > 1 { sample_sd(x) } else { 0.0 };
    let wins = x.iter().filter(|&&v| v > 0.0).count();
    let losses = x.iter().filter(|&&v| v < 0.0).count();
    let ties = n - wins - losses;
    let q1 = quantile_linear(&sorted, 0.25);
    let q3 = quantile_linear(&sorted, 0.75);

    Ok(DescriptiveStats {
        n,
        mean: mean(x),
        sd,
        se: sd / (n as f64).sqrt(),
        median: quantile_linear(&sorted, 0.5),
        min: sorted[0],
        max: sorted[n - 1],
        q1,
        q3,
        iqr: q3 - q1,
        wins,
        ties,
        losses,
        win_rate_excl_ties: wins as f64 / (wins + losses) as f64,
        win_rate_all: wins as f64 / n as f64,
    })
}
