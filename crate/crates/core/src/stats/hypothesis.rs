//! Wilcoxon signed-rank, sign test and paired t-test.

use super::dist::{binomial_upper_tail, normal_sf, student_t_sf};
use super::{mean, sample_sd, Alternative, PairedDiffs, TestResult};
use crate::error::StatsError;
use crate::rank::ranks_unchecked;

fn nonzero(d: &PairedDiffs) -> Result<Vec<f64>, StatsError> {
    let nz: Vec<f64> = d.diffs().iter().copied().filter(|&x| x != 0.0).collect();
    if nz.is_empty() {
        return Err(StatsError::AllZero);
    }
    Ok(nz)
}

/// Wilcoxon signed-rank test.
///
/// Zero differences are dropped; the rest are ranked by magnitude with average
/// ranks. The statistic `V` is the rank sum of the positive differences. The
/// p-value uses the normal approximation with tie-corrected variance and a 0.5
/// continuity correction. `effect_size` is `r = |z| / √n_used`.
pub fn wilcoxon_signed_rank(d: &PairedDiffs, alternative: Alternative) -> Result<TestResult, StatsError> {
    let nz = nonzero(d)?;
    let n = nz.len();
    let magnitudes: Vec<f64> = nz.iter().map(|x| x.abs()).collect();
    let ranks = ranks_unchecked(&magnitudes);
    let v: f64 = ranks.iter().zip(&nz).filter(|(_, &x)| x > 0.0).map(|(r, _)| r).sum();

    let nf = n as f64;
    let expected = nf * (nf + 1.0) / 4.0;

    let mut sorted = magnitudes;
    sorted.sort_unstable_by(f64::total_cmp);
    let mut tie_term = 0.0;
    for group in sorted.chunk_by(|a, b| a == b) {
        let t = group.len() as f64;
        tie_term += t * t * t - t;
    }
    let variance = nf * (nf + 1.0) * (2.0 * nf + 1.0) / 24.0 - tie_term / 48.0;
    let sigma = variance.sqrt();

    let shift = v - expected;
    let correction = match alternative {
        Alternative::Greater => 0.5,
        Alternative::Less => -0.5,
        Alternative::TwoSided => 0.5 * shift.signum(),
    };
    let z = (shift - correction) / sigma;
    let p = match alternative {
        Alternative::Greater => normal_sf(z),
        Alternative::Less => 1.0 - normal_sf(z),
        Alternative::TwoSided => (2.0 * normal_sf(z.abs())).min(1.0),
    };

    Ok(TestResult {
        method_name: "wilcoxon_signed_rank",
        statistic: v,
        p_value: p.clamp(0.0, 1.0),
        effect_size: z.abs() / nf.sqrt(),
        n_used: n,
        df: None,
        alternative,
    })
}

/// Exact binomial sign test on the non-zero differences.
///
/// `statistic` is the count of positive differences, `effect_size` the win rate.
pub fn sign_test(d: &PairedDiffs, alternative: Alternative) -> Result<TestResult, StatsError> {
    let nz = nonzero(d)?;
    let n = nz.len() as u64;
    let k = nz.iter().filter(|&&x| x > 0.0).count() as u64;
    let upper = binomial_upper_tail(k, n);
    // P(X <= k) = P(X >= n - k) by symmetry of Binomial(n, 1/2)
    let lower = binomial_upper_tail(n - k, n);
    let p = match alternative {
        Alternative::Greater => upper,
        Alternative::Less => lower,
        Alternative::TwoSided => (2.0 * upper.min(lower)).min(1.0),
    };
    Ok(TestResult {
        method_name: "sign_test",
        statistic: k as f64,
        p_value: p.clamp(0.0, 1.0),
        effect_size: k as f64 / n as f64,
        n_used: n as usize,
        df: None,
        alternative,
    })
}

/// One-sample t-test of `x` against zero. Shared by the paired test and LODO.
pub(crate) fn one_sample_t(
    x: &[f64],
    alternative: Alternative,
    method_name: &'static str,
) -> Result<TestResult, StatsError> {
    let n = x.len();
    if n < 2 {
        return Err(StatsError::TooFew { needed: 2, got: n });
    }
    let sd = sample_sd(x);
    if sd == 0.0 {
        return Err(StatsError::ZeroVariance("t-test on constant values"));
    }
    let m = mean(x);
    let t = m / (sd / (n as f64).sqrt());
    let df = (n - 1) as f64;
    let p = match alternative {
        Alternative::Greater => student_t_sf(t, df),
        Alternative::Less => student_t_sf(-t, df),
        Alternative::TwoSided => (2.0 * student_t_sf(t.abs(), df)).min(1.0),
    };
    Ok(TestResult {
        method_name,
        statistic: t,
        p_value: p.clamp(0.0, 1.0),
        effect_size: m / sd,
        n_used: n,
        df: Some(df),
        alternative,
    })
}

/// Paired t-test on all differences (ties included). `effect_size` is the
/// paired Cohen's `d_z = mean / sd`.
pub fn paired_t_test(d: &PairedDiffs, alternative: Alternative) -> Result<TestResult, StatsError> {
    one_sample_t(d.diffs(), alternative, "paired_t_test")
}
