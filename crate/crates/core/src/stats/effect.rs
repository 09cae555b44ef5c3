use super::{mean, sample_sd, sample_var, PairedDiffs};
use crate::error::StatsError;

/// Between-groups Cohen's d: mean gap over the pooled sample standard deviation.
///
/// Treats `a` and `b` as independent samples, so model-to-model spread in the
/// scores inflates the denominator. Compare [`cohens_d_paired`].
pub fn cohens_d_pooled(a: &[f64], b: &[f64]) -> Result<f64, StatsError> {
    for x in [a, b] {
        if x.len() < 2 {
            return Err(StatsError::TooFew { needed: 2, got: x.len() });
        }
        crate::rank::check_finite(x)?;
    }
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let pooled = ((na - 1.0) * sample_var(a) + (nb - 1.0) * sample_var(b)) / (na + nb - 2.0);
    if pooled == 0.0 {
        return Err(StatsError::ZeroVariance("pooled variance"));
    }
    Ok((mean(a) - mean(b)) / pooled.sqrt())
}

/// Paired Cohen's `d_z`: mean difference over the standard deviation of the differences.
pub fn cohens_d_paired(d: &PairedDiffs) -> Result<f64, StatsError> {
    let x = d.diffs();
    if x.len() < 2 {
        return Err(StatsError::TooFew { needed: 2, got: x.len() });
    }
    let sd = sample_sd(x);
    if sd == 0.0 {
        return Err(StatsError::ZeroVariance("paired differences"));
    }
    Ok(mean(x) / sd)
}
