use crate::error::StatsError;

/// Benjamini–Hochberg step-up adjusted p-values, in input order.
///
/// With the raw values sorted ascending, the adjusted value at rank `i` is
/// `min_{j >= i} (m / j) · p_(j)`, capped at 1.
pub fn benjamini_hochberg(p_values: &[f64]) -> Result<Vec<f64>, StatsError> {
    if let Some((index, &value)) = p_values
        .iter()
        .enumerate()
        .find(|(_, p)| !(0.0..=1.0).contains(*p))
    {
        return Err(StatsError::PValueOutOfRange { index, value });
    }
    let m = p_values.len();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| p_values[a].total_cmp(&p_values[b]));

    let mut adjusted = vec![0.0; m];
    let mut running = 1.0f64;
    for (rank0, &i) in order.iter().enumerate().rev() {
        // ratio first: m/j >= 1 survives rounding, so scaled >= p
        let scaled = p_values[i] * (m as f64 / (rank0 + 1) as f64);
        running = running.min(scaled);
        adjusted[i] = running;
    }
    Ok(adjusted)
}
