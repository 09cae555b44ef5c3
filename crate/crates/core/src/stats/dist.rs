use statrs::function::beta::beta_reg;
use statrs::function::factorial::ln_binomial;

/// Upper tail `P(Z > z)` of the standard normal.
pub fn normal_sf(z: f64) -> f64 {
    0.5 * libm::erfc(z / std::f64::consts::SQRT_2)
}

/// Upper tail `P(T > t)` of Student's t with `df` degrees of freedom.
///
/// Uses `P(|T| > |t|) = I_x(df/2, 1/2)` with `x = df / (df + t²)`.
pub fn student_t_sf(t: f64, df: f64) -> f64 {
    if t == 0.0 {
        return 0.5;
    }
    let x = df / (df + t * t);
    let two_sided = beta_reg(df / 2.0, 0.5, x);
    if t > 0.0 {
        0.5 * two_sided
    } else {
        1.0 - 0.5 * two_sided
    }
}

/// `P(X >= k)` for `X ~ Binomial(n, 1/2)`.
pub fn binomial_upper_tail(k: u64, n: u64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    if k > n {
        return 0.0;
    }
    let ln_half_n = n as f64 * std::f64::consts::LN_2;
    let p: f64 = (k..=n).map(|i| (ln_binomial(n, i) - ln_half_n).exp()).sum();
    p.min(1.0)
}
