//! The four dot-product similarity metrics and the ordinal predicates behind them.
//!
//! Each metric divides `u·v` by one of the bounds in the chain
//!
//! ```text
//! |u·v| <= |u↑·v↕| <= ‖u‖‖v‖ <= (‖u‖² + ‖v‖²) / 2
//! ```
//!
//! | Metric | Denominator | Saturates (|score| = 1) when |
//! |--------|-------------|------------------------------|
//! | [`recos`] | `|u↑·v↕|` | `u`, `v` similarly (or oppositely) ordered |
//! | [`cosine`] | `‖u‖‖v‖` | `v = k·u` |
//! | [`decos`] | `(‖u‖² + ‖v‖²) / 2` | `v = ±u` |
//! | [`tanimoto`] | `‖u‖² + ‖v‖² − u·v` | `v = u` |
//!
//! `v↕` is `v` sorted ascending when `u·v > 0` and descending when `u·v < 0`.
//! Orthogonal inputs (`u·v = 0`) score exactly 0 under every metric.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::SimilarityError;
use crate::vector::{sort_into, DenseVector, OrderedViews, SortScratch};

/// Substituted for an exactly-zero recos denominator.
pub const RECOS_EPSILON: f64 = 1e-6;

/// A similarity value clipped to `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct SimilarityScore(f64);

impl SimilarityScore {
    pub const ZERO: Self = Self(0.0);

    /// Clamps `raw` into `[-1, 1]`, absorbing rounding overshoot.
    pub fn clipped(raw: f64) -> Self {
        Self(raw.clamp(-1.0, 1.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl From<SimilarityScore> for f64 {
    fn from(s: SimilarityScore) -> f64 {
        s.0
    }
}

impl fmt::Display for SimilarityScore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MetricKind {
    Recos,
    Cos,
    Decos,
    Tanimoto,
}

impl MetricKind {
    pub const ALL: [MetricKind; 4] = [Self::Recos, Self::Cos, Self::Decos, Self::Tanimoto];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Recos => "recos",
            Self::Cos => "cos",
            Self::Decos => "decos",
            Self::Tanimoto => "tanimoto",
        }
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MetricKind {
    type Err = SimilarityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "recos" => Ok(Self::Recos),
            "cos" | "cosine" => Ok(Self::Cos),
            "decos" => Ok(Self::Decos),
            "tanimoto" | "tan" => Ok(Self::Tanimoto),
            _ => Err(SimilarityError::UnknownMetric(s.to_string())),
        }
    }
}

// Four independent accumulators let the compiler keep several FMA chains in
// flight. The summation order is fixed, so results are deterministic.
#[inline]
fn dot_slices(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = [0.0f64; 4];
    let ca = a.chunks_exact(4);
    let cb = b.chunks_exact(4);
    let (ra, rb) = (ca.remainder(), cb.remainder());
    for (x, y) in ca.zip(cb) {
        acc[0] += x[0] * y[0];
        acc[1] += x[1] * y[1];
        acc[2] += x[2] * y[2];
        acc[3] += x[3] * y[3];
    }
    let mut tail = 0.0;
    for (x, y) in ra.iter().zip(rb) {
        tail += x * y;
    }
    (acc[0] + acc[1]) + (acc[2] + acc[3]) + tail
}

/// `Σ a[i] · b[d-1-i]`: the dot product of `a` with `b` reversed.
#[inline]
fn dot_reversed(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = [0.0f64; 4];
    let ca = a.chunks_exact(4);
    let cb = b.rchunks_exact(4);
    let (ra, rb) = (ca.remainder(), cb.remainder());
    for (x, y) in ca.zip(cb) {
        acc[0] += x[0] * y[3];
        acc[1] += x[1] * y[2];
        acc[2] += x[2] * y[1];
        acc[3] += x[3] * y[0];
    }
    let mut tail = 0.0;
    for (x, y) in ra.iter().zip(rb.iter().rev()) {
        tail += x * y;
    }
    (acc[0] + acc[1]) + (acc[2] + acc[3]) + tail
}

pub fn dot(u: &DenseVector, v: &DenseVector) -> Result<f64, SimilarityError> {
    u.ensure_same_dim(v)?;
    Ok(dot_slices(u, v))
}

pub fn norm(u: &DenseVector) -> f64 {
    dot_slices(u, u).sqrt()
}

pub(crate) fn squared_norm(u: &[f64]) -> f64 {
    dot_slices(u, u)
}

/// `|u↑ · v↑|` if `dot_sign > 0`, otherwise `|u↑ · v↓|`, both from ascending sorts.
pub(crate) fn sorted_bound(u_asc: &[f64], v_asc: &[f64], dot_sign: f64) -> f64 {
    if dot_sign > 0.0 {
        dot_slices(u_asc, v_asc).abs()
    } else {
        dot_reversed(u_asc, v_asc).abs()
    }
}

fn recos_from_sorted(numerator: f64, u_asc: &[f64], v_asc: &[f64]) -> SimilarityScore {
    if numerator == 0.0 {
        return SimilarityScore::ZERO;
    }
    let mut denominator = sorted_bound(u_asc, v_asc, numerator);
    if denominator == 0.0 {
        denominator = RECOS_EPSILON;
    }
    SimilarityScore::clipped(numerator / denominator)
}

/// Rearrangement-bound cosine: `u·v / |u↑·v↕|`.
///
/// Equals 1 whenever `u` and `v` induce the same component ordering and
/// `u·v > 0`, regardless of how nonlinear the relationship is.
pub fn recos(u: &DenseVector, v: &DenseVector) -> Result<SimilarityScore, SimilarityError> {
    u.ensure_same_dim(v)?;
    let numerator = dot_slices(u, v);
    if numerator == 0.0 {
        return Ok(SimilarityScore::ZERO);
    }
    SCRATCH.with(|cell| {
        let (scratch, u_asc, v_asc) = &mut *cell.borrow_mut();
        sort_into(u, u_asc, scratch);
        sort_into(v, v_asc, scratch);
        Ok(recos_from_sorted(numerator, u_asc, v_asc))
    })
}

thread_local! {
    // sort buffers reused across calls on the same thread
    static SCRATCH: RefCell<(SortScratch, Vec<f64>, Vec<f64>)> = RefCell::default();
}

/// [`recos`] over precomputed views; no sorting happens here.
pub fn recos_views(u: &OrderedViews, v: &OrderedViews) -> Result<SimilarityScore, SimilarityError> {
    u.original().ensure_same_dim(v.original())?;
    let numerator = dot_slices(u.original(), v.original());
    Ok(recos_from_sorted(numerator, u.ascending(), v.ascending()))
}

pub fn cosine(u: &DenseVector, v: &DenseVector) -> Result<SimilarityScore, SimilarityError> {
    u.ensure_same_dim(v)?;
    let nu = norm(u);
    let nv = norm(v);
    if nu == 0.0 || nv == 0.0 {
        return Err(SimilarityError::ZeroVector { metric: "cos" });
    }
    let numerator = dot_slices(u, v);
    if numerator == 0.0 {
        return Ok(SimilarityScore::ZERO);
    }
    Ok(SimilarityScore::clipped(numerator / (nu * nv)))
}

/// Dot product over the arithmetic mean of the squared norms.
pub fn decos(u: &DenseVector, v: &DenseVector) -> Result<SimilarityScore, SimilarityError> {
    u.ensure_same_dim(v)?;
    let denominator = 0.5 * (squared_norm(u) + squared_norm(v));
    if denominator == 0.0 {
        return Err(SimilarityError::ZeroVector { metric: "decos" });
    }
    let numerator = dot_slices(u, v);
    if numerator == 0.0 {
        return Ok(SimilarityScore::ZERO);
    }
    Ok(SimilarityScore::clipped(numerator / denominator))
}

/// Tanimoto coefficient `u·v / (‖u‖² + ‖v‖² − u·v)`. Not clipped.
pub fn tanimoto(u: &DenseVector, v: &DenseVector) -> Result<f64, SimilarityError> {
    u.ensure_same_dim(v)?;
    let numerator = dot_slices(u, v);
    let denominator = squared_norm(u) + squared_norm(v) - numerator;
    if denominator == 0.0 {
        return Err(SimilarityError::ZeroDenominator { metric: "tanimoto" });
    }
    if numerator == 0.0 {
        return Ok(0.0);
    }
    Ok(numerator / denominator)
}

/// Maps a Tanimoto value in `[0, 1]` to the matching decos value, `2t / (1 + t)`.
pub fn decos_from_tanimoto(t: f64) -> Result<f64, SimilarityError> {
    if !(0.0..=1.0).contains(&t) {
        return Err(SimilarityError::TanimotoOutOfDomain(t));
    }
    Ok(2.0 * t / (1.0 + t))
}

pub fn similarity(kind: MetricKind, u: &DenseVector, v: &DenseVector) -> Result<f64, SimilarityError> {
    match kind {
        MetricKind::Recos => recos(u, v).map(f64::from),
        MetricKind::Cos => cosine(u, v).map(f64::from),
        MetricKind::Decos => decos(u, v).map(f64::from),
        MetricKind::Tanimoto => tanimoto(u, v),
    }
}

// Sort indices by u ascending, breaking ties by v in `tie` order, then check
// that v is monotone in the requested direction along that order. Any pair
// with u_i < u_j and v out of order shows up as an adjacent violation.
fn ordered_along_u(u: &[f64], v: &[f64], ascending_v: bool) -> bool {
    let mut idx: Vec<usize> = (0..u.len()).collect();
    idx.sort_unstable_by(|&i, &j| {
        let by_v = v[i].total_cmp(&v[j]);
        u[i].total_cmp(&u[j])
            .then(if ascending_v { by_v } else { by_v.reverse() })
    });
    idx.windows(2).all(|w| {
        let ord = v[w[0]].partial_cmp(&v[w[1]]).unwrap_or(Ordering::Equal);
        if ascending_v {
            ord != Ordering::Greater
        } else {
            ord != Ordering::Less
        }
    })
}

/// True iff `(u_i − u_j)(v_i − v_j) >= 0` for every index pair.
pub fn is_similarly_ordered(u: &DenseVector, v: &DenseVector) -> Result<bool, SimilarityError> {
    u.ensure_same_dim(v)?;
    Ok(ordered_along_u(u, v, true))
}

/// True iff `(u_i − u_j)(v_i − v_j) <= 0` for every index pair.
pub fn is_oppositely_ordered(u: &DenseVector, v: &DenseVector) -> Result<bool, SimilarityError> {
    u.ensure_same_dim(v)?;
    Ok(ordered_along_u(u, v, false))
}
