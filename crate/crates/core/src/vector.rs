//! Dense real vectors and their sorted views.

use std::fmt;
use std::ops::Deref;

use crate::error::SimilarityError;

/// A non-empty vector of finite `f64` components.
///
/// Validation happens once, at construction. Every metric in this crate takes
/// `&DenseVector` and can therefore skip NaN/infinity checks in its kernel.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseVector {
    components: Vec<f64>,
}

impl DenseVector {
    pub fn new(components: Vec<f64>) -> Result<Self, SimilarityError> {
        if components.is_empty() {
            return Err(SimilarityError::EmptyVector);
        }
        if let Some((index, &value)) = components.iter().enumerate().find(|(_, x)| !x.is_finite()) {
            return Err(SimilarityError::NonFinite { index, value });
        }
        Ok(Self { components })
    }

    /// Widens single-precision storage; all arithmetic downstream is `f64`.
    pub fn from_f32(components: &[f32]) -> Result<Self, SimilarityError> {
        Self::new(components.iter().map(|&x| f64::from(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.components
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|&x| x == 0.0)
    }

    /// Multiplies every component by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self, SimilarityError> {
        Self::new(self.components.iter().map(|&x| x * factor).collect())
    }

    /// Component-wise negation. Always valid.
    pub fn negated(&self) -> Self {
        Self {
            components: self.components.iter().map(|&x| -x).collect(),
        }
    }

    /// Returns `self / ‖self‖`, or `None` for the zero vector.
    pub fn normalized(&self) -> Option<Self> {
        let n = crate::metrics::norm(self);
        if n == 0.0 {
            return None;
        }
        Some(Self {
            components: self.components.iter().map(|&x| x / n).collect(),
        })
    }

    pub(crate) fn ensure_same_dim(&self, other: &Self) -> Result<(), SimilarityError> {
        if self.dim() != other.dim() {
            return Err(SimilarityError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }
}

impl Deref for DenseVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.components
    }
}

impl TryFrom<Vec<f64>> for DenseVector {
    type Error = SimilarityError;

    fn try_from(value: Vec<f64>) -> Result<Self, Self::Error> {
        Self::new(value)
    }
}

impl TryFrom<&[f64]> for DenseVector {
    type Error = SimilarityError;

    fn try_from(value: &[f64]) -> Result<Self, Self::Error> {
        Self::new(value.to_vec())
    }
}

impl fmt::Display for DenseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Below this length a plain comparison sort wins.
const BUCKET_MIN_LEN: usize = 64;
/// Crowded buckets longer than this go to pdqsort instead of insertion sort.
const SMALL_RUN: usize = 16;
const BUCKETS_PER_ITEM: usize = 4;
const ROUNDING_BIAS: f64 = 4_503_599_627_370_496.0;

/// Sorts a copy of `xs` into non-decreasing order.
pub(crate) fn sorted_ascending(xs: &[f64]) -> Vec<f64> {
    let mut out = Vec::new();
    sort_into(xs, &mut out, &mut SortScratch::default());
    out
}

/// Four independent lanes keep the compare chains short.
fn min_max(xs: &[f64]) -> (f64, f64) {
    let mut lo = [xs[0]; 4];
    let mut hi = [xs[0]; 4];
    let chunks = xs.chunks_exact(4);
    for &x in chunks.remainder() {
        lo[0] = if x < lo[0] { x } else { lo[0] };
        hi[0] = if x > hi[0] { x } else { hi[0] };
    }
    for c in chunks {
        for k in 0..4 {
            lo[k] = if c[k] < lo[k] { c[k] } else { lo[k] };
            hi[k] = if c[k] > hi[k] { c[k] } else { hi[k] };
        }
    }
    let lo = lo.into_iter().fold(lo[0], |a, b| if b < a { b } else { a });
    let hi = hi.into_iter().fold(hi[0], |a, b| if b > a { b } else { a });
    (lo, hi)
}

/// Reusable buffers for [`sort_into`].
#[derive(Debug, Default)]
pub(crate) struct SortScratch {
    starts: Vec<u32>,
    ids: Vec<u32>,
    crowded: Vec<u32>,
}

/// Writes `xs` in non-decreasing order into `out`, replacing its contents.
///
/// Long inputs are scattered into equal-width value buckets, several per
/// element, so most buckets hold at most one value. Bucketing is monotone in
/// value; only buckets holding two or more values are sorted afterwards, so the
/// cost is `O(d)` on smooth data and `O(d log d)` when values pile up.
/// Inputs must be finite.
pub(crate) fn sort_into(xs: &[f64], out: &mut Vec<f64>, scratch: &mut SortScratch) {
    let n = xs.len();
    out.clear();
    if n < BUCKET_MIN_LEN {
        out.extend_from_slice(xs);
        out.sort_unstable_by(f64::total_cmp);
        return;
    }
    let (lo, hi) = min_max(xs);
    let nb = n * BUCKETS_PER_ITEM;
    let scale = (nb - 1) as f64 / (hi - lo);
    if !scale.is_finite() || nb > u32::MAX as usize {
        // constant input, a range too wide to represent, or too many buckets
        out.extend_from_slice(xs);
        out.sort_unstable_by(f64::total_cmp);
        return;
    }

    // counts and offsets stay below `nb`, so u32 arithmetic cannot wrap
    let SortScratch { starts, ids, crowded } = scratch;
    starts.clear();
    starts.resize(nb, 0);
    ids.clear();
    ids.resize(n, 0);
    if crowded.len() < n {
        crowded.resize(n, 0);
    }
    let top = (nb - 1) as u32;
    // a bucket becomes crowded when its count goes from one to two; the
    // append is branch-free, so every element writes and only those advance
    let mut n_crowded = 0;
    for (id, &x) in ids.iter_mut().zip(xs) {
        // adding 2^52 rounds to the nearest integer and leaves it in the low
        // mantissa bits; rounding is monotone, which is all bucketing needs
        let b = (((x - lo) * scale + ROUNDING_BIAS).to_bits() as u32).min(top);
        *id = b;
        let count = &mut starts[b as usize];
        crowded[n_crowded] = b;
        n_crowded += usize::from(*count == 1);
        *count = count.wrapping_add(1);
    }
    // exclusive prefix sum, unrolled by hand
    let mut sum = 0u32;
    let mut quads = starts.chunks_exact_mut(4);
    for q in &mut quads {
        let (a, b, c, d) = (q[0], q[1], q[2], q[3]);
        q[0] = sum;
        q[1] = sum.wrapping_add(a);
        q[2] = q[1].wrapping_add(b);
        q[3] = q[2].wrapping_add(c);
        sum = q[3].wrapping_add(d);
    }
    for c in quads.into_remainder() {
        (*c, sum) = (sum, sum.wrapping_add(*c));
    }
    out.resize(n, 0.0);
    for (&x, &b) in xs.iter().zip(ids.iter()) {
        let slot = &mut starts[b as usize];
        out[*slot as usize] = x;
        *slot = slot.wrapping_add(1);
    }
    // each slot now marks the end of its bucket and the start of the next
    for &b in &crowded[..n_crowded] {
        let b = b as usize;
        let start = if b == 0 { 0 } else { starts[b - 1] as usize };
        let run = &mut out[start..starts[b] as usize];
        if run.len() > SMALL_RUN {
            run.sort_unstable_by(f64::total_cmp);
            continue;
        }
        for i in 1..run.len() {
            let x = run[i];
            let mut j = i;
            while j > 0 && run[j - 1] > x {
                run[j] = run[j - 1];
                j -= 1;
            }
            run[j] = x;
        }
    }
}

/// A vector together with its ascending and descending rearrangements.
///
/// Building one costs a single `O(d log d)` sort. When the same vector is
/// scored against many partners, build its views once and use
/// [`crate::metrics::recos_views`] to skip the per-pair sort.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderedViews {
    original: DenseVector,
    ascending: DenseVector,
    descending: DenseVector,
}

impl OrderedViews {
    pub fn new(original: DenseVector) -> Self {
        let ascending = sorted_ascending(&original);
        let descending: Vec<f64> = ascending.iter().rev().copied().collect();
        Self {
            original,
            // permutations of a valid vector are valid
            ascending: DenseVector { components: ascending },
            descending: DenseVector { components: descending },
        }
    }

    pub fn original(&self) -> &DenseVector {
        &self.original
    }

    pub fn ascending(&self) -> &DenseVector {
        &self.ascending
    }

    pub fn descending(&self) -> &DenseVector {
        &self.descending
    }

    pub fn dim(&self) -> usize {
        self.original.dim()
    }
}

impl From<DenseVector> for OrderedViews {
    fn from(v: DenseVector) -> Self {
        Self::new(v)
    }
}

/// Computes the ascending and descending rearrangements of `u`.
pub fn ordered_views(u: &DenseVector) -> OrderedViews {
    OrderedViews::new(u.clone())
}
