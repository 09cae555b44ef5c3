//! Dot-product similarity metrics normalized by successively looser bounds,
//! plus the rank-correlation and paired-test machinery used to evaluate them.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`metrics`] | `recos`, `cosine`, `decos`, `tanimoto`, ordering predicates |
//! | [`bounds`] | the `|u·v| <= |u↑·v↕| <= ‖u‖‖v‖ <= (‖u‖²+‖v‖²)/2` chain and a permutation oracle |
//! | [`rank`] | average ranks and Spearman's ρ |
//! | [`stats`] | descriptive statistics, Wilcoxon, sign and t tests, effect sizes, BH, LODO |
//! | [`io`] | pair CSV, results CSV, vector literals, bundled fixtures |
//! | [`harness`] | benchmark evaluation and method-vs-method comparison |
//!
//! ```
//! use recos_core::{cosine, recos, DenseVector};
//!
//! let u = DenseVector::new(vec![1.0, 5.5, 2.0, 4.0]).unwrap();
//! let v = DenseVector::new(vec![1.0, 8.5, 2.0, 4.0]).unwrap();
//!
//! // same ordering of components, so recos saturates while cosine does not
//! assert!((recos(&u, &v).unwrap().value() - 1.0).abs() < 1e-12);
//! assert!(cosine(&u, &v).unwrap().value() < 0.99);
//! ```

pub mod bounds;
pub mod error;
pub mod harness;
pub mod io;
pub mod metrics;
pub mod rank;
pub mod stats;
pub mod vector;

pub use bounds::{bound_chain, brute_force_rearrangement, rearrangement_bound, BoundChain};
pub use error::{DataError, HarnessError, SimilarityError, StatsError};
pub use harness::{compare, compare_with, evaluate, ComparisonReport, EvalReport};
pub use io::{parse_vector, Centi, PairDataset, PairRecord, ResultsTable};
pub use metrics::{
    cosine, decos, decos_from_tanimoto, dot, is_oppositely_ordered, is_similarly_ordered, norm,
    recos, recos_views, similarity, tanimoto, MetricKind, SimilarityScore,
};
pub use rank::{average_ranks, spearman_rho, RankVector};
pub use vector::{ordered_views, DenseVector, OrderedViews};
