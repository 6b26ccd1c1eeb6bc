//! Statistics for high-dimensional discrete data through low-dimensional
//! projections.
//!
//! Distributions with finite support can be pinned down by a small number of
//! projections: a measure with at most `k` atoms is determined by its
//! projections onto `k + 1` subspaces whose orthocomplements intersect
//! pairwise only at the origin, and when the support is known in advance
//! (e.g. multivariate Bernoulli data on `{0,1}^d`) a single well-chosen
//! direction suffices. This crate turns those facts into working tools:
//!
//! - [`measures`] — finitely supported probability measures and the
//!   distances between them (total variation, 1-D Wasserstein, Mallows-L2
//!   between histograms, Kolmogorov, Cramér–von Mises);
//! - [`projections`] — subspaces, pushforwards of measures, families of
//!   subspaces with pairwise trivially intersecting orthocomplements, good
//!   single directions, and the projection bound on total variation;
//! - [`classify`] — projection-based classifiers (max-over-projections
//!   rule, add-one-point total-variation rule, plug-in rule);
//! - [`tomo`] — X-ray transforms of binary images, projected histograms,
//!   phantom generation, and a per-direction k-NN majority-vote classifier;
//! - [`hypotest`] — projected Kolmogorov–Smirnov tests with Monte Carlo
//!   calibration, Binomial/Poisson-Binomial pmfs, the coordinate-sum
//!   structure test, and the rare-distribution test;
//! - [`datagen`] — generators for multivariate Bernoulli data (independent,
//!   equicorrelated, odds-ratio joints), Beta parameter draws, and uniform
//!   simplex sampling;
//! - [`experiments`] — seeded desk-scale simulation studies built from the
//!   pieces above.

pub mod classify;
pub mod datagen;
mod error;
pub mod experiments;
pub mod hypotest;
pub mod measures;
pub mod projections;
pub mod tomo;

pub use classify::{DistanceKind, FullModel, RpClassifier};
pub use datagen::JointPmf;
pub use error::Error;
pub use hypotest::{PoissonBinomialSpec, TestReport};
pub use measures::{DiscreteMeasure, Histogram, Point, Sample};
pub use projections::{Direction, HeppesFamily, Subspace};
pub use tomo::{PhantomConfig, PointSet, TomoModel};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Derives an independent child seed from a root seed and an index.
///
/// Replicate `r` of a seeded experiment uses `derive_seed(root, r)` so that
/// replicates can run in any order (or in parallel) and still produce
/// identical streams. The hash is SplitMix64 applied to `root ^ splitmix64(index)`.
pub fn derive_seed(root: u64, index: u64) -> u64 {
    splitmix64(root ^ splitmix64(index))
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
