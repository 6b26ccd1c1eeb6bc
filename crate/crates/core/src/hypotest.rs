//! Hypothesis tests for high-dimensional binary data.
//!
//! Projected tests reduce a d-dimensional problem to one dimension: project
//! the data onto a direction that separates the (known) support, then apply
//! a Kolmogorov–Smirnov test there. Critical values come from Monte Carlo
//! calibration under the null ([`one_sample_projected_ks`],
//! [`multi_projection_ks_test`]) or from permutation resampling
//! ([`two_sample_projected_ks`]).
//!
//! The coordinate-sum tests need no projections at all. Drawing a joint
//! distribution on `{0,1}^d` uniformly from the probability simplex, the law
//! of the coordinate sum `S_d` is close to Binomial(d, 1/2) except on a set
//! of exponentially small measure ([`chevallier_bound`]). Distributions in
//! that exceptional set are "rare" — structured laws such as heterogeneous
//! Poisson-Binomials. [`sum_structure_test`] tests a single observed sum
//! against the central Binomial interval; [`rare_distribution_test`] uses
//! `N` i.i.d. vectors and a Hoeffding-based critical value
//! ([`critical_value_a`]).

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::derive_seed;
use crate::measures::{empirical_measure, ks_sorted, DiscreteMeasure, Point, Sample, MERGE_TOL};
use crate::projections::{is_good_direction, Direction};
use crate::{Error, Result};

/// Minimum Monte Carlo calibration size accepted by the tests.
pub const MIN_CALIBRATION: usize = 100;

/// Outcome of a calibrated test.
#[derive(Clone, Debug)]
pub struct TestReport {
    pub statistic: f64,
    pub critical_value: f64,
    /// Monte Carlo p-value `(1 + #{null ≥ observed}) / (B + 1)`, or an exact
    /// tail probability for the deterministic tests.
    pub p_value: f64,
    /// True iff `statistic > critical_value`.
    pub reject: bool,
    pub alpha: f64,
    /// Number of Monte Carlo / permutation replicates (0 for exact tests).
    pub calibration_size: usize,
    pub seed: u64,
    /// Human-readable diagnostics (warnings, intervals, rejection side).
    pub notes: Vec<String>,
}

/// Success probabilities of a sum of independent, non-identical Bernoulli
/// variables.
#[derive(Clone, Debug)]
pub struct PoissonBinomialSpec {
    q: Vec<f64>,
}

impl PoissonBinomialSpec {
    pub fn new(q: Vec<f64>) -> Result<Self> {
        if q.is_empty() {
            return Err(Error::EmptyInput("no success probabilities".into()));
        }
        if q.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return Err(Error::InvalidParameter(
                "success probabilities must lie in [0, 1]".into(),
            ));
        }
        Ok(PoissonBinomialSpec { q })
    }

    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }

    pub fn probs(&self) -> &[f64] {
        &self.q
    }
}

/// `ln C(d, k)` via a compensated sum of `ln((d-k+i)/i)`; accurate enough
/// that Binomial pmf rows sum to 1 within 1e-12 up to `d = 10^4`.
fn ln_choose(d: usize, k: usize) -> f64 {
    let k = k.min(d - k);
    let mut sum = 0.0;
    let mut comp = 0.0;
    for i in 1..=k {
        let term = (((d - k + i) as f64) / (i as f64)).ln();
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

/// Binomial pmf `C(d,k) p^k (1-p)^(d-k)`, computed in log space.
pub fn binomial_pmf(d: usize, p: f64, k: usize) -> Result<f64> {
    if k > d {
        return Err(Error::InvalidParameter(format!("k = {k} out of 0..={d}")));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("p = {p} not in [0, 1]")));
    }
    if p == 0.0 {
        return Ok(if k == 0 { 1.0 } else { 0.0 });
    }
    if p == 1.0 {
        return Ok(if k == d { 1.0 } else { 0.0 });
    }
    let log_pmf = ln_choose(d, k) + k as f64 * p.ln() + (d - k) as f64 * (-p).ln_1p();
    Ok(log_pmf.exp())
}

/// The full Binomial(d, p) pmf row over `k = 0..=d`.
pub fn binomial_pmf_row(d: usize, p: f64) -> Result<Vec<f64>> {
    (0..=d).map(|k| binomial_pmf(d, p, k)).collect()
}

/// Poisson-Binomial pmf over `{0, …, d}` by iterative convolution, O(d^2).
///
/// Reduces to `binomial_pmf` when all probabilities are equal.
pub fn poisson_binomial_pmf(spec: &PoissonBinomialSpec) -> Vec<f64> {
    let mut pmf = vec![1.0];
    for &qi in spec.probs() {
        let mut next = vec![0.0; pmf.len() + 1];
        for (k, &mass) in pmf.iter().enumerate() {
            next[k] += mass * (1.0 - qi);
            next[k + 1] += mass * qi;
        }
        pmf = next;
    }
    pmf
}

/// Lower bound on the simplex measure of joint laws whose coordinate-sum
/// pmf stays uniformly within `epsilon` of Binomial(d, 1/2):
/// `1 − 2 √d / (ε² 2^(d−1))`. May be negative (vacuous) for small `d`.
pub fn chevallier_bound(d: usize, epsilon: f64) -> f64 {
    assert!(d >= 1 && epsilon > 0.0);
    1.0 - 2.0 * (d as f64).sqrt() * ((d as f64 - 1.0) * std::f64::consts::LN_2).exp().recip()
        / (epsilon * epsilon)
}

/// Variant of [`chevallier_bound`] uniform over all index subsets:
/// `1 − 2 d^(5/2) / (ε² 2^(d−1))`. Only the formula is evaluated; no
/// sup-over-subsets experiment is run.
pub fn chevallier_bound_subsets(d: usize, epsilon: f64) -> f64 {
    assert!(d >= 1 && epsilon > 0.0);
    1.0 - 2.0 * (d as f64).powf(2.5) * ((d as f64 - 1.0) * std::f64::consts::LN_2).exp().recip()
        / (epsilon * epsilon)
}

/// Whether the simplex-measure bound reaches `1 − α/2` at band `epsilon`,
/// i.e. `2 √d / (ε² 2^(d−1)) ≤ α/2`.
pub fn sum_structure_satisfiable(d: usize, alpha: f64, epsilon: f64) -> bool {
    assert!(d >= 1 && epsilon > 0.0 && alpha > 0.0);
    chevallier_bound(d, epsilon) >= 1.0 - alpha / 2.0
}

/// Smallest band `epsilon` satisfying the bound at level `alpha`:
/// `ε_min = 2 d^(1/4) / sqrt(α 2^(d−1))` (computed in logs).
fn epsilon_min(d: usize, alpha: f64) -> f64 {
    let ln_eps = std::f64::consts::LN_2 + 0.25 * (d as f64).ln()
        - 0.5 * (alpha.ln() + (d as f64 - 1.0) * std::f64::consts::LN_2);
    ln_eps.exp()
}

/// Tests a single observed coordinate sum against the central
/// Binomial(d, 1/2) interval.
///
/// The null is "the joint law is not rare": its coordinate-sum pmf lies
/// within some valid band `epsilon` of Binomial(d, 1/2), which holds with
/// simplex measure at least `1 − α/2`. Rejects when `S_obs ∉ [l, r]`, where
/// `[l, r]` is the symmetric equal-tail interval (`l = d − r`) with at most
/// `α/2` Binomial mass outside. The report records the rejection side and
/// the band `epsilon` used.
pub fn sum_structure_test(s_obs: usize, d: usize, alpha: f64) -> Result<TestReport> {
    if s_obs > d {
        return Err(Error::InvalidParameter(format!(
            "observed sum {s_obs} exceeds dimension {d}"
        )));
    }
    if !(0.0 < alpha && alpha < 1.0) {
        return Err(Error::InvalidParameter(format!("alpha = {alpha}")));
    }
    let eps = epsilon_min(d, alpha);
    if eps > 1.0 {
        return Err(Error::Unsatisfiable(format!(
            "no band epsilon <= 1 reaches level {alpha} at d = {d} (needs epsilon >= {eps:.3e})"
        )));
    }

    let pmf = binomial_pmf_row(d, 0.5)?;
    // Tail mass accumulated from the edges inward for accuracy.
    let mut upper_tail = vec![0.0; d + 2]; // upper_tail[k] = P(S >= k)
    for k in (0..=d).rev() {
        upper_tail[k] = upper_tail[k + 1] + pmf[k];
    }
    let mut lower_tail = vec![0.0; d + 2]; // lower_tail[k] = P(S <= k), index shifted by 1
    for k in 0..=d {
        lower_tail[k + 1] = lower_tail[k] + pmf[k];
    }
    let center = d.div_ceil(2);
    let mut r = center;
    while r <= d {
        let l = d - r;
        let outside = upper_tail[r + 1] + if l > 0 { lower_tail[l] } else { 0.0 };
        if outside <= alpha / 2.0 {
            break;
        }
        r += 1;
    }
    let r = r.min(d);
    let l = d - r;

    let half = d as f64 / 2.0;
    let statistic = (s_obs as f64 - half).abs();
    let critical_value = r as f64 - half;
    let reject = s_obs < l || s_obs > r;
    // Exact two-sided tail: P(|S - d/2| >= |s_obs - d/2|).
    let lo_end = (half - statistic).floor();
    let hi_start = (half + statistic).ceil() as usize;
    let p_value = (upper_tail[hi_start.min(d + 1)]
        + if lo_end >= 0.0 {
            lower_tail[(lo_end as usize + 1).min(d + 1)]
        } else {
            0.0
        })
    .min(1.0);

    let side = if !reject {
        "none"
    } else if s_obs > r {
        "right"
    } else {
        "left"
    };
    Ok(TestReport {
        statistic,
        critical_value,
        p_value,
        reject,
        alpha,
        calibration_size: 0,
        seed: 0,
        notes: vec![
            format!("interval [{l}, {r}] with Binomial(d,1/2) mass outside <= alpha/2"),
            format!("rejection side: {side}"),
            format!("epsilon band: {eps:.6e}"),
        ],
    })
}

/// Critical value for the rare-distribution test:
/// `a = max( sqrt(−ln(α/2) / (2N)), d^(1/4) / (2^((d−5)/2) √α) )`.
pub fn critical_value_a(d: usize, n: usize, alpha: f64) -> f64 {
    let (t1, t2) = critical_value_a_terms(d, n, alpha);
    t1.max(t2)
}

/// The two terms of [`critical_value_a`]: the Hoeffding sampling term and
/// the simplex-measure term.
pub fn critical_value_a_terms(d: usize, n: usize, alpha: f64) -> (f64, f64) {
    assert!(d >= 1 && n >= 1 && 0.0 < alpha && alpha < 1.0);
    let t1 = (-(alpha / 2.0).ln() / (2.0 * n as f64)).sqrt();
    let t2 = (d as f64).powf(0.25) / (((d as f64 - 5.0) / 2.0).exp2() * alpha.sqrt());
    (t1, t2)
}

/// Per-coordinate-sum decisions plus the union-bound aggregate for the
/// rare-distribution test.
#[derive(Clone, Debug)]
pub struct RareDistributionReport {
    /// One report per `k = 0..=d` comparing `|P_N(k) − B(d,1/2,k)|` to `a`.
    pub per_k: Vec<TestReport>,
    /// Aggregate decision: `max_k |P_N(k) − B(d,1/2,k)| > a'`, with the
    /// Hoeffding term of `a'` adjusted by the union bound
    /// (`α/2 → α/(2(d+1))`).
    pub overall: TestReport,
    pub a: f64,
    pub a_union: f64,
}

/// Tests whether `N` observed binary vectors have a "rare" (structured)
/// joint law, by comparing the empirical pmf of the coordinate sums with
/// Binomial(d, 1/2).
pub fn rare_distribution_test(samples: &Sample, alpha: f64) -> Result<RareDistributionReport> {
    if !(0.0 < alpha && alpha < 1.0) {
        return Err(Error::InvalidParameter(format!("alpha = {alpha}")));
    }
    let d = samples.dim();
    let n = samples.len();
    let mut counts = vec![0usize; d + 1];
    for (i, row) in samples.rows().iter().enumerate() {
        let mut s = 0usize;
        for (j, &c) in row.coords().iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            if c == 1.0 {
                s += 1;
            } else {
                return Err(Error::InvalidParameter(format!(
                    "non-binary entry {c} at row {i}, column {j}"
                )));
            }
        }
        counts[s] += 1;
    }
    let p_n: Vec<f64> = counts.iter().map(|&c| c as f64 / n as f64).collect();
    let binom = binomial_pmf_row(d, 0.5)?;

    let a = critical_value_a(d, n, alpha);
    let (_, t2) = critical_value_a_terms(d, n, alpha);
    let t1_union = (-(alpha / (2.0 * (d as f64 + 1.0))).ln() / (2.0 * n as f64)).sqrt();
    let a_union = t1_union.max(t2);

    let conservative_p = |t: f64| -> f64 {
        if t <= 0.0 {
            return 1.0;
        }
        let hoeffding = 2.0 * (-2.0 * n as f64 * t * t).exp();
        let simplex = 8.0 * (d as f64).sqrt() / (t * t * ((d as f64 - 1.0).exp2()));
        (hoeffding + simplex).min(1.0)
    };

    let per_k: Vec<TestReport> = (0..=d)
        .map(|k| {
            let t = (p_n[k] - binom[k]).abs();
            TestReport {
                statistic: t,
                critical_value: a,
                p_value: conservative_p(t),
                reject: t > a,
                alpha,
                calibration_size: 0,
                seed: 0,
                notes: vec![format!(
                    "k = {k}: empirical {:.6e} vs binomial {:.6e}",
                    p_n[k], binom[k]
                )],
            }
        })
        .collect();

    let (k_max, t_max) = per_k
        .iter()
        .enumerate()
        .map(|(k, r)| (k, r.statistic))
        .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
        .unwrap();
    let (t1, _) = critical_value_a_terms(d, n, alpha);
    let overall = TestReport {
        statistic: t_max,
        critical_value: a_union,
        p_value: conservative_p(t_max),
        reject: t_max > a_union,
        alpha,
        calibration_size: 0,
        seed: 0,
        notes: vec![
            format!("largest deviation at k = {k_max}"),
            format!(
                "critical value terms: hoeffding {t1:.6}, simplex {t2:.6}; union-adjusted hoeffding {t1_union:.6}"
            ),
        ],
    };

    Ok(RareDistributionReport {
        per_k,
        overall,
        a,
        a_union,
    })
}

/// Empirical `(1 − alpha)` quantile of `B` null statistics (higher
/// interpolation: sorted index `ceil((1 − alpha)(B − 1))`), deterministic
/// given the generator.
pub fn mc_null_calibration<T, R: Rng>(
    mut null_sampler: impl FnMut(&mut R) -> T,
    stat_fn: impl Fn(&T) -> f64,
    b: usize,
    alpha: f64,
    rng: &mut R,
) -> Result<f64> {
    if b < MIN_CALIBRATION {
        return Err(Error::CalibrationTooSmall {
            got: b,
            min: MIN_CALIBRATION,
        });
    }
    let stats: Vec<f64> = (0..b).map(|_| stat_fn(&null_sampler(rng))).collect();
    Ok(empirical_quantile_higher(stats, 1.0 - alpha))
}

pub(crate) fn empirical_quantile_higher(mut xs: Vec<f64>, level: f64) -> f64 {
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = xs.len();
    let idx = ((level.clamp(0.0, 1.0) * (n - 1) as f64).ceil() as usize).min(n - 1);
    xs[idx]
}

/// Sorted `(value, weight)` atoms of the empirical distribution of values.
/// Weights are exact ratios `count / n`.
pub(crate) fn empirical_atoms_1d(values: &mut [f64]) -> Vec<(f64, f64)> {
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = values.len() as f64;
    let mut grouped: Vec<(f64, usize)> = Vec::new();
    for &v in values.iter() {
        match grouped.last_mut() {
            Some((x, c)) if (v - *x).abs() <= MERGE_TOL => *c += 1,
            _ => grouped.push((v, 1)),
        }
    }
    grouped
        .into_iter()
        .map(|(x, c)| (x, c as f64 / n))
        .collect()
}

fn validate_test_params(alpha: f64, b: usize) -> Result<()> {
    if !(0.0 < alpha && alpha <= 1.0) {
        return Err(Error::InvalidParameter(format!("alpha = {alpha}")));
    }
    if b < MIN_CALIBRATION {
        return Err(Error::CalibrationTooSmall {
            got: b,
            min: MIN_CALIBRATION,
        });
    }
    Ok(())
}

/// One-sample projected Kolmogorov–Smirnov test of `P = P0`.
///
/// The sample and the reference `P0` are projected onto the direction `H`;
/// the statistic is the Kolmogorov distance between the projected empirical
/// distribution and `P0_H`. The critical value is the `(1 − α)` quantile of
/// `B` Monte Carlo statistics computed from samples of the same size drawn
/// under `P0`; replicate `i` uses the derived seed `derive_seed(seed, i)`.
///
/// If `H` fails the support-separation check for `P0` a warning is recorded
/// in the report (the test then sees less than the full distance).
pub fn one_sample_projected_ks(
    sample: &Sample,
    p0: &DiscreteMeasure,
    h: &Direction,
    alpha: f64,
    b: usize,
    seed: u64,
) -> Result<TestReport> {
    validate_test_params(alpha, b)?;
    if sample.dim() != p0.dim() {
        return Err(Error::DimensionMismatch {
            expected: p0.dim(),
            got: sample.dim(),
        });
    }
    let mut notes = Vec::new();
    let support: Vec<Point> = p0.atoms().iter().map(|(p, _)| p.clone()).collect();
    if !is_good_direction(&h.as_subspace(), &support) {
        notes.push("warning: direction does not separate the support of P0".into());
    }

    let p0h = h.as_subspace().project_measure(p0)?;
    let p0h_atoms = p0h.atoms_1d();

    let mut observed_vals: Vec<f64> = sample.rows().iter().map(|x| h.project(x)).collect();
    let statistic = ks_sorted(&empirical_atoms_1d(&mut observed_vals), &p0h_atoms);

    let n = sample.len();
    let null_stats: Vec<f64> = (0..b)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, i as u64));
            let mut vals: Vec<f64> = p0
                .sample_n(n, &mut rng)
                .iter()
                .map(|x| h.project(x))
                .collect();
            ks_sorted(&empirical_atoms_1d(&mut vals), &p0h_atoms)
        })
        .collect();
    let p_value =
        (1 + null_stats.iter().filter(|s| **s >= statistic).count()) as f64 / (b + 1) as f64;
    let critical_value = empirical_quantile_higher(null_stats, 1.0 - alpha);

    Ok(TestReport {
        statistic,
        critical_value,
        p_value,
        reject: statistic > critical_value,
        alpha,
        calibration_size: b,
        seed,
        notes,
    })
}

/// Two-sample projected Kolmogorov–Smirnov test of `P = Q`.
///
/// Both samples are projected onto `H`; the statistic is the Kolmogorov
/// distance between the projected empirical distributions. Calibration is
/// by `B` permutation resamplings of the pooled projected values.
pub fn two_sample_projected_ks(
    sample_x: &Sample,
    sample_y: &Sample,
    h: &Direction,
    alpha: f64,
    b: usize,
    seed: u64,
) -> Result<TestReport> {
    validate_test_params(alpha, b)?;
    if sample_x.dim() != sample_y.dim() {
        return Err(Error::DimensionMismatch {
            expected: sample_x.dim(),
            got: sample_y.dim(),
        });
    }
    let xs: Vec<f64> = sample_x.rows().iter().map(|p| h.project(p)).collect();
    let ys: Vec<f64> = sample_y.rows().iter().map(|p| h.project(p)).collect();
    let n = xs.len();

    let ks_of = |xs: &[f64], ys: &[f64]| {
        let mut xv = xs.to_vec();
        let mut yv = ys.to_vec();
        ks_sorted(&empirical_atoms_1d(&mut xv), &empirical_atoms_1d(&mut yv))
    };
    let statistic = ks_of(&xs, &ys);

    let mut pooled = xs.clone();
    pooled.extend_from_slice(&ys);
    let null_stats: Vec<f64> = (0..b)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, i as u64));
            let mut perm = pooled.clone();
            perm.shuffle(&mut rng);
            ks_of(&perm[..n], &perm[n..])
        })
        .collect();
    let p_value =
        (1 + null_stats.iter().filter(|s| **s >= statistic).count()) as f64 / (b + 1) as f64;
    let critical_value = empirical_quantile_higher(null_stats, 1.0 - alpha);

    Ok(TestReport {
        statistic,
        critical_value,
        p_value,
        reject: statistic > critical_value,
        alpha,
        calibration_size: b,
        seed,
        notes: Vec::new(),
    })
}

/// Multi-projection statistic: the average over directions of the
/// one-sample projected KS statistic against `P0`.
pub fn multi_projection_ks_stat(
    sample: &Sample,
    p0: &DiscreteMeasure,
    directions: &[Direction],
) -> Result<f64> {
    if directions.is_empty() {
        return Err(Error::EmptyInput("no directions".into()));
    }
    if sample.dim() != p0.dim() {
        return Err(Error::DimensionMismatch {
            expected: p0.dim(),
            got: sample.dim(),
        });
    }
    let mut acc = 0.0;
    for dir in directions {
        let p0h = dir.as_subspace().project_measure(p0)?;
        let mut vals: Vec<f64> = sample.rows().iter().map(|x| dir.project(x)).collect();
        acc += ks_sorted(&empirical_atoms_1d(&mut vals), &p0h.atoms_1d());
    }
    Ok(acc / directions.len() as f64)
}

/// Calibrated test built on [`multi_projection_ks_stat`]: the critical
/// value is the `(1 − α)` Monte Carlo quantile of the statistic under `P0`.
pub fn multi_projection_ks_test(
    sample: &Sample,
    p0: &DiscreteMeasure,
    directions: &[Direction],
    alpha: f64,
    b: usize,
    seed: u64,
) -> Result<TestReport> {
    validate_test_params(alpha, b)?;
    let statistic = multi_projection_ks_stat(sample, p0, directions)?;
    let critical_value =
        multi_projection_null_quantile(p0, directions, sample.len(), alpha, b, seed)?;
    // Recompute the null statistics for the p-value from the same seeds.
    let null_stats = multi_projection_null_stats(p0, directions, sample.len(), b, seed)?;
    let p_value =
        (1 + null_stats.iter().filter(|s| **s >= statistic).count()) as f64 / (b + 1) as f64;
    Ok(TestReport {
        statistic,
        critical_value,
        p_value,
        reject: statistic > critical_value,
        alpha,
        calibration_size: b,
        seed,
        notes: Vec::new(),
    })
}

/// Null statistics of the multi-projection KS statistic under `P0`, for
/// sample size `n`; replicate `i` uses `derive_seed(seed, i)`.
pub fn multi_projection_null_stats(
    p0: &DiscreteMeasure,
    directions: &[Direction],
    n: usize,
    b: usize,
    seed: u64,
) -> Result<Vec<f64>> {
    if directions.is_empty() {
        return Err(Error::EmptyInput("no directions".into()));
    }
    let p0h_atoms: Vec<Vec<(f64, f64)>> = directions
        .iter()
        .map(|dir| Ok(dir.as_subspace().project_measure(p0)?.atoms_1d()))
        .collect::<Result<_>>()?;
    Ok((0..b)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, i as u64));
            let pts = p0.sample_n(n, &mut rng);
            let mut acc = 0.0;
            for (dir, ref_atoms) in directions.iter().zip(&p0h_atoms) {
                let mut vals: Vec<f64> = pts.iter().map(|x| dir.project(x)).collect();
                acc += ks_sorted(&empirical_atoms_1d(&mut vals), ref_atoms);
            }
            acc / directions.len() as f64
        })
        .collect())
}

/// `(1 − α)` quantile of the null multi-projection statistic.
pub fn multi_projection_null_quantile(
    p0: &DiscreteMeasure,
    directions: &[Direction],
    n: usize,
    alpha: f64,
    b: usize,
    seed: u64,
) -> Result<f64> {
    validate_test_params(alpha, b)?;
    let stats = multi_projection_null_stats(p0, directions, n, b, seed)?;
    Ok(empirical_quantile_higher(stats, 1.0 - alpha))
}

/// Convenience: the empirical measure of the projections of a sample onto a
/// direction.
pub fn projected_empirical(sample: &Sample, dir: &Direction) -> DiscreteMeasure {
    let rows: Vec<Point> = sample
        .rows()
        .iter()
        .map(|x| Point::scalar(dir.project(x)))
        .collect();
    let s = Sample::new(rows).expect("projected sample is nonempty");
    empirical_measure(&s, MERGE_TOL)
}
