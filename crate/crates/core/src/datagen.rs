//! Generators for synthetic multivariate Bernoulli data.
//!
//! The simulation studies need three dependence structures on `{0,1}^d`:
//! independent coordinates, exchangeable equicorrelation (a common-element
//! mixture with exact marginals and exact pairwise correlation), and joints
//! with prescribed pairwise odds ratios (a full-table fit by iterative
//! proportional scaling against Plackett 2×2 targets). Parameter draws for
//! Poisson-Binomial sums come from a Beta distribution, and joint laws are
//! drawn uniformly from the probability simplex via normalized exponentials.

use rand::Rng;
use rand_distr::{Distribution, Exp1, Gamma};

use crate::measures::{DiscreteMeasure, Point, Sample};
use crate::{Error, Result};

/// Largest dimension for which a full `2^d` probability table is kept.
pub const MAX_TABLE_DIM: usize = 20;

/// Largest dimension accepted by the full-table odds-ratio fit.
pub const MAX_IPF_DIM: usize = 12;

/// All `2^d` points of `{0,1}^d`, ordered by the binary encoding
/// (coordinate `i` is bit `i`).
pub fn binary_cube(d: usize) -> Vec<Point> {
    assert!((1..=MAX_TABLE_DIM).contains(&d));
    (0..1usize << d).map(|m| decode_outcome(m, d)).collect()
}

/// The point of `{0,1}^d` whose coordinate `i` is bit `i` of `mask`.
pub fn decode_outcome(mask: usize, d: usize) -> Point {
    Point::new((0..d).map(|i| ((mask >> i) & 1) as f64).collect())
}

/// A joint pmf on `{0,1}^d`, stored as a full table indexed by the binary
/// encoding of the outcome.
#[derive(Clone, Debug)]
pub struct JointPmf {
    d: usize,
    probs: Vec<f64>,
}

impl JointPmf {
    pub fn new(d: usize, probs: Vec<f64>) -> Result<Self> {
        if !(1..=MAX_TABLE_DIM).contains(&d) {
            return Err(Error::InvalidParameter(format!(
                "table dimension {d} not in 1..={MAX_TABLE_DIM}"
            )));
        }
        if probs.len() != 1 << d {
            return Err(Error::InvalidParameter(format!(
                "{} entries for a 2^{d} table",
                probs.len()
            )));
        }
        if probs.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(Error::InvalidMeasure("negative or non-finite cell".into()));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidMeasure(format!(
                "table sums to {total}, expected 1"
            )));
        }
        Ok(JointPmf { d, probs })
    }

    /// The uniform (independent Bernoulli(1/2)) table.
    pub fn uniform(d: usize) -> Result<Self> {
        let n = 1usize << d;
        JointPmf::new(d, vec![1.0 / n as f64; n])
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Univariate margin `P(X_i = 1)`.
    pub fn margin(&self, i: usize) -> f64 {
        self.probs
            .iter()
            .enumerate()
            .filter(|(m, _)| (m >> i) & 1 == 1)
            .map(|(_, p)| p)
            .sum()
    }

    /// Pairwise 2×2 margin `[p00, p01, p10, p11]` of coordinates `(i, j)`,
    /// indexed as `p[2a + b] = P(X_i = a, X_j = b)`.
    pub fn pair_table(&self, i: usize, j: usize) -> [f64; 4] {
        let mut t = [0.0; 4];
        for (m, p) in self.probs.iter().enumerate() {
            let a = (m >> i) & 1;
            let b = (m >> j) & 1;
            t[2 * a + b] += p;
        }
        t
    }

    /// Odds ratio `p11 p00 / (p01 p10)` of the pair `(i, j)`.
    pub fn odds_ratio(&self, i: usize, j: usize) -> f64 {
        let t = self.pair_table(i, j);
        (t[3] * t[0]) / (t[1] * t[2])
    }

    /// The pmf of the coordinate sum `S_d` over `k = 0..=d`.
    pub fn coordinate_sum_pmf(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.d + 1];
        for (m, p) in self.probs.iter().enumerate() {
            out[m.count_ones() as usize] += p;
        }
        out
    }

    /// The table as a measure on the cube (zero cells dropped).
    pub fn to_measure(&self) -> DiscreteMeasure {
        let atoms: Vec<(Point, f64)> = self
            .probs
            .iter()
            .enumerate()
            .filter(|(_, p)| **p > 0.0)
            .map(|(m, p)| (decode_outcome(m, self.d), *p))
            .collect();
        DiscreteMeasure::from_atoms(atoms).expect("valid table")
    }
}

/// `n` i.i.d. rows with independent Bernoulli(q) coordinates.
pub fn gen_independent_bernoulli(d: usize, q: f64, n: usize, rng: &mut impl Rng) -> Result<Sample> {
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::InvalidParameter(format!("q = {q} not in [0, 1]")));
    }
    if n == 0 || d == 0 {
        return Err(Error::EmptyInput("need n >= 1 and d >= 1".into()));
    }
    let rows: Vec<Point> = (0..n)
        .map(|_| Point::new((0..d).map(|_| f64::from(rng.random_bool(q))).collect()))
        .collect();
    Sample::new(rows)
}

/// `n` i.i.d. rows from the exchangeable equicorrelated multivariate
/// Bernoulli: `X_i = U_i Z + (1 − U_i) Y_i` with `Z, Y_i ~ Bernoulli(q)`
/// and `U_i ~ Bernoulli(√rho)`, all independent.
///
/// Marginals are exactly Bernoulli(q) and every pairwise correlation is
/// exactly `rho`.
pub fn gen_equicorrelated_bernoulli(
    d: usize,
    q: f64,
    rho: f64,
    n: usize,
    rng: &mut impl Rng,
) -> Result<Sample> {
    if !(0.0..1.0).contains(&rho) {
        return Err(Error::InvalidParameter(format!(
            "rho = {rho} not in [0, 1)"
        )));
    }
    if !(0.0 < q && q < 1.0) {
        return Err(Error::InvalidParameter(format!("q = {q} not in (0, 1)")));
    }
    if n == 0 || d == 0 {
        return Err(Error::EmptyInput("need n >= 1 and d >= 1".into()));
    }
    let sqrt_rho = rho.sqrt();
    let rows: Vec<Point> = (0..n)
        .map(|_| {
            let z = f64::from(rng.random_bool(q));
            Point::new(
                (0..d)
                    .map(|_| {
                        let u = rng.random_bool(sqrt_rho);
                        let y = f64::from(rng.random_bool(q));
                        if u {
                            z
                        } else {
                            y
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    Sample::new(rows)
}

/// The joint success probability `p11` of the 2×2 law with margins
/// `(a, b)` and odds ratio `gamma` (the Plackett construction):
/// for `gamma ≠ 1`, the root `[s − sqrt(s² − 4γ(γ−1)ab)] / (2(γ−1))` with
/// `s = 1 + (a + b)(γ − 1)`; for `gamma = 1`, independence `ab`.
pub fn plackett_2x2(a: f64, b: f64, gamma: f64) -> f64 {
    assert!(0.0 < a && a < 1.0 && 0.0 < b && b < 1.0, "margins in (0,1)");
    assert!(gamma > 0.0, "odds ratio must be positive");
    if gamma == 1.0 {
        return a * b;
    }
    let s = 1.0 + (a + b) * (gamma - 1.0);
    let disc = s * s - 4.0 * gamma * (gamma - 1.0) * a * b;
    (s - disc.max(0.0).sqrt()) / (2.0 * (gamma - 1.0))
}

/// Result of the iterative proportional fit.
#[derive(Clone, Debug)]
pub struct IpfFit {
    pub pmf: JointPmf,
    /// Full sweeps performed (0 when the start already matches).
    pub sweeps: usize,
    /// Largest remaining margin discrepancy.
    pub max_discrepancy: f64,
}

/// Fits a joint pmf on `{0,1}^d` with Bernoulli(1/2) margins and common
/// pairwise odds ratio `gamma`, by iterative proportional fitting of the
/// full table started at the uniform product.
///
/// Each sweep rescales all univariate margins to 1/2 and then all pairwise
/// 2×2 margins to the Plackett target, pairs in lexicographic order. Stops
/// when the largest margin discrepancy falls below `ipf_tol`; errors with
/// the final discrepancy if `ipf_iters` sweeps do not get there.
pub fn gen_odds_ratio_joint(
    d: usize,
    gamma: f64,
    ipf_iters: usize,
    ipf_tol: f64,
) -> Result<IpfFit> {
    if !(2..=MAX_IPF_DIM).contains(&d) {
        return Err(Error::InvalidParameter(format!(
            "odds-ratio fit supports 2..={MAX_IPF_DIM} dimensions, got {d}"
        )));
    }
    if gamma <= 0.0 {
        return Err(Error::InvalidParameter(format!("gamma = {gamma}")));
    }
    let p11 = plackett_2x2(0.5, 0.5, gamma);
    // With both margins 1/2: p00 = p11 and p01 = p10 = 1/2 − p11.
    let target = [p11, 0.5 - p11, 0.5 - p11, p11];

    let n = 1usize << d;
    let mut probs = vec![1.0 / n as f64; n];

    let discrepancy = |probs: &[f64]| -> f64 {
        let mut worst = 0.0f64;
        for i in 0..d {
            let m: f64 = probs
                .iter()
                .enumerate()
                .filter(|(c, _)| (c >> i) & 1 == 1)
                .map(|(_, p)| p)
                .sum();
            worst = worst.max((m - 0.5).abs());
        }
        for i in 0..d {
            for j in (i + 1)..d {
                let mut t = [0.0; 4];
                for (c, p) in probs.iter().enumerate() {
                    t[2 * ((c >> i) & 1) + ((c >> j) & 1)] += p;
                }
                for (got, want) in t.iter().zip([target[0], target[1], target[2], target[3]]) {
                    worst = worst.max((got - want).abs());
                }
            }
        }
        worst
    };

    let mut worst = discrepancy(&probs);
    let mut sweeps = 0;
    while worst >= ipf_tol && sweeps < ipf_iters {
        // Univariate margins to 1/2.
        for i in 0..d {
            let m: f64 = probs
                .iter()
                .enumerate()
                .filter(|(c, _)| (c >> i) & 1 == 1)
                .map(|(_, p)| p)
                .sum();
            if m <= 0.0 || m >= 1.0 {
                continue;
            }
            let (s1, s0) = (0.5 / m, 0.5 / (1.0 - m));
            for (c, p) in probs.iter_mut().enumerate() {
                *p *= if (c >> i) & 1 == 1 { s1 } else { s0 };
            }
        }
        // Pairwise 2x2 margins to the Plackett target.
        for i in 0..d {
            for j in (i + 1)..d {
                let mut t = [0.0; 4];
                for (c, p) in probs.iter().enumerate() {
                    t[2 * ((c >> i) & 1) + ((c >> j) & 1)] += p;
                }
                let mut scale = [1.0; 4];
                for (cell, sc) in scale.iter_mut().enumerate() {
                    let want = [target[0], target[1], target[2], target[3]][cell];
                    if t[cell] > 0.0 {
                        *sc = want / t[cell];
                    }
                }
                for (c, p) in probs.iter_mut().enumerate() {
                    *p *= scale[2 * ((c >> i) & 1) + ((c >> j) & 1)];
                }
            }
        }
        // Proportional scaling keeps the total near 1; renormalize rounding.
        let total: f64 = probs.iter().sum();
        probs.iter_mut().for_each(|p| *p /= total);
        sweeps += 1;
        worst = discrepancy(&probs);
    }
    if worst >= ipf_tol {
        return Err(Error::NonConvergence {
            sweeps,
            discrepancy: worst,
        });
    }
    Ok(IpfFit {
        pmf: JointPmf::new(d, probs)?,
        sweeps,
        max_discrepancy: worst,
    })
}

/// `n` rows drawn from a full-table pmf by inverse-CDF sampling.
pub fn sample_from_pmf(pmf: &JointPmf, n: usize, rng: &mut impl Rng) -> Result<Sample> {
    if n == 0 {
        return Err(Error::EmptyInput("need n >= 1".into()));
    }
    let mut cdf = Vec::with_capacity(pmf.probs.len());
    let mut acc = 0.0;
    for p in &pmf.probs {
        acc += p;
        cdf.push(acc);
    }
    let rows: Vec<Point> = (0..n)
        .map(|_| {
            let u: f64 = rng.random();
            let idx = cdf.partition_point(|c| *c < u).min(pmf.probs.len() - 1);
            decode_outcome(idx, pmf.d)
        })
        .collect();
    Sample::new(rows)
}

/// `d` i.i.d. Beta(gamma1, gamma2) success probabilities, drawn through the
/// Gamma-ratio construction `X / (X + Y)`.
pub fn gen_poisson_binomial_params(
    d: usize,
    gamma1: f64,
    gamma2: f64,
    rng: &mut impl Rng,
) -> Result<Vec<f64>> {
    if gamma1 <= 0.0 || gamma2 <= 0.0 {
        return Err(Error::InvalidParameter(
            "Beta parameters must be positive".into(),
        ));
    }
    let g1 = Gamma::new(gamma1, 1.0)
        .map_err(|e| Error::InvalidParameter(format!("Beta parameter: {e}")))?;
    let g2 = Gamma::new(gamma2, 1.0)
        .map_err(|e| Error::InvalidParameter(format!("Beta parameter: {e}")))?;
    Ok((0..d)
        .map(|_| {
            let x: f64 = g1.sample(rng);
            let y: f64 = g2.sample(rng);
            x / (x + y)
        })
        .collect())
}

/// A point drawn uniformly (normalized Lebesgue measure) from the
/// probability simplex with `m` coordinates: normalized i.i.d. Exp(1)
/// draws.
pub fn sample_simplex_uniform(m: usize, rng: &mut impl Rng) -> Vec<f64> {
    assert!(m >= 1);
    let mut draws: Vec<f64> = (0..m).map(|_| Exp1.sample(rng)).collect();
    let total: f64 = draws.iter().sum();
    draws.iter_mut().for_each(|x| *x /= total);
    draws
}
