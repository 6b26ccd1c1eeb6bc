//! Seeded desk-scale simulation studies.
//!
//! Each experiment is a pure function of its configuration: replicate `r`
//! derives its generator seed as `derive_seed(cfg.seed, r)`, so runs are
//! reproducible and replicates could execute in any order.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{evaluate, DistanceKind, RpClassifier};
use crate::datagen::{
    gen_equicorrelated_bernoulli, gen_independent_bernoulli, gen_odds_ratio_joint,
    gen_poisson_binomial_params, sample_from_pmf, JointPmf,
};
use crate::derive_seed;
use crate::hypotest::{
    multi_projection_ks_stat, multi_projection_null_quantile, sum_structure_test,
};
use crate::measures::{Point, Sample};
use crate::projections::{random_direction, Direction};
use crate::tomo::{generate_phantom, scenario1_configs, scenario2_configs, TomoModel};
use crate::{Error, Result};

/// Deterministic shuffle-and-split: the first `train_fraction` of the
/// shuffled rows become the training sample, the rest the test sample.
pub fn shuffle_split(
    rows: Vec<Point>,
    labels: Vec<usize>,
    train_fraction: f64,
    rng: &mut ChaCha8Rng,
) -> Result<(Sample, Sample)> {
    if !(0.0 < train_fraction && train_fraction < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "train fraction {train_fraction}"
        )));
    }
    let n = rows.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let n_train = ((n as f64) * train_fraction).round() as usize;
    if n_train == 0 || n_train == n {
        return Err(Error::InvalidParameter(
            "split leaves an empty train or test sample".into(),
        ));
    }
    let pick = |idx: &[usize]| -> Result<Sample> {
        Sample::with_labels(
            idx.iter().map(|&i| rows[i].clone()).collect(),
            idx.iter().map(|&i| labels[i]).collect(),
        )
    };
    Ok((pick(&order[..n_train])?, pick(&order[n_train..])?))
}

/// Mean and standard deviation (over replicates) of a per-replicate metric.
#[derive(Clone, Debug)]
pub struct ReplicateSummary {
    pub mean: f64,
    pub sd: f64,
    pub values: Vec<f64>,
}

impl ReplicateSummary {
    pub fn from_values(values: Vec<f64>) -> Self {
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let var = if values.len() > 1 {
            values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)
        } else {
            0.0
        };
        ReplicateSummary {
            mean,
            sd: var.sqrt(),
            values,
        }
    }

    /// Standard error of the mean.
    pub fn se(&self) -> f64 {
        self.sd / (self.values.len() as f64).sqrt()
    }
}

/// Binary classification of independent vs equicorrelated multivariate
/// Bernoulli data with the projection classifier.
#[derive(Clone, Debug)]
pub struct BinaryClassificationStudy {
    pub d: usize,
    pub corr: f64,
    pub n_per_class: usize,
    pub n_projections: usize,
    pub test_fraction: f64,
    pub distance: DistanceKind,
    pub replicates: usize,
    pub seed: u64,
}

impl BinaryClassificationStudy {
    /// The benchmark defaults: 200 observations per class, 25% held out,
    /// 100 projections, 50 replicates, Cramér–von Mises distance.
    ///
    /// CvM is the default because the add-one-point W1 distance degenerates
    /// under the max-over-directions aggregation on equal-marginal
    /// problems: its leading term is the distance from the projected point
    /// to the projected class mean, which is the same for both classes
    /// here, so the rule drops to chance level. The CvM perturbation stays
    /// bounded and location-sensitive and reproduces the reference error
    /// rates.
    pub fn new(d: usize, corr: f64, seed: u64) -> Self {
        BinaryClassificationStudy {
            d,
            corr,
            n_per_class: 200,
            n_projections: 100,
            test_fraction: 0.25,
            distance: DistanceKind::Cvm,
            replicates: 50,
            seed,
        }
    }

    /// Misclassification rates over the replicates.
    pub fn run(&self) -> Result<ReplicateSummary> {
        let mut errors = Vec::with_capacity(self.replicates);
        for rep in 0..self.replicates {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(self.seed, rep as u64));
            let class0 = gen_independent_bernoulli(self.d, 0.5, self.n_per_class, &mut rng)?;
            let class1 =
                gen_equicorrelated_bernoulli(self.d, 0.5, self.corr, self.n_per_class, &mut rng)?;
            let rows: Vec<Point> = class0.rows().iter().chain(class1.rows()).cloned().collect();
            let labels: Vec<usize> = std::iter::repeat_n(0, self.n_per_class)
                .chain(std::iter::repeat_n(1, self.n_per_class))
                .collect();
            let directions: Vec<Direction> = (0..self.n_projections)
                .map(|_| random_direction(self.d, &mut rng))
                .collect();
            let (train, test) = shuffle_split(rows, labels, 1.0 - self.test_fraction, &mut rng)?;
            let model = RpClassifier::fit(&train, directions, self.distance)?;
            errors.push(evaluate(|x| model.predict(x), &test)?);
        }
        Ok(ReplicateSummary::from_values(errors))
    }
}

/// Phantom-image classification through per-direction histogram votes.
#[derive(Clone, Debug)]
pub struct TomographyStudy {
    pub scenario: u8,
    pub images_per_class: usize,
    pub n_directions: usize,
    pub neighbors: usize,
    pub bin_count: usize,
    pub train_fraction: f64,
    pub seed: u64,
}

impl TomographyStudy {
    pub fn new(scenario: u8, seed: u64) -> Self {
        TomographyStudy {
            scenario,
            images_per_class: 100,
            n_directions: 40,
            neighbors: 21,
            bin_count: 30,
            train_fraction: 0.75,
            seed,
        }
    }

    /// Test misclassification rate of one run.
    pub fn run(&self) -> Result<f64> {
        let (cfg0, cfg1) = match self.scenario {
            1 => scenario1_configs(),
            2 => scenario2_configs(),
            s => {
                return Err(Error::InvalidParameter(format!(
                    "unknown scenario {s}, expected 1 or 2"
                )))
            }
        };
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(self.seed, 0));
        let mut images = Vec::with_capacity(2 * self.images_per_class);
        for _ in 0..self.images_per_class {
            images.push((generate_phantom(&cfg0, &mut rng)?, 0usize));
        }
        for _ in 0..self.images_per_class {
            images.push((generate_phantom(&cfg1, &mut rng)?, 1usize));
        }
        let directions: Vec<Direction> = (0..self.n_directions)
            .map(|_| random_direction(2, &mut rng))
            .collect();

        let mut order: Vec<usize> = (0..images.len()).collect();
        order.shuffle(&mut rng);
        let n_train = ((images.len() as f64) * self.train_fraction).round() as usize;
        let train: Vec<_> = order[..n_train]
            .iter()
            .map(|&i| images[i].clone())
            .collect();
        let test: Vec<_> = order[n_train..]
            .iter()
            .map(|&i| images[i].clone())
            .collect();

        let model = TomoModel::fit(&train, directions, self.bin_count, self.neighbors)?;
        let wrong = test
            .iter()
            .filter(|(img, label)| model.predict(img) != *label)
            .count();
        Ok(wrong as f64 / test.len() as f64)
    }
}

/// Power of the multi-projection KS test against odds-ratio alternatives.
///
/// The null is the independent Bernoulli(1/2) joint on `{0,1}^d`. The
/// directions and the Monte Carlo critical value are computed once and
/// shared across replicates, as in a calibrated testing pipeline; each
/// replicate then draws fresh data from the alternative (`gamma = 1`
/// reproduces the null and estimates the level).
#[derive(Clone, Debug)]
pub struct OddsRatioPowerStudy {
    pub d: usize,
    pub n: usize,
    pub n_projections: usize,
    pub gammas: Vec<f64>,
    pub alpha: f64,
    pub calibration: usize,
    pub replicates: usize,
    pub ipf_iters: usize,
    pub ipf_tol: f64,
    pub seed: u64,
}

impl OddsRatioPowerStudy {
    pub fn new(gammas: Vec<f64>, n_projections: usize, seed: u64) -> Self {
        OddsRatioPowerStudy {
            d: 8,
            n: 200,
            n_projections,
            gammas,
            alpha: 0.05,
            calibration: 500,
            replicates: 300,
            ipf_iters: 10_000,
            ipf_tol: 1e-8,
            seed,
        }
    }

    /// `(gamma, rejection rate)` for every configured alternative.
    pub fn run(&self) -> Result<Vec<(f64, f64)>> {
        let p0 = JointPmf::uniform(self.d)?.to_measure();
        let mut dir_rng = ChaCha8Rng::seed_from_u64(derive_seed(self.seed, 1));
        let directions: Vec<Direction> = (0..self.n_projections)
            .map(|_| random_direction(self.d, &mut dir_rng))
            .collect();
        let critical = multi_projection_null_quantile(
            &p0,
            &directions,
            self.n,
            self.alpha,
            self.calibration,
            derive_seed(self.seed, 2),
        )?;

        let mut out = Vec::with_capacity(self.gammas.len());
        for (gi, &gamma) in self.gammas.iter().enumerate() {
            let joint = if (gamma - 1.0).abs() < 1e-12 {
                JointPmf::uniform(self.d)?
            } else {
                gen_odds_ratio_joint(self.d, gamma, self.ipf_iters, self.ipf_tol)?.pmf
            };
            let mut rejections = 0usize;
            for rep in 0..self.replicates {
                let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(
                    self.seed,
                    1000 + (gi * self.replicates + rep) as u64,
                ));
                let sample = sample_from_pmf(&joint, self.n, &mut rng)?;
                let stat = multi_projection_ks_stat(&sample, &p0, &directions)?;
                if stat > critical {
                    rejections += 1;
                }
            }
            out.push((gamma, rejections as f64 / self.replicates as f64));
        }
        Ok(out)
    }
}

/// Power of the single-datum coordinate-sum test against Poisson-Binomial
/// alternatives with Beta-distributed success probabilities.
#[derive(Clone, Debug)]
pub struct PoissonBinomialPowerStudy {
    pub dims: Vec<usize>,
    pub gamma1s: Vec<f64>,
    pub gamma2: f64,
    pub alpha: f64,
    pub replicates: usize,
    pub seed: u64,
}

impl PoissonBinomialPowerStudy {
    pub fn new(dims: Vec<usize>, gamma1s: Vec<f64>, seed: u64) -> Self {
        PoissonBinomialPowerStudy {
            dims,
            gamma1s,
            gamma2: 2.0,
            alpha: 0.05,
            replicates: 300,
            seed,
        }
    }

    /// `(d, gamma1, rejection rate)` for every grid cell.
    pub fn run(&self) -> Result<Vec<(usize, f64, f64)>> {
        let mut out = Vec::new();
        for (di, &d) in self.dims.iter().enumerate() {
            for (gi, &gamma1) in self.gamma1s.iter().enumerate() {
                let mut rejections = 0usize;
                for rep in 0..self.replicates {
                    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(
                        self.seed,
                        ((di * self.gamma1s.len() + gi) * self.replicates + rep) as u64,
                    ));
                    let q = gen_poisson_binomial_params(d, gamma1, self.gamma2, &mut rng)?;
                    let s_obs: usize = q.iter().filter(|&&p| rng.random_bool(p)).count();
                    if sum_structure_test(s_obs, d, self.alpha)?.reject {
                        rejections += 1;
                    }
                }
                out.push((d, gamma1, rejections as f64 / self.replicates as f64));
            }
        }
        Ok(out)
    }
}
