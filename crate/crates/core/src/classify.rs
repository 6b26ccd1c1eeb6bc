//! Projection-based classification.
//!
//! [`RpClassifier`] implements the max-over-projections rule: project the
//! training sample of every class onto `k + 1` directions, and classify a
//! new point into the class whose per-direction empirical distributions are
//! perturbed least (in the worst direction) by adding the point to them.
//!
//! [`FullModel`] keeps the raw per-class empirical distributions and offers
//! the plug-in rule (argmax of empirical mass times prior) and, for binary
//! problems, the add-one-point total-variation rule, which needs no metric
//! on the covariate space at all.

use crate::measures::{
    cmp_points_tol, cvm_sorted, empirical_measure, ks_sorted, tv_sorted, w1_sorted,
    DiscreteMeasure, Point, Sample, MERGE_TOL,
};
use crate::projections::Direction;
use crate::{Error, Result};

/// Distance between one-dimensional empirical distributions used inside
/// [`RpClassifier`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceKind {
    /// Wasserstein-1 (default).
    W1,
    /// Kolmogorov.
    Ks,
    /// Cramér–von Mises.
    Cvm,
    /// Total variation.
    Tv,
}

impl DistanceKind {
    fn eval(self, a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
        match self {
            DistanceKind::W1 => w1_sorted(a, b),
            DistanceKind::Ks => ks_sorted(a, b),
            DistanceKind::Cvm => cvm_sorted(a, b),
            DistanceKind::Tv => tv_sorted(a, b),
        }
    }
}

fn class_partition(train: &Sample) -> Result<Vec<Vec<usize>>> {
    let labels = train
        .labels()
        .ok_or_else(|| Error::InvalidParameter("training sample has no labels".into()))?;
    let m = labels.iter().copied().max().unwrap() + 1;
    let mut by_class: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (i, &l) in labels.iter().enumerate() {
        by_class[l].push(i);
    }
    for (l, idx) in by_class.iter().enumerate() {
        if idx.is_empty() {
            return Err(Error::EmptyClass { label: l });
        }
    }
    Ok(by_class)
}

/// Sorted `(value, weight)` atoms of the empirical distribution of `values`.
/// Weights are exact ratios `count / n`.
fn empirical_sorted(mut values: Vec<f64>) -> Vec<(f64, f64)> {
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = values.len() as f64;
    let mut grouped: Vec<(f64, usize)> = Vec::new();
    for v in values {
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

/// Rescales `base` by `n/(n+1)` and inserts `z` with weight `1/(n+1)`,
/// preserving sorted order (merging with an existing atom within the
/// canonical tolerance).
fn augment_sorted(base: &[(f64, f64)], z: f64, n: f64) -> Vec<(f64, f64)> {
    let scale = n / (n + 1.0);
    let w_new = 1.0 / (n + 1.0);
    let mut out = Vec::with_capacity(base.len() + 1);
    let mut inserted = false;
    for &(x, w) in base {
        if !inserted {
            if z < x - MERGE_TOL {
                out.push((z, w_new));
                inserted = true;
            } else if (z - x).abs() <= MERGE_TOL {
                out.push((x, w * scale + w_new));
                inserted = true;
                continue;
            }
        }
        out.push((x, w * scale));
    }
    if !inserted {
        out.push((z, w_new));
    }
    out
}

/// Classifier working purely from one-dimensional projections of the
/// training sample.
#[derive(Clone, Debug)]
pub struct RpClassifier {
    directions: Vec<Direction>,
    /// `proj[l][j]`: sorted empirical atoms of class `l` projected onto
    /// direction `j`.
    proj: Vec<Vec<Vec<(f64, f64)>>>,
    class_counts: Vec<usize>,
    priors: Vec<f64>,
    distance: DistanceKind,
}

impl RpClassifier {
    /// Fits the per-class, per-direction empirical distributions.
    ///
    /// Labels must cover `{0, …, m−1}` with at least one point per class.
    pub fn fit(train: &Sample, directions: Vec<Direction>, distance: DistanceKind) -> Result<Self> {
        if directions.is_empty() {
            return Err(Error::EmptyInput("no projection directions".into()));
        }
        for dir in &directions {
            if dir.dim() != train.dim() {
                return Err(Error::DimensionMismatch {
                    expected: train.dim(),
                    got: dir.dim(),
                });
            }
        }
        let by_class = class_partition(train)?;
        let n = train.len() as f64;
        let rows = train.rows();
        let proj: Vec<Vec<Vec<(f64, f64)>>> = by_class
            .iter()
            .map(|idx| {
                directions
                    .iter()
                    .map(|dir| {
                        empirical_sorted(idx.iter().map(|&i| dir.project(&rows[i])).collect())
                    })
                    .collect()
            })
            .collect();
        let class_counts: Vec<usize> = by_class.iter().map(|idx| idx.len()).collect();
        let priors: Vec<f64> = class_counts.iter().map(|&c| c as f64 / n).collect();
        Ok(RpClassifier {
            directions,
            proj,
            class_counts,
            priors,
            distance,
        })
    }

    pub fn n_classes(&self) -> usize {
        self.class_counts.len()
    }

    pub fn directions(&self) -> &[Direction] {
        &self.directions
    }

    pub fn priors(&self) -> &[f64] {
        &self.priors
    }

    pub fn class_counts(&self) -> &[usize] {
        &self.class_counts
    }

    pub fn distance_kind(&self) -> DistanceKind {
        self.distance
    }

    /// The stored empirical distribution of class `l` under direction `j`.
    pub fn projected_measure(&self, class: usize, direction: usize) -> DiscreteMeasure {
        let atoms = self.proj[class][direction]
            .iter()
            .map(|&(x, w)| (Point::scalar(x), w))
            .collect();
        DiscreteMeasure::from_canonical(atoms, 1)
    }

    /// Worst-direction perturbation caused by adding `x` to class `l`:
    /// `d_b(l) = max_j d(P_l_j, P_l_j + x)`.
    pub fn class_score(&self, class: usize, x: &Point) -> f64 {
        let n_l = self.class_counts[class] as f64;
        let mut worst = 0.0f64;
        for (j, dir) in self.directions.iter().enumerate() {
            let z = dir.project(x);
            let base = &self.proj[class][j];
            let augmented = augment_sorted(base, z, n_l);
            worst = worst.max(self.distance.eval(base, &augmented));
        }
        worst
    }

    /// Classifies `x` into the class with the smallest worst-direction
    /// score; ties break to the smallest label.
    pub fn predict(&self, x: &Point) -> usize {
        let mut best = 0;
        let mut best_score = f64::INFINITY;
        for l in 0..self.n_classes() {
            let score = self.class_score(l, x);
            if score < best_score {
                best_score = score;
                best = l;
            }
        }
        best
    }
}

/// Per-class empirical distributions of the raw (unprojected) training
/// points, with class priors.
#[derive(Clone, Debug)]
pub struct FullModel {
    per_class: Vec<DiscreteMeasure>,
    class_counts: Vec<usize>,
    priors: Vec<f64>,
}

impl FullModel {
    pub fn fit(train: &Sample) -> Result<Self> {
        let by_class = class_partition(train)?;
        let n = train.len() as f64;
        let rows = train.rows();
        let per_class: Vec<DiscreteMeasure> = by_class
            .iter()
            .map(|idx| {
                let class_rows: Vec<Point> = idx.iter().map(|&i| rows[i].clone()).collect();
                let s = Sample::new(class_rows).expect("class is nonempty");
                empirical_measure(&s, MERGE_TOL)
            })
            .collect();
        let class_counts: Vec<usize> = by_class.iter().map(|idx| idx.len()).collect();
        let priors: Vec<f64> = class_counts.iter().map(|&c| c as f64 / n).collect();
        Ok(FullModel {
            per_class,
            class_counts,
            priors,
        })
    }

    /// Builds a model directly from per-class distributions and priors
    /// (e.g. the true pmfs, for comparing against the exact decision rule).
    pub fn from_parts(per_class: Vec<DiscreteMeasure>, priors: Vec<f64>) -> Result<Self> {
        if per_class.is_empty() || per_class.len() != priors.len() {
            return Err(Error::InvalidParameter(
                "need one prior per class distribution".into(),
            ));
        }
        if (priors.iter().sum::<f64>() - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidMeasure("priors must sum to 1".into()));
        }
        let class_counts = vec![0; per_class.len()];
        Ok(FullModel {
            per_class,
            class_counts,
            priors,
        })
    }

    pub fn n_classes(&self) -> usize {
        self.per_class.len()
    }

    pub fn priors(&self) -> &[f64] {
        &self.priors
    }

    pub fn class_measure(&self, l: usize) -> &DiscreteMeasure {
        &self.per_class[l]
    }

    /// Plug-in rule: `argmax_l P_l({x}) · prior_l`, ties to the smallest
    /// label.
    pub fn predict_plugin(&self, x: &Point) -> usize {
        let mut best = 0;
        let mut best_score = f64::NEG_INFINITY;
        for (l, m) in self.per_class.iter().enumerate() {
            let score = m.mass_at(x) * self.priors[l];
            if score > best_score {
                best_score = score;
                best = l;
            }
        }
        best
    }

    /// Add-one-point total-variation rule for binary problems.
    ///
    /// If exactly one class gives `x` zero empirical mass, the point goes to
    /// the other class; if both do, it goes to class 0. Otherwise the point
    /// joins the class whose empirical distribution moves least (in total
    /// variation) when `x` is added to it with weight `1/(n_l + 1)`.
    pub fn predict_addpoint_tv(&self, x: &Point) -> Result<usize> {
        if self.n_classes() != 2 {
            return Err(Error::NonBinaryLabels {
                got: self.n_classes() - 1,
            });
        }
        let p0 = self.per_class[0].mass_at(x);
        let p1 = self.per_class[1].mass_at(x);
        match (p0 == 0.0, p1 == 0.0) {
            (true, true) => return Ok(0),
            (true, false) => return Ok(1),
            (false, true) => return Ok(0),
            (false, false) => {}
        }
        let d0 = self.addpoint_tv_distance(0, x);
        let d1 = self.addpoint_tv_distance(1, x);
        Ok(usize::from(d1 < d0))
    }

    /// `d_TV(P_l, (n_l P_l + δ_x) / (n_l + 1))`, computed from the full
    /// measures.
    fn addpoint_tv_distance(&self, l: usize, x: &Point) -> f64 {
        let n = self.class_counts[l] as f64;
        let scale = n / (n + 1.0);
        let w_new = 1.0 / (n + 1.0);
        let base = self.per_class[l].atoms();
        let mut acc = 0.0;
        let mut matched = false;
        for (p, w) in base {
            if !matched && cmp_points_tol(p.coords(), x.coords(), MERGE_TOL).is_eq() {
                acc += (w - (w * scale + w_new)).abs();
                matched = true;
            } else {
                acc += w - w * scale;
            }
        }
        if !matched {
            acc += w_new;
        }
        acc / 2.0
    }
}

/// Misclassification rate of `predict` over a labelled test sample.
pub fn evaluate(predict: impl Fn(&Point) -> usize, test: &Sample) -> Result<f64> {
    let labels = test
        .labels()
        .ok_or_else(|| Error::InvalidParameter("test sample has no labels".into()))?;
    let errors = test
        .rows()
        .iter()
        .zip(labels)
        .filter(|(x, &y)| predict(x) != y)
        .count();
    Ok(errors as f64 / test.len() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::{ks_distance_1d, tv_distance};
    use crate::projections::random_direction;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn labelled(rows: Vec<Vec<f64>>, labels: Vec<usize>) -> Sample {
        Sample::with_labels(rows.into_iter().map(Point::new).collect(), labels).unwrap()
    }

    fn axis_directions() -> Vec<Direction> {
        vec![
            Direction::new(vec![1.0, 0.0]).unwrap(),
            Direction::new(vec![0.0, 1.0]).unwrap(),
        ]
    }

    #[test]
    fn fit_single_class_and_point_masses() {
        let train = labelled(vec![vec![0.0, 1.0], vec![1.0, 0.0]], vec![0, 0]);
        let model = RpClassifier::fit(&train, axis_directions(), DistanceKind::W1).unwrap();
        assert_eq!(model.priors(), &[1.0]);

        let train = labelled(vec![vec![0.0, 0.0], vec![1.0, 1.0]], vec![0, 1]);
        let model = RpClassifier::fit(&train, axis_directions(), DistanceKind::W1).unwrap();
        for l in 0..2 {
            for j in 0..2 {
                assert_eq!(model.projected_measure(l, j).support_size(), 1);
            }
        }
    }

    #[test]
    fn fit_rejects_empty_class() {
        let train = labelled(vec![vec![0.0, 0.0], vec![1.0, 1.0]], vec![0, 2]);
        assert!(matches!(
            RpClassifier::fit(&train, axis_directions(), DistanceKind::W1),
            Err(Error::EmptyClass { label: 1 })
        ));
    }

    #[test]
    fn fitted_measures_match_manual_projection() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let rows: Vec<Vec<f64>> = (0..20)
            .map(|_| {
                vec![
                    rng.random::<f64>(),
                    rng.random::<f64>(),
                    rng.random::<f64>(),
                ]
            })
            .collect();
        let labels: Vec<usize> = (0..20).map(|i| i % 2).collect();
        let train = labelled(rows.clone(), labels.clone());
        let dirs: Vec<Direction> = (0..3).map(|_| random_direction(3, &mut rng)).collect();
        let model = RpClassifier::fit(&train, dirs.clone(), DistanceKind::W1).unwrap();

        for l in 0..2 {
            for (j, dir) in dirs.iter().enumerate() {
                let vals: Vec<Point> = rows
                    .iter()
                    .zip(&labels)
                    .filter(|(_, &y)| y == l)
                    .map(|(r, _)| Point::scalar(dir.project(&Point::new(r.clone()))))
                    .collect();
                let expected = empirical_measure(&Sample::new(vals).unwrap(), MERGE_TOL);
                let got = model.projected_measure(l, j);
                assert!(tv_distance(&expected, &got).unwrap() < 1e-12);
            }
        }
    }

    #[test]
    fn predict_prefers_matching_point_mass() {
        // Two classes at distinct corners; a repeat of the class-1 corner
        // perturbs class 1 least.
        let train = labelled(
            vec![vec![0.0, 0.0]; 5]
                .into_iter()
                .chain(vec![vec![1.0, 1.0]; 5])
                .collect(),
            vec![0, 0, 0, 0, 0, 1, 1, 1, 1, 1],
        );
        for kind in [
            DistanceKind::W1,
            DistanceKind::Ks,
            DistanceKind::Cvm,
            DistanceKind::Tv,
        ] {
            let model = RpClassifier::fit(&train, axis_directions(), kind).unwrap();
            assert_eq!(model.predict(&Point::new(vec![1.0, 1.0])), 1);
            assert_eq!(model.predict(&Point::new(vec![0.0, 0.0])), 0);
        }
    }

    #[test]
    fn predict_tie_breaks_to_smallest_label() {
        // Perfectly symmetric classes; the probe is equidistant.
        let train = labelled(vec![vec![-1.0, 0.0], vec![1.0, 0.0]], vec![0, 1]);
        let model = RpClassifier::fit(&train, axis_directions(), DistanceKind::W1).unwrap();
        assert_eq!(model.predict(&Point::new(vec![0.0, 0.0])), 0);
    }

    #[test]
    fn tv_rule_matches_closed_form() {
        // With the TV distance, the add-one-point perturbation of class l in
        // direction j is exactly (1 - P_lj({z})) / (n_l + 1), so the rule
        // reduces to a closed form.
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let n0 = rng.random_range(3..12);
            let n1 = rng.random_range(3..12);
            let rows: Vec<Vec<f64>> = (0..n0 + n1)
                .map(|_| vec![rng.random_range(0..3) as f64, rng.random_range(0..3) as f64])
                .collect();
            let labels: Vec<usize> = (0..n0).map(|_| 0).chain((0..n1).map(|_| 1)).collect();
            let train = labelled(rows, labels);
            let dirs: Vec<Direction> = (0..5).map(|_| random_direction(2, &mut rng)).collect();
            let model = RpClassifier::fit(&train, dirs.clone(), DistanceKind::Tv).unwrap();

            let x = Point::new(vec![
                rng.random_range(0..3) as f64,
                rng.random_range(0..3) as f64,
            ]);
            let counts = model.class_counts().to_vec();
            let closed_form_label = {
                let mut best = 0;
                let mut best_score = f64::INFINITY;
                for (l, &count) in counts.iter().enumerate() {
                    let n_l = count as f64;
                    let mut worst = 0.0f64;
                    for (j, dir) in dirs.iter().enumerate() {
                        let z = dir.project(&x);
                        let mass = model.projected_measure(l, j).mass_at(&Point::scalar(z));
                        worst = worst.max((1.0 - mass) / (n_l + 1.0));
                    }
                    if worst < best_score {
                        best_score = worst;
                        best = l;
                    }
                }
                best
            };
            assert_eq!(model.predict(&x), closed_form_label);
        }
    }

    #[test]
    fn addpoint_tv_zero_mass_cases() {
        let train = labelled(
            vec![vec![0.0, 0.0], vec![0.0, 1.0], vec![1.0, 1.0]],
            vec![0, 0, 1],
        );
        let model = FullModel::fit(&train).unwrap();
        // Mass zero under class 1 only: the point goes to class 0.
        assert_eq!(
            model
                .predict_addpoint_tv(&Point::new(vec![0.0, 1.0]))
                .unwrap(),
            0
        );
        // Mass zero under class 0 only: the point goes to class 1.
        assert_eq!(
            model
                .predict_addpoint_tv(&Point::new(vec![1.0, 1.0]))
                .unwrap(),
            1
        );
        // Mass zero under both: tie-break to 0.
        assert_eq!(
            model
                .predict_addpoint_tv(&Point::new(vec![9.0, 9.0]))
                .unwrap(),
            0
        );
    }

    #[test]
    fn addpoint_tv_tie_breaks_on_identical_classes() {
        let train = labelled(
            vec![vec![0.0], vec![1.0], vec![0.0], vec![1.0]],
            vec![0, 0, 1, 1],
        );
        let model = FullModel::fit(&train).unwrap();
        assert_eq!(
            model.predict_addpoint_tv(&Point::new(vec![0.0])).unwrap(),
            0
        );
    }

    #[test]
    fn addpoint_tv_matches_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..30 {
            let n0 = rng.random_range(2..10);
            let n1 = rng.random_range(2..10);
            let rows: Vec<Vec<f64>> = (0..n0 + n1)
                .map(|_| vec![rng.random_range(0..2) as f64, rng.random_range(0..2) as f64])
                .collect();
            let labels: Vec<usize> = (0..n0).map(|_| 0).chain((0..n1).map(|_| 1)).collect();
            let train = labelled(rows, labels);
            let model = FullModel::fit(&train).unwrap();
            let x = Point::new(vec![
                rng.random_range(0..2) as f64,
                rng.random_range(0..2) as f64,
            ]);
            let p0 = model.class_measure(0).mass_at(&x);
            let p1 = model.class_measure(1).mass_at(&x);
            if p0 == 0.0 || p1 == 0.0 {
                continue;
            }
            let expected =
                usize::from((1.0 - p1) / (n1 as f64 + 1.0) < (1.0 - p0) / (n0 as f64 + 1.0));
            assert_eq!(model.predict_addpoint_tv(&x).unwrap(), expected);
        }
    }

    #[test]
    fn addpoint_tv_rejects_multiclass() {
        let train = labelled(vec![vec![0.0], vec![1.0], vec![2.0]], vec![0, 1, 2]);
        let model = FullModel::fit(&train).unwrap();
        assert!(model.predict_addpoint_tv(&Point::new(vec![0.0])).is_err());
    }

    #[test]
    fn plugin_rule_cases() {
        let train = labelled(
            vec![
                vec![0.0, 0.0],
                vec![0.0, 0.0],
                vec![0.0, 0.0],
                vec![1.0, 1.0],
                vec![0.0, 0.0],
                vec![2.0, 2.0],
                vec![2.0, 2.0],
                vec![2.0, 2.0],
            ],
            vec![0, 0, 0, 0, 1, 1, 1, 1],
        );
        let model = FullModel::fit(&train).unwrap();
        // Seen only in class 0.
        assert_eq!(model.predict_plugin(&Point::new(vec![1.0, 1.0])), 0);
        // Seen only in class 1.
        assert_eq!(model.predict_plugin(&Point::new(vec![2.0, 2.0])), 1);
        // Frequencies 3:1 at (0,0) with equal priors.
        assert_eq!(model.predict_plugin(&Point::new(vec![0.0, 0.0])), 0);
        // Unseen anywhere: tie at 0 mass, smallest label wins.
        assert_eq!(model.predict_plugin(&Point::new(vec![9.0, 9.0])), 0);
    }

    #[test]
    fn plugin_with_true_pmfs_is_bayes() {
        // Substituting the exact pmfs turns the plug-in rule into the exact
        // decision rule.
        let pts: Vec<Point> = (0..4).map(|i| Point::scalar(i as f64)).collect();
        let p0 =
            DiscreteMeasure::from_atoms(pts.iter().cloned().zip([0.4, 0.3, 0.2, 0.1]).collect())
                .unwrap();
        let p1 =
            DiscreteMeasure::from_atoms(pts.iter().cloned().zip([0.1, 0.2, 0.3, 0.4]).collect())
                .unwrap();
        let priors = [0.6, 0.4];
        let model = FullModel::from_parts(vec![p0.clone(), p1.clone()], priors.to_vec()).unwrap();
        for x in &pts {
            let bayes = usize::from(p1.mass_at(x) * priors[1] > p0.mass_at(x) * priors[0]);
            assert_eq!(model.predict_plugin(x), bayes);
        }
    }

    #[test]
    fn permuting_training_rows_never_changes_predictions() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let rows: Vec<Vec<f64>> = (0..30)
            .map(|_| vec![rng.random::<f64>(), rng.random::<f64>()])
            .collect();
        let labels: Vec<usize> = (0..30).map(|_| rng.random_range(0..2)).collect();
        let mut labels = labels;
        labels[0] = 0;
        labels[1] = 1; // both classes populated
        let dirs: Vec<Direction> = (0..4).map(|_| random_direction(2, &mut rng)).collect();

        let train = labelled(rows.clone(), labels.clone());
        let model = RpClassifier::fit(&train, dirs.clone(), DistanceKind::W1).unwrap();
        let full = FullModel::fit(&train).unwrap();

        // A fixed permutation of the rows.
        let mut order: Vec<usize> = (0..rows.len()).collect();
        for i in (1..order.len()).rev() {
            order.swap(i, rng.random_range(0..=i));
        }
        let rows_p: Vec<Vec<f64>> = order.iter().map(|&i| rows[i].clone()).collect();
        let labels_p: Vec<usize> = order.iter().map(|&i| labels[i]).collect();
        let train_p = labelled(rows_p, labels_p);
        let model_p = RpClassifier::fit(&train_p, dirs, DistanceKind::W1).unwrap();
        let full_p = FullModel::fit(&train_p).unwrap();

        for _ in 0..50 {
            let x = Point::new(vec![rng.random::<f64>(), rng.random::<f64>()]);
            assert_eq!(model.predict(&x), model_p.predict(&x));
            assert_eq!(full.predict_plugin(&x), full_p.predict_plugin(&x));
            assert_eq!(
                full.predict_addpoint_tv(&x).unwrap(),
                full_p.predict_addpoint_tv(&x).unwrap()
            );
        }
    }

    #[test]
    fn evaluate_counts_mismatches() {
        let test = labelled(
            vec![vec![0.0], vec![1.0], vec![2.0], vec![3.0]],
            vec![0, 1, 0, 1],
        );
        assert_eq!(evaluate(|_| 0, &test).unwrap(), 0.5);
        let perfect = |x: &Point| usize::from(x.value() as usize % 2 == 1);
        assert_eq!(evaluate(perfect, &test).unwrap(), 0.0);
        // 3 of 4 wrong.
        let mostly_wrong = |x: &Point| usize::from(x.value() < 0.5);
        assert_eq!(evaluate(mostly_wrong, &test).unwrap(), 0.75);
    }

    #[test]
    fn ks_distance_usable_as_classifier_metric() {
        // The KS add-one-point distance is 1/(n+1) for any point outside
        // the support, so only a probe on an existing atom is informative.
        let train = labelled(
            vec![vec![0.0, 0.0]; 4]
                .into_iter()
                .chain(vec![vec![5.0, 5.0]; 4])
                .collect(),
            vec![0, 0, 0, 0, 1, 1, 1, 1],
        );
        let model = RpClassifier::fit(&train, axis_directions(), DistanceKind::Ks).unwrap();
        assert_eq!(model.predict(&Point::new(vec![5.0, 5.0])), 1);
        assert_eq!(model.predict(&Point::new(vec![0.0, 0.0])), 0);
        let m0 = model.projected_measure(0, 0);
        let m1 = model.projected_measure(1, 0);
        assert_eq!(ks_distance_1d(&m0, &m1).unwrap(), 1.0);
    }
}
