//! Discrete tomography: classification of binary images from projections
//! alone, without reconstruction.
//!
//! A binary image is a finite set of 2-D grid points. For a direction `u`,
//! the X-ray counts the points on each line parallel to `u`; binning the
//! signed offsets `⟨p, u^⊥⟩` (with `u^⊥ = (−u₂, u₁)`) and normalizing
//! gives a histogram per direction. [`TomoModel`] classifies a new image by
//! running, in every direction, a k-nearest-neighbour vote under the
//! Mallows L2 distance between histograms, then averaging the votes.

use rand::Rng;
use rand_distr::{Distribution, Normal};

use crate::measures::{mallows_l2_histogram, Histogram};
use crate::projections::Direction;
use crate::{Error, Result};

/// A binary image: a finite set of distinct 2-D grid points.
#[derive(Clone, Debug)]
pub struct PointSet {
    points: Vec<[f64; 2]>,
    grid_spacing: f64,
}

impl PointSet {
    pub fn new(points: Vec<[f64; 2]>, grid_spacing: f64) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput("image has no points".into()));
        }
        if grid_spacing <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "grid spacing {grid_spacing}"
            )));
        }
        let mut sorted = points.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter("duplicate image points".into()));
        }
        Ok(PointSet {
            points,
            grid_spacing,
        })
    }

    pub fn points(&self) -> &[[f64; 2]] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn grid_spacing(&self) -> f64 {
        self.grid_spacing
    }
}

/// Signed offset of `p` along `u^⊥ = (−u₂, u₁)`: points with equal offset
/// lie on a common line parallel to `u`.
pub fn line_offset(p: [f64; 2], u: &Direction) -> f64 {
    debug_assert_eq!(u.dim(), 2);
    let c = u.components();
    -p[0] * c[1] + p[1] * c[0]
}

/// X-ray of the image in direction `u`: for each requested offset `s`, the
/// number of points whose line offset lies within `tol` of `s`.
pub fn xray(f: &PointSet, u: &Direction, offsets: &[f64], tol: f64) -> Vec<usize> {
    offsets
        .iter()
        .map(|s| {
            f.points()
                .iter()
                .filter(|p| (line_offset(**p, u) - s).abs() <= tol)
                .count()
        })
        .collect()
}

/// Histogram of the line offsets of an image over the given bin edges
/// (half-open bins, the last bin closed), normalized to total mass 1.
///
/// Errors if any projected offset falls outside the bin range.
pub fn xray_histogram(f: &PointSet, u: &Direction, bin_edges: &[f64]) -> Result<Histogram> {
    let counts = bin_offsets(f, u, bin_edges, false)?;
    let masses = counts.into_iter().map(|c| c as f64).collect();
    Histogram::new(bin_edges.to_vec(), masses)
}

fn bin_offsets(f: &PointSet, u: &Direction, edges: &[f64], clamp: bool) -> Result<Vec<usize>> {
    let n_bins = edges.len() - 1;
    let (lo, hi) = (edges[0], edges[n_bins]);
    let mut counts = vec![0usize; n_bins];
    for p in f.points() {
        let mut t = line_offset(*p, u);
        if t < lo || t > hi {
            if clamp {
                t = t.clamp(lo, hi);
            } else {
                return Err(Error::OffsetOutOfRange { offset: t, lo, hi });
            }
        }
        let mut b = edges.partition_point(|e| *e <= t);
        b = b.saturating_sub(1);
        if b == n_bins {
            b -= 1; // offset equal to the top edge
        }
        counts[b] += 1;
    }
    Ok(counts)
}

/// How phantom circles are rasterized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CircleStyle {
    /// Ring of one-grid-cell thickness: `| ‖p − c‖ − r | ≤ h/2`.
    Outline,
    /// Filled disk: `‖p − c‖ ≤ r`.
    Disk,
}

/// One circle of a phantom: a centre and a Gaussian random radius
/// (truncated to be positive).
#[derive(Clone, Copy, Debug)]
pub struct CircleSpec {
    pub center: [f64; 2],
    pub mean_radius: f64,
    pub sd_radius: f64,
}

/// Configuration of a random phantom image.
#[derive(Clone, Debug)]
pub struct PhantomConfig {
    pub circles: Vec<CircleSpec>,
    pub grid_spacing: f64,
    /// Lower-left and upper-right corners of the grid.
    pub bbox: ([f64; 2], [f64; 2]),
    pub style: CircleStyle,
}

impl PhantomConfig {
    fn validate(&self) -> Result<()> {
        if self.circles.is_empty() {
            return Err(Error::EmptyInput("phantom has no circles".into()));
        }
        if self
            .circles
            .iter()
            .any(|c| c.mean_radius <= 0.0 || c.sd_radius < 0.0)
        {
            return Err(Error::InvalidParameter(
                "circle radii need mean > 0 and sd >= 0".into(),
            ));
        }
        if self.grid_spacing <= 0.0
            || self.bbox.0[0] >= self.bbox.1[0]
            || self.bbox.0[1] >= self.bbox.1[1]
        {
            return Err(Error::InvalidParameter("degenerate phantom grid".into()));
        }
        Ok(())
    }
}

/// The two phantom families of benchmark scenario 1: five circles of mean
/// radius 1 at `(±2, ±2)` and `(0, 0)` for class 0; class 1 adds a smaller
/// circle (mean radius 1/2) at `(0, 2)`. Grid spacing 0.05, radius sd 1/10.
pub fn scenario1_configs() -> (PhantomConfig, PhantomConfig) {
    let base = five_circle_base(1.0);
    let mut with_extra = base.clone();
    with_extra.circles.push(CircleSpec {
        center: [0.0, 2.0],
        mean_radius: 0.5,
        sd_radius: 0.1,
    });
    (base, with_extra)
}

/// Scenario 2: class 0 as in scenario 1; class 1 has the same five centres
/// but mean radius 1.2.
pub fn scenario2_configs() -> (PhantomConfig, PhantomConfig) {
    (five_circle_base(1.0), five_circle_base(1.2))
}

fn five_circle_base(mean_radius: f64) -> PhantomConfig {
    let centers = [
        [2.0, 2.0],
        [-2.0, 2.0],
        [2.0, -2.0],
        [-2.0, -2.0],
        [0.0, 0.0],
    ];
    PhantomConfig {
        circles: centers
            .iter()
            .map(|&center| CircleSpec {
                center,
                mean_radius,
                sd_radius: 0.1,
            })
            .collect(),
        grid_spacing: 0.05,
        bbox: ([-4.0, -4.0], [4.0, 4.0]),
        style: CircleStyle::Outline,
    }
}

/// Draws one phantom: a positive radius per circle, then every grid point
/// matching some circle under the configured style. Deterministic given
/// the generator state; errors if no grid point matches.
pub fn generate_phantom(cfg: &PhantomConfig, rng: &mut impl Rng) -> Result<PointSet> {
    cfg.validate()?;
    let radii: Vec<f64> = cfg
        .circles
        .iter()
        .map(|c| {
            if c.sd_radius == 0.0 {
                return c.mean_radius;
            }
            let normal = Normal::new(c.mean_radius, c.sd_radius).expect("sd validated");
            loop {
                let r: f64 = normal.sample(rng);
                if r > 0.0 {
                    return r;
                }
            }
        })
        .collect();

    let h = cfg.grid_spacing;
    let (lo, hi) = cfg.bbox;
    let nx = ((hi[0] - lo[0]) / h).floor() as usize + 1;
    let ny = ((hi[1] - lo[1]) / h).floor() as usize + 1;
    let mut points = Vec::new();
    for iy in 0..ny {
        for ix in 0..nx {
            let p = [lo[0] + ix as f64 * h, lo[1] + iy as f64 * h];
            let hit = cfg.circles.iter().zip(&radii).any(|(c, &r)| {
                let dist = ((p[0] - c.center[0]).powi(2) + (p[1] - c.center[1]).powi(2)).sqrt();
                match cfg.style {
                    CircleStyle::Outline => (dist - r).abs() <= h / 2.0,
                    CircleStyle::Disk => dist <= r,
                }
            });
            if hit {
                points.push(p);
            }
        }
    }
    if points.is_empty() {
        return Err(Error::EmptyInput(
            "phantom has no grid points (circles outside the grid?)".into(),
        ));
    }
    PointSet::new(points, h)
}

/// Per-direction k-nearest-neighbour classifier over projected histograms.
#[derive(Clone, Debug)]
pub struct TomoModel {
    directions: Vec<Direction>,
    /// Shared bin edges per direction, spanning the training pool.
    bins: Vec<Vec<f64>>,
    /// `hists[i][j]`: histogram of training image `i` under direction `j`.
    hists: Vec<Vec<Histogram>>,
    labels: Vec<usize>,
    r: usize,
}

impl TomoModel {
    /// Stores the per-direction histograms of all training images.
    ///
    /// Labels must be binary. The neighbour count `r` is forced odd (an
    /// even `r` is bumped to `r + 1`) to rule out vote ties, and must stay
    /// below the number of training images. Bin edges per direction span
    /// the training pool's projected offsets with `bin_count` equal bins.
    pub fn fit(
        train: &[(PointSet, usize)],
        directions: Vec<Direction>,
        bin_count: usize,
        r: usize,
    ) -> Result<Self> {
        if train.is_empty() {
            return Err(Error::EmptyInput("no training images".into()));
        }
        if directions.is_empty() {
            return Err(Error::EmptyInput("no directions".into()));
        }
        if bin_count == 0 {
            return Err(Error::InvalidParameter("bin count must be positive".into()));
        }
        for dir in &directions {
            if dir.dim() != 2 {
                return Err(Error::DimensionMismatch {
                    expected: 2,
                    got: dir.dim(),
                });
            }
        }
        if let Some(&(_, l)) = train.iter().find(|(_, l)| *l > 1) {
            let _ = l;
            return Err(Error::NonBinaryLabels {
                got: train.iter().map(|(_, l)| *l).max().unwrap(),
            });
        }
        let r = if r.is_multiple_of(2) { r + 1 } else { r };
        if r >= train.len() {
            return Err(Error::InvalidParameter(format!(
                "r = {r} neighbours but only {} training images",
                train.len()
            )));
        }

        let bins: Vec<Vec<f64>> = directions
            .iter()
            .map(|dir| {
                let mut lo = f64::INFINITY;
                let mut hi = f64::NEG_INFINITY;
                for (img, _) in train {
                    for p in img.points() {
                        let t = line_offset(*p, dir);
                        lo = lo.min(t);
                        hi = hi.max(t);
                    }
                }
                if hi - lo < 1e-12 {
                    // All offsets equal; one cell around the common value.
                    lo -= 0.5;
                    hi += 0.5;
                }
                linspace(lo, hi, bin_count + 1)
            })
            .collect();

        let hists: Vec<Vec<Histogram>> = train
            .iter()
            .map(|(img, _)| {
                directions
                    .iter()
                    .zip(&bins)
                    .map(|(dir, edges)| xray_histogram(img, dir, edges))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let labels: Vec<usize> = train.iter().map(|(_, l)| *l).collect();

        Ok(TomoModel {
            directions,
            bins,
            hists,
            labels,
            r,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn directions(&self) -> &[Direction] {
        &self.directions
    }

    pub fn n_train(&self) -> usize {
        self.labels.len()
    }

    pub fn bin_edges(&self, direction: usize) -> &[f64] {
        &self.bins[direction]
    }

    /// Classifies an image: per direction, the `r` nearest training
    /// histograms (Mallows L2; distance ties broken by training index)
    /// vote; the final label is 0 iff the mean of the per-direction votes
    /// is below 1/2. Offsets outside a direction's bin range are clamped
    /// to its ends.
    pub fn predict(&self, f: &PointSet) -> usize {
        let mut vote_sum = 0.0;
        for (j, dir) in self.directions.iter().enumerate() {
            let edges = &self.bins[j];
            let counts = bin_offsets(f, dir, edges, true).expect("clamped binning");
            let masses: Vec<f64> = counts.into_iter().map(|c| c as f64).collect();
            let hist = Histogram::new(edges.clone(), masses).expect("image is nonempty");

            let mut dists: Vec<(f64, usize)> = self
                .hists
                .iter()
                .enumerate()
                .map(|(i, hs)| (mallows_l2_histogram(&hist, &hs[j]), i))
                .collect();
            dists.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let ones: usize = dists[..self.r].iter().map(|&(_, i)| self.labels[i]).sum();
            vote_sum += f64::from(2 * ones >= self.r);
        }
        let mean_vote = vote_sum / self.directions.len() as f64;
        usize::from(mean_vote >= 0.5)
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let mut edges: Vec<f64> = (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect();
    // Pin the endpoints so extreme offsets stay inside the range.
    edges[0] = lo;
    edges[n - 1] = hi;
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn img(points: &[[f64; 2]]) -> PointSet {
        PointSet::new(points.to_vec(), 0.1).unwrap()
    }

    #[test]
    fn xray_counts_by_line() {
        let f = img(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]);
        let u = Direction::new(vec![1.0, 0.0]).unwrap();
        // Offsets are the y-values.
        let counts = xray(&f, &u, &[0.0, 1.0], 1e-9);
        assert_eq!(counts, vec![2, 1]);

        let single = img(&[[3.0, 4.0]]);
        let counts = xray(&single, &u, &[4.0], 1e-9);
        assert_eq!(counts, vec![1]);
    }

    #[test]
    fn xray_conservation_over_complete_partition() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let pts: Vec<[f64; 2]> = {
                let mut seen = std::collections::BTreeSet::new();
                while seen.len() < 40 {
                    seen.insert((rng.random_range(0..20i64), rng.random_range(0..20i64)));
                }
                seen.iter()
                    .map(|&(x, y)| [x as f64 * 0.1, y as f64 * 0.1])
                    .collect()
            };
            let f = PointSet::new(pts, 0.1).unwrap();
            let u = crate::projections::random_direction(2, &mut rng);
            // Distinct observed offsets form a complete partition.
            let mut offsets: Vec<f64> = f.points().iter().map(|p| line_offset(*p, &u)).collect();
            offsets.sort_by(|a, b| a.partial_cmp(b).unwrap());
            offsets.dedup_by(|a, b| (*a - *b).abs() <= 1e-9);
            let counts = xray(&f, &u, &offsets, 1e-9);
            assert_eq!(counts.iter().sum::<usize>(), f.len());
        }
    }

    #[test]
    fn histogram_of_offsets() {
        let f = img(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]);
        let u = Direction::new(vec![1.0, 0.0]).unwrap();

        // One bin swallowing everything.
        let h = xray_histogram(&f, &u, &[-10.0, 10.0]).unwrap();
        assert_eq!(h.masses(), &[1.0]);

        // Spec bins [-0.5, 0.5) and [0.5, 1.5): masses (2/3, 1/3).
        let h = xray_histogram(&f, &u, &[-0.5, 0.5, 1.5]).unwrap();
        assert!((h.masses()[0] - 2.0 / 3.0).abs() < 1e-15);
        assert!((h.masses()[1] - 1.0 / 3.0).abs() < 1e-15);

        // Symmetric image, symmetric bins: symmetric masses.
        let sym = img(&[[0.0, -1.0], [0.0, 1.0], [1.0, -1.0], [1.0, 1.0], [0.5, 0.0]]);
        let h = xray_histogram(&sym, &u, &[-1.5, -0.5, 0.5, 1.5]).unwrap();
        assert!((h.masses()[0] - h.masses()[2]).abs() < 1e-15);

        // Out-of-range offsets are an error (with the offset reported).
        let err = xray_histogram(&f, &u, &[-0.5, 0.5]).unwrap_err();
        match err {
            Error::OffsetOutOfRange { offset, .. } => assert_eq!(offset, 1.0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn phantom_circle_point_count() {
        // A fixed-radius circle outline of radius 1 on a 0.05 grid centred
        // on a lattice point: integer enumeration of i^2 + j^2 in
        // [19.5^2, 20.5^2] gives exactly 112 points. The circumference
        // heuristic 2*pi*r/h = 125.7 only holds up to lattice fluctuation
        // (at this resonant alignment the deviation is ~14).
        let cfg = PhantomConfig {
            circles: vec![CircleSpec {
                center: [0.0, 0.0],
                mean_radius: 1.0,
                sd_radius: 0.0,
            }],
            grid_spacing: 0.05,
            bbox: ([-2.0, -2.0], [2.0, 2.0]),
            style: CircleStyle::Outline,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let f = generate_phantom(&cfg, &mut rng).unwrap();

        let oracle = {
            let mut c = 0usize;
            for i in -40i64..=40 {
                for j in -40i64..=40 {
                    let n = (i * i + j * j) as f64;
                    if (380.25..=420.25).contains(&n) {
                        c += 1;
                    }
                }
            }
            c
        };
        assert_eq!(oracle, 112);
        assert_eq!(f.len(), oracle);

        let heuristic = 2.0 * std::f64::consts::PI / 0.05;
        assert!(
            (f.len() as f64 - heuristic).abs() <= 20.0,
            "{} points vs heuristic {heuristic:.1}",
            f.len()
        );
    }

    #[test]
    fn phantom_swap_symmetry_and_disk_style() {
        // sd = 0 and swap-symmetric centres: the point set is symmetric
        // under (x, y) -> (y, x).
        let mut cfg = five_circle_base(1.0);
        cfg.circles.iter_mut().for_each(|c| c.sd_radius = 0.0);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = generate_phantom(&cfg, &mut rng).unwrap();
        let set: std::collections::BTreeSet<(i64, i64)> = f
            .points()
            .iter()
            .map(|p| ((p[0] * 1e6).round() as i64, (p[1] * 1e6).round() as i64))
            .collect();
        for &(x, y) in &set {
            assert!(set.contains(&(y, x)), "missing swap of ({x}, {y})");
        }

        // A disk has many more points than its outline.
        let outline_len = f.len();
        cfg.style = CircleStyle::Disk;
        let disk = generate_phantom(&cfg, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
        assert!(disk.len() > 3 * outline_len);
    }

    #[test]
    fn phantom_scenario_configs() {
        let (c0, c1) = scenario1_configs();
        assert_eq!(c0.circles.len(), 5);
        assert_eq!(c1.circles.len(), 6);
        assert_eq!(c1.circles[5].center, [0.0, 2.0]);
        assert!((c1.circles[5].mean_radius - 0.5).abs() < 1e-15);
        let (c0, c1) = scenario2_configs();
        assert_eq!(c0.circles.len(), 5);
        assert_eq!(c1.circles.len(), 5);
        assert!((c1.circles[0].mean_radius - 1.2).abs() < 1e-15);

        // Circles entirely outside the grid leave nothing.
        let cfg = PhantomConfig {
            circles: vec![CircleSpec {
                center: [100.0, 100.0],
                mean_radius: 1.0,
                sd_radius: 0.0,
            }],
            grid_spacing: 0.05,
            bbox: ([-2.0, -2.0], [2.0, 2.0]),
            style: CircleStyle::Outline,
        };
        assert!(generate_phantom(&cfg, &mut ChaCha8Rng::seed_from_u64(0)).is_err());
    }

    fn axis_pair() -> Vec<Direction> {
        vec![
            Direction::new(vec![1.0, 0.0]).unwrap(),
            Direction::new(vec![0.0, 1.0]).unwrap(),
        ]
    }

    #[test]
    fn predict_recovers_training_image() {
        let a = img(&[[0.0, 0.0], [0.1, 0.0], [0.2, 0.0]]);
        let b = img(&[[0.0, 0.0], [0.0, 0.1], [0.0, 0.2]]);
        let train = vec![(a.clone(), 0), (b.clone(), 1)];
        let model = TomoModel::fit(&train, axis_pair(), 8, 1).unwrap();
        assert_eq!(model.predict(&a), 0);
        assert_eq!(model.predict(&b), 1);
    }

    #[test]
    fn mean_vote_exactly_half_goes_to_one() {
        // F matches class 1 under the first direction and class 0 under
        // the second, so the mean vote is exactly 1/2.
        let a = img(&[[0.0, 0.0], [0.5, 0.0]]); // class 0
        let b = img(&[[0.0, 0.0], [0.0, 0.5]]); // class 1
        let f = img(&[[0.0, 0.0], [0.5, 0.5]]);
        let train = vec![(a, 0), (b, 1)];
        let model = TomoModel::fit(&train, axis_pair(), 4, 1).unwrap();
        assert_eq!(model.predict(&f), 1);
    }

    #[test]
    fn all_zero_votes_give_zero() {
        let a = img(&[[0.0, 0.0], [0.1, 0.1]]);
        let b = img(&[[1.0, 1.0], [1.1, 1.1]]);
        let train = vec![(a.clone(), 0), (b, 1)];
        let model = TomoModel::fit(&train, axis_pair(), 6, 1).unwrap();
        assert_eq!(model.predict(&a), 0);
    }

    #[test]
    fn fit_validations() {
        let a = img(&[[0.0, 0.0]]);
        let train = vec![(a.clone(), 0), (a.clone(), 2)];
        assert!(matches!(
            TomoModel::fit(&train, axis_pair(), 4, 1),
            Err(Error::NonBinaryLabels { .. })
        ));

        // r >= n (after forcing odd).
        let train = vec![(a.clone(), 0), (a.clone(), 1)];
        assert!(TomoModel::fit(&train, axis_pair(), 4, 3).is_err());
        assert!(TomoModel::fit(&train, axis_pair(), 4, 2).is_err()); // bumped to 3

        // Even r is forced odd when it fits.
        let train = vec![(a.clone(), 0), (a.clone(), 1), (a.clone(), 0), (a, 1)];
        let model = TomoModel::fit(&train, axis_pair(), 4, 2).unwrap();
        assert_eq!(model.r(), 3);
    }

    #[test]
    fn training_order_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut images = Vec::new();
        for i in 0..8 {
            let shift = i as f64 * 0.13;
            let pts: Vec<[f64; 2]> = (0..10)
                .map(|k| [shift + 0.1 * k as f64, (k % 3) as f64 * 0.2 + shift])
                .collect();
            images.push((PointSet::new(pts, 0.1).unwrap(), i % 2));
        }
        let dirs: Vec<Direction> = (0..3)
            .map(|_| crate::projections::random_direction(2, &mut rng))
            .collect();
        let model = TomoModel::fit(&images, dirs.clone(), 10, 3).unwrap();

        let mut shuffled = images.clone();
        shuffled.reverse();
        shuffled.swap(0, 3);
        let model_p = TomoModel::fit(&shuffled, dirs, 10, 3).unwrap();

        let probe = img(&[[0.3, 0.3], [0.5, 0.1], [0.9, 0.7]]);
        assert_eq!(model.predict(&probe), model_p.predict(&probe));
    }

    #[test]
    fn rotation_consistency() {
        // Rotating the image and the direction by 90 degrees leaves the
        // offsets unchanged, hence the histogram too.
        let pts: Vec<[f64; 2]> = (0..12)
            .map(|k| [0.1 * k as f64, 0.05 * (k * k % 7) as f64])
            .collect();
        let f = PointSet::new(pts.clone(), 0.1).unwrap();
        let rotated = PointSet::new(pts.iter().map(|p| [-p[1], p[0]]).collect(), 0.1).unwrap();

        let u = Direction::new(vec![3.0, 1.0]).unwrap();
        let c = u.components();
        let ru = Direction::new(vec![-c[1], c[0]]).unwrap();

        let mut offs: Vec<f64> = f.points().iter().map(|p| line_offset(*p, &u)).collect();
        let edges = {
            offs.sort_by(|a, b| a.partial_cmp(b).unwrap());
            linspace(offs[0] - 0.01, offs[offs.len() - 1] + 0.01, 9)
        };
        let h1 = xray_histogram(&f, &u, &edges).unwrap();
        let h2 = xray_histogram(&rotated, &ru, &edges).unwrap();
        assert_eq!(h1.masses(), h2.masses());
    }
}
