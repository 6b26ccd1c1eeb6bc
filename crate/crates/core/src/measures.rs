//! Finitely supported probability measures and distances between them.
//!
//! A [`DiscreteMeasure`] is a list of distinct support points with positive
//! weights summing to one. Support points closer than [`MERGE_TOL`] in
//! sup-norm are treated as a single atom; this keeps pushforwards of lattice
//! supports well-behaved when projection introduces floating-point noise.
//!
//! Distances:
//! - [`tv_distance`] — total variation, `(1/2) Σ |P({x}) − Q({x})|` over the
//!   union of supports;
//! - [`w1_distance_1d`] — 1-D Wasserstein-1, computed exactly by merging the
//!   two quantile step functions;
//! - [`ks_distance_1d`] — Kolmogorov distance between right-continuous CDFs;
//! - [`cvm_distance_1d`] — Cramér–von Mises discrepancy weighted by pooled
//!   jump masses;
//! - [`mallows_l2_histogram`] — L2 distance between the piecewise-linear
//!   quantile functions of two histograms, integrated in closed form.

use std::cmp::Ordering;

use rand::Rng;

use crate::{Error, Result};

/// Points closer than this in sup-norm are canonically merged into one atom.
pub const MERGE_TOL: f64 = 1e-9;

/// A point of `R^d`.
#[derive(Clone, Debug, PartialEq)]
pub struct Point(Vec<f64>);

impl Point {
    /// Creates a point; all coordinates must be finite.
    pub fn new(coords: Vec<f64>) -> Self {
        assert!(!coords.is_empty(), "point must have dimension >= 1");
        assert!(
            coords.iter().all(|c| c.is_finite()),
            "point coordinates must be finite"
        );
        Point(coords)
    }

    /// One-dimensional point.
    pub fn scalar(v: f64) -> Self {
        Point::new(vec![v])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    /// The single coordinate of a 1-D point.
    pub fn value(&self) -> f64 {
        debug_assert_eq!(self.0.len(), 1);
        self.0[0]
    }
}

impl From<Vec<f64>> for Point {
    fn from(coords: Vec<f64>) -> Self {
        Point::new(coords)
    }
}

/// Lexicographic comparison with a per-coordinate tolerance band.
///
/// Returns `Equal` when every coordinate pair is within `tol`, i.e. the
/// points coincide up to sup-norm `tol`. On data whose distinct values are
/// separated by much more than `tol` this is a total order.
pub(crate) fn cmp_points_tol(a: &[f64], b: &[f64], tol: f64) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(b.iter()) {
        if *x < *y - tol {
            return Ordering::Less;
        }
        if *x > *y + tol {
            return Ordering::Greater;
        }
    }
    Ordering::Equal
}

/// A finite collection of observations of common dimension, optionally
/// labelled with class indices.
#[derive(Clone, Debug)]
pub struct Sample {
    rows: Vec<Point>,
    labels: Option<Vec<usize>>,
    dim: usize,
}

impl Sample {
    pub fn new(rows: Vec<Point>) -> Result<Self> {
        Self::build(rows, None)
    }

    pub fn with_labels(rows: Vec<Point>, labels: Vec<usize>) -> Result<Self> {
        Self::build(rows, Some(labels))
    }

    fn build(rows: Vec<Point>, labels: Option<Vec<usize>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyInput("sample has no rows".into()));
        }
        let dim = rows[0].dim();
        for r in &rows {
            if r.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: r.dim(),
                });
            }
        }
        if let Some(ls) = &labels {
            if ls.len() != rows.len() {
                return Err(Error::InvalidParameter(format!(
                    "{} labels for {} rows",
                    ls.len(),
                    rows.len()
                )));
            }
        }
        Ok(Sample { rows, labels, dim })
    }

    pub fn rows(&self) -> &[Point] {
        &self.rows
    }

    pub fn labels(&self) -> Option<&[usize]> {
        self.labels.as_deref()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// A probability measure with finite support.
#[derive(Clone, Debug)]
pub struct DiscreteMeasure {
    /// Atoms sorted by tolerance-lexicographic order of their points.
    atoms: Vec<(Point, f64)>,
    dim: usize,
}

/// Merges atoms whose points coincide up to `tol` (sup-norm), summing
/// weights. The representative of each merged group is its first occurrence
/// in the input order. Zero-weight atoms are dropped.
fn canonicalize(atoms: Vec<(Point, f64)>, tol: f64) -> Result<Vec<(Point, f64)>> {
    let mut indexed: Vec<(usize, Point, f64)> = Vec::with_capacity(atoms.len());
    for (i, (p, w)) in atoms.into_iter().enumerate() {
        if !w.is_finite() || w < 0.0 {
            return Err(Error::InvalidMeasure(format!("weight {w} at atom {i}")));
        }
        if w > 0.0 {
            indexed.push((i, p, w));
        }
    }
    // Stable sort keeps the earliest occurrence first within each group.
    indexed.sort_by(|a, b| cmp_points_tol(a.1.coords(), b.1.coords(), tol));
    let mut merged: Vec<(Point, f64)> = Vec::with_capacity(indexed.len());
    for (_, p, w) in indexed {
        match merged.last_mut() {
            Some(last) if cmp_points_tol(last.0.coords(), p.coords(), tol) == Ordering::Equal => {
                last.1 += w;
            }
            _ => merged.push((p, w)),
        }
    }
    Ok(merged)
}

impl DiscreteMeasure {
    /// Builds a measure from (point, weight) atoms.
    ///
    /// Points within [`MERGE_TOL`] are merged, zero weights dropped, and the
    /// remaining weights must sum to 1 within `1e-12`.
    pub fn from_atoms(atoms: Vec<(Point, f64)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::EmptyInput("measure has no atoms".into()));
        }
        let dim = atoms[0].0.dim();
        for (p, _) in &atoms {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.dim(),
                });
            }
        }
        let merged = canonicalize(atoms, MERGE_TOL)?;
        if merged.is_empty() {
            return Err(Error::InvalidMeasure("all atoms have zero weight".into()));
        }
        let total: f64 = merged.iter().map(|(_, w)| w).sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidMeasure(format!(
                "weights sum to {total}, expected 1"
            )));
        }
        Ok(DiscreteMeasure { atoms: merged, dim })
    }

    /// Point mass at `p`.
    pub fn dirac(p: Point) -> Self {
        let dim = p.dim();
        DiscreteMeasure {
            atoms: vec![(p, 1.0)],
            dim,
        }
    }

    /// Uniform measure on a list of (distinct) points.
    pub fn uniform_on(points: Vec<Point>) -> Result<Self> {
        let n = points.len();
        DiscreteMeasure::from_atoms(points.into_iter().map(|p| (p, 1.0 / n as f64)).collect())
    }

    /// Internal constructor for atoms already canonical (sorted, distinct,
    /// positive, summing to 1 up to rounding).
    pub(crate) fn from_canonical(atoms: Vec<(Point, f64)>, dim: usize) -> Self {
        debug_assert!(!atoms.is_empty());
        DiscreteMeasure { atoms, dim }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Atoms in canonical order.
    pub fn atoms(&self) -> &[(Point, f64)] {
        &self.atoms
    }

    /// Number of support points.
    pub fn support_size(&self) -> usize {
        self.atoms.len()
    }

    /// Mass of the atom at `p`, or 0 if `p` is not in the support
    /// (up to [`MERGE_TOL`]).
    pub fn mass_at(&self, p: &Point) -> f64 {
        match self
            .atoms
            .binary_search_by(|(q, _)| cmp_points_tol(q.coords(), p.coords(), MERGE_TOL))
        {
            Ok(i) => self.atoms[i].1,
            Err(_) => 0.0,
        }
    }

    /// `(value, weight)` pairs of a 1-D measure, in increasing value order.
    pub fn atoms_1d(&self) -> Vec<(f64, f64)> {
        debug_assert_eq!(self.dim, 1);
        self.atoms.iter().map(|(p, w)| (p.value(), *w)).collect()
    }

    /// Draws `n` points by inverse-CDF sampling over the atoms.
    pub fn sample_n(&self, n: usize, rng: &mut impl Rng) -> Vec<Point> {
        let mut cdf = Vec::with_capacity(self.atoms.len());
        let mut acc = 0.0;
        for (_, w) in &self.atoms {
            acc += w;
            cdf.push(acc);
        }
        (0..n)
            .map(|_| {
                let u: f64 = rng.random();
                let i = cdf.partition_point(|c| *c < u).min(self.atoms.len() - 1);
                self.atoms[i].0.clone()
            })
            .collect()
    }
}

/// Empirical measure of a sample: each distinct row (up to `merge_tol` in
/// sup-norm) becomes an atom with weight `count / n`. The representative of
/// a merged group is its first occurrence.
pub fn empirical_measure(s: &Sample, merge_tol: f64) -> DiscreteMeasure {
    let n = s.len() as f64;
    let atoms = s
        .rows()
        .iter()
        .map(|p| (p.clone(), 1.0 / n))
        .collect::<Vec<_>>();
    let merged = canonicalize(atoms, merge_tol).expect("sample weights are positive");
    DiscreteMeasure::from_canonical(merged, s.dim())
}

/// Total variation distance `(1/2) Σ_x |P({x}) − Q({x})|` over the union of
/// the supports. Always in `[0, 1]`.
pub fn tv_distance(p: &DiscreteMeasure, q: &DiscreteMeasure) -> Result<f64> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            got: q.dim(),
        });
    }
    let pa = p.atoms();
    let qa = q.atoms();
    let (mut i, mut j) = (0, 0);
    let mut acc = 0.0;
    while i < pa.len() && j < qa.len() {
        match cmp_points_tol(pa[i].0.coords(), qa[j].0.coords(), MERGE_TOL) {
            Ordering::Less => {
                acc += pa[i].1;
                i += 1;
            }
            Ordering::Greater => {
                acc += qa[j].1;
                j += 1;
            }
            Ordering::Equal => {
                acc += (pa[i].1 - qa[j].1).abs();
                i += 1;
                j += 1;
            }
        }
    }
    acc += pa[i..].iter().map(|(_, w)| w).sum::<f64>();
    acc += qa[j..].iter().map(|(_, w)| w).sum::<f64>();
    Ok((acc / 2.0).min(1.0))
}

fn require_1d(m: &DiscreteMeasure) -> Result<()> {
    if m.dim() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: m.dim(),
        });
    }
    Ok(())
}

/// Walks the merged support of two sorted 1-D atom lists, calling `visit`
/// with (value, p-jump, q-jump, cdf_p, cdf_q) after both CDFs have absorbed
/// the jumps at that value (right-continuous convention).
fn walk_cdfs_1d(
    pa: &[(f64, f64)],
    qa: &[(f64, f64)],
    mut visit: impl FnMut(f64, f64, f64, f64, f64),
) {
    let (mut i, mut j) = (0, 0);
    let (mut fp, mut fq) = (0.0, 0.0);
    while i < pa.len() || j < qa.len() {
        let take_p = j >= qa.len() || (i < pa.len() && pa[i].0 <= qa[j].0 + MERGE_TOL);
        let take_q = i >= pa.len() || (j < qa.len() && qa[j].0 <= pa[i].0 + MERGE_TOL);
        let x = if take_p { pa[i].0 } else { qa[j].0 };
        let mut jp = 0.0;
        let mut jq = 0.0;
        if take_p {
            jp = pa[i].1;
            i += 1;
        }
        if take_q {
            jq = qa[j].1;
            j += 1;
        }
        fp += jp;
        fq += jq;
        visit(x, jp, jq, fp, fq);
    }
}

/// Exact 1-D Wasserstein-1 distance, `∫_0^1 |F^{-1}(t) − G^{-1}(t)| dt`,
/// computed as the area between the two CDFs.
pub fn w1_distance_1d(p: &DiscreteMeasure, q: &DiscreteMeasure) -> Result<f64> {
    require_1d(p)?;
    require_1d(q)?;
    Ok(w1_sorted(&p.atoms_1d(), &q.atoms_1d()))
}

/// Kolmogorov distance `sup_x |F_P(x) − F_Q(x)|`, evaluated at the support
/// points of either measure.
pub fn ks_distance_1d(p: &DiscreteMeasure, q: &DiscreteMeasure) -> Result<f64> {
    require_1d(p)?;
    require_1d(q)?;
    Ok(ks_sorted(&p.atoms_1d(), &q.atoms_1d()))
}

/// Cramér–von Mises discrepancy: `Σ_x (F_P(x) − F_Q(x))^2 (P({x})+Q({x}))/2`
/// over the union of supports. Zero iff the CDFs coincide.
pub fn cvm_distance_1d(p: &DiscreteMeasure, q: &DiscreteMeasure) -> Result<f64> {
    require_1d(p)?;
    require_1d(q)?;
    Ok(cvm_sorted(&p.atoms_1d(), &q.atoms_1d()))
}

pub(crate) fn w1_sorted(pa: &[(f64, f64)], qa: &[(f64, f64)]) -> f64 {
    let mut acc = 0.0;
    let mut prev: Option<(f64, f64)> = None; // (x, |F-G| after x)
    walk_cdfs_1d(pa, qa, |x, _, _, fp, fq| {
        if let Some((px, gap)) = prev {
            acc += gap * (x - px);
        }
        prev = Some((x, (fp - fq).abs()));
    });
    acc
}

pub(crate) fn ks_sorted(pa: &[(f64, f64)], qa: &[(f64, f64)]) -> f64 {
    let mut sup: f64 = 0.0;
    walk_cdfs_1d(pa, qa, |_, _, _, fp, fq| {
        sup = sup.max((fp - fq).abs());
    });
    sup.min(1.0)
}

pub(crate) fn cvm_sorted(pa: &[(f64, f64)], qa: &[(f64, f64)]) -> f64 {
    let mut acc = 0.0;
    walk_cdfs_1d(pa, qa, |_, jp, jq, fp, fq| {
        acc += (fp - fq).powi(2) * (jp + jq) / 2.0;
    });
    acc
}

pub(crate) fn tv_sorted(pa: &[(f64, f64)], qa: &[(f64, f64)]) -> f64 {
    let mut acc = 0.0;
    walk_cdfs_1d(pa, qa, |_, jp, jq, _, _| {
        acc += (jp - jq).abs();
    });
    (acc / 2.0).min(1.0)
}

/// A one-dimensional histogram: strictly increasing bin edges with
/// normalized nonnegative masses. Mass is uniform within each bin.
#[derive(Clone, Debug)]
pub struct Histogram {
    edges: Vec<f64>,
    masses: Vec<f64>,
}

impl Histogram {
    /// Builds a histogram; masses are normalized to total 1.
    pub fn new(edges: Vec<f64>, masses: Vec<f64>) -> Result<Self> {
        if edges.len() < 2 {
            return Err(Error::EmptyInput("histogram needs at least one bin".into()));
        }
        if masses.len() != edges.len() - 1 {
            return Err(Error::InvalidParameter(format!(
                "{} masses for {} edges",
                masses.len(),
                edges.len()
            )));
        }
        if edges.windows(2).any(|w| w[0] >= w[1]) || edges.iter().any(|e| !e.is_finite()) {
            return Err(Error::InvalidParameter(
                "bin edges must be finite and strictly increasing".into(),
            ));
        }
        if masses.iter().any(|m| !m.is_finite() || *m < 0.0) {
            return Err(Error::InvalidMeasure(
                "negative or non-finite bin mass".into(),
            ));
        }
        let total: f64 = masses.iter().sum();
        if total <= 0.0 {
            return Err(Error::InvalidMeasure(
                "histogram has zero total mass".into(),
            ));
        }
        let masses = masses.into_iter().map(|m| m / total).collect();
        Ok(Histogram { edges, masses })
    }

    pub fn edges(&self) -> &[f64] {
        &self.edges
    }

    pub fn masses(&self) -> &[f64] {
        &self.masses
    }

    pub fn n_bins(&self) -> usize {
        self.masses.len()
    }

    /// Positive-mass bins as (cumulative start, cumulative end, lo, hi).
    fn segments(&self) -> Vec<(f64, f64, f64, f64)> {
        let mut out = Vec::with_capacity(self.masses.len());
        let mut acc = 0.0;
        for (j, &m) in self.masses.iter().enumerate() {
            if m > 0.0 {
                out.push((acc, acc + m, self.edges[j], self.edges[j + 1]));
                acc += m;
            }
        }
        if let Some(last) = out.last_mut() {
            last.1 = 1.0; // absorb rounding in the final cumulative value
        }
        out
    }

    /// Quantile function (piecewise linear, mass uniform within bins).
    pub fn quantile(&self, t: f64) -> f64 {
        let t = t.clamp(0.0, 1.0);
        let segs = self.segments();
        for &(c0, c1, lo, hi) in &segs {
            if t <= c1 {
                return lo + (t - c0) / (c1 - c0) * (hi - lo);
            }
        }
        segs.last().map(|s| s.3).unwrap()
    }
}

/// Mallows L2 distance between histograms:
/// `(∫_0^1 (F^{-1}(t) − G^{-1}(t))^2 dt)^{1/2}` with piecewise-linear
/// quantile functions, integrated exactly over the common refinement of the
/// cumulative-mass breakpoints.
pub fn mallows_l2_histogram(h1: &Histogram, h2: &Histogram) -> f64 {
    let s1 = h1.segments();
    let s2 = h2.segments();
    let (mut i, mut j) = (0usize, 0usize);
    let mut t = 0.0;
    let mut acc = 0.0;
    while i < s1.len() && j < s2.len() {
        let (c10, c11, lo1, hi1) = s1[i];
        let (c20, c21, lo2, hi2) = s2[j];
        let t_next = c11.min(c21);
        if t_next > t {
            // On [t, t_next] both quantiles are linear: a + b * s.
            let b1 = (hi1 - lo1) / (c11 - c10);
            let a1 = lo1 - b1 * c10;
            let b2 = (hi2 - lo2) / (c21 - c20);
            let a2 = lo2 - b2 * c20;
            let da = a1 - a2;
            let db = b1 - b2;
            // ∫ (da + db s)^2 ds over [t, t_next]
            let dt = t_next - t;
            acc += da * da * dt
                + da * db * (t_next * t_next - t * t)
                + db * db * (t_next.powi(3) - t.powi(3)) / 3.0;
            t = t_next;
        }
        if c11 <= t_next + f64::EPSILON {
            i += 1;
        }
        if c21 <= t_next + f64::EPSILON {
            j += 1;
        }
    }
    acc.max(0.0).sqrt()
}

/// Checks the sandwich `d_min(E)·d_TV ≤ d_W1 ≤ diam(E)·d_TV` for 1-D
/// measures, where `E` is the union of the supports. Returns whether each
/// inequality holds within a `1e-10` slack.
pub fn metric_sandwich_check(p: &DiscreteMeasure, q: &DiscreteMeasure) -> Result<(bool, bool)> {
    require_1d(p)?;
    require_1d(q)?;
    let mut support: Vec<f64> = p
        .atoms_1d()
        .iter()
        .chain(q.atoms_1d().iter())
        .map(|(x, _)| *x)
        .collect();
    support.sort_by(|a, b| a.partial_cmp(b).unwrap());
    support.dedup_by(|a, b| (*a - *b).abs() <= MERGE_TOL);
    let d_min = support
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(f64::INFINITY, f64::min);
    let d_min = if d_min.is_finite() { d_min } else { 0.0 };
    let diam = support.last().unwrap() - support.first().unwrap();
    let tv = tv_distance(p, q)?;
    let w1 = w1_distance_1d(p, q)?;
    let lhs_ok = d_min * tv <= w1 + 1e-10;
    let rhs_ok = w1 <= diam * tv + 1e-10;
    Ok((lhs_ok, rhs_ok))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m1(atoms: &[(f64, f64)]) -> DiscreteMeasure {
        DiscreteMeasure::from_atoms(atoms.iter().map(|&(x, w)| (Point::scalar(x), w)).collect())
            .unwrap()
    }

    /// Greedy transport in 1-D (optimal because the cost is |x - y|):
    /// an independent oracle for `w1_distance_1d`.
    fn w1_transport_oracle(p: &DiscreteMeasure, q: &DiscreteMeasure) -> f64 {
        let pa = p.atoms_1d();
        let qa = q.atoms_1d();
        let (mut i, mut j) = (0, 0);
        let (mut wi, mut wj) = (pa[0].1, qa[0].1);
        let mut cost = 0.0;
        loop {
            let f = wi.min(wj);
            cost += f * (pa[i].0 - qa[j].0).abs();
            wi -= f;
            wj -= f;
            if wi <= 1e-15 {
                i += 1;
                if i >= pa.len() {
                    break;
                }
                wi = pa[i].1;
            }
            if wj <= 1e-15 {
                j += 1;
                if j >= qa.len() {
                    break;
                }
                wj = qa[j].1;
            }
        }
        cost
    }

    /// Midpoint-rule quadrature of the squared quantile difference.
    fn mallows_quadrature(h1: &Histogram, h2: &Histogram, nodes: usize) -> f64 {
        let mut acc = 0.0;
        for i in 0..nodes {
            let t = (i as f64 + 0.5) / nodes as f64;
            let d = h1.quantile(t) - h2.quantile(t);
            acc += d * d;
        }
        (acc / nodes as f64).sqrt()
    }

    #[test]
    fn tv_identity_and_disjoint() {
        let p = m1(&[(0.0, 0.5), (1.0, 0.5)]);
        assert_eq!(tv_distance(&p, &p).unwrap(), 0.0);
        let q = m1(&[(0.0, 1.0)]);
        assert!((tv_distance(&p, &q).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn tv_uniform_square_vs_corner_mass() {
        let cube: Vec<Point> = [(0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (1.0, 1.0)]
            .iter()
            .map(|&(a, b)| Point::new(vec![a, b]))
            .collect();
        let p = DiscreteMeasure::uniform_on(cube).unwrap();
        let q = DiscreteMeasure::dirac(Point::new(vec![0.0, 0.0]));
        assert!((tv_distance(&p, &q).unwrap() - 0.75).abs() < 1e-15);
    }

    #[test]
    fn tv_dimension_mismatch_errors() {
        let p = m1(&[(0.0, 1.0)]);
        let q = DiscreteMeasure::dirac(Point::new(vec![0.0, 0.0]));
        assert!(tv_distance(&p, &q).is_err());
    }

    #[test]
    fn w1_point_masses() {
        let p = DiscreteMeasure::dirac(Point::scalar(-1.5));
        let q = DiscreteMeasure::dirac(Point::scalar(2.0));
        assert!((w1_distance_1d(&p, &q).unwrap() - 3.5).abs() < 1e-15);
        assert_eq!(w1_distance_1d(&p, &p).unwrap(), 0.0);
    }

    #[test]
    fn w1_quantile_gap_case() {
        // Quantile functions differ exactly on t in (0.25, 0.5).
        let p = m1(&[(0.0, 0.5), (1.0, 0.5)]);
        let q = m1(&[(0.0, 0.25), (1.0, 0.75)]);
        assert!((w1_distance_1d(&p, &q).unwrap() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn ks_cases() {
        let d0 = DiscreteMeasure::dirac(Point::scalar(0.0));
        let d1 = DiscreteMeasure::dirac(Point::scalar(1.0));
        assert_eq!(ks_distance_1d(&d0, &d1).unwrap(), 1.0);
        assert_eq!(ks_distance_1d(&d0, &d0).unwrap(), 0.0);
        let p = m1(&[(0.0, 0.5), (1.0, 0.5)]);
        let q = m1(&[(0.0, 0.25), (1.0, 0.75)]);
        assert!((ks_distance_1d(&p, &q).unwrap() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn cvm_cases() {
        let p = m1(&[(0.0, 0.3), (1.0, 0.4), (2.5, 0.3)]);
        let q = m1(&[(0.0, 0.5), (1.5, 0.2), (2.5, 0.3)]);
        // Brute-force: CDFs evaluated at every union support point.
        let xs = [0.0, 1.0, 1.5, 2.5];
        let cdf = |m: &DiscreteMeasure, x: f64| {
            m.atoms_1d()
                .iter()
                .filter(|(v, _)| *v <= x + 1e-12)
                .map(|(_, w)| w)
                .sum::<f64>()
        };
        let jump = |m: &DiscreteMeasure, x: f64| m.mass_at(&Point::scalar(x));
        let expected: f64 = xs
            .iter()
            .map(|&x| (cdf(&p, x) - cdf(&q, x)).powi(2) * (jump(&p, x) + jump(&q, x)) / 2.0)
            .sum();
        assert!((cvm_distance_1d(&p, &q).unwrap() - expected).abs() < 1e-14);
        assert_eq!(cvm_distance_1d(&p, &p).unwrap(), 0.0);
        let d0 = DiscreteMeasure::dirac(Point::scalar(0.0));
        let d1 = DiscreteMeasure::dirac(Point::scalar(1.0));
        assert!(cvm_distance_1d(&d0, &d1).unwrap() > 0.0);
    }

    #[test]
    fn empirical_counts_and_merging() {
        let s = Sample::new(vec![
            Point::scalar(0.0),
            Point::scalar(0.0),
            Point::scalar(1.0),
        ])
        .unwrap();
        let m = empirical_measure(&s, MERGE_TOL);
        assert_eq!(m.support_size(), 2);
        assert!((m.mass_at(&Point::scalar(0.0)) - 2.0 / 3.0).abs() < 1e-15);
        assert!((m.mass_at(&Point::scalar(1.0)) - 1.0 / 3.0).abs() < 1e-15);

        // n copies of a point collapse to a dirac.
        let s = Sample::new(vec![Point::scalar(2.0); 7]).unwrap();
        let m = empirical_measure(&s, MERGE_TOL);
        assert_eq!(m.support_size(), 1);

        // Two points closer than the tolerance become one atom, represented
        // by the first occurrence.
        let s = Sample::new(vec![Point::scalar(1.0), Point::scalar(1.0 + 1e-12)]).unwrap();
        let m = empirical_measure(&s, 1e-9);
        assert_eq!(m.support_size(), 1);
        assert_eq!(m.atoms()[0].0.value(), 1.0);
    }

    #[test]
    fn zero_mass_atoms_dropped() {
        let m =
            DiscreteMeasure::from_atoms(vec![(Point::scalar(0.0), 0.0), (Point::scalar(1.0), 1.0)])
                .unwrap();
        assert_eq!(m.support_size(), 1);
    }

    #[test]
    fn invalid_weights_rejected() {
        assert!(DiscreteMeasure::from_atoms(vec![(Point::scalar(0.0), 0.9)]).is_err());
        assert!(DiscreteMeasure::from_atoms(vec![
            (Point::scalar(0.0), -0.1),
            (Point::scalar(1.0), 1.1)
        ])
        .is_err());
    }

    #[test]
    fn mallows_trivial_cases() {
        let h = Histogram::new(vec![0.0, 1.0], vec![1.0]).unwrap();
        assert_eq!(mallows_l2_histogram(&h, &h), 0.0);
        // Shifted uniform: quantile functions differ by the constant shift.
        let c = 0.37;
        let h2 = Histogram::new(vec![c, 1.0 + c], vec![1.0]).unwrap();
        assert!((mallows_l2_histogram(&h, &h2) - c).abs() < 1e-12);
        // [0,1] vs [0,2]: ∫ t^2 dt = 1/3.
        let h3 = Histogram::new(vec![0.0, 2.0], vec![1.0]).unwrap();
        let expected = (1.0_f64 / 3.0).sqrt();
        assert!((mallows_l2_histogram(&h, &h3) - expected).abs() < 1e-12);
        assert!((mallows_quadrature(&h, &h3, 100_000) - expected).abs() < 1e-8);
    }

    #[test]
    fn mallows_handles_zero_mass_bins() {
        let h1 = Histogram::new(vec![0.0, 1.0, 2.0, 3.0], vec![0.5, 0.0, 0.5]).unwrap();
        let h2 = Histogram::new(vec![0.0, 1.0, 2.0, 3.0], vec![0.2, 0.3, 0.5]).unwrap();
        let exact = mallows_l2_histogram(&h1, &h2);
        let quad = mallows_quadrature(&h1, &h2, 100_000);
        assert!((exact - quad).abs() < 1e-6, "exact {exact} vs quad {quad}");
    }

    #[test]
    fn sandwich_two_point_support_is_tight() {
        // On support {0,1}: d_min = diam = 1 and W1 = TV exactly.
        let p = m1(&[(0.0, 0.3), (1.0, 0.7)]);
        let q = m1(&[(0.0, 0.8), (1.0, 0.2)]);
        let tv = tv_distance(&p, &q).unwrap();
        let w1 = w1_distance_1d(&p, &q).unwrap();
        assert!((tv - w1).abs() < 1e-15);
        let (lhs, rhs) = metric_sandwich_check(&p, &q).unwrap();
        assert!(lhs && rhs);
    }

    #[test]
    fn sandwich_identity() {
        let p = m1(&[(0.0, 0.5), (2.0, 0.5)]);
        let (lhs, rhs) = metric_sandwich_check(&p, &p).unwrap();
        assert!(lhs && rhs);
    }

    proptest! {
        #[test]
        fn tv_is_symmetric_and_triangular(
            wa in proptest::collection::vec(0.01..1.0f64, 1..6),
            wb in proptest::collection::vec(0.01..1.0f64, 1..6),
            wc in proptest::collection::vec(0.01..1.0f64, 1..6),
        ) {
            let mk = |ws: &[f64]| {
                let total: f64 = ws.iter().sum();
                m1(&ws.iter().enumerate().map(|(i, w)| (i as f64, w / total)).collect::<Vec<_>>())
            };
            let (a, b, c) = (mk(&wa), mk(&wb), mk(&wc));
            let dab = tv_distance(&a, &b).unwrap();
            let dba = tv_distance(&b, &a).unwrap();
            prop_assert!((dab - dba).abs() < 1e-15);
            let dac = tv_distance(&a, &c).unwrap();
            let dcb = tv_distance(&c, &b).unwrap();
            prop_assert!(dab <= dac + dcb + 1e-12);
            prop_assert!((0.0..=1.0).contains(&dab));
        }

        #[test]
        fn w1_matches_transport_oracle(
            xs in proptest::collection::vec(-5.0..5.0f64, 1..=6),
            ws in proptest::collection::vec(0.05..1.0f64, 1..=6),
            ys in proptest::collection::vec(-5.0..5.0f64, 1..=6),
            vs in proptest::collection::vec(0.05..1.0f64, 1..=6),
        ) {
            let mk = |xs: &[f64], ws: &[f64]| {
                let k = xs.len().min(ws.len());
                let total: f64 = ws[..k].iter().sum();
                DiscreteMeasure::from_atoms(
                    xs[..k].iter().zip(&ws[..k]).map(|(&x, &w)| (Point::scalar(x), w / total)).collect(),
                ).unwrap()
            };
            let p = mk(&xs, &ws);
            let q = mk(&ys, &vs);
            let exact = w1_distance_1d(&p, &q).unwrap();
            let oracle = w1_transport_oracle(&p, &q);
            prop_assert!((exact - oracle).abs() < 1e-10, "exact {} oracle {}", exact, oracle);
        }
    }
}
