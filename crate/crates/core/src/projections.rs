//! Subspaces, projections of points and measures, families of subspaces
//! whose orthocomplements intersect pairwise only at the origin, good single
//! directions, and the projection bound on total variation.
//!
//! The central facts implemented here:
//!
//! - projecting a pair of measures can only shrink their total variation
//!   distance;
//! - if `Q` has at most `k` atoms and `H_1, …, H_{k+1}` satisfy
//!   `H_i^⊥ ∩ H_j^⊥ = {0}` for `i ≠ j`, then
//!   `d_TV(P, Q) ≤ Σ_j d_TV(P_{H_j}, Q_{H_j})` for every `P`
//!   ([`quantitative_bound`]);
//! - if `P, Q` live on a known finite set `E` and `H^⊥ ∩ (E − E) = {0}`,
//!   then `d_TV(P, Q) = d_TV(P_H, Q_H)` — one good projection preserves the
//!   distance exactly ([`is_good_direction`]).

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::measures::{tv_distance, DiscreteMeasure, Point};
use crate::{Error, Result};

/// Rank-decision tolerance: a stack of orthonormal complement bases is
/// considered full-rank when its smallest singular value exceeds this.
pub const RANK_TOL: f64 = 1e-8;

/// A projected difference vector shorter than this counts as zero when
/// deciding whether a direction separates a support.
pub const GOOD_DIRECTION_TOL: f64 = 1e-9;

/// A unit vector in `R^d`.
#[derive(Clone, Debug)]
pub struct Direction {
    u: Vec<f64>,
}

impl Direction {
    /// Normalizes `v` to unit length; errors on (near-)zero input.
    pub fn new(v: Vec<f64>) -> Result<Self> {
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !norm.is_finite() || norm < 1e-12 {
            return Err(Error::InvalidParameter(
                "direction vector must be nonzero".into(),
            ));
        }
        Ok(Direction {
            u: v.into_iter().map(|x| x / norm).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.u.len()
    }

    pub fn components(&self) -> &[f64] {
        &self.u
    }

    /// Scalar projection `⟨u, x⟩`.
    pub fn project(&self, x: &Point) -> f64 {
        debug_assert_eq!(self.u.len(), x.dim());
        dot(&self.u, x.coords())
    }

    /// The spanned line as a 1-dimensional [`Subspace`].
    pub fn as_subspace(&self) -> Subspace {
        Subspace {
            basis: vec![self.u.clone()],
            ambient_dim: self.u.len(),
        }
    }
}

/// An `m`-dimensional linear subspace of `R^d`, stored as an orthonormal
/// basis (`m` columns of length `d`).
#[derive(Clone, Debug)]
pub struct Subspace {
    basis: Vec<Vec<f64>>,
    ambient_dim: usize,
}

impl Subspace {
    /// Builds a subspace from basis columns, validating orthonormality
    /// within `1e-10`.
    pub fn new(basis: Vec<Vec<f64>>) -> Result<Self> {
        if basis.is_empty() {
            return Err(Error::EmptyInput(
                "subspace needs at least one basis vector".into(),
            ));
        }
        let d = basis[0].len();
        if basis.len() > d {
            return Err(Error::InvalidParameter(format!(
                "{} basis vectors in dimension {d}",
                basis.len()
            )));
        }
        for col in &basis {
            if col.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: col.len(),
                });
            }
        }
        for i in 0..basis.len() {
            for j in i..basis.len() {
                let g = dot(&basis[i], &basis[j]);
                let target = if i == j { 1.0 } else { 0.0 };
                if (g - target).abs() > 1e-10 {
                    return Err(Error::InvalidParameter(format!(
                        "basis not orthonormal: <b{i}, b{j}> = {g}"
                    )));
                }
            }
        }
        Ok(Subspace {
            basis,
            ambient_dim: d,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<f64>] {
        &self.basis
    }

    /// Coordinates of the orthogonal projection of `x`, in the basis of the
    /// subspace (a vector of length `dim()`).
    pub fn project_point(&self, x: &Point) -> Result<Point> {
        if x.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: x.dim(),
            });
        }
        Ok(Point::new(
            self.basis.iter().map(|b| dot(b, x.coords())).collect(),
        ))
    }

    /// Pushforward of a measure: atoms are projected, images that coincide
    /// (up to the canonical merge tolerance) are merged with their weights
    /// summed. Total mass is preserved.
    pub fn project_measure(&self, p: &DiscreteMeasure) -> Result<DiscreteMeasure> {
        if p.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: p.dim(),
            });
        }
        let atoms: Vec<(Point, f64)> = p
            .atoms()
            .iter()
            .map(|(x, w)| (self.project_point(x).expect("dimension checked"), *w))
            .collect();
        // Weights already sum to 1; merging only adds them together.
        DiscreteMeasure::from_atoms(atoms)
    }

    /// An orthonormal basis of the orthocomplement, found by completing the
    /// basis with standard basis vectors.
    fn orthocomplement(&self) -> Vec<Vec<f64>> {
        let d = self.ambient_dim;
        let mut full = self.basis.clone();
        for k in 0..d {
            if full.len() == d {
                break;
            }
            let mut e = vec![0.0; d];
            e[k] = 1.0;
            orthogonalize_against(&mut e, &full);
            let norm = dot(&e, &e).sqrt();
            if norm > 1e-10 {
                e.iter_mut().for_each(|x| *x /= norm);
                full.push(e);
            }
        }
        debug_assert_eq!(full.len(), d);
        full.split_off(self.basis.len())
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

/// Subtracts from `v` its components along each of `basis` (applied twice
/// for re-orthogonalization).
fn orthogonalize_against(v: &mut [f64], basis: &[Vec<f64>]) {
    for _ in 0..2 {
        for b in basis {
            let c = dot(v, b);
            for (vi, bi) in v.iter_mut().zip(b.iter()) {
                *vi -= c * bi;
            }
        }
    }
}

/// Smallest singular value of the matrix whose columns are `cols`, computed
/// as the square root of the smallest eigenvalue of the Gram matrix
/// (cyclic Jacobi iteration).
fn smallest_singular_value(cols: &[Vec<f64>]) -> f64 {
    let r = cols.len();
    let mut g = vec![0.0; r * r];
    for i in 0..r {
        for j in 0..r {
            g[i * r + j] = dot(&cols[i], &cols[j]);
        }
    }
    symmetric_eigen_min(&mut g, r).max(0.0).sqrt()
}

/// Smallest eigenvalue of a symmetric matrix by cyclic Jacobi rotations.
fn symmetric_eigen_min(a: &mut [f64], n: usize) -> f64 {
    if n == 1 {
        return a[0];
    }
    for _sweep in 0..64 {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[p * n + q] * a[p * n + q];
            }
        }
        if off.sqrt() < 1e-14 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i * n + i]).fold(f64::INFINITY, f64::min)
}

/// A direction drawn uniformly on the unit sphere (normalized standard
/// Gaussian vector). Deterministic given the generator state.
pub fn random_direction(d: usize, rng: &mut impl Rng) -> Direction {
    assert!(d >= 1, "dimension must be at least 1");
    loop {
        let v: Vec<f64> = (0..d).map(|_| StandardNormal.sample(rng)).collect();
        if let Ok(dir) = Direction::new(v) {
            return dir;
        }
    }
}

/// A random `m`-dimensional subspace of `R^d`: modified Gram–Schmidt with
/// re-orthogonalization applied to a `d × m` Gaussian matrix. Degenerate
/// draws (rank < m) are redrawn.
pub fn random_subspace(d: usize, m: usize, rng: &mut impl Rng) -> Result<Subspace> {
    if m < 1 || m > d {
        return Err(Error::InvalidParameter(format!(
            "subspace dimension {m} not in 1..={d}"
        )));
    }
    'redraw: loop {
        let mut cols: Vec<Vec<f64>> = Vec::with_capacity(m);
        for _ in 0..m {
            let mut v: Vec<f64> = (0..d).map(|_| StandardNormal.sample(rng)).collect();
            orthogonalize_against(&mut v, &cols);
            let norm = dot(&v, &v).sqrt();
            if norm < 1e-12 {
                continue 'redraw;
            }
            v.iter_mut().for_each(|x| *x /= norm);
            cols.push(v);
        }
        return Ok(Subspace {
            basis: cols,
            ambient_dim: d,
        });
    }
}

/// Decides whether `H_i^⊥ ∩ H_j^⊥ = {0}`.
///
/// True iff the concatenation of orthonormal bases of the two
/// orthocomplements has full column rank, decided by smallest singular
/// value > `tol`. Automatically false when the complement dimensions sum to
/// more than the ambient dimension.
pub fn validate_heppes_pair(hi: &Subspace, hj: &Subspace, tol: f64) -> bool {
    debug_assert_eq!(hi.ambient_dim(), hj.ambient_dim());
    let d = hi.ambient_dim();
    let r = (d - hi.dim()) + (d - hj.dim());
    if r > d {
        return false;
    }
    if r == 0 {
        return true; // both complements are {0}
    }
    let mut cols = hi.orthocomplement();
    cols.extend(hj.orthocomplement());
    smallest_singular_value(&cols) > tol
}

/// A family of `k + 1` subspaces of common ambient dimension whose
/// orthocomplements pairwise intersect only at the origin. Such a family
/// determines every measure with at most `k` atoms from its projections.
#[derive(Clone, Debug)]
pub struct HeppesFamily {
    subspaces: Vec<Subspace>,
}

impl HeppesFamily {
    /// Validates the pairwise condition over the given subspaces.
    pub fn new(subspaces: Vec<Subspace>) -> Result<Self> {
        if subspaces.len() < 2 {
            return Err(Error::InvalidParameter(
                "a family needs at least two subspaces".into(),
            ));
        }
        let d = subspaces[0].ambient_dim();
        for s in &subspaces {
            if s.ambient_dim() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: s.ambient_dim(),
                });
            }
        }
        for i in 0..subspaces.len() {
            for j in (i + 1)..subspaces.len() {
                if !validate_heppes_pair(&subspaces[i], &subspaces[j], RANK_TOL) {
                    return Err(Error::InvalidParameter(format!(
                        "subspaces {i} and {j} have intersecting orthocomplements"
                    )));
                }
            }
        }
        Ok(HeppesFamily { subspaces })
    }

    pub fn subspaces(&self) -> &[Subspace] {
        &self.subspaces
    }

    /// Number of subspaces (`k + 1`).
    pub fn len(&self) -> usize {
        self.subspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subspaces.is_empty()
    }

    /// Largest atom count this family can pin down (`k`).
    pub fn max_atoms(&self) -> usize {
        self.subspaces.len() - 1
    }
}

/// Draws `k + 1` random `m`-dimensional subspaces of `R^d`, redrawing each
/// candidate until it passes [`validate_heppes_pair`] against all accepted
/// ones.
///
/// Requires `m ≥ ⌈d/2⌉` so that two orthocomplements can intersect
/// trivially at all (`2(d − m) ≤ d`).
pub fn heppes_family(
    d: usize,
    k: usize,
    m: usize,
    rng: &mut impl Rng,
    max_tries: usize,
) -> Result<HeppesFamily> {
    if m < d.div_ceil(2) || m > d {
        return Err(Error::InvalidParameter(format!(
            "subspace dimension {m} must satisfy ceil(d/2) = {} <= m <= d = {d}",
            d.div_ceil(2)
        )));
    }
    let mut accepted: Vec<Subspace> = Vec::with_capacity(k + 1);
    let mut tries = 0;
    let mut rejections = 0;
    while accepted.len() < k + 1 {
        if tries >= max_tries {
            return Err(Error::MaxTriesExhausted { tries, rejections });
        }
        tries += 1;
        let cand = random_subspace(d, m, rng)?;
        if accepted
            .iter()
            .all(|h| validate_heppes_pair(h, &cand, RANK_TOL))
        {
            accepted.push(cand);
        } else {
            rejections += 1;
        }
    }
    Ok(HeppesFamily {
        subspaces: accepted,
    })
}

/// Whether `H^⊥ ∩ (E − E) = {0}`: every nonzero difference of points of `E`
/// keeps a nonzero projection onto `H`, i.e. the projection restricted to
/// `E` is injective. For one-dimensional `H` this is checked by sorting the
/// projected values; otherwise all pairs are examined.
pub fn is_good_direction(h: &Subspace, support: &[Point]) -> bool {
    if support.len() <= 1 {
        return true;
    }
    if h.dim() == 1 {
        let b = &h.basis()[0];
        let mut vals: Vec<f64> = support.iter().map(|p| dot(b, p.coords())).collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        vals.windows(2).all(|w| w[1] - w[0] > GOOD_DIRECTION_TOL)
    } else {
        let projected: Vec<Vec<f64>> = support
            .iter()
            .map(|p| h.basis().iter().map(|b| dot(b, p.coords())).collect())
            .collect();
        for i in 0..projected.len() {
            for j in (i + 1)..projected.len() {
                let sq: f64 = projected[i]
                    .iter()
                    .zip(projected[j].iter())
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum();
                if sq.sqrt() <= GOOD_DIRECTION_TOL {
                    return false;
                }
            }
        }
        true
    }
}

/// Draws random directions until one separates the support. For supports
/// inside `{0,1}^d` the bad set has measure zero, so the first draw almost
/// always succeeds.
pub fn good_direction_for_support(
    support: &[Point],
    rng: &mut impl Rng,
    max_tries: usize,
) -> Result<Direction> {
    if support.is_empty() {
        return Err(Error::EmptyInput("empty support".into()));
    }
    let d = support[0].dim();
    let mut rejections = 0;
    for tries in 1..=max_tries {
        let dir = random_direction(d, rng);
        if is_good_direction(&dir.as_subspace(), support) {
            return Ok(dir);
        }
        rejections = tries;
    }
    Err(Error::MaxTriesExhausted {
        tries: max_tries,
        rejections,
    })
}

/// Evaluates both sides of the projection bound: for `Q` with at most `k`
/// atoms and a family of `k + 1` valid subspaces,
/// `d_TV(P, Q) ≤ Σ_j d_TV(P_{H_j}, Q_{H_j})`.
///
/// Returns `(lhs, rhs)`; the inequality `lhs ≤ rhs + 1e-10` is the
/// mathematical contract.
pub fn quantitative_bound(
    p: &DiscreteMeasure,
    q: &DiscreteMeasure,
    fam: &HeppesFamily,
) -> Result<(f64, f64)> {
    if q.support_size() > fam.max_atoms() {
        return Err(Error::InvalidParameter(format!(
            "family of {} subspaces covers at most {} atoms, Q has {}",
            fam.len(),
            fam.max_atoms(),
            q.support_size()
        )));
    }
    let lhs = tv_distance(p, q)?;
    let mut rhs = 0.0;
    for h in fam.subspaces() {
        let ph = h.project_measure(p)?;
        let qh = h.project_measure(q)?;
        rhs += tv_distance(&ph, &qh)?;
    }
    Ok((lhs, rhs))
}

/// Pointwise form of the projection bound: verifies
/// `P({x}) − Q({x}) ≤ max_j (P_{H_j}({π_j x}) − Q_{H_j}({π_j x})) + 1e-10`.
pub fn pointwise_lemma_check(
    p: &DiscreteMeasure,
    q: &DiscreteMeasure,
    fam: &HeppesFamily,
    x: &Point,
) -> Result<bool> {
    if q.support_size() > fam.max_atoms() {
        return Err(Error::InvalidParameter(format!(
            "family of {} subspaces covers at most {} atoms, Q has {}",
            fam.len(),
            fam.max_atoms(),
            q.support_size()
        )));
    }
    let lhs = p.mass_at(x) - q.mass_at(x);
    let mut best = f64::NEG_INFINITY;
    for h in fam.subspaces() {
        let px = h.project_point(x)?;
        let ph = h.project_measure(p)?;
        let qh = h.project_measure(q)?;
        best = best.max(ph.mass_at(&px) - qh.mass_at(&px));
    }
    Ok(lhs <= best + 1e-10)
}
