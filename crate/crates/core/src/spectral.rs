//! Spectra of graph matrices and the eigenvalue bounds built on them.

use alloc::vec::Vec;

use crate::eigen;
use crate::graph::{Graph, SymMatrix};
use crate::math::{ceil, fabs, log2, sqrt};
use crate::metrics::{is_bipartite_strict, is_connected};
use crate::{Error, Result};

/// Default absolute tolerance for multiset comparisons of spectra.
pub const MULTISET_TOL: f64 = 1e-7;

/// Eigenvalues in ascending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        Spectrum { values }
    }

    pub fn of(m: &SymMatrix) -> Result<Self> {
        Ok(Spectrum {
            values: eigen::eigenvalues(m)?,
        })
    }

    pub fn adjacency(g: &Graph) -> Result<Self> {
        Spectrum::of(&g.adjacency_matrix())
    }

    pub fn laplacian(g: &Graph) -> Result<Self> {
        Spectrum::of(&g.laplacian_matrix())
    }

    pub fn normalized_laplacian(g: &Graph) -> Result<Self> {
        Spectrum::of(&g.normalized_laplacian()?)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `i`-th largest value, zero-based: `largest(0)` is the maximum.
    pub fn largest(&self, i: usize) -> Option<f64> {
        self.values.len().checked_sub(i + 1).map(|j| self.values[j])
    }

    /// `i`-th smallest value, zero-based.
    pub fn smallest(&self, i: usize) -> Option<f64> {
        self.values.get(i).copied()
    }

    /// Every value of `sub` pairs with a distinct value of `self` within `tol`.
    pub fn contains(&self, sub: &Spectrum, tol: f64) -> bool {
        let full = &self.values;
        let mut j = 0;
        for &s in &sub.values {
            while j < full.len() && full[j] < s - tol {
                j += 1;
            }
            if j == full.len() || full[j] > s + tol {
                return false;
            }
            j += 1;
        }
        true
    }

    /// Equal as multisets within `tol`.
    pub fn matches(&self, other: &Spectrum, tol: f64) -> bool {
        self.len() == other.len() && self.contains(other, tol)
    }

    /// All pairwise sums, the spectrum law of a Cartesian product.
    pub fn pairwise_sums(&self, other: &Spectrum) -> Spectrum {
        let mut v = Vec::with_capacity(self.len() * other.len());
        for a in &self.values {
            for b in &other.values {
                v.push(a + b);
            }
        }
        Spectrum::new(v)
    }
}

/// Second-smallest Laplacian eigenvalue `ρ₂`.
pub fn algebraic_connectivity(g: &Graph) -> Result<f64> {
    if g.vertex_count() < 2 {
        return Err(Error::InvalidParameter(
            "algebraic connectivity needs n >= 2".into(),
        ));
    }
    Ok(Spectrum::laplacian(g)?.values[1])
}

fn connected_regular(g: &Graph) -> Result<f64> {
    let k = g.degree_profile().require_regular()?;
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    Ok(k)
}

/// Largest-magnitude adjacency eigenvalue once the trivial `k` (and `-k` for
/// bipartite graphs) is removed.
pub fn lambda_nontrivial(g: &Graph) -> Result<f64> {
    connected_regular(g)?;
    let spec = Spectrum::adjacency(g)?;
    Ok(lambda_from_spectrum(spec.values(), is_bipartite_strict(g)))
}

pub(crate) fn lambda_from_spectrum(values: &[f64], bipartite: bool) -> f64 {
    // values ascending: the top is k, the bottom is -k when bipartite
    let hi = values.len().saturating_sub(1);
    let lo = usize::from(bipartite);
    if lo > hi {
        return 0.0;
    }
    values[lo..hi].iter().fold(0.0, |m: f64, x| m.max(fabs(*x)))
}

pub fn is_ramanujan(g: &Graph) -> Result<bool> {
    let k = connected_regular(g)?;
    if k < 2.0 {
        return Err(Error::InvalidParameter(
            "Ramanujan test needs k >= 2".into(),
        ));
    }
    Ok(lambda_nontrivial(g)? <= ramanujan_bound(k) + 1e-9)
}

/// `2√(k-1)`.
pub fn ramanujan_bound(k: f64) -> f64 {
    2.0 * sqrt(k - 1.0)
}

/// Alon–Boppana lower bound on `λ` for a `k`-regular graph of diameter `d`;
/// `None` gives the limit `2√(k-1)`.
pub fn alon_boppana_floor(k: u32, d: Option<u32>) -> f64 {
    let r = ramanujan_bound(k as f64);
    match d {
        None => r,
        Some(d) => {
            let t = 2.0 / d as f64;
            r * (1.0 - t) - t
        }
    }
}

/// `BW ≥ ρ₂ n / 4`.
pub fn fiedler_bw_lower(rho2: f64, n: usize) -> f64 {
    rho2 * n as f64 / 4.0
}

/// `BW ≥ ρ₂·⌈n/2⌉⌊n/2⌋/n`. Equals [`fiedler_bw_lower`] for even `n`; for odd
/// `n` the `n/4` form can exceed the true bandwidth (`K₃`: 2.25 against 2).
pub fn fiedler_bw_lower_balanced(rho2: f64, n: usize) -> f64 {
    if n == 0 {
        return 0.0;
    }
    rho2 * (n.div_ceil(2) * (n / 2)) as f64 / n as f64
}

/// `√(2kρ₂)·kn/2`, capped by the expected cut of a uniformly random balanced
/// bisection, `m·⌈n/2⌉⌊n/2⌋ / C(n,2)` with `m = kn/2`.
pub fn cheeger_bw_upper(k: f64, rho2: f64, n: usize) -> f64 {
    let nf = n as f64;
    let formula = sqrt(2.0 * k * rho2.max(0.0)) * k * nf / 2.0;
    formula.min(first_moment_bw_upper(k * nf / 2.0, n))
}

/// Average cut weight over all balanced bisections of a graph with total
/// link weight `m`; some bisection is at most this.
pub fn first_moment_bw_upper(m: f64, n: usize) -> f64 {
    if n < 2 {
        return 0.0;
    }
    let (a, b) = (n.div_ceil(2) as f64, (n / 2) as f64);
    let pairs = (n * (n - 1) / 2) as f64;
    m * a * b / pairs
}

/// `2⌈√(2Δ/ρ₂)·log₂ n⌉`.
pub fn alon_milman_diameter_upper(n: usize, delta: f64, rho2: f64) -> Result<u64> {
    if rho2 <= 0.0 {
        return Err(Error::Disconnected);
    }
    Ok(2 * ceil(sqrt(2.0 * delta / rho2) * log2(n as f64)) as u64)
}

/// `4 / (nρ₂)`.
pub fn mckay_diameter_lower(n: usize, rho2: f64) -> Result<f64> {
    if rho2 <= 0.0 {
        return Err(Error::Disconnected);
    }
    Ok(4.0 / (n as f64 * rho2))
}

/// Tanner: `h(G) ≥ 1 - k / (2k - 2λ₂)`.
pub fn tanner_iso_lower(k: f64, lambda2: f64) -> Result<f64> {
    if lambda2 >= k {
        return Err(Error::InvalidParameter(
            "Tanner bound needs lambda2 < k".into(),
        ));
    }
    Ok(1.0 - k / (2.0 * k - 2.0 * lambda2))
}

/// `λ₂ ≤ k - h²/(4 + 2h²)`.
pub fn lambda2_upper_from_h(k: f64, h: f64) -> f64 {
    if h.is_infinite() {
        return k - 0.5;
    }
    k - h * h / (4.0 + 2.0 * h * h)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Discrepancy {
    /// Ordered-pair edge count between the two sets.
    pub e_xy: f64,
    pub deviation: f64,
    pub bound: f64,
    pub holds: bool,
}

fn membership(n: usize, set: &[usize]) -> Result<Vec<bool>> {
    let mut mask = alloc::vec![false; n];
    for &v in set {
        if v >= n {
            return Err(Error::VertexOutOfRange(v));
        }
        mask[v] = true;
    }
    Ok(mask)
}

/// Expander mixing check of `e(X,Y)` against `(k/n)|X||Y|`.
///
/// `e(X,Y)` counts ordered pairs `(x,y) ∈ X×Y` joined by an edge, so an edge
/// inside `X ∩ Y` counts twice and `e(V,V) = kn`. Loops are not counted.
pub fn discrepancy_check(g: &Graph, x: &[usize], y: &[usize]) -> Result<Discrepancy> {
    let k = g.degree_profile().require_regular()?;
    let n = g.vertex_count();
    let (in_x, in_y) = (membership(n, x)?, membership(n, y)?);
    let mut e_xy = 0.0;
    for e in g.edges().iter().filter(|e| !e.is_loop()) {
        if in_x[e.u] && in_y[e.v] {
            e_xy += e.w;
        }
        if in_x[e.v] && in_y[e.u] {
            e_xy += e.w;
        }
    }
    let sx = in_x.iter().filter(|&&b| b).count() as f64;
    let sy = in_y.iter().filter(|&&b| b).count() as f64;
    let nf = n as f64;
    let deviation = fabs(e_xy - k / nf * sx * sy);
    let bound = ramanujan_bound(k) / nf * sqrt(sx * (nf - sx) * sy * (nf - sy));
    Ok(Discrepancy {
        e_xy,
        deviation,
        bound,
        holds: deviation <= bound + 1e-9,
    })
}

/// Edges guaranteed to cross any bisection of any `αn` active nodes in a
/// `k`-regular Ramanujan graph. Negative values carry no information.
pub fn active_subset_bw_bound(k: f64, n: usize, alpha: f64) -> f64 {
    let kn = k * n as f64;
    alpha * kn / 2.0 * (alpha / 2.0 - ramanujan_bound(k) / k * (1.0 - alpha / 2.0))
}

/// Unit Laplacian eigenvector for `ρ₂`, signed so its first clearly nonzero
/// entry is positive.
pub fn fiedler_vector(g: &Graph) -> Result<Vec<f64>> {
    if g.vertex_count() < 2 {
        return Err(Error::InvalidParameter(
            "Fiedler vector needs n >= 2".into(),
        ));
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let eig = eigen::eigen(&g.laplacian_matrix())?;
    let mut v = eig.vector(1).to_vec();
    if let Some(first) = v.iter().find(|x| fabs(**x) > 1e-12) {
        if *first < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
    Ok(v)
}

/// Spectral summary of a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralReport {
    pub n: usize,
    pub min_degree: f64,
    pub max_degree: f64,
    /// Present when the graph is regular.
    pub k: Option<f64>,
    pub lambda1: f64,
    pub lambda2: f64,
    /// `λ(G)`; present for connected regular graphs.
    pub lambda: Option<f64>,
    pub rho2: f64,
    pub gap: f64,
    /// Present when every degree is positive.
    pub mu2: Option<f64>,
    pub is_ramanujan: Option<bool>,
    pub is_bipartite: bool,
    pub is_connected: bool,
}

impl SpectralReport {
    pub fn compute(g: &Graph) -> Result<Self> {
        let n = g.vertex_count();
        if n < 2 {
            return Err(Error::InvalidParameter(
                "spectral report needs n >= 2".into(),
            ));
        }
        let profile = g.degree_profile();
        let adj = Spectrum::adjacency(g)?;
        let lambda1 = adj.largest(0).unwrap_or(0.0);
        let lambda2 = adj.largest(1).unwrap_or(0.0);
        let rho2 = algebraic_connectivity(g)?;
        let mu2 = match g.normalized_laplacian() {
            Ok(m) => Some(Spectrum::of(&m)?.values[1]),
            Err(Error::ZeroDegree(_)) => None,
            Err(e) => return Err(e),
        };
        let connected = is_connected(g);
        let bipartite = is_bipartite_strict(g);
        let k = profile.regularity();
        let lambda = match k {
            Some(_) if connected => Some(lambda_from_spectrum(adj.values(), bipartite)),
            _ => None,
        };
        let is_ramanujan = match (k, lambda) {
            (Some(k), Some(l)) if k >= 2.0 => Some(l <= ramanujan_bound(k) + 1e-9),
            _ => None,
        };
        Ok(SpectralReport {
            n,
            min_degree: profile.min,
            max_degree: profile.max,
            k,
            lambda1,
            lambda2,
            lambda,
            rho2,
            gap: lambda1 - lambda2,
            mu2,
            is_ramanujan,
            is_bipartite: bipartite,
            is_connected: connected,
        })
    }
}
