//! Undirected weighted multigraphs and the matrices derived from them.
//!
//! Loop convention: a self-loop of weight `w` at `v` adds `w` to the adjacency
//! diagonal and `w` to the degree of `v`. Loops therefore cancel in the
//! Laplacian `L = D - A`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::math::sqrt;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: f64,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The other endpoint, seen from `x`.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// Undirected multigraph on vertices `0..n`. Parallel edges are kept as
/// separate entries and edge order is preserved.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let mut out = Vec::new();
        for (u, v, w) in edges {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { u, v, n });
            }
            if !w.is_finite() {
                return Err(Error::NonFiniteWeight { u, v });
            }
            out.push(Edge { u, v, w });
        }
        Ok(Graph { n, edges: out })
    }

    /// Unit-weight graph from a list of vertex pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Graph::new(n, pairs.iter().map(|&(u, v)| (u, v, 1.0)))
    }

    /// Generators build edges they know are in range.
    pub(crate) fn from_edges_unchecked(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.iter().all(|e| e.u < n && e.v < n));
        Graph { n, edges }
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Number of edge entries (parallel edges and loops included).
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sum of non-loop edge weights.
    pub fn link_weight(&self) -> f64 {
        self.edges
            .iter()
            .filter(|e| !e.is_loop())
            .map(|e| e.w)
            .sum()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|e| e.is_loop() && e.w != 0.0)
    }

    pub fn degrees(&self) -> Vec<f64> {
        let mut deg = vec![0.0; self.n];
        for e in &self.edges {
            if e.is_loop() {
                deg[e.u] += e.w;
            } else {
                deg[e.u] += e.w;
                deg[e.v] += e.w;
            }
        }
        deg
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::from_degrees(self.degrees())
    }

    /// Per-vertex neighbour lists, loops omitted, parallel edges repeated.
    pub fn neighbors(&self) -> Vec<Vec<(usize, f64)>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            if !e.is_loop() {
                adj[e.u].push((e.v, e.w));
                adj[e.v].push((e.u, e.w));
            }
        }
        adj
    }

    pub fn adjacency_matrix(&self) -> SymMatrix {
        let mut m = SymMatrix::zeros(self.n);
        for e in &self.edges {
            if e.is_loop() {
                m.add(e.u, e.u, e.w);
            } else {
                m.add(e.u, e.v, e.w);
                m.add(e.v, e.u, e.w);
            }
        }
        m
    }

    pub fn laplacian_matrix(&self) -> SymMatrix {
        let mut m = SymMatrix::zeros(self.n);
        for e in self.edges.iter().filter(|e| !e.is_loop()) {
            m.add(e.u, e.u, e.w);
            m.add(e.v, e.v, e.w);
            m.add(e.u, e.v, -e.w);
            m.add(e.v, e.u, -e.w);
        }
        m
    }

    /// `D^{-1/2} L D^{-1/2}`, with `D` counting loops.
    pub fn normalized_laplacian(&self) -> Result<SymMatrix> {
        let deg = self.degrees();
        if let Some(v) = deg.iter().position(|&d| d <= 0.0) {
            return Err(Error::ZeroDegree(v));
        }
        let inv: Vec<f64> = deg.iter().map(|&d| 1.0 / sqrt(d)).collect();
        let mut m = self.laplacian_matrix();
        for i in 0..self.n {
            for j in 0..self.n {
                let x = m.get(i, j) * inv[i] * inv[j];
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    /// `G □ H` with vertex `(u, u')` at index `u * |H| + u'`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph> {
        if self.has_loops() || other.has_loops() {
            return Err(Error::LoopsInProduct);
        }
        let (n, m) = (self.n, other.n);
        let mut edges = Vec::with_capacity(self.edges.len() * m + other.edges.len() * n);
        for e in &self.edges {
            for x in 0..m {
                edges.push(Edge {
                    u: e.u * m + x,
                    v: e.v * m + x,
                    w: e.w,
                });
            }
        }
        for u in 0..n {
            for e in &other.edges {
                edges.push(Edge {
                    u: u * m + e.u,
                    v: u * m + e.v,
                    w: e.w,
                });
            }
        }
        Ok(Graph::from_edges_unchecked(n * m, edges))
    }

    /// Adds a loop of weight `Δ - deg(v)` at every vertex below the maximum
    /// degree `Δ`, making the graph `Δ`-regular under the loop convention.
    pub fn regularize_with_loops(&self) -> Graph {
        let deg = self.degrees();
        let max = deg.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let mut g = self.clone();
        for (v, &d) in deg.iter().enumerate() {
            if d < max {
                g.edges.push(Edge {
                    u: v,
                    v,
                    w: max - d,
                });
            }
        }
        g
    }

    /// Same graph with every edge stored as `u <= v` and edges sorted
    /// lexicographically by `(u, v, w)`.
    pub fn canonical(&self) -> Graph {
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| {
                if e.u <= e.v {
                    *e
                } else {
                    Edge {
                        u: e.v,
                        v: e.u,
                        w: e.w,
                    }
                }
            })
            .collect();
        edges.sort_by(|a, b| {
            (a.u, a.v)
                .cmp(&(b.u, b.v))
                .then(a.w.partial_cmp(&b.w).unwrap_or(Ordering::Equal))
        });
        Graph { n: self.n, edges }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                u: perm[e.u],
                v: perm[e.v],
                w: e.w,
            })
            .collect();
        Graph { n: self.n, edges }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DegreeProfile {
    pub degrees: Vec<f64>,
    pub min: f64,
    pub max: f64,
}

impl DegreeProfile {
    fn from_degrees(degrees: Vec<f64>) -> Self {
        let min = degrees.iter().copied().fold(f64::INFINITY, f64::min);
        let max = degrees.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let (min, max) = if degrees.is_empty() {
            (0.0, 0.0)
        } else {
            (min, max)
        };
        DegreeProfile { degrees, min, max }
    }

    pub fn is_regular(&self) -> bool {
        self.min == self.max
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regularity(&self) -> Option<f64> {
        self.is_regular().then_some(self.max)
    }

    pub(crate) fn require_regular(&self) -> Result<f64> {
        self.regularity().ok_or(Error::Irregular {
            min: self.min,
            max: self.max,
        })
    }
}

/// Dense symmetric matrix, row-major, both triangles stored.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Checks symmetry to within `1e-12` (absolute) and symmetrizes the
    /// storage exactly.
    pub fn from_row_major(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::InvalidParameter(alloc::format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                data.len()
            )));
        }
        let mut m = SymMatrix { n, data };
        for i in 0..n {
            for j in 0..n {
                if !m.get(i, j).is_finite() {
                    return Err(Error::NonFiniteEntry { i, j });
                }
            }
            for j in 0..i {
                let (a, b) = (m.get(i, j), m.get(j, i));
                if (a - b).abs() > 1e-12 {
                    return Err(Error::Asymmetric { i, j });
                }
                let avg = 0.5 * (a + b);
                m.set(i, j, avg);
                m.set(j, i, avg);
            }
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParameter(
                "matrix rows must all have length n".into(),
            ));
        }
        SymMatrix::from_row_major(n, rows.iter().flatten().copied().collect())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize, x: f64) {
        self.data[i * self.n + j] = x;
    }

    #[inline]
    fn add(&mut self, i: usize, j: usize, x: f64) {
        self.data[i * self.n + j] += x;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        sqrt(self.data.iter().map(|x| x * x).sum())
    }

    /// `A ⊗ B`.
    pub fn kron(&self, other: &SymMatrix) -> SymMatrix {
        let (n, m) = (self.n, other.n);
        let mut out = SymMatrix::zeros(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a == 0.0 {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        out.set(i * m + k, j * m + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn plus(&self, other: &SymMatrix) -> SymMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        SymMatrix { n: self.n, data }
    }

    pub fn scaled(&self, s: f64) -> SymMatrix {
        SymMatrix {
            n: self.n,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }
}
