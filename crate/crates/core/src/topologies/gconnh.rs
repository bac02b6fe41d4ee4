//! `k`-fold `G`-connected-`H` graphs and the families built that way.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::basic::{complete, PETERSEN_EDGES};
use super::{check_nodes, constraint};
use crate::graph::{Edge, Graph};
use crate::{Error, Result};

/// How the cross edges between copies of `H` are wired.
#[derive(Debug, Clone, PartialEq)]
pub enum ConnectionRule {
    /// Vertex `v` of `G` hands its `b`-th incident edge (incident edges sorted
    /// by neighbour index, then by position in the edge list) the block
    /// `b·t .. (b+1)·t` of its copy of `H`. The two blocks of a `G`-edge are
    /// joined by the identity pairing, repeated `k` times.
    Default,
    /// For each edge of `G`, in edge-list order, the `(h_u, h_v)` pairs joining
    /// copy `u` to copy `v`.
    Explicit(Vec<Vec<(usize, usize)>>),
}

fn default_pairs(g: &Graph, t: usize, k: usize) -> Vec<Vec<(usize, usize)>> {
    let mut incident: Vec<Vec<(usize, usize)>> = alloc::vec![Vec::new(); g.vertex_count()];
    for (i, e) in g.edges().iter().enumerate() {
        incident[e.u].push((e.v, i));
        incident[e.v].push((e.u, i));
    }
    let mut block: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (v, list) in incident.iter_mut().enumerate() {
        list.sort();
        for (b, &(_, i)) in list.iter().enumerate() {
            block.insert((v, i), b);
        }
    }
    g.edges()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let (bu, bv) = (block[&(e.u, i)], block[&(e.v, i)]);
            (0..k)
                .flat_map(|_| (0..t).map(move |m| (bu * t + m, bv * t + m)))
                .collect()
        })
        .collect()
}

/// `G ⇝_k H` on `V_G × V_H`, vertex `(v, h)` at `v·|H| + h`.
///
/// `G` must be `d`-regular and loop-free, `H` regular on `t·d` vertices. The
/// cross edges must form a `k`-regular graph with exactly `kt` of them across
/// every edge of `G`.
pub fn g_conn_h(g: &Graph, h: &Graph, k: usize, rule: &ConnectionRule) -> Result<Graph> {
    let d = g.degree_profile().require_regular()? as usize;
    h.degree_profile().require_regular()?;
    if g.has_loops() {
        return Err(constraint("G must be loop-free"));
    }
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    if d == 0 || nh % d != 0 {
        return Err(constraint("|V(H)| must be a positive multiple of deg(G)"));
    }
    let t = nh / d;
    check_nodes((ng * nh) as u64)?;
    let pairs = match rule {
        ConnectionRule::Default => default_pairs(g, t, k),
        ConnectionRule::Explicit(p) => {
            if p.len() != g.edge_count() {
                return Err(constraint(
                    "explicit rule needs one pair list per edge of G",
                ));
            }
            p.clone()
        }
    };

    let mut edges = Vec::with_capacity(ng * h.edge_count() + ng * nh * k / 2);
    for v in 0..ng {
        for e in h.edges() {
            edges.push(Edge {
                u: v * nh + e.u,
                v: v * nh + e.v,
                w: e.w,
            });
        }
    }
    let mut cross_degree = alloc::vec![0usize; ng * nh];
    for (e, list) in g.edges().iter().zip(&pairs) {
        if list.len() != k * t {
            return Err(constraint(
                "each edge of G must carry exactly k*t cross edges",
            ));
        }
        for &(a, b) in list {
            if a >= nh || b >= nh {
                return Err(Error::VertexOutOfRange(a.max(b)));
            }
            let (x, y) = (e.u * nh + a, e.v * nh + b);
            cross_degree[x] += 1;
            cross_degree[y] += 1;
            edges.push(Edge { u: x, v: y, w: 1.0 });
        }
    }
    if cross_degree.iter().any(|&c| c != k) {
        return Err(constraint("cross edges must form a k-regular graph"));
    }
    Ok(Graph::from_edges_unchecked(ng * nh, edges))
}

/// Total cross-edge weight between copies `{v} × V_H` and `{w} × V_H`, for
/// every unordered pair `v < w` with nonzero weight.
pub fn cross_edge_counts(graph: &Graph, copy_size: usize) -> BTreeMap<(usize, usize), f64> {
    let mut out = BTreeMap::new();
    for e in graph.edges() {
        let (a, b) = (e.u / copy_size, e.v / copy_size);
        if a != b {
            *out.entry((a.min(b), a.max(b))).or_insert(0.0) += e.w;
        }
    }
    out
}

/// `DF(H) = K_{n+1} ⇝ H`: vertex `j` of copy `i` links to copy
/// `j' = j if j < i else j+1`.
pub fn dragonfly(h: &Graph) -> Result<Graph> {
    let n = h.vertex_count();
    if n == 0 {
        return Err(constraint("dragonfly needs a nonempty H"));
    }
    h.degree_profile().require_regular()?;
    check_nodes((n * (n + 1)) as u64)?;
    g_conn_h(&complete(n + 1)?, h, 1, &ConnectionRule::Default)
}

/// Index of `(x, y, p)` in `PT(a, b)`: `(x·b + y)·10 + p`.
pub fn peterson_torus_index(b: usize, x: usize, y: usize, p: usize) -> usize {
    (x * b + y) * 10 + p
}

/// Peterson torus `PT(a, b)`: an `a × b` array of Petersen graphs.
pub fn peterson_torus(a: usize, b: usize) -> Result<Graph> {
    if a < 2 || b < 2 {
        return Err(constraint("Peterson torus needs a, b >= 2"));
    }
    if a.is_multiple_of(2) && b.is_multiple_of(2) {
        return Err(constraint("Peterson torus needs a or b odd"));
    }
    check_nodes((10 * a * b) as u64)?;
    let at = |x: i64, y: i64, p: usize| {
        let (x, y) = (
            x.rem_euclid(a as i64) as usize,
            y.rem_euclid(b as i64) as usize,
        );
        peterson_torus_index(b, x, y, p)
    };
    let (ha, hb) = ((a / 2) as i64, (b / 2) as i64);
    let mut edges = Vec::with_capacity(20 * a * b);
    for x in 0..a as i64 {
        for y in 0..b as i64 {
            for &(p, q) in &PETERSEN_EDGES {
                edges.push(Edge {
                    u: at(x, y, p),
                    v: at(x, y, q),
                    w: 1.0,
                });
            }
            // longitudinal, latitudinal, diagonal, reverse diagonal, diameter
            for (p, dx, dy, q) in [
                (6, 0, 1, 9),
                (1, 1, 0, 4),
                (2, 1, 1, 3),
                (7, -1, 1, 8),
                (0, ha, hb, 5),
            ] {
                edges.push(Edge {
                    u: at(x, y, p),
                    v: at(x + dx, y + dy, q),
                    w: 1.0,
                });
            }
        }
    }
    Ok(Graph::from_edges_unchecked(10 * a * b, edges))
}
