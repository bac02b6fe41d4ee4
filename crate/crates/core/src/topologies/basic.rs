use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{check_nodes, constraint};
use crate::graph::{Edge, Graph};
use crate::{Error, Result};

fn unit(u: usize, v: usize) -> Edge {
    Edge { u, v, w: 1.0 }
}

pub fn path(n: usize) -> Result<Graph> {
    check_nodes(n as u64)?;
    Ok(Graph::from_edges_unchecked(
        n,
        (1..n).map(|i| unit(i - 1, i)).collect(),
    ))
}

/// `P'_n`: the path with a unit loop at each end.
pub fn path_with_end_loops(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(constraint("P'_n needs n >= 2"));
    }
    let mut edges = path(n)?.edges().to_vec();
    edges.push(unit(0, 0));
    edges.push(unit(n - 1, n - 1));
    Ok(Graph::from_edges_unchecked(n, edges))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(constraint("cycle needs n >= 3"));
    }
    check_nodes(n as u64)?;
    Ok(Graph::from_edges_unchecked(
        n,
        (0..n).map(|i| unit(i, (i + 1) % n)).collect(),
    ))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(constraint("complete graph needs n >= 1"));
    }
    if n > 2000 {
        return Err(Error::TooLarge { n, limit: 2000 });
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            edges.push(unit(i, j));
        }
    }
    Ok(Graph::from_edges_unchecked(n, edges))
}

/// `Q_d`; vertex index is the coordinate vector read as a binary number.
pub fn hypercube(d: u32) -> Result<Graph> {
    if !(1..=14).contains(&d) {
        return Err(constraint("hypercube needs 1 <= d <= 14"));
    }
    let n = 1usize << d;
    let mut edges = Vec::with_capacity(n * d as usize / 2);
    for v in 0..n {
        for b in 0..d {
            let w = v ^ (1 << b);
            if v < w {
                edges.push(unit(v, w));
            }
        }
    }
    Ok(Graph::from_edges_unchecked(n, edges))
}

fn fold_product(factors: Vec<Graph>) -> Result<Graph> {
    let mut it = factors.into_iter();
    let first = it
        .next()
        .ok_or_else(|| constraint("product needs at least one factor"))?;
    it.try_fold(first, |acc, h| acc.cartesian_product(&h))
}

/// `P_{k₁} □ ⋯ □ P_{k_d}`, row-major in `(x₁, …, x_d)`.
pub fn grid(dims: &[usize]) -> Result<Graph> {
    if dims.is_empty() || dims.iter().any(|&k| k < 2) {
        return Err(constraint("grid needs at least one side, each >= 2"));
    }
    check_nodes(dims.iter().map(|&k| k as u64).product())?;
    fold_product(dims.iter().map(|&k| path(k)).collect::<Result<_>>()?)
}

/// `C_k^{□d}`, row-major.
pub fn torus(k: usize, d: u32) -> Result<Graph> {
    if k < 3 {
        return Err(constraint("torus needs k >= 3"));
    }
    if d == 0 {
        return Err(constraint("torus needs d >= 1"));
    }
    check_nodes((k as u64).saturating_pow(d))?;
    fold_product((0..d).map(|_| cycle(k)).collect::<Result<_>>()?)
}

/// Edges of the Petersen graph under the fixed labelling used by the
/// Peterson torus.
pub const PETERSEN_EDGES: [(usize, usize); 15] = [
    (0, 5),
    (0, 4),
    (0, 1),
    (4, 3),
    (4, 7),
    (5, 9),
    (5, 6),
    (1, 8),
    (1, 2),
    (7, 8),
    (7, 6),
    (8, 9),
    (9, 3),
    (6, 2),
    (3, 2),
];

pub fn petersen() -> Graph {
    Graph::from_edges_unchecked(
        10,
        PETERSEN_EDGES.iter().map(|&(u, v)| unit(u, v)).collect(),
    )
}

/// Complete binary tree with `levels` edge levels in heap order (root 0,
/// children of `i` at `2i+1`, `2i+2`). Leaf edges have weight 1 and weights
/// double per level towards the root.
pub fn fat_tree(levels: u32) -> Result<Graph> {
    if !(2..=10).contains(&levels) {
        return Err(constraint("fat tree needs 2 <= levels <= 10"));
    }
    let n = (1usize << (levels + 1)) - 1;
    let mut edges = Vec::with_capacity(n - 1);
    for child in 1..n {
        let depth = usize::BITS - 1 - (child + 1).leading_zeros();
        let w = (1u64 << (levels - depth)) as f64;
        edges.push(Edge {
            u: (child - 1) / 2,
            v: child,
            w,
        });
    }
    Ok(Graph::from_edges_unchecked(n, edges))
}

/// Simple random `k`-regular graph on `n` vertices, deterministic in `seed`.
///
/// Stubs are paired at random; pairs that would form a loop or a repeated edge
/// are returned to the pool and re-paired, restarting when no valid pair is
/// left.
pub fn random_regular(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if (n * k) % 2 == 1 {
        return Err(constraint("random regular graph needs n*k even"));
    }
    if k >= n {
        return Err(constraint("random regular graph needs k < n"));
    }
    check_nodes(n as u64)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        if let Some(edges) = try_pairing(n, k, &mut rng) {
            let edges = edges.into_iter().map(|(u, v)| unit(u, v)).collect();
            return Ok(Graph::from_edges_unchecked(n, edges));
        }
    }
    Err(Error::NoConvergence)
}

fn try_pairing(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Option<BTreeSet<(usize, usize)>> {
    let mut edges = BTreeSet::new();
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| core::iter::repeat_n(v, k)).collect();
    while !stubs.is_empty() {
        let mut leftover: BTreeMap<usize, usize> = BTreeMap::new();
        stubs.shuffle(rng);
        for pair in stubs.chunks(2) {
            let (a, b) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if a != b && edges.insert((a, b)) {
                continue;
            }
            *leftover.entry(a).or_insert(0) += 1;
            *leftover.entry(b).or_insert(0) += 1;
        }
        if leftover.is_empty() {
            break;
        }
        let nodes: Vec<usize> = leftover.keys().copied().collect();
        let suitable = nodes
            .iter()
            .enumerate()
            .any(|(i, &a)| nodes[i + 1..].iter().any(|&b| !edges.contains(&(a, b))));
        if !suitable {
            return None;
        }
        stubs = leftover
            .into_iter()
            .flat_map(|(v, c)| core::iter::repeat_n(v, c))
            .collect();
    }
    Some(edges)
}
