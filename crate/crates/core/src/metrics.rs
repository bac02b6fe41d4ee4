//! Exact combinatorial metrics by search: BFS distances, balanced bisection,
//! vertex isoperimetric number.
//!
//! Loops are ignored throughout; they never cross a cut or leave a set.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::spectral::fiedler_vector;
use crate::{Error, Result};

/// Largest `n` accepted by [`bisection_exact`].
pub const BISECTION_MAX_N: usize = 24;
/// Largest `n` accepted by [`vertex_iso_number`].
pub const ISO_MAX_N: usize = 16;

fn simple_neighbors(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for e in g.edges().iter().filter(|e| !e.is_loop()) {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    adj
}

fn bfs(adj: &[Vec<usize>], src: usize, dist: &mut [usize]) {
    dist.iter_mut().for_each(|d| *d = usize::MAX);
    dist[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
}

/// Whether every vertex is reachable from vertex 0. Graphs with at most one
/// vertex count as connected.
pub fn is_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n <= 1 {
        return true;
    }
    let mut dist = vec![0; n];
    bfs(&simple_neighbors(g), 0, &mut dist);
    dist.iter().all(|&d| d != usize::MAX)
}

/// BFS 2-colouring, loops ignored.
pub fn is_bipartite(g: &Graph) -> bool {
    let adj = simple_neighbors(g);
    let mut colour = vec![u8::MAX; g.vertex_count()];
    for s in 0..g.vertex_count() {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if colour[v] == u8::MAX {
                    colour[v] = 1 - colour[u];
                    queue.push_back(v);
                } else if colour[v] == colour[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// As [`is_bipartite`], but any loop of nonzero weight is an odd cycle.
pub fn is_bipartite_strict(g: &Graph) -> bool {
    !g.has_loops() && is_bipartite(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

/// Hop diameter; weights and loops ignored.
pub fn diameter(g: &Graph) -> Diameter {
    let n = g.vertex_count();
    let adj = simple_neighbors(g);
    let mut dist = vec![0; n];
    let mut best = 0;
    for s in 0..n {
        bfs(&adj, s, &mut dist);
        for &d in &dist {
            if d == usize::MAX {
                return Diameter::Infinite;
            }
            best = best.max(d);
        }
    }
    Diameter::Finite(best)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BisectionMethod {
    Exact,
    FiedlerHeuristic,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Bisection {
    pub cut: f64,
    /// Sorted vertex list of one side.
    pub side_a: Vec<usize>,
    pub method: BisectionMethod,
}

/// Total weight of non-loop edges with exactly one end in `side`.
pub fn cut_weight(g: &Graph, side: &[bool]) -> f64 {
    g.edges()
        .iter()
        .filter(|e| side[e.u] != side[e.v])
        .map(|e| e.w)
        .sum()
}

/// Minimum balanced cut by exhaustive enumeration.
///
/// Vertex 0 is pinned to side A; for odd `n` side A takes both sizes
/// `⌈n/2⌉` and `⌊n/2⌋`. Combinations are visited in lexicographic order and
/// the first minimum found is kept.
pub fn bisection_exact(g: &Graph) -> Result<Bisection> {
    let n = g.vertex_count();
    if n > BISECTION_MAX_N {
        return Err(Error::TooLarge {
            n,
            limit: BISECTION_MAX_N,
        });
    }
    if n <= 1 {
        return Ok(Bisection {
            cut: 0.0,
            side_a: (0..n).collect(),
            method: BisectionMethod::Exact,
        });
    }
    let edges: Vec<(u32, u32, f64)> = g
        .edges()
        .iter()
        .filter(|e| !e.is_loop())
        .map(|e| (e.u as u32, e.v as u32, e.w))
        .collect();

    let mut sizes = vec![n.div_ceil(2)];
    if n % 2 == 1 {
        sizes.push(n / 2);
    }

    let mut best = f64::INFINITY;
    let mut best_mask = 0u32;
    for a in sizes {
        // choose a-1 companions for vertex 0 from 1..n
        let r = a - 1;
        let mut idx: Vec<usize> = (1..=r).collect();
        loop {
            let mut mask = 1u32;
            for &i in &idx {
                mask |= 1 << i;
            }
            let mut cut = 0.0;
            for &(u, v, w) in &edges {
                if ((mask >> u) ^ (mask >> v)) & 1 == 1 {
                    cut += w;
                }
            }
            if cut < best {
                best = cut;
                best_mask = mask;
            }
            if !next_combination(&mut idx, n - 1) {
                break;
            }
        }
    }
    let side_a = (0..n).filter(|&v| best_mask >> v & 1 == 1).collect();
    Ok(Bisection {
        cut: best,
        side_a,
        method: BisectionMethod::Exact,
    })
}

// Advances a strictly increasing selection from 1..=max in lexicographic order.
fn next_combination(idx: &mut [usize], max: usize) -> bool {
    let r = idx.len();
    let mut i = r;
    while i > 0 {
        i -= 1;
        if idx[i] < max - (r - 1 - i) {
            idx[i] += 1;
            for j in i + 1..r {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Median split of the Fiedler ordering, ties broken by vertex index. Side A is
/// the lower `⌈n/2⌉` vertices.
pub fn bisection_fiedler(g: &Graph) -> Result<Bisection> {
    let n = g.vertex_count();
    let f = fiedler_vector(g)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| f[a].total_cmp(&f[b]).then(a.cmp(&b)));
    let mut side = vec![false; n];
    for &v in &order[..n.div_ceil(2)] {
        side[v] = true;
    }
    let cut = cut_weight(g, &side);
    let side_a = (0..n).filter(|&v| side[v]).collect();
    Ok(Bisection {
        cut,
        side_a,
        method: BisectionMethod::FiedlerHeuristic,
    })
}

/// `h(G) = |∂X| / |X|` at its minimum, with a witness `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoResult {
    /// Reduced fraction.
    pub numerator: u64,
    pub denominator: u64,
    pub witness: Vec<usize>,
}

impl IsoResult {
    pub fn ratio(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Exact vertex isoperimetric number over all `X` with `2|X| ≤ n`. Ties go to
/// the lexicographically least sorted witness.
pub fn vertex_iso_number(g: &Graph) -> Result<IsoResult> {
    let n = g.vertex_count();
    if n > ISO_MAX_N {
        return Err(Error::TooLarge {
            n,
            limit: ISO_MAX_N,
        });
    }
    if n < 2 {
        return Err(Error::InvalidParameter(
            "isoperimetric number needs n >= 2".into(),
        ));
    }
    let mut nbr = vec![0u32; n];
    for e in g.edges().iter().filter(|e| !e.is_loop()) {
        nbr[e.u] |= 1 << e.v;
        nbr[e.v] |= 1 << e.u;
    }
    let members = |m: u32| (0..n).filter(move |&v| m >> v & 1 == 1);
    let mut best: Option<(u64, u64, u32)> = None;
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as u64;
        if 2 * size > n as u64 {
            continue;
        }
        let reach = members(mask).fold(0u32, |acc, v| acc | nbr[v]);
        let boundary = (reach & !mask).count_ones() as u64;
        let better = match best {
            None => true,
            Some((bn, bd, bm)) => {
                let (lhs, rhs) = (boundary * bd, bn * size);
                lhs < rhs || (lhs == rhs && members(mask).lt(members(bm)))
            }
        };
        if better {
            best = Some((boundary, size, mask));
        }
    }
    let (num, den, mask) = best.expect("n >= 2 admits a singleton");
    let g = gcd(num, den);
    Ok(IsoResult {
        numerator: num / g,
        denominator: den / g,
        witness: members(mask).collect(),
    })
}
