use alloc::vec::Vec;

use super::basic::cycle;
use super::{check_nodes, constraint};
use crate::graph::{Edge, Graph, SymMatrix};
use crate::spectral::Spectrum;
use crate::Result;

/// `CC(G, d)` on `V(G) × {0,1}^d`, vertex `(v, x)` at `v·2^d + x`.
///
/// `(v, x) ~ (w, x)` for every edge `vw` of `G`, and `(v, x) ~ (v, x ⊕ e_j)`
/// for every bit `j` with `j mod |V(G)| = v`. With `|V(G)| = d` vertex `i`
/// owns dimension `i`; with a single vertex it owns them all and the result
/// is `Q_d`.
pub fn cc(g: &Graph, d: u32) -> Result<Graph> {
    let n = g.vertex_count();
    if n == 0 || d == 0 || d > 16 {
        return Err(constraint(
            "cube-connected graph needs a nonempty base and 1 <= d <= 16",
        ));
    }
    if g.has_loops() {
        return Err(constraint("cube-connected graph needs a loop-free base"));
    }
    let cube = 1usize << d;
    check_nodes((n * cube) as u64)?;
    let mut edges = Vec::with_capacity(g.edge_count() * cube + n * cube);
    for e in g.edges() {
        for x in 0..cube {
            edges.push(Edge {
                u: e.u * cube + x,
                v: e.v * cube + x,
                w: e.w,
            });
        }
    }
    for v in 0..n {
        for x in 0..cube {
            for j in (v..d as usize).step_by(n) {
                let y = x ^ (1 << j);
                if x < y {
                    edges.push(Edge {
                        u: v * cube + x,
                        v: v * cube + y,
                        w: 1.0,
                    });
                }
            }
        }
    }
    Ok(Graph::from_edges_unchecked(n * cube, edges))
}

/// Cube-connected cycles, `CC(C_d, d)`.
pub fn ccc(d: u32) -> Result<Graph> {
    if d < 3 {
        return Err(constraint("ccc needs d >= 3"));
    }
    cc(&cycle(d as usize)?, d)
}

/// Adjacency matrix of `G` plus a loop of weight `Σ_{j ≡ v} s_j` at each
/// vertex `v`, for a sign vector `s ∈ {±1}^d`.
pub fn signed_loop_matrix(g: &Graph, signs: &[f64]) -> SymMatrix {
    let n = g.vertex_count();
    let mut loops = alloc::vec![0.0; n];
    for (j, s) in signs.iter().enumerate() {
        loops[j % n] += s;
    }
    let extra = Graph::new(n, loops.iter().enumerate().map(|(v, &w)| (v, v, w)))
        .expect("loop endpoints are in range");
    g.adjacency_matrix().plus(&extra.adjacency_matrix())
}

/// Spectrum of `CC(G, d)` as the union over all sign vectors of the spectra
/// of the signed-loop matrices.
pub fn cc_spectrum_via_factors(g: &Graph, d: u32) -> Result<Spectrum> {
    if d == 0 || d > 14 {
        return Err(constraint("factor spectrum needs 1 <= d <= 14"));
    }
    let mut values = Vec::with_capacity(g.vertex_count() << d);
    for mask in 0..1u32 << d {
        let signs: Vec<f64> = (0..d)
            .map(|j| if mask >> j & 1 == 1 { -1.0 } else { 1.0 })
            .collect();
        values.extend(Spectrum::of(&signed_loop_matrix(g, &signs))?.into_values());
    }
    Ok(Spectrum::new(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topologies::basic::hypercube;

    #[test]
    fn ccc3() {
        let g = ccc(3).unwrap();
        assert_eq!(g.vertex_count(), 24);
        assert_eq!(g.degree_profile().regularity(), Some(3.0));
        assert!(ccc(2).is_err());
    }

    #[test]
    fn single_vertex_base_is_cube() {
        let k1 = Graph::empty(1);
        assert_eq!(
            cc(&k1, 3).unwrap().canonical(),
            hypercube(3).unwrap().canonical()
        );
        let q1 = cc(&k1, 1).unwrap();
        let spec = cc_spectrum_via_factors(&k1, 1).unwrap();
        assert!(Spectrum::adjacency(&q1).unwrap().matches(&spec, 1e-12));
    }

    #[test]
    fn factor_spectrum_matches_small_case() {
        let c3 = cycle(3).unwrap();
        let direct = Spectrum::adjacency(&ccc(3).unwrap()).unwrap();
        let factored = cc_spectrum_via_factors(&c3, 3).unwrap();
        assert!(direct.matches(&factored, 1e-9));
    }
}
