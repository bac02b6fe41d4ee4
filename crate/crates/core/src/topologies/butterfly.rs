use alloc::vec::Vec;

use super::{check_nodes, constraint};
use crate::graph::{Edge, Graph};
use crate::Result;

/// Index of `(layer, a₁…a_s)`: `layer·k^s + Σ a_j k^{s-1-j}`.
pub fn butterfly_index(k: usize, s: usize, layer: usize, coords: &[usize]) -> usize {
    layer * k.pow(s as u32) + coords.iter().fold(0, |acc, &a| acc * k + a)
}

/// Cyclic `k`-ary `s`-fly: layer `i` links forward to layer `i+1 mod s` by
/// changing only coordinate `i`. For `s = 2` the two directions give parallel
/// edges, which are kept.
pub fn butterfly(k: usize, s: usize) -> Result<Graph> {
    if k < 2 || s < 2 {
        return Err(constraint("butterfly needs k >= 2 and s >= 2"));
    }
    let per_layer = (k as u64).checked_pow(s as u32).unwrap_or(u64::MAX);
    check_nodes(per_layer.saturating_mul(s as u64))?;
    let per_layer = per_layer as usize;
    let n = s * per_layer;
    // weight of coordinate i inside the layer offset
    let place = |i: usize| k.pow((s - 1 - i) as u32);
    let mut edges = Vec::with_capacity(n * k);
    for layer in 0..s {
        let next = (layer + 1) % s;
        for offset in 0..per_layer {
            let digit = offset / place(layer) % k;
            let base = offset - digit * place(layer);
            for x in 0..k {
                edges.push(Edge {
                    u: layer * per_layer + offset,
                    v: next * per_layer + base + x * place(layer),
                    w: 1.0,
                });
            }
        }
    }
    Ok(Graph::from_edges_unchecked(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{diameter, Diameter};

    #[test]
    fn sizes_and_degree() {
        let b = butterfly(2, 3).unwrap();
        assert_eq!(b.vertex_count(), 24);
        assert_eq!(b.degree_profile().regularity(), Some(4.0));
        // at least s, as two same-layer vertices differing everywhere show;
        // the wrapped butterfly's diameter is in fact floor(3s/2)
        assert_eq!(diameter(&b), Diameter::Finite(4));
        for s in 4..=6 {
            assert_eq!(
                diameter(&butterfly(2, s).unwrap()),
                Diameter::Finite(3 * s / 2)
            );
        }
        let b = butterfly(3, 3).unwrap();
        assert_eq!(b.vertex_count(), 81);
        assert_eq!(b.degree_profile().regularity(), Some(6.0));
    }

    #[test]
    fn s2_keeps_parallel_edges() {
        let b = butterfly(2, 2).unwrap();
        assert_eq!(b.degree_profile().regularity(), Some(4.0));
        let a = b.adjacency_matrix();
        assert_eq!(a.get(0, 4), 2.0);
    }

    #[test]
    fn index_layout() {
        assert_eq!(butterfly_index(3, 3, 1, &[2, 0, 1]), 27 + 19);
    }
}
