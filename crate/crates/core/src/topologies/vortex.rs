use alloc::vec::Vec;

use super::{check_nodes, constraint};
use crate::graph::{Edge, Graph};
use crate::Result;

/// Index of `(a, c, h)`: `(a·C + c)·2^{C-1} + h`, where bit `c-1` of `h` is
/// height component `c`.
pub fn data_vortex_index(c_total: usize, a: usize, c: usize, h: usize) -> usize {
    (a * c_total + c) * (1 << (c_total - 1)) + h
}

/// Data Vortex on `ℤ_A × ℤ_C × ℤ₂^{C-1}`, regularized with loops.
///
/// Cylinder transitions `(a,c,h) → (a+1,c+1,h)` exist only for `c < C-1`;
/// ring edges flip height bit `c` for `c ≥ 1` and keep `h` on ring 0. The
/// outer and inner rings then have degree 3 and receive unit loops.
pub fn data_vortex(a_total: usize, c_total: usize) -> Result<Graph> {
    Ok(data_vortex_raw(a_total, c_total)?.regularize_with_loops())
}

/// As [`data_vortex`], without the loops.
pub fn data_vortex_raw(a_total: usize, c_total: usize) -> Result<Graph> {
    if a_total < 3 || c_total < 2 {
        return Err(constraint("data vortex needs A >= 3 and C >= 2"));
    }
    if c_total > 20 {
        return Err(constraint("data vortex height too large"));
    }
    let heights = 1usize << (c_total - 1);
    check_nodes((a_total * c_total * heights) as u64)?;
    let n = a_total * c_total * heights;
    let idx = |a: usize, c: usize, h: usize| data_vortex_index(c_total, a % a_total, c, h);
    let mut edges = Vec::with_capacity(2 * n);
    for a in 0..a_total {
        for c in 0..c_total {
            for h in 0..heights {
                if c + 1 < c_total {
                    edges.push(Edge {
                        u: idx(a, c, h),
                        v: idx(a + 1, c + 1, h),
                        w: 1.0,
                    });
                }
                let h2 = if c == 0 { h } else { h ^ (1 << (c - 1)) };
                edges.push(Edge {
                    u: idx(a, c, h),
                    v: idx(a + 1, c, h2),
                    w: 1.0,
                });
            }
        }
    }
    Ok(Graph::from_edges_unchecked(n, edges))
}
