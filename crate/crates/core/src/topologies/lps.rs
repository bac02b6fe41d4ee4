use super::constraint;
use crate::algebra::{cayley_graph, lps_generators};
use crate::graph::Graph;
use crate::Result;

/// Largest LPS graph built here.
pub const LPS_MAX_NODES: u64 = 3000;

/// The LPS graph `X^{p,q}`, vertices ordered as the canonical group elements.
pub fn lps_graph(p: u64, q: u64) -> Result<Graph> {
    let (group, gens) = lps_generators(p, q)?;
    if group.order() > LPS_MAX_NODES {
        return Err(constraint("LPS graph exceeds 3000 vertices"));
    }
    cayley_graph(&group, &gens.elements)
}
