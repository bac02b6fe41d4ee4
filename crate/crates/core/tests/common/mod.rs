#![allow(dead_code)]

use spectre_core::{Graph, TopologySpec};

pub fn build(text: &str) -> Graph {
    TopologySpec::parse(text).unwrap().build().unwrap()
}

/// Generated instances with at most 24 vertices, one or more per family.
pub const SMALL: &[&str] = &[
    "hypercube:d=2",
    "hypercube:d=3",
    "hypercube:d=4",
    "torus:k=3,d=1",
    "torus:k=3,d=2",
    "torus:k=4,d=2",
    "torus:k=5,d=1",
    "butterfly:k=2,s=3",
    "ccc:d=3",
    "clex:k=3,l=2",
    "clex:k=4,l=2",
    "clexg:g=C3,l=2",
    "clexg:g=C4,l=2",
    "dragonfly:h=K3",
    "dragonfly:h=K4",
    "dragonfly:h=C4",
    "gconnh:g=K3,h=C4,k=1",
    "gconnh:g=C4,h=K2,k=1",
    "petersen",
    "complete:n=5",
    "complete:n=6",
    "cycle:n=7",
    "cycle:n=8",
];

/// Edge weights as a sorted list of `(u, v, w)` with `u <= v`.
pub fn edge_list(g: &Graph) -> Vec<(usize, usize, f64)> {
    let mut out: Vec<_> = g
        .canonical()
        .edges()
        .iter()
        .map(|e| (e.u, e.v, e.w))
        .collect();
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out
}
