//! Deterministic generators for every topology family.
//!
//! Structured families index their vertices row-major over their coordinate
//! tuples; each generator documents its exact map.

use alloc::string::String;

use crate::{Error, Result};

pub mod automorphisms;
pub mod basic;
pub mod butterfly;
pub mod clex;
pub mod cube;
pub mod gconnh;
pub mod lps;
pub mod slimfly;
mod spec;
pub mod vortex;

pub use basic::{
    complete, cycle, fat_tree, grid, hypercube, path, path_with_end_loops, petersen,
    random_regular, torus,
};
pub use butterfly::butterfly;
pub use clex::{clex, clex_general, clex_m_matrix, clex_m_spectrum};
pub use cube::{cc, cc_spectrum_via_factors, ccc, signed_loop_matrix};
pub use gconnh::{cross_edge_counts, dragonfly, g_conn_h, peterson_torus, ConnectionRule};
pub use lps::lps_graph;
pub use slimfly::slimfly;
pub use spec::{BaseGraph, TopologySpec, FAMILIES};
pub use vortex::data_vortex;

/// Largest vertex count any generator will build.
pub const MAX_NODES: u64 = 10_000;

pub(crate) fn check_nodes(n: u64) -> Result<()> {
    if n > MAX_NODES {
        return Err(Error::TooLarge {
            n: usize::try_from(n).unwrap_or(usize::MAX),
            limit: MAX_NODES as usize,
        });
    }
    Ok(())
}

pub(crate) fn constraint(msg: &str) -> Error {
    Error::Constraint(String::from(msg))
}
