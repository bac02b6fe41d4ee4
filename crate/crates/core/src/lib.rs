//! Spectral and combinatorial analysis of supercomputer interconnection
//! topologies.
//!
//! The crate is `no_std` (it needs `alloc`). It contains:
//!
//! * [`graph`]: weighted undirected multigraphs with real self-loops, their
//!   adjacency/Laplacian matrices and Cartesian products.
//! * [`eigen`] and [`spectral`]: a deterministic dense symmetric eigensolver
//!   (Householder tridiagonalization + implicit QL) and the spectral bound
//!   theorems built on top of it.
//! * [`algebra`]: finite fields, Legendre symbols, PSL/PGL(2, p) and Cayley
//!   graphs, enough to build SlimFly and LPS Ramanujan graphs.
//! * [`topologies`]: deterministic generators for every topology family.
//! * [`reduction`]: automorphism orbits, equitable quotients and spectrum
//!   containment.
//! * [`metrics`]: exact diameter, bisection bandwidth and vertex isoperimetric
//!   number for small instances.
//! * [`bounds`]: closed-form per-family bounds and parameter sweeps.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod bounds;
pub mod eigen;
mod error;
pub mod graph;
mod math;
pub mod metrics;
pub mod reduction;
pub mod spectral;
pub mod topologies;

pub use error::{Error, Result};
pub use graph::{DegreeProfile, Edge, Graph, SymMatrix};
pub use spectral::Spectrum;
pub use topologies::TopologySpec;
