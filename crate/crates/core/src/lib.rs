// SPDX-License-Identifier: Apache-2.0

//! Hypergraph cores and their radius.
//!
//! A *core* of a hypergraph is a vertex set from which repeated edge firing
//! (an edge with all but one vertex assimilated assimilates its last vertex)
//! reaches every vertex and covers every edge. The *radius* of a core is the
//! number of synchronous firing rounds this takes.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only the algorithms:
//!
//! - [`hypergraph`]: the instance type, degree/neighbour queries, systems of
//!   distinct representatives, hyperpath distances and seeded generators.
//! - [`propagation`]: the firing program with optional per-edge thresholds,
//!   layer traces and radius.
//! - [`mincore`]: degree-one peeling for cores of size `n - m` and the
//!   parameterised search over deleted edge subsets.
//! - [`filtration`]: transfer filtrations and their conversion to and from cores.
//! - [`reductions`]: gadget compilers (Set Cover, 3-uniform Set Cover, MINREP,
//!   3-SAT radius) with their solution extraction maps and the threshold
//!   transforms.
//! - [`oracle`]: exhaustive ground truth for small instances.
//! - [`bounds`]: lower bounds on the radius from neighbourhood size, degree
//!   and diameter.
//!
//! File formats, the command line and the parallel drivers live in the
//! `hypercore-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
mod combinations;
mod error;
pub mod filtration;
pub mod hypergraph;
pub mod mincore;
pub mod oracle;
pub mod propagation;
pub mod reductions;

pub use combinations::{binomial, Combinations};
pub use error::{Error, Result};
pub use hypergraph::{Distance, Edge, EdgeId, Hypergraph, VertexId};
pub use propagation::{CoreSet, PropagationTrace, ThresholdMap};
