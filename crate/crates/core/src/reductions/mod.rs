// SPDX-License-Identifier: Apache-2.0

//! Gadget compilers from Set Cover, MINREP and 3-SAT into core problems,
//! with the maps that turn a core back into a solution, plus the two
//! threshold transforms.
//!
//! Every emitted vertex carries a label naming its role, e.g. `s'_2`,
//! `u_1`, `x1@and3`, `t2@s_1`, `y_3_1`.

mod minrep;
mod setcover;
mod threesat;
mod threshold;
mod triangulation;

pub use minrep::{and_gadget, core_to_minrep, minrep_to_mincore, AndRecord, MinrepInstance, MinrepLayout};
pub use setcover::{core_to_setcover, setcover_to_mincore, setcover_to_mincore_3uniform, SetCoverInstance};
pub use threesat::{core_to_assignment, threesat_to_mincore_radius, ClauseGadget, CnfFormula, SatLayout};
pub use threshold::{threshold_add_per_edge, threshold_add_shared};
pub use triangulation::{triangulate_edge, triangulation_gadget, TriangulationGadget};

use crate::hypergraph::Hypergraph;

/// A compiled instance together with what produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub instance: Hypergraph,
    pub source: Source,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    SetCover(SetCoverInstance),
    SetCover3(SetCoverInstance),
    Minrep(MinrepInstance, MinrepLayout),
    ThreeSat { formula: CnfFormula, k: usize, layout: SatLayout },
}
