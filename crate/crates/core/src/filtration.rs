// SPDX-License-Identifier: Apache-2.0

//! Transfer filtrations: a foundation vertex set plus an edge order in which
//! every prefix adds at most one vertex.
//!
//! A filtration of type `b` and a core of size `b` are interchangeable. The
//! conversions here linearize propagation layers into an edge order and read
//! the foundation back as a core.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::propagation::{propagate, CoreSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtration {
    pub foundation: Vec<VertexId>,
    /// Edge index placed at each position.
    pub edge_order: Vec<EdgeId>,
    /// Vertex first covered at each position, if any.
    pub added_vertex: Vec<Option<VertexId>>,
}

/// First broken condition of the definition, numbered 1 to 5.
///
/// 1: the chain ends at the whole hypergraph, 2: a prefix adds at most one
/// vertex, 3: the recorded added vertex is the one the edge brings, 4: the
/// foundation is a set of `b` vertices, 5: no edge lies inside the
/// foundation. `position` is the 0-based slot in the order, or the edge
/// index for condition 5, or the foundation entry for condition 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub condition: u8,
    pub position: Option<usize>,
}

impl Filtration {
    pub fn b(&self) -> usize {
        self.foundation.len()
    }

    fn check_permutation(&self, h: &Hypergraph) -> Result<()> {
        if self.edge_order.len() != h.m() || self.added_vertex.len() != h.m() {
            return Err(Error::MalformedPermutation);
        }
        let mut seen = vec![false; h.m()];
        for &e in &self.edge_order {
            if e >= h.m() || seen[e] {
                return Err(Error::MalformedPermutation);
            }
            seen[e] = true;
        }
        Ok(())
    }
}

/// `Ok(None)` when all five conditions hold.
pub fn validate_filtration(h: &Hypergraph, f: &Filtration) -> Result<Option<Violation>> {
    f.check_permutation(h)?;
    let n = h.n();
    let mut covered = vec![false; n];
    for (i, &v) in f.foundation.iter().enumerate() {
        if v >= n || covered[v] {
            return Ok(Some(Violation { condition: 4, position: Some(i) }));
        }
        covered[v] = true;
    }
    for (e, edge) in h.edges().iter().enumerate() {
        if edge.vertices().iter().all(|&v| covered[v]) {
            return Ok(Some(Violation { condition: 5, position: Some(e) }));
        }
    }
    for (pos, &e) in f.edge_order.iter().enumerate() {
        let mut fresh = h.edge(e).vertices().iter().copied().filter(|&v| !covered[v]);
        let first = fresh.next();
        if fresh.next().is_some() {
            return Ok(Some(Violation { condition: 2, position: Some(pos) }));
        }
        if first != f.added_vertex[pos] {
            return Ok(Some(Violation { condition: 3, position: Some(pos) }));
        }
        if let Some(v) = first {
            covered[v] = true;
        }
    }
    if covered.iter().any(|&c| !c) {
        return Ok(Some(Violation { condition: 1, position: None }));
    }
    Ok(None)
}

pub fn is_valid_filtration(h: &Hypergraph, f: &Filtration) -> Result<bool> {
    Ok(validate_filtration(h, f)?.is_none())
}

fn require_valid(h: &Hypergraph, f: &Filtration) -> Result<()> {
    match validate_filtration(h, f)? {
        None => Ok(()),
        Some(v) => Err(Error::InvalidFiltration { condition: v.condition, position: v.position }),
    }
}

/// The transfer index of each position, 1-based with 0 for the foundation:
/// the first prefix after which the edge misses exactly one vertex.
pub fn transfer_indices(h: &Hypergraph, f: &Filtration) -> Result<Vec<usize>> {
    require_valid(h, f)?;
    // prefix length after which each vertex is present
    let mut present_at = vec![0usize; h.n()];
    for (pos, v) in f.added_vertex.iter().enumerate() {
        if let Some(v) = *v {
            present_at[v] = pos + 1;
        }
    }
    let mut r = Vec::with_capacity(h.m());
    for (pos, &e) in f.edge_order.iter().enumerate() {
        let mut times: Vec<usize> = h.edge(e).vertices().iter().map(|&v| present_at[v]).collect();
        times.sort_unstable();
        // all but the latest vertex are present after this prefix
        let j = if times.len() >= 2 { times[times.len() - 2] } else { 0 };
        if j > pos {
            return Err(Error::UndefinedTransferIndex { position: pos });
        }
        r.push(j);
    }
    Ok(r)
}

/// Smallest `beta` such that `beta` applications of the transfer index reach
/// the foundation from every position.
pub fn filtration_radius(h: &Hypergraph, f: &Filtration) -> Result<usize> {
    let r = transfer_indices(h, f)?;
    let mut depth = vec![0usize; r.len() + 1];
    for i in 1..=r.len() {
        depth[i] = 1 + depth[r[i - 1]];
    }
    Ok(depth.into_iter().max().unwrap_or(0))
}

/// Linearizes the propagation from `core`, layer by layer and by edge index
/// within a layer. Edges inside the core break condition 5 and are rejected.
pub fn core_to_filtration(h: &Hypergraph, core: &CoreSet) -> Result<Filtration> {
    let trace = propagate(h, core, None)?;
    if !trace.verdict {
        return Err(Error::NotACore);
    }
    if let Some(&e) = trace.initially_covered.first() {
        return Err(Error::FoundationCoversEdge { edge: e });
    }
    let edge_order: Vec<EdgeId> = trace.layers.iter().flatten().copied().collect();
    let added_vertex = edge_order.iter().map(|&e| trace.assimilator[e]).collect();
    Ok(Filtration { foundation: core.vertices().to_vec(), edge_order, added_vertex })
}

pub fn filtration_to_core(h: &Hypergraph, f: &Filtration) -> Result<CoreSet> {
    require_valid(h, f)?;
    Ok(CoreSet::new(f.foundation.clone()))
}

/// Builds a filtration from a foundation and an order, filling in the added
/// vertices. The result still has to pass [`validate_filtration`].
pub fn filtration_from_order(h: &Hypergraph, foundation: Vec<VertexId>, edge_order: Vec<EdgeId>) -> Result<Filtration> {
    let mut covered = vec![false; h.n()];
    for &v in &foundation {
        h.check_vertex(v)?;
        covered[v] = true;
    }
    let mut added_vertex = Vec::with_capacity(edge_order.len());
    for &e in &edge_order {
        if e >= h.m() {
            return Err(Error::MalformedPermutation);
        }
        let fresh = h.edge(e).vertices().iter().copied().find(|&v| !covered[v]);
        for &v in h.edge(e).vertices() {
            covered[v] = true;
        }
        added_vertex.push(fresh);
    }
    Ok(Filtration { foundation, edge_order, added_vertex })
}
