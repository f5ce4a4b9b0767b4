// SPDX-License-Identifier: Apache-2.0

//! The firing program and its layer trace.
//!
//! Starting from `V_0 = C`, round `i` fires every uncovered edge `e` with at
//! least `t(e)` vertices in `V_{i-1}`; `V_i` adds all vertices of the fired
//! edges. Edges already inside `C` are covered before the first round and
//! belong to no layer. `C` is a core when every edge gets covered and every
//! vertex ends up in the final set (isolated vertices must be in `C`).
//!
//! With the default threshold `t(e) = |e| - 1` this is the classical core
//! program, and the number of rounds is the radius of the core.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};

/// A set of vertices, stored sorted and duplicate free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CoreSet(Vec<VertexId>);

impl CoreSet {
    pub fn new(mut vertices: Vec<VertexId>) -> CoreSet {
        vertices.sort_unstable();
        vertices.dedup();
        CoreSet(vertices)
    }

    pub fn empty() -> CoreSet {
        CoreSet(Vec::new())
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> CoreSet {
        CoreSet((0..n).collect())
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.0
    }

    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.0 {
            mask[v] = true;
        }
        mask
    }
}

impl FromIterator<VertexId> for CoreSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        CoreSet::new(iter.into_iter().collect())
    }
}

/// Per-edge activation thresholds.
///
/// Valid entries satisfy `1 <= t(e) <= |e| - 1`; the default `|e| - 1` is
/// always accepted, including `0` for single-vertex edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdMap(Vec<usize>);

impl ThresholdMap {
    pub fn default_for(h: &Hypergraph) -> ThresholdMap {
        ThresholdMap(h.edges().iter().map(|e| e.len() - 1).collect())
    }

    pub fn new(h: &Hypergraph, thresholds: Vec<usize>) -> Result<ThresholdMap> {
        let map = ThresholdMap(thresholds);
        map.validate(h)?;
        Ok(map)
    }

    pub fn validate(&self, h: &Hypergraph) -> Result<()> {
        if self.0.len() != h.m() {
            return Err(Error::ThresholdCount { expected: h.m(), found: self.0.len() });
        }
        for (i, (&t, e)) in self.0.iter().zip(h.edges()).enumerate() {
            let size = e.len();
            if t != size - 1 && !(1..size).contains(&t) {
                return Err(Error::InvalidThreshold { edge: i, threshold: t, size });
            }
        }
        Ok(())
    }

    pub fn get(&self, e: EdgeId) -> usize {
        self.0[e]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_default_for(&self, h: &Hypergraph) -> bool {
        self.0.iter().zip(h.edges()).all(|(&t, e)| t + 1 == e.len())
    }
}

/// Layered record of one propagation run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropagationTrace {
    /// Every edge covered and every vertex reached.
    pub verdict: bool,
    /// Edges contained in the core, removed before the first round.
    pub initially_covered: Vec<EdgeId>,
    /// `layers[i - 1]` is `L_i`, ascending edge indices.
    pub layers: Vec<Vec<EdgeId>>,
    /// `Some(0)` for initially covered edges, `Some(i)` for `L_i`.
    pub edge_layer: Vec<Option<usize>>,
    /// `Some(0)` for core vertices, `Some(i)` when first reached in round `i`.
    pub assimilated_at: Vec<Option<usize>>,
    /// Edge credited with assimilating each non-core vertex. Among the edges
    /// of the same layer containing the vertex, the smallest index wins.
    pub credited_edge: Vec<Option<EdgeId>>,
    /// Edge assimilated at least one new vertex.
    pub extending: Vec<bool>,
    /// Smallest vertex credited to each extending edge.
    pub assimilator: Vec<Option<VertexId>>,
}

impl PropagationTrace {
    /// Number of layers, when the run certified a core.
    pub fn radius(&self) -> Option<usize> {
        self.verdict.then_some(self.layers.len())
    }

    /// `V_i` as a membership mask (`i` clamped to the last layer).
    pub fn reached_by(&self, i: usize) -> Vec<bool> {
        self.assimilated_at.iter().map(|a| matches!(a, Some(l) if *l <= i)).collect()
    }

    /// Whether every `e ∈ L_i` has exactly `|e| - 1` vertices in `V_{i-1}`,
    /// the literal layer condition. Non-extending edges whose last vertex
    /// arrived in the previous round violate it.
    pub fn strict_layering_holds(&self, h: &Hypergraph) -> bool {
        self.layers.iter().enumerate().all(|(idx, layer)| {
            layer.iter().all(|&e| {
                let inside = h
                    .edge(e)
                    .vertices()
                    .iter()
                    .filter(|&&v| matches!(self.assimilated_at[v], Some(l) if l < idx + 1))
                    .count();
                inside + 1 == h.edge(e).len()
            })
        })
    }
}

/// Reusable propagation state for one hypergraph and threshold choice.
#[derive(Debug, Clone)]
pub struct Propagator<'a> {
    h: &'a Hypergraph,
    thresholds: Vec<usize>,
    incidence: Vec<Vec<EdgeId>>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum EdgeState {
    Pending,
    Queued,
    Covered,
}

impl<'a> Propagator<'a> {
    pub fn new(h: &'a Hypergraph, thresholds: Option<&ThresholdMap>) -> Result<Propagator<'a>> {
        let thresholds = match thresholds {
            Some(t) => {
                t.validate(h)?;
                t.as_slice().to_vec()
            }
            None => h.edges().iter().map(|e| e.len() - 1).collect(),
        };
        Ok(Propagator { h, thresholds, incidence: h.incidence() })
    }

    pub fn hypergraph(&self) -> &'a Hypergraph {
        self.h
    }

    pub fn run(&self, core: &CoreSet) -> Result<PropagationTrace> {
        core.check_range(self.h.n())?;
        let h = self.h;
        let (n, m) = (h.n(), h.m());
        let mut assimilated_at = vec![None; n];
        let mut credited_edge = vec![None; n];
        let mut extending = vec![false; m];
        let mut assimilator = vec![None; m];
        let mut edge_layer = vec![None; m];
        let mut state = vec![EdgeState::Pending; m];
        let mut count = vec![0usize; m];
        let mut reached = core.len();

        for &v in core.vertices() {
            assimilated_at[v] = Some(0);
            for &e in &self.incidence[v] {
                count[e] += 1;
            }
        }
        let mut initially_covered = Vec::new();
        let mut frontier = Vec::new();
        for e in 0..m {
            if count[e] == h.edge(e).len() {
                initially_covered.push(e);
                edge_layer[e] = Some(0);
                state[e] = EdgeState::Covered;
            } else if count[e] >= self.thresholds[e] {
                frontier.push(e);
                state[e] = EdgeState::Queued;
            }
        }
        let mut covered = initially_covered.len();

        let mut layers: Vec<Vec<EdgeId>> = Vec::new();
        let mut fresh = Vec::new();
        while !frontier.is_empty() {
            frontier.sort_unstable();
            let round = layers.len() + 1;
            fresh.clear();
            for &e in &frontier {
                state[e] = EdgeState::Covered;
                edge_layer[e] = Some(round);
                covered += 1;
                for &v in h.edge(e).vertices() {
                    if assimilated_at[v].is_none() {
                        assimilated_at[v] = Some(round);
                        credited_edge[v] = Some(e);
                        extending[e] = true;
                        if assimilator[e].is_none() {
                            assimilator[e] = Some(v);
                        }
                        fresh.push(v);
                    }
                }
            }
            reached += fresh.len();
            layers.push(core::mem::take(&mut frontier));
            for &v in &fresh {
                for &e in &self.incidence[v] {
                    if state[e] == EdgeState::Pending {
                        count[e] += 1;
                        if count[e] >= self.thresholds[e] {
                            state[e] = EdgeState::Queued;
                            frontier.push(e);
                        }
                    }
                }
            }
        }

        Ok(PropagationTrace {
            verdict: covered == m && reached == n,
            initially_covered,
            layers,
            edge_layer,
            assimilated_at,
            credited_edge,
            extending,
            assimilator,
        })
    }

    pub fn is_core(&self, core: &CoreSet) -> Result<bool> {
        Ok(self.run(core)?.verdict)
    }

    pub fn radius(&self, core: &CoreSet) -> Result<usize> {
        self.run(core)?.radius().ok_or(Error::NotACore)
    }
}

/// Whether `core` covers every edge and reaches every vertex.
/// `None` selects the default threshold `|e| - 1`.
pub fn is_core(h: &Hypergraph, core: &CoreSet, thresholds: Option<&ThresholdMap>) -> Result<bool> {
    Propagator::new(h, thresholds)?.is_core(core)
}

pub fn propagate(
    h: &Hypergraph,
    core: &CoreSet,
    thresholds: Option<&ThresholdMap>,
) -> Result<PropagationTrace> {
    Propagator::new(h, thresholds)?.run(core)
}

/// Number of synchronous rounds; errors with [`Error::NotACore`].
pub fn radius(h: &Hypergraph, core: &CoreSet, thresholds: Option<&ThresholdMap>) -> Result<usize> {
    Propagator::new(h, thresholds)?.radius(core)
}
