// SPDX-License-Identifier: Apache-2.0

//! The instance type and the structural queries the other modules build on.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Dense vertex index in `0..n`.
pub type VertexId = usize;
/// Position of an edge in [`Hypergraph::edges`].
pub type EdgeId = usize;

/// A non-empty, strictly increasing list of vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(Vec<VertexId>);

impl Edge {
    /// Sorts `vertices`; rejects empty input and repeated vertices.
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Edge> {
        if vertices.is_empty() {
            return Err(Error::EmptyEdge { edge: 0 });
        }
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex { edge: 0, vertex: w[0] });
        }
        Ok(Edge(vertices))
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
}

/// Either a finite hop count or "unreachable".
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

/// `H = (V, E)` with `V = 0..n` and an ordered edge list.
///
/// Edge order is significant: every per-edge output in this crate is indexed
/// by position. Duplicate edges are allowed. Vertices may carry a label naming
/// the gadget role they were created for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Edge>,
    labels: Vec<Option<String>>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Hypergraph> {
        for (i, e) in edges.iter().enumerate() {
            if let Some(&v) = e.vertices().last() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            } else {
                return Err(Error::EmptyEdge { edge: i });
            }
        }
        Ok(Hypergraph { n, edges, labels: vec![None; n] })
    }

    /// Builds from plain vertex lists; errors carry the offending edge index.
    pub fn from_lists<I, L>(n: usize, lists: I) -> Result<Hypergraph>
    where
        I: IntoIterator<Item = L>,
        L: AsRef<[VertexId]>,
    {
        let mut edges = Vec::new();
        for (i, list) in lists.into_iter().enumerate() {
            let e = Edge::new(list.as_ref().to_vec()).map_err(|err| match err {
                Error::EmptyEdge { .. } => Error::EmptyEdge { edge: i },
                Error::DuplicateVertex { vertex, .. } => Error::DuplicateVertex { edge: i, vertex },
                other => other,
            })?;
            edges.push(e);
        }
        Hypergraph::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.get(v).and_then(|l| l.as_deref())
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn set_label(&mut self, v: VertexId, label: impl Into<String>) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        self.labels[v] = Some(label.into());
        Ok(())
    }

    /// True when every vertex carries a label.
    pub fn fully_labeled(&self) -> bool {
        self.labels.iter().all(Option::is_some)
    }

    /// The same hypergraph without the edges whose index is in `removed`.
    pub fn without_edges(&self, removed: &[EdgeId]) -> Hypergraph {
        let mut drop = vec![false; self.m()];
        for &e in removed {
            drop[e] = true;
        }
        let edges = self
            .edges
            .iter()
            .zip(&drop)
            .filter(|(_, d)| !**d)
            .map(|(e, _)| e.clone())
            .collect();
        Hypergraph { n: self.n, edges, labels: self.labels.clone() }
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Edge indices incident to each vertex, in increasing order.
    pub fn incidence(&self) -> Vec<Vec<EdgeId>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e.vertices() {
                inc[v].push(i);
            }
        }
        inc
    }

    /// Number of incident edges per vertex, duplicates counted.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e.vertices() {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Vertices sharing at least one edge with `v`, ascending, `v` excluded.
    pub fn neighbors(&self, v: VertexId) -> Result<Vec<VertexId>> {
        self.check_vertex(v)?;
        let mut seen = vec![false; self.n];
        for e in self.edges.iter().filter(|e| e.contains(v)) {
            for &w in e.vertices() {
                seen[w] = true;
            }
        }
        seen[v] = false;
        Ok(seen.iter().enumerate().filter(|(_, s)| **s).map(|(w, _)| w).collect())
    }

    /// Neighbour count of every vertex.
    pub fn neighbor_counts(&self) -> Vec<usize> {
        let inc = self.incidence();
        let mut mark = vec![usize::MAX; self.n];
        (0..self.n)
            .map(|v| {
                let mut count = 0;
                mark[v] = v;
                for &e in &inc[v] {
                    for &w in self.edges[e].vertices() {
                        if mark[w] != v {
                            mark[w] = v;
                            count += 1;
                        }
                    }
                }
                count
            })
            .collect()
    }

    /// A system of distinct representatives: `Some(rep)` with `rep[e] ∈ e`
    /// pairwise distinct, or `None` when no such assignment exists.
    ///
    /// Maximum bipartite matching between edges and vertices by augmenting
    /// paths.
    pub fn sdr(&self) -> Option<Vec<VertexId>> {
        let m = self.m();
        if m > self.n {
            return None;
        }
        let mut owner: Vec<Option<EdgeId>> = vec![None; self.n];
        let mut rep: Vec<Option<VertexId>> = vec![None; m];
        let mut visited = vec![usize::MAX; self.n];
        for root in 0..m {
            if !self.augment(root, &mut owner, &mut rep, &mut visited) {
                return None;
            }
        }
        Some(rep.into_iter().map(|r| r.expect("every edge matched")).collect())
    }

    pub fn has_sdr(&self) -> bool {
        self.sdr().is_some()
    }

    // Iterative DFS for an augmenting path from edge `root`.
    fn augment(
        &self,
        root: EdgeId,
        owner: &mut [Option<EdgeId>],
        rep: &mut [Option<VertexId>],
        visited: &mut [usize],
    ) -> bool {
        // stack of (edge, next vertex position to try); `via[k]` is the vertex
        // through which stack entry k+1 was reached
        let mut stack: Vec<(EdgeId, usize)> = vec![(root, 0)];
        let mut via: Vec<VertexId> = Vec::new();
        while let Some(&mut (e, ref mut pos)) = stack.last_mut() {
            let verts = self.edges[e].vertices();
            if *pos == verts.len() {
                stack.pop();
                via.pop();
                continue;
            }
            let v = verts[*pos];
            *pos += 1;
            if visited[v] == root {
                continue;
            }
            visited[v] = root;
            match owner[v] {
                None => {
                    // flip the path
                    via.push(v);
                    for (k, &(edge, _)) in stack.iter().enumerate() {
                        let w = via[k];
                        rep[edge] = Some(w);
                        owner[w] = Some(edge);
                    }
                    return true;
                }
                Some(next) => {
                    via.push(v);
                    stack.push((next, 0));
                }
            }
        }
        false
    }

    /// BFS hop distances from `s` over the neighbour relation.
    pub fn distances_from(&self, s: VertexId) -> Result<Vec<Distance>> {
        self.check_vertex(s)?;
        Ok(self.bfs(&[s], &self.incidence()))
    }

    /// Hop distance from every vertex to the nearest vertex of `sources`.
    pub fn distances_to_set(&self, sources: &[VertexId]) -> Result<Vec<Distance>> {
        for &s in sources {
            self.check_vertex(s)?;
        }
        Ok(self.bfs(sources, &self.incidence()))
    }

    fn bfs(&self, sources: &[VertexId], inc: &[Vec<EdgeId>]) -> Vec<Distance> {
        let mut dist = vec![Distance::Infinite; self.n];
        let mut edge_done = vec![false; self.m()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s] == Distance::Infinite {
                dist[s] = Distance::Finite(0);
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[v].finite().expect("queued vertices are reached");
            for &e in &inc[v] {
                if core::mem::replace(&mut edge_done[e], true) {
                    continue;
                }
                for &w in self.edges[e].vertices() {
                    if dist[w] == Distance::Infinite {
                        dist[w] = Distance::Finite(d + 1);
                        queue.push_back(w);
                    }
                }
            }
        }
        dist
    }

    /// Length of a shortest hyperpath between distinct vertices.
    pub fn shortest_hyperpath(&self, s: VertexId, t: VertexId) -> Result<Distance> {
        self.check_vertex(s)?;
        self.check_vertex(t)?;
        if s == t {
            return Err(Error::SameEndpoints);
        }
        Ok(self.distances_from(s)?[t])
    }

    /// Maximum pairwise hyperpath distance; `Infinite` when disconnected.
    pub fn diameter(&self) -> Result<Distance> {
        if self.n < 2 {
            return Err(Error::TooFewVertices { n: self.n });
        }
        let inc = self.incidence();
        let mut best = 0;
        for s in 0..self.n {
            for d in self.bfs(&[s], &inc) {
                match d {
                    Distance::Infinite => return Ok(Distance::Infinite),
                    Distance::Finite(d) => best = best.max(d),
                }
            }
        }
        Ok(Distance::Finite(best))
    }

    /// `m` edges on `n` vertices; each edge draws its size uniformly from
    /// `edge_size_min..=edge_size_max` and then its vertices uniformly without
    /// replacement. A fixed seed gives the same instance on every platform.
    pub fn generate_random(
        n: usize,
        m: usize,
        edge_size_min: usize,
        edge_size_max: usize,
        seed: u64,
    ) -> Result<Hypergraph> {
        if edge_size_min < 1 {
            return Err(Error::InfeasibleParameters("minimum edge size must be at least 1"));
        }
        if edge_size_min > edge_size_max {
            return Err(Error::InfeasibleParameters("minimum edge size exceeds maximum"));
        }
        if edge_size_max > n {
            return Err(Error::InfeasibleParameters("maximum edge size exceeds vertex count"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let edges = (0..m)
            .map(|_| {
                let size = rng.gen_range(edge_size_min..=edge_size_max);
                let mut vs = index::sample(&mut rng, n, size).into_vec();
                vs.sort_unstable();
                Edge(vs)
            })
            .collect();
        Hypergraph::new(n, edges)
    }

    /// An instance whose degree-one peeling always succeeds: `edge_size - 1`
    /// seed vertices, then every edge adds one fresh vertex plus
    /// `edge_size - 1` distinct earlier vertices. `n = m + edge_size - 1`.
    pub fn generate_peelable(m: usize, edge_size: usize, seed: u64) -> Result<Hypergraph> {
        if edge_size < 2 {
            return Err(Error::InfeasibleParameters("peelable instances need edge size at least 2"));
        }
        let seeds = edge_size - 1;
        let n = m + seeds;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::with_capacity(m);
        for i in 0..m {
            let fresh = seeds + i;
            let mut vs = index::sample(&mut rng, fresh, edge_size - 1).into_vec();
            vs.push(fresh);
            vs.sort_unstable();
            edges.push(Edge(vs));
        }
        Hypergraph::new(n, edges)
    }
}

/// Incrementally assembles an instance, handing out fresh labelled vertices.
#[derive(Debug, Clone, Default)]
pub struct HypergraphBuilder {
    labels: Vec<Option<String>>,
    edges: Vec<Edge>,
}

impl HypergraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> VertexId {
        self.labels.push(Some(label.into()));
        self.labels.len() - 1
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Panics on an empty or repeated vertex list; gadget code only emits
    /// well-formed edges.
    pub fn add_edge(&mut self, vertices: Vec<VertexId>) -> EdgeId {
        let e = Edge::new(vertices).expect("gadget edges are non-empty and duplicate free");
        assert!(e.vertices().iter().all(|&v| v < self.labels.len()));
        self.edges.push(e);
        self.edges.len() - 1
    }

    pub fn build(self) -> Hypergraph {
        Hypergraph { n: self.labels.len(), edges: self.edges, labels: self.labels }
    }
}

impl Hypergraph {
    /// Replaces all labels; `labels.len()` must equal `n`.
    pub fn with_labels(mut self, labels: Vec<Option<String>>) -> Result<Hypergraph> {
        if labels.len() != self.n {
            return Err(Error::InvalidInstance("label count differs from vertex count"));
        }
        self.labels = labels;
        Ok(self)
    }
}
