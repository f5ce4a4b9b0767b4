// SPDX-License-Identifier: Apache-2.0

//! Minimum cores by degree-one peeling.
//!
//! [`peel_nm`] repeatedly removes every edge that owns a degree-one vertex,
//! dropping one such vertex from the core per removed edge. It succeeds
//! exactly when a core of size `n - m` exists, and the number of rounds is
//! then the smallest radius any such core can have; the edges removed in
//! round `w` form layer `r + 1 - w` of the resulting core.
//!
//! [`mincore_fpt`] extends this to cores of size `n - m + a` by peeling with
//! every `a`-subset of edges deleted and putting those edges back as
//! non-extending edges afterwards.

use alloc::vec;
use alloc::vec::Vec;

use crate::combinations::Combinations;
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::oracle::{self, OracleBudget};
use crate::propagation::{CoreSet, Propagator};

/// Output of a successful peel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelResult {
    pub core: CoreSet,
    /// Edges removed in each while-iteration, ascending within a round.
    pub rounds: Vec<Vec<EdgeId>>,
    /// Vertex dropped from the core on behalf of each active edge.
    pub removed_vertex: Vec<Option<VertexId>>,
}

impl PeelResult {
    pub fn radius(&self) -> usize {
        self.rounds.len()
    }

    /// Rounds in reverse. There are as many as the core has layers, but an
    /// edge may fire earlier under propagation than its round suggests.
    pub fn layers(&self) -> Vec<Vec<EdgeId>> {
        self.rounds.iter().rev().cloned().collect()
    }
}

/// Degree-one peeling for a core of size `n - m`.
///
/// When an edge has several degree-one vertices the smallest is removed.
/// Vertices that end with degree zero stay in the core.
pub fn peel_nm(h: &Hypergraph) -> Result<PeelResult> {
    peel_active(h, &vec![true; h.m()])
}

/// Peels the sub-hypergraph of edges with `active[e]`, keeping all vertices.
pub fn peel_active(h: &Hypergraph, active: &[bool]) -> Result<PeelResult> {
    let n = h.n();
    let m_active = active.iter().filter(|&&a| a).count();
    if m_active > n {
        return Err(Error::NoCoreOfSizeNM);
    }
    let mut degree = vec![0usize; n];
    // sum of incident active edge ids; equals the unique edge at degree one
    let mut edge_sum = vec![0u64; n];
    for (i, e) in h.edges().iter().enumerate().filter(|(i, _)| active[*i]) {
        for &v in e.vertices() {
            degree[v] += 1;
            edge_sum[v] += i as u64;
        }
    }
    let mut in_core = vec![true; n];
    let mut alive = active.to_vec();
    let mut removed_vertex = vec![None; h.m()];
    let mut remaining = m_active;
    let mut rounds = Vec::new();
    let mut ones: Vec<VertexId> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut in_f = vec![false; h.m()];

    while remaining > 0 {
        let mut f: Vec<EdgeId> = Vec::new();
        for &v in &ones {
            if degree[v] == 1 {
                let e = edge_sum[v] as usize;
                if !in_f[e] {
                    in_f[e] = true;
                    f.push(e);
                }
            }
        }
        if f.is_empty() {
            return Err(Error::NoCoreOfSizeNM);
        }
        f.sort_unstable();
        for &e in &f {
            let v = h
                .edge(e)
                .vertices()
                .iter()
                .copied()
                .find(|&v| degree[v] == 1)
                .expect("edges in F own a degree-one vertex");
            in_core[v] = false;
            removed_vertex[e] = Some(v);
        }
        ones.clear();
        for &e in &f {
            alive[e] = false;
            for &v in h.edge(e).vertices() {
                degree[v] -= 1;
                edge_sum[v] -= e as u64;
                if degree[v] == 1 {
                    ones.push(v);
                }
            }
        }
        remaining -= f.len();
        rounds.push(f);
    }

    let core = (0..n).filter(|&v| in_core[v]).collect();
    Ok(PeelResult { core, rounds, removed_vertex })
}

/// Minimum core found by the parameterised search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinCoreResult {
    pub core: CoreSet,
    pub radius: usize,
    /// The deleted, later reinserted, edges.
    pub deleted_edges: Vec<EdgeId>,
    /// `|core| - (n - m)`.
    pub parameter_a: usize,
}

/// Peels with `deleted` removed, then measures the core's radius on the full
/// instance. `None` when the peel fails.
pub fn evaluate_deletion(
    h: &Hypergraph,
    propagator: &Propagator<'_>,
    deleted: &[EdgeId],
) -> Option<(CoreSet, usize)> {
    let mut active = vec![true; h.m()];
    for &e in deleted {
        active[e] = false;
    }
    let peel = peel_active(h, &active).ok()?;
    let radius = propagator.radius(&peel.core).expect("a peeled core stays a core after reinsertion");
    Some((peel.core, radius))
}

/// Deterministic preference among successful deletions at the same `a`:
/// smaller radius first, then the lexicographically smaller deleted set.
pub fn better_candidate(a: (&[EdgeId], usize), b: (&[EdgeId], usize)) -> bool {
    (a.1, a.0) < (b.1, b.0)
}

/// Smallest `a <= a_max` for which some `a`-subset of deleted edges lets the
/// peel succeed; among those subsets the minimum radius after reinsertion.
pub fn mincore_fpt(h: &Hypergraph, a_max: usize) -> Result<MinCoreResult> {
    let propagator = Propagator::new(h, None)?;
    for a in 0..=a_max.min(h.m()) {
        if h.m() - a > h.n() {
            continue;
        }
        let mut best: Option<(Vec<EdgeId>, CoreSet, usize)> = None;
        for deleted in Combinations::new(h.m(), a) {
            if let Some((core, radius)) = evaluate_deletion(h, &propagator, &deleted) {
                let improves = match &best {
                    None => true,
                    Some((d, _, r)) => better_candidate((&deleted, radius), (d, *r)),
                };
                if improves {
                    best = Some((deleted, core, radius));
                }
            }
        }
        if let Some((deleted_edges, core, radius)) = best {
            return Ok(MinCoreResult { core, radius, deleted_edges, parameter_a: a });
        }
    }
    Err(Error::NotFoundWithin { a_max })
}

/// Exhaustively checks that no core of size `n - m` beats the peel radius.
pub fn verify_optimal_radius_nm(h: &Hypergraph) -> Result<bool> {
    verify_optimal_radius_nm_with(h, OracleBudget::CORE_DEFAULT)
}

pub fn verify_optimal_radius_nm_with(h: &Hypergraph, budget: OracleBudget) -> Result<bool> {
    let peel = peel_nm(h)?;
    let best = oracle::oracle_min_radius_of_size(h, None, h.n() - h.m(), budget)?;
    Ok(match best {
        Some((r, _)) => r >= peel.radius(),
        None => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::propagation::{is_core, propagate};
    use alloc::vec;

    fn triangle() -> Hypergraph {
        Hypergraph::from_lists(3, [[0, 1], [1, 2], [0, 2]]).unwrap()
    }

    fn path() -> Hypergraph {
        Hypergraph::from_lists(3, [[0, 1], [1, 2]]).unwrap()
    }

    #[test]
    fn peel_examples() {
        let p = peel_nm(&path()).unwrap();
        assert_eq!(p.core.vertices(), &[1]);
        assert_eq!(p.radius(), 1);
        assert_eq!(p.removed_vertex, vec![Some(0), Some(2)]);

        assert_eq!(peel_nm(&triangle()), Err(Error::NoCoreOfSizeNM));

        let edge = Hypergraph::from_lists(2, [[0, 1]]).unwrap();
        let p = peel_nm(&edge).unwrap();
        assert_eq!(p.core.vertices(), &[1]);
        assert_eq!(p.radius(), 1);
    }

    #[test]
    fn peel_short_circuits_when_m_exceeds_n() {
        let h = Hypergraph::from_lists(2, vec![vec![0], vec![1], vec![0, 1]]).unwrap();
        assert_eq!(peel_nm(&h), Err(Error::NoCoreOfSizeNM));
    }

    #[test]
    fn isolated_vertices_stay_in_the_core() {
        let h = Hypergraph::from_lists(4, [[0, 1], [1, 2]]).unwrap();
        let p = peel_nm(&h).unwrap();
        assert_eq!(p.core.vertices(), &[1, 3]);
        assert!(is_core(&h, &p.core, None).unwrap());
    }

    #[test]
    fn rounds_are_reversed_layers() {
        // a chain 0-1-2-3 peels from both ends inwards
        let h = Hypergraph::from_lists(5, [[0, 1], [1, 2], [2, 3], [3, 4]]).unwrap();
        let p = peel_nm(&h).unwrap();
        let tr = propagate(&h, &p.core, None).unwrap();
        assert_eq!(tr.layers, p.layers());
        assert_eq!(tr.radius(), Some(p.radius()));
        for (e, v) in p.removed_vertex.iter().enumerate() {
            assert_eq!(tr.assimilator[e], *v);
        }
    }

    #[test]
    fn fpt_examples() {
        let r = mincore_fpt(&triangle(), 1).unwrap();
        assert_eq!(r.parameter_a, 1);
        assert_eq!(r.core.len(), 1);
        assert_eq!(r.radius, 2);
        assert_eq!(r.deleted_edges.len(), 1);
        // deleting {0,1} peels {1,2},{0,2} down to core {2}? the lexicographic
        // tie-break keeps the first radius-2 deletion
        assert_eq!(r.deleted_edges, vec![0]);
        assert!(is_core(&triangle(), &r.core, None).unwrap());

        let r = mincore_fpt(&path(), 0).unwrap();
        assert_eq!((r.core.vertices(), r.radius, r.parameter_a), (&[1][..], 1, 0));

        let lonely = Hypergraph::from_lists(1, Vec::<Vec<usize>>::new()).unwrap();
        let r = mincore_fpt(&lonely, 0).unwrap();
        assert_eq!((r.core.vertices(), r.radius), (&[0][..], 0));

        assert_eq!(mincore_fpt(&triangle(), 0), Err(Error::NotFoundWithin { a_max: 0 }));
    }

    #[test]
    fn optimal_radius_examples() {
        assert!(verify_optimal_radius_nm(&path()).unwrap());
        let star = Hypergraph::from_lists(4, [[0, 1], [0, 2], [0, 3]]).unwrap();
        let p = peel_nm(&star).unwrap();
        assert_eq!((p.core.vertices(), p.radius()), (&[0][..], 1));
        assert!(verify_optimal_radius_nm(&star).unwrap());
        let empty = Hypergraph::from_lists(2, Vec::<Vec<usize>>::new()).unwrap();
        assert!(verify_optimal_radius_nm(&empty).unwrap());
        assert_eq!(verify_optimal_radius_nm(&triangle()), Err(Error::NoCoreOfSizeNM));
    }
}
