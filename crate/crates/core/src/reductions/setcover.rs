// SPDX-License-Identifier: Apache-2.0

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::triangulation::tree_edges;
use super::{ReductionCertificate, Source};
use crate::error::{Error, Result};
use crate::hypergraph::{HypergraphBuilder, VertexId};
use crate::propagation::{is_core, CoreSet};

/// Universe `0..universe_size` and a family of subsets whose union is the
/// universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInstance {
    universe_size: usize,
    sets: Vec<Vec<usize>>,
}

impl SetCoverInstance {
    pub fn new(universe_size: usize, sets: Vec<Vec<usize>>) -> Result<SetCoverInstance> {
        let mut seen = vec![false; universe_size];
        let mut clean = Vec::with_capacity(sets.len());
        for mut s in sets {
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidInstance("set lists an element twice"));
            }
            for &u in &s {
                if u >= universe_size {
                    return Err(Error::InvalidInstance("set element outside the universe"));
                }
                seen[u] = true;
            }
            clean.push(s);
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::InvalidInstance("sets do not cover the universe"));
        }
        Ok(SetCoverInstance { universe_size, sets: clean })
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn is_cover(&self, chosen: &[usize]) -> bool {
        let mut hit = vec![false; self.universe_size];
        for &i in chosen {
            for &u in &self.sets[i] {
                hit[u] = true;
            }
        }
        hit.into_iter().all(|h| h)
    }

    fn first_set_containing(&self, u: usize) -> usize {
        self.sets.iter().position(|s| s.binary_search(&u).is_ok()).expect("the sets cover the universe")
    }
}

/// Vertex ids of the set and element gadgets, shared by both variants.
struct Layout {
    s: Vec<VertexId>,
    s_prime: Vec<VertexId>,
    u: Vec<VertexId>,
    u_prime: Vec<VertexId>,
}

fn add_vertices(b: &mut HypergraphBuilder, inst: &SetCoverInstance, extra: bool) -> (Layout, Option<VertexId>) {
    let mut layout = Layout { s: vec![], s_prime: vec![], u: vec![], u_prime: vec![] };
    for i in 1..=inst.sets.len() {
        layout.s.push(b.add_vertex(format!("s_{i}")));
        layout.s_prime.push(b.add_vertex(format!("s'_{i}")));
    }
    let v = extra.then(|| b.add_vertex("v"));
    for j in 1..=inst.universe_size {
        layout.u.push(b.add_vertex(format!("u_{j}")));
        layout.u_prime.push(b.add_vertex(format!("u'_{j}")));
    }
    (layout, v)
}

fn add_membership_edges(b: &mut HypergraphBuilder, inst: &SetCoverInstance, l: &Layout) {
    for (i, set) in inst.sets.iter().enumerate() {
        for &j in set {
            b.add_edge(vec![l.s[i], l.s_prime[i], l.u[j]]);
            b.add_edge(vec![l.s[i], l.s_prime[i], l.u_prime[j]]);
        }
    }
}

fn element_side(l: &Layout) -> Vec<VertexId> {
    l.u.iter().zip(&l.u_prime).flat_map(|(&a, &b)| [a, b]).collect()
}

/// Vertices `s_i, s'_i` per set then `u_j, u'_j` per element. Edges: each
/// pair `{s_i, s'_i}`; `{s_i, s'_i, u_j}` and `{s_i, s'_i, u'_j}` for every
/// element of set `i`; and all element vertices together with `s_i`, and
/// with `s'_i`.
pub fn setcover_to_mincore(inst: &SetCoverInstance) -> ReductionCertificate {
    let mut b = HypergraphBuilder::new();
    let (l, _) = add_vertices(&mut b, inst, false);
    for i in 0..inst.sets.len() {
        b.add_edge(vec![l.s[i], l.s_prime[i]]);
    }
    add_membership_edges(&mut b, inst, &l);
    let side = element_side(&l);
    for i in 0..inst.sets.len() {
        for root in [l.s[i], l.s_prime[i]] {
            let mut e = side.clone();
            e.push(root);
            b.add_edge(e);
        }
    }
    ReductionCertificate { instance: b.build(), source: Source::SetCover(inst.clone()) }
}

/// 3-uniform variant: an extra vertex `v` joins every `{s_i, s'_i}` and the
/// wide edges become triangulation gadgets rooted at `s_i` and `s'_i` with
/// the element vertices as leaves. The minimum core is one larger than the
/// minimum cover.
pub fn setcover_to_mincore_3uniform(inst: &SetCoverInstance) -> ReductionCertificate {
    let mut b = HypergraphBuilder::new();
    let (l, v) = add_vertices(&mut b, inst, true);
    let v = v.expect("requested");
    for i in 0..inst.sets.len() {
        b.add_edge(vec![l.s[i], l.s_prime[i], v]);
    }
    add_membership_edges(&mut b, inst, &l);
    let side = element_side(&l);
    for i in 0..inst.sets.len() {
        for (root, name) in [(l.s[i], format!("s_{}", i + 1)), (l.s_prime[i], format!("s'_{}", i + 1))] {
            let mut edges = Vec::new();
            let mut k = 0;
            tree_edges(
                root,
                &side,
                &mut || {
                    k += 1;
                    b.add_vertex(format!("t{k}@{name}"))
                },
                &mut edges,
            );
            for e in edges {
                b.add_edge(e);
            }
        }
    }
    ReductionCertificate { instance: b.build(), source: Source::SetCover3(inst.clone()) }
}

/// Moves element vertices of `core` onto the first set containing them,
/// then picks every set whose `s_i` or `s'_i` is in the core.
pub fn core_to_setcover(cert: &ReductionCertificate, core: &CoreSet) -> Result<Vec<usize>> {
    let Source::SetCover(inst) = &cert.source else {
        return Err(Error::WrongCertificate);
    };
    if !is_core(&cert.instance, core, None)? {
        return Err(Error::NotACore);
    }
    let sets = inst.sets.len();
    let mut chosen = vec![false; sets];
    for &v in core.vertices() {
        let i = if v < 2 * sets { v / 2 } else { inst.first_set_containing((v - 2 * sets) / 2) };
        chosen[i] = true;
    }
    Ok((0..sets).filter(|&i| chosen[i]).collect())
}
