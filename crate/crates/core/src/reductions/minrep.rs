// SPDX-License-Identifier: Apache-2.0

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{ReductionCertificate, Source};
use crate::error::{Error, Result};
use crate::hypergraph::{HypergraphBuilder, VertexId};
use crate::propagation::{CoreSet, Propagator};

/// Bipartite graph over `A` and `B` with both sides split into groups of
/// equal size. Vertices are numbered per side from 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinrepInstance {
    a_groups: Vec<usize>,
    b_groups: Vec<usize>,
    q_a: usize,
    q_b: usize,
    edges: Vec<(usize, usize)>,
}

fn check_groups(groups: &[usize], q: usize) -> Result<()> {
    let mut sizes = vec![0usize; q];
    for &g in groups {
        if g >= q {
            return Err(Error::InvalidInstance("group index out of range"));
        }
        sizes[g] += 1;
    }
    if sizes.iter().any(|&s| s == 0 || s != sizes[0]) {
        return Err(Error::InvalidInstance("groups on one side must be non-empty and of equal size"));
    }
    Ok(())
}

impl MinrepInstance {
    /// `a_groups[a]` is the group of `A`-vertex `a`, likewise for `B`;
    /// `edges` pairs an `A`-vertex with a `B`-vertex.
    pub fn new(
        q_a: usize,
        q_b: usize,
        a_groups: Vec<usize>,
        b_groups: Vec<usize>,
        edges: Vec<(usize, usize)>,
    ) -> Result<MinrepInstance> {
        check_groups(&a_groups, q_a)?;
        check_groups(&b_groups, q_b)?;
        let mut sorted = edges.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInstance("bipartite edge listed twice"));
        }
        if edges.iter().any(|&(a, b)| a >= a_groups.len() || b >= b_groups.len()) {
            return Err(Error::InvalidInstance("bipartite edge endpoint out of range"));
        }
        Ok(MinrepInstance { a_groups, b_groups, q_a, q_b, edges })
    }

    pub fn a_count(&self) -> usize {
        self.a_groups.len()
    }

    pub fn b_count(&self) -> usize {
        self.b_groups.len()
    }

    pub fn q_a(&self) -> usize {
        self.q_a
    }

    pub fn q_b(&self) -> usize {
        self.q_b
    }

    pub fn a_groups(&self) -> &[usize] {
        &self.a_groups
    }

    pub fn b_groups(&self) -> &[usize] {
        &self.b_groups
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Group pairs joined by at least one edge, sorted.
    pub fn super_edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self.edges.iter().map(|&(a, b)| (self.a_groups[a], self.b_groups[b])).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Whether the chosen vertices cover every super-edge. Indices `0..|A|`
    /// are `A`-vertices and `|A|..|A|+|B|` are `B`-vertices.
    pub fn covers_all(&self, chosen: &[usize]) -> bool {
        let na = self.a_count();
        let mut picked = vec![false; na + self.b_count()];
        for &v in chosen {
            picked[v] = true;
        }
        self.super_edges().into_iter().all(|(ga, gb)| {
            self.edges
                .iter()
                .any(|&(a, b)| picked[a] && picked[na + b] && self.a_groups[a] == ga && self.b_groups[b] == gb)
        })
    }
}

/// An AND-gadget over `inputs` and `output` with fresh inner nodes labelled
/// `x1@<tag>` and `x2@<tag>`: edges `inputs + x1`, `inputs + x2`,
/// `{x1, x2, output}`.
pub fn and_gadget(
    b: &mut HypergraphBuilder,
    inputs: &[VertexId],
    output: VertexId,
    tag: &str,
) -> Result<(VertexId, VertexId)> {
    if inputs.is_empty() {
        return Err(Error::InvalidInstance("an AND-gadget needs at least one input"));
    }
    Ok(add_and(b, inputs, output, tag))
}

// Also used with no inputs when there are no super-edges.
fn add_and(b: &mut HypergraphBuilder, inputs: &[VertexId], output: VertexId, tag: &str) -> (VertexId, VertexId) {
    let x1 = b.add_vertex(format!("x1@{tag}"));
    let x2 = b.add_vertex(format!("x2@{tag}"));
    for x in [x1, x2] {
        let mut e = inputs.to_vec();
        e.push(x);
        b.add_edge(e);
    }
    b.add_edge(vec![x1, x2, output]);
    (x1, x2)
}

/// Where each part of a MINREP gadget hypergraph lives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinrepLayout {
    pub super_edges: Vec<(usize, usize)>,
    /// Copy `k` of super-edge `s` is vertex `copies[k][s]`.
    pub copies: [Vec<VertexId>; 2],
    pub gadgets: Vec<AndRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AndRecord {
    pub inputs: Vec<VertexId>,
    pub output: VertexId,
    pub inner: [VertexId; 2],
}

/// `A`, `B`, then two copies of every super-edge, then the inner nodes of
/// `AND({a, b}, e_k)` for every bipartite edge and `k` and of
/// `AND(all copies, v)` for every `v` in `A` and `B`.
pub fn minrep_to_mincore(inst: &MinrepInstance) -> ReductionCertificate {
    let (na, nb) = (inst.a_count(), inst.b_count());
    let mut b = HypergraphBuilder::new();
    for (a, g) in inst.a_groups.iter().enumerate() {
        b.add_vertex(format!("a_{}@A_{}", a + 1, g + 1));
    }
    for (v, g) in inst.b_groups.iter().enumerate() {
        b.add_vertex(format!("b_{}@B_{}", v + 1, g + 1));
    }
    let super_edges = inst.super_edges();
    let mut copies = [Vec::new(), Vec::new()];
    for (k, c) in copies.iter_mut().enumerate() {
        for &(ga, gb) in &super_edges {
            c.push(b.add_vertex(format!("e{}_{}_{}", k + 1, ga + 1, gb + 1)));
        }
    }
    let mut gadgets = Vec::new();
    let mut push = |b: &mut HypergraphBuilder, inputs: Vec<VertexId>, output: VertexId| {
        let tag = format!("and{}", gadgets.len() + 1);
        let (x1, x2) = add_and(b, &inputs, output, &tag);
        gadgets.push(AndRecord { inputs, output, inner: [x1, x2] });
    };
    for &(a, v) in &inst.edges {
        let s = super_edges
            .binary_search(&(inst.a_groups[a], inst.b_groups[v]))
            .expect("every edge induces its super-edge");
        for c in &copies {
            push(&mut b, vec![a, na + v], c[s]);
        }
    }
    let all_copies: Vec<VertexId> = copies.iter().flatten().copied().collect();
    for v in 0..na + nb {
        push(&mut b, all_copies.clone(), v);
    }
    let layout = MinrepLayout { super_edges, copies, gadgets };
    ReductionCertificate { instance: b.build(), source: Source::Minrep(inst.clone(), layout) }
}

fn assimilated(p: &Propagator<'_>, core: &[VertexId]) -> Result<Vec<bool>> {
    let trace = p.run(&CoreSet::new(core.to_vec()))?;
    Ok(trace.assimilated_at.iter().map(|a| a.is_some()).collect())
}

fn remove(core: &[VertexId], v: VertexId) -> Vec<VertexId> {
    core.iter().copied().filter(|&x| x != v).collect()
}

fn first_core(p: &Propagator<'_>, candidates: Vec<Vec<VertexId>>) -> Result<Vec<VertexId>> {
    for c in candidates {
        let set = CoreSet::new(c);
        if p.is_core(&set)? {
            return Ok(set.into_vec());
        }
    }
    Err(Error::NotACore)
}

/// Rewrites a core into one inside `A` and `B` without growing it: inner
/// nodes are traded for an input or the output of their gadget, then copies
/// of a super-edge are dropped or traded for an edge covering it. Returns
/// the chosen vertices with `A` first, as in [`MinrepInstance::covers_all`].
pub fn core_to_minrep(cert: &ReductionCertificate, core: &CoreSet) -> Result<Vec<usize>> {
    let Source::Minrep(inst, layout) = &cert.source else {
        return Err(Error::WrongCertificate);
    };
    let p = Propagator::new(&cert.instance, None)?;
    if !p.is_core(core)? {
        return Err(Error::NotACore);
    }
    let mut c = core.vertices().to_vec();

    for g in &layout.gadgets {
        for (slot, &x) in g.inner.iter().enumerate() {
            if !c.contains(&x) {
                continue;
            }
            let other = g.inner[1 - slot];
            let c0 = remove(&c, x);
            let reach = assimilated(&p, &c0)?;
            let missing: Vec<VertexId> = g.inputs.iter().copied().filter(|&u| !reach[u]).collect();
            let mut candidates = Vec::new();
            if reach[other] {
                let mut with_v = c0.clone();
                with_v.push(g.output);
                candidates.push(with_v);
            }
            if missing.is_empty() || reach[x] {
                candidates.push(c0.clone());
            }
            if missing.len() == 1 {
                let mut with_u = c0.clone();
                with_u.push(missing[0]);
                candidates.push(with_u);
            }
            c = first_core(&p, candidates)?;
        }
    }

    let na = inst.a_count();
    for (s, &(ga, gb)) in layout.super_edges.iter().enumerate() {
        let (e1, e2) = (layout.copies[0][s], layout.copies[1][s]);
        let candidates = if c.contains(&e1) && c.contains(&e2) {
            let &(a, v) = inst
                .edges
                .iter()
                .find(|&&(a, v)| inst.a_groups[a] == ga && inst.b_groups[v] == gb)
                .expect("super-edges come from edges");
            let mut next = remove(&remove(&c, e1), e2);
            next.extend([a, na + v]);
            vec![next]
        } else if c.contains(&e1) {
            vec![remove(&c, e1)]
        } else if c.contains(&e2) {
            vec![remove(&c, e2)]
        } else {
            continue;
        };
        c = first_core(&p, candidates)?;
    }
    debug_assert!(c.iter().all(|&v| v < na + inst.b_count()));
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{oracle_all_min_cores, oracle_min_core, oracle_minrep, OracleBudget};
    use crate::propagation::{is_core, propagate};
    use alloc::vec;

    fn budget() -> OracleBudget {
        OracleBudget { max_vertices: 128, max_subsets: 1 << 26 }
    }

    #[test]
    fn and_gadget_example() {
        let mut b = HypergraphBuilder::new();
        let (a, v, c) = (b.add_vertex("a"), b.add_vertex("b"), b.add_vertex("c"));
        let (x1, x2) = and_gadget(&mut b, &[a, v], c, "g").unwrap();
        assert!(and_gadget(&mut b, &[], c, "h").is_err());
        let h = b.build();
        assert_eq!(h.label(x1), Some("x1@g"));
        let lists: Vec<Vec<usize>> = h.edges().iter().map(|e| e.vertices().to_vec()).collect();
        assert_eq!(lists, vec![vec![a, v, x1], vec![a, v, x2], vec![c, x1, x2]]);
        let tr = propagate(&h, &CoreSet::new(vec![a, v]), None).unwrap();
        assert_eq!(tr.assimilated_at[c], Some(2));
        assert_eq!(tr.radius(), Some(2));

        let mut b = HypergraphBuilder::new();
        let (u, w) = (b.add_vertex("u"), b.add_vertex("w"));
        and_gadget(&mut b, &[u], w, "g").unwrap();
        let sizes: Vec<usize> = b.build().edges().iter().map(|e| e.len()).collect();
        assert_eq!(sizes, vec![2, 2, 3]);
    }

    #[test]
    fn single_super_edge() {
        let inst = MinrepInstance::new(1, 1, vec![0], vec![0], vec![(0, 0)]).unwrap();
        assert_eq!(oracle_minrep(&inst, budget()).unwrap().0, 2);
        let cert = minrep_to_mincore(&inst);
        assert!(cert.instance.fully_labeled());
        let r = oracle_min_core(&cert.instance, None, budget()).unwrap();
        assert_eq!(r.size, 2);
        assert_eq!(r.witness, CoreSet::new(vec![0, 1]));
        assert_eq!(core_to_minrep(&cert, &r.witness).unwrap(), vec![0, 1]);
    }

    #[test]
    fn shared_cover_vertex() {
        // A_1 = {a1}, B_1 = {b1}, B_2 = {b2}; a1 reaches both
        let inst = MinrepInstance::new(1, 2, vec![0], vec![0, 1], vec![(0, 0), (0, 1)]).unwrap();
        let opt = oracle_minrep(&inst, budget()).unwrap().0;
        assert_eq!(opt, 3);
        let cert = minrep_to_mincore(&inst);
        assert_eq!(oracle_min_core(&cert.instance, None, budget()).unwrap().size, opt);
    }

    #[test]
    fn no_super_edges() {
        let inst = MinrepInstance::new(1, 1, vec![0], vec![0], vec![]).unwrap();
        assert_eq!(oracle_minrep(&inst, budget()).unwrap().0, 0);
        let cert = minrep_to_mincore(&inst);
        assert_eq!(oracle_min_core(&cert.instance, None, budget()).unwrap().size, 0);
    }

    #[test]
    fn canonicalization_rewrites() {
        let inst = MinrepInstance::new(1, 1, vec![0], vec![0], vec![(0, 0)]).unwrap();
        let cert = minrep_to_mincore(&inst);
        let h = &cert.instance;
        let id = |name: &str| h.labels().iter().position(|l| l.as_deref() == Some(name)).unwrap();
        let (e1, e2) = (id("e1_1_1"), id("e2_1_1"));
        let both = CoreSet::new(vec![e1, e2]);
        assert!(is_core(h, &both, None).unwrap());
        assert_eq!(core_to_minrep(&cert, &both).unwrap(), vec![0, 1]);

        for c in oracle_all_min_cores(h, budget()).unwrap() {
            let out = core_to_minrep(&cert, &c).unwrap();
            assert_eq!(out.len(), c.len());
            assert!(is_core(h, &CoreSet::new(out.clone()), None).unwrap());
            assert!(inst.covers_all(&out));
        }
        assert_eq!(core_to_minrep(&cert, &CoreSet::new(vec![0])), Err(Error::NotACore));
    }

    #[test]
    fn instance_validation() {
        assert!(MinrepInstance::new(2, 1, vec![0, 0, 1], vec![0], vec![]).is_err());
        assert!(MinrepInstance::new(1, 1, vec![0], vec![0], vec![(0, 0), (0, 0)]).is_err());
        assert!(MinrepInstance::new(1, 1, vec![0], vec![0], vec![(0, 1)]).is_err());
        assert!(MinrepInstance::new(2, 1, vec![0, 0], vec![0], vec![]).is_err());
    }
}
