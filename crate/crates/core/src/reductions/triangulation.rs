// SPDX-License-Identifier: Apache-2.0

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::{Edge, EdgeId, Hypergraph, VertexId};

/// A 3-uniform binary tree: one edge `{v, left(v), right(v)}` per internal
/// node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangulationGadget {
    pub hypergraph: Hypergraph,
    pub root: VertexId,
    pub leaves: Vec<VertexId>,
    /// Internal nodes other than the root.
    pub internal: Vec<VertexId>,
}

/// Appends the edges of a balanced tree over `leaves` hanging from `root`.
/// `fresh` hands out the internal nodes in pre-order.
pub(crate) fn tree_edges<F>(root: VertexId, leaves: &[VertexId], fresh: &mut F, out: &mut Vec<Vec<VertexId>>)
where
    F: FnMut() -> VertexId,
{
    debug_assert!(leaves.len() >= 2);
    let (left, right) = leaves.split_at(leaves.len() / 2);
    let child = |part: &[VertexId], fresh: &mut F| if part.len() == 1 { part[0] } else { fresh() };
    let c1 = child(left, fresh);
    let c2 = child(right, fresh);
    out.push(alloc::vec![root, c1, c2]);
    if left.len() > 1 {
        tree_edges(c1, left, fresh, out);
    }
    if right.len() > 1 {
        tree_edges(c2, right, fresh, out);
    }
}

/// Vertex 0 is the root, `1..=leaf_count` the leaves, internal nodes follow.
/// With a single leaf the root is that leaf and there are no edges.
pub fn triangulation_gadget(leaf_count: usize) -> Result<TriangulationGadget> {
    if leaf_count < 1 {
        return Err(Error::InfeasibleParameters("a triangulation gadget needs at least one leaf"));
    }
    if leaf_count == 1 {
        let hypergraph = Hypergraph::new(1, Vec::new())?.with_labels(alloc::vec![Some("r".into())])?;
        return Ok(TriangulationGadget { hypergraph, root: 0, leaves: alloc::vec![0], internal: Vec::new() });
    }
    let leaves: Vec<VertexId> = (1..=leaf_count).collect();
    let mut next = leaf_count + 1;
    let mut internal = Vec::new();
    let mut edges = Vec::new();
    tree_edges(
        0,
        &leaves,
        &mut || {
            internal.push(next);
            next += 1;
            next - 1
        },
        &mut edges,
    );
    let mut labels: Vec<Option<String>> = Vec::with_capacity(next);
    labels.push(Some("r".into()));
    labels.extend((1..=leaf_count).map(|i| Some(format!("leaf{i}"))));
    labels.extend((1..=internal.len()).map(|k| Some(format!("t{k}"))));
    let hypergraph = Hypergraph::from_lists(next, edges)?.with_labels(labels)?;
    Ok(TriangulationGadget { hypergraph, root: 0, leaves, internal })
}

/// Replaces edge `e` by a triangulation gadget rooted at its smallest vertex
/// with the remaining vertices as leaves. The gadget's edges take `e`'s
/// place in the edge order; new vertices are appended and labelled
/// `t<k>@tri<e>` (1-based).
pub fn triangulate_edge(h: &Hypergraph, e: EdgeId) -> Result<Hypergraph> {
    if e >= h.m() {
        return Err(Error::EdgeOutOfRange { edge: e, m: h.m() });
    }
    let target = h.edge(e).vertices();
    if target.len() < 3 {
        return Err(Error::EdgeTooSmall { edge: e, size: target.len(), min: 3 });
    }
    let mut next = h.n();
    let mut gadget = Vec::new();
    tree_edges(
        target[0],
        &target[1..],
        &mut || {
            next += 1;
            next - 1
        },
        &mut gadget,
    );
    let mut edges: Vec<Edge> = Vec::with_capacity(h.m() + gadget.len() - 1);
    for (i, edge) in h.edges().iter().enumerate() {
        if i == e {
            for g in &gadget {
                edges.push(Edge::new(g.clone())?);
            }
        } else {
            edges.push(edge.clone());
        }
    }
    let mut labels = h.labels().to_vec();
    labels.extend((1..=next - h.n()).map(|k| Some(format!("t{k}@tri{}", e + 1))));
    Hypergraph::new(next, edges)?.with_labels(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{oracle_min_core, OracleBudget};
    use crate::propagation::{is_core, CoreSet};
    use alloc::vec;

    #[test]
    fn gadget_sizes() {
        let g = triangulation_gadget(2).unwrap();
        assert_eq!((g.hypergraph.n(), g.hypergraph.m()), (3, 1));
        let g = triangulation_gadget(4).unwrap();
        assert_eq!((g.hypergraph.n(), g.hypergraph.m()), (7, 3));
        assert!(g.hypergraph.edges().iter().all(|e| e.len() == 3));
        for k in 1..12 {
            let g = triangulation_gadget(k).unwrap();
            assert_eq!(g.hypergraph.n(), 2 * k - 1);
            assert_eq!(g.hypergraph.m(), k - 1);
            assert!(g.hypergraph.fully_labeled());
        }
        assert!(triangulation_gadget(0).is_err());
    }

    #[test]
    fn all_but_one_external_node_is_a_core() {
        for k in 2..9 {
            let g = triangulation_gadget(k).unwrap();
            let mut external = vec![g.root];
            external.extend(&g.leaves);
            for skip in 0..external.len() {
                let c: CoreSet = external.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, &v)| v).collect();
                assert!(is_core(&g.hypergraph, &c, None).unwrap(), "k={k} skip={skip}");
            }
            assert!(!is_core(&g.hypergraph, &CoreSet::new(vec![g.root]), None).unwrap());
            let r = oracle_min_core(&g.hypergraph, None, OracleBudget::CORE_DEFAULT).unwrap();
            // same as a single edge over the k + 1 external nodes
            assert_eq!(r.size, k);
        }
    }

    #[test]
    fn triangulation_examples() {
        let single = Hypergraph::from_lists(4, [[0, 1, 2, 3]]).unwrap();
        let t = triangulate_edge(&single, 0).unwrap();
        assert_eq!(t.n(), 5);
        assert!(t.edges().iter().all(|e| e.len() == 3));
        assert_eq!(t.label(4), Some("t1@tri1"));
        let b = OracleBudget::CORE_DEFAULT;
        assert_eq!(oracle_min_core(&single, None, b).unwrap().size, 3);
        assert_eq!(oracle_min_core(&t, None, b).unwrap().size, 3);

        let three = Hypergraph::from_lists(3, [[0, 1, 2]]).unwrap();
        let t = triangulate_edge(&three, 0).unwrap();
        assert_eq!(t.edges(), three.edges());

        let pair = Hypergraph::from_lists(5, [[0, 1, 2, 3], [1, 2, 3, 4]]).unwrap();
        let t = triangulate_edge(&pair, 1).unwrap();
        assert_eq!(t.m(), 3);
        assert_eq!(t.edge(0), pair.edge(0));
        assert_eq!(oracle_min_core(&pair, None, b).unwrap().size, oracle_min_core(&t, None, b).unwrap().size);

        let small = Hypergraph::from_lists(2, [[0, 1]]).unwrap();
        assert_eq!(triangulate_edge(&small, 0), Err(Error::EdgeTooSmall { edge: 0, size: 2, min: 3 }));
    }
}
