// SPDX-License-Identifier: Apache-2.0

use alloc::format;
use alloc::vec::Vec;

use crate::error::Result;
use crate::hypergraph::{Edge, Hypergraph};
use crate::propagation::ThresholdMap;

fn resolve(h: &Hypergraph, thresholds: Option<&ThresholdMap>) -> Result<ThresholdMap> {
    match thresholds {
        Some(t) => {
            t.validate(h)?;
            Ok(t.clone())
        }
        None => Ok(ThresholdMap::default_for(h)),
    }
}

/// Adds one vertex `s` (label `s@shared`) to every edge and raises every
/// threshold by one. The minimum core grows by exactly one.
pub fn threshold_add_shared(h: &Hypergraph, thresholds: Option<&ThresholdMap>) -> Result<(Hypergraph, ThresholdMap)> {
    let t = resolve(h, thresholds)?;
    let s = h.n();
    let edges = h
        .edges()
        .iter()
        .map(|e| {
            let mut vs = e.vertices().to_vec();
            vs.push(s);
            Edge::new(vs)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut labels = h.labels().to_vec();
    labels.push(Some("s@shared".into()));
    let out = Hypergraph::new(s + 1, edges)?.with_labels(labels)?;
    let raised = t.as_slice().iter().map(|&x| x + 1).collect();
    let raised = ThresholdMap::new(&out, raised)?;
    Ok((out, raised))
}

/// Adds a fresh vertex `v_e` (label `v@e<index>`, 1-based) to each edge `e`
/// and keeps the thresholds. The minimum core size is unchanged.
pub fn threshold_add_per_edge(h: &Hypergraph, thresholds: Option<&ThresholdMap>) -> Result<(Hypergraph, ThresholdMap)> {
    let t = resolve(h, thresholds)?;
    let n = h.n();
    let edges = h
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let mut vs = e.vertices().to_vec();
            vs.push(n + i);
            Edge::new(vs)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut labels = h.labels().to_vec();
    labels.extend((1..=h.m()).map(|i| Some(format!("v@e{i}"))));
    let out = Hypergraph::new(n + h.m(), edges)?.with_labels(labels)?;
    let kept = ThresholdMap::new(&out, t.as_slice().to_vec())?;
    Ok((out, kept))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{oracle_min_core, OracleBudget};
    use alloc::vec;

    fn min_core(h: &Hypergraph, t: Option<&ThresholdMap>) -> usize {
        oracle_min_core(h, t, OracleBudget::CORE_DEFAULT).unwrap().size
    }

    #[test]
    fn shared_vertex_examples() {
        let edge = Hypergraph::from_lists(2, [[0, 1]]).unwrap();
        let t = ThresholdMap::new(&edge, vec![1]).unwrap();
        let (h, t2) = threshold_add_shared(&edge, Some(&t)).unwrap();
        assert_eq!(h.edge(0).vertices(), &[0, 1, 2]);
        assert_eq!(t2.as_slice(), &[2]);
        assert_eq!((min_core(&edge, Some(&t)), min_core(&h, Some(&t2))), (1, 2));

        let empty = Hypergraph::from_lists(3, Vec::<Vec<usize>>::new()).unwrap();
        let (h, t2) = threshold_add_shared(&empty, None).unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(min_core(&h, Some(&t2)), 4);

        let tri = Hypergraph::from_lists(3, [[0, 1], [1, 2], [0, 2]]).unwrap();
        let (h, t2) = threshold_add_shared(&tri, None).unwrap();
        assert_eq!(min_core(&h, Some(&t2)), min_core(&tri, None) + 1);
    }

    #[test]
    fn per_edge_examples() {
        let edge = Hypergraph::from_lists(2, [[0, 1]]).unwrap();
        let t = ThresholdMap::new(&edge, vec![1]).unwrap();
        let (h, t2) = threshold_add_per_edge(&edge, Some(&t)).unwrap();
        assert_eq!(h.edge(0).vertices(), &[0, 1, 2]);
        assert_eq!(t2.as_slice(), &[1]);
        assert_eq!(min_core(&h, Some(&t2)), 1);

        let tri = Hypergraph::from_lists(3, [[0, 1], [1, 2], [0, 2]]).unwrap();
        let (h, t2) = threshold_add_per_edge(&tri, None).unwrap();
        assert_eq!(min_core(&h, Some(&t2)), min_core(&tri, None));

        let empty = Hypergraph::from_lists(2, Vec::<Vec<usize>>::new()).unwrap();
        let (h, _) = threshold_add_per_edge(&empty, None).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.m(), 0);
    }
}
