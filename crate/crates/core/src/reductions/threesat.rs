// SPDX-License-Identifier: Apache-2.0

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{ReductionCertificate, Source};
use crate::error::{Error, Result};
use crate::hypergraph::{HypergraphBuilder, VertexId};
use crate::propagation::{is_core, CoreSet};

/// Conjunction of clauses with exactly three distinct literals each.
/// Literals follow DIMACS: `v` or `-v` for variable `v` in `1..=num_vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<[i32; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[i32; 3]>) -> Result<CnfFormula> {
        for (i, c) in clauses.iter().enumerate() {
            let in_range = c.iter().all(|&l| l != 0 && l.unsigned_abs() as usize <= num_vars);
            let distinct = c[0] != c[1] && c[0] != c[2] && c[1] != c[2];
            if !in_range || !distinct {
                return Err(Error::MalformedClause { clause: i });
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[i32; 3]] {
        &self.clauses
    }

    /// `assignment[v - 1]` is the value of variable `v`.
    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|&l| literal_value(l, assignment)))
    }
}

fn literal_value(l: i32, assignment: &[bool]) -> bool {
    assignment[l.unsigned_abs() as usize - 1] == (l > 0)
}

/// Vertex ids of one clause gadget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseGadget {
    pub l: [VertexId; 3],
    pub w: [VertexId; 3],
    pub w_prime: [VertexId; 3],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatLayout {
    pub clauses: Vec<ClauseGadget>,
    /// `(i, j, y_ij)` for every clause pair `i > j`.
    pub pairs: Vec<(usize, usize, VertexId)>,
    pub chain: Vec<VertexId>,
}

const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// Per clause `i` the vertices `l_i_p, w_i_p, w'_i_p` with green edges
/// `{l_p, l_q}`, blue edges `{w_p, l_p}` and white edges `{w'_p, w_p, l_p}`;
/// per pair `i > j` a vertex `y_i_j` in `{w'_i_p, w'_j_q, y_i_j}` unless
/// the two literals are complementary; a chain `v_1 .. v_{k-3}` hanging off
/// one edge `{v_1} + all y`. The formula is satisfiable iff some minimum
/// core has radius at most `k`.
pub fn threesat_to_mincore_radius(formula: &CnfFormula, k: usize) -> Result<ReductionCertificate> {
    if k < 4 {
        return Err(Error::RadiusParameter { k });
    }
    let mut b = HypergraphBuilder::new();
    let mut clauses = Vec::with_capacity(formula.clauses.len());
    for i in 1..=formula.clauses.len() {
        let mut block = |name: &str| [1, 2, 3].map(|p| b.add_vertex(format!("{name}_{i}_{p}")));
        let l = block("l");
        let w = block("w");
        let w_prime = block("w'");
        clauses.push(ClauseGadget { l, w, w_prime });
    }
    let mut pairs = Vec::new();
    for i in 1..formula.clauses.len() {
        for j in 0..i {
            pairs.push((i, j, b.add_vertex(format!("y_{}_{}", i + 1, j + 1))));
        }
    }
    let chain: Vec<VertexId> = (1..=k - 3).map(|t| b.add_vertex(format!("v_{t}"))).collect();

    for g in &clauses {
        for (p, q) in PAIRS {
            b.add_edge(vec![g.l[p], g.l[q]]);
        }
        for p in 0..3 {
            b.add_edge(vec![g.w[p], g.l[p]]);
        }
        for p in 0..3 {
            b.add_edge(vec![g.w_prime[p], g.w[p], g.l[p]]);
        }
    }
    for &(i, j, y) in &pairs {
        for p in 0..3 {
            for q in 0..3 {
                if formula.clauses[i][p] != -formula.clauses[j][q] {
                    b.add_edge(vec![clauses[i].w_prime[p], clauses[j].w_prime[q], y]);
                }
            }
        }
    }
    let mut hub = vec![chain[0]];
    hub.extend(pairs.iter().map(|&(_, _, y)| y));
    b.add_edge(hub);
    for t in chain.windows(2) {
        b.add_edge(vec![t[0], t[1]]);
    }
    let layout = SatLayout { clauses, pairs, chain };
    Ok(ReductionCertificate { instance: b.build(), source: Source::ThreeSat { formula: formula.clone(), k, layout } })
}

/// Reads one literal per clause off a core (the first `l_i_p` or `w_i_p`
/// present). `None` if some clause has none or two picks contradict.
pub fn core_to_assignment(cert: &ReductionCertificate, core: &CoreSet) -> Result<Option<Vec<bool>>> {
    let Source::ThreeSat { formula, layout, .. } = &cert.source else {
        return Err(Error::WrongCertificate);
    };
    if !is_core(&cert.instance, core, None)? {
        return Err(Error::NotACore);
    }
    let mut value: Vec<Option<bool>> = vec![None; formula.num_vars];
    for (g, clause) in layout.clauses.iter().zip(&formula.clauses) {
        let Some(p) = (0..3).find(|&p| core.contains(g.l[p]) || core.contains(g.w[p])) else {
            return Ok(None);
        };
        let lit = clause[p];
        let slot = &mut value[lit.unsigned_abs() as usize - 1];
        match slot {
            Some(v) if *v != (lit > 0) => return Ok(None),
            _ => *slot = Some(lit > 0),
        }
    }
    let assignment: Vec<bool> = value.into_iter().map(|v| v.unwrap_or(false)).collect();
    Ok(formula.satisfied_by(&assignment).then_some(assignment))
}
