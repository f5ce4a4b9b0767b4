// SPDX-License-Identifier: Apache-2.0

//! Exhaustive ground truth for small instances.
//!
//! Vertex subsets are enumerated by increasing size and lexicographically
//! within a size, so the first core found is a deterministic witness. The
//! search skips a branch only when the union of the chosen vertices and
//! every vertex still available to it is not a core: cores are closed under
//! supersets, so no subset in that branch can be one either.
//!
//! The closure and layer computations here are written against bit masks
//! and share no code with [`crate::propagation`], which they are used to
//! cross-check.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::propagation::{CoreSet, ThresholdMap};
use crate::reductions::{CnfFormula, MinrepInstance, SetCoverInstance};

/// Limits checked before and during enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Largest ground set (vertices, sets, variables) accepted.
    pub max_vertices: usize,
    /// Largest number of subsets visited before giving up.
    pub max_subsets: u64,
}

impl OracleBudget {
    /// Hard ceiling of the mask representation.
    pub const MAX_VERTICES: usize = 128;
    pub const CORE_DEFAULT: OracleBudget = OracleBudget { max_vertices: 18, max_subsets: 1 << 26 };
    pub const RADIUS_DEFAULT: OracleBudget = OracleBudget { max_vertices: 12, max_subsets: 1 << 26 };

    pub fn with_vertices(max_vertices: usize) -> OracleBudget {
        OracleBudget { max_vertices, ..OracleBudget::CORE_DEFAULT }
    }

    fn admit(&self, size: usize) -> Result<()> {
        if size > self.max_vertices {
            return Err(Error::BudgetExceeded("instance larger than the vertex budget"));
        }
        if size > Self::MAX_VERTICES {
            return Err(Error::BudgetExceeded("instance larger than 128 vertices"));
        }
        Ok(())
    }
}

/// Minimum core size with the lexicographically first witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCore {
    pub size: usize,
    pub witness: CoreSet,
}

/// Minimum radius over all minimum cores.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleRadius {
    pub size: usize,
    pub radius: usize,
    pub witness: CoreSet,
}

/// Bit-mask view of a hypergraph for subset enumeration.
#[derive(Debug, Clone)]
pub struct MaskInstance {
    n: usize,
    full: u128,
    edges: Vec<u128>,
    sizes: Vec<u32>,
    thresholds: Vec<u32>,
    // suffix[i] has bits i..n set
    suffix: Vec<u128>,
}

impl MaskInstance {
    pub fn new(h: &Hypergraph, thresholds: Option<&ThresholdMap>) -> Result<MaskInstance> {
        let n = h.n();
        if n > OracleBudget::MAX_VERTICES {
            return Err(Error::BudgetExceeded("instance larger than 128 vertices"));
        }
        if let Some(t) = thresholds {
            t.validate(h)?;
        }
        let edges = h
            .edges()
            .iter()
            .map(|e| e.vertices().iter().fold(0u128, |acc, &v| acc | 1 << v))
            .collect();
        let sizes = h.edges().iter().map(|e| e.len() as u32).collect();
        let thresholds = match thresholds {
            Some(t) => t.as_slice().iter().map(|&x| x as u32).collect(),
            None => h.edges().iter().map(|e| e.len() as u32 - 1).collect(),
        };
        let full = low_bits(n);
        let suffix = (0..=n).map(|i| full & !low_bits(i)).collect();
        Ok(MaskInstance { n, full, edges, sizes, thresholds, suffix })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Fixed point of the firing rule, in any order.
    pub fn closure(&self, start: u128) -> u128 {
        let mut set = start;
        loop {
            let before = set;
            for (i, &e) in self.edges.iter().enumerate() {
                let hit = (e & set).count_ones();
                if hit < self.sizes[i] && hit >= self.thresholds[i] {
                    set |= e;
                }
            }
            if set == before {
                return set;
            }
        }
    }

    pub fn is_core(&self, set: u128) -> bool {
        self.closure(set) == self.full
    }

    /// Rounds of simultaneous firing; `None` unless `set` is a core.
    pub fn radius(&self, set: u128) -> Option<usize> {
        let mut fired: Vec<bool> = self.edges.iter().map(|&e| e & set == e).collect();
        let mut current = set;
        let mut rounds = 0;
        loop {
            let mut next = current;
            let mut any = false;
            for (i, &e) in self.edges.iter().enumerate() {
                if !fired[i] && (e & current).count_ones() >= self.thresholds[i] {
                    fired[i] = true;
                    next |= e;
                    any = true;
                }
            }
            if !any {
                break;
            }
            rounds += 1;
            current = next;
        }
        (current == self.full && fired.iter().all(|&f| f)).then_some(rounds)
    }

    /// Core whose synchronous firing finishes within `k` rounds. Monotone
    /// in `set`, like [`MaskInstance::is_core`].
    pub fn within_radius(&self, set: u128, k: usize) -> bool {
        let mut fired: Vec<bool> = self.edges.iter().map(|&e| e & set == e).collect();
        let mut current = set;
        for _ in 0..k {
            let mut next = current;
            for (i, &e) in self.edges.iter().enumerate() {
                if !fired[i] && (e & current).count_ones() >= self.thresholds[i] {
                    fired[i] = true;
                    next |= e;
                }
            }
            if next == current && fired.iter().all(|&f| f) {
                break;
            }
            current = next;
        }
        current == self.full && fired.iter().all(|&f| f)
    }

    /// Lexicographically first core of `size` vertices with radius at most
    /// `k`. Branches whose largest completion already misses `k` are cut.
    pub fn first_core_within_radius(
        &self,
        size: usize,
        k: usize,
        budget: &OracleBudget,
        counter: &mut u64,
    ) -> Result<Option<u128>> {
        if size > self.n {
            return Ok(None);
        }
        tick(counter, budget)?;
        if !self.within_radius(self.full, k) {
            return Ok(None);
        }
        if size == 0 {
            return Ok(self.within_radius(0, k).then_some(0));
        }
        self.descend_within(0, 0, size, k, budget, counter)
    }

    fn descend_within(
        &self,
        start: usize,
        chosen: u128,
        remaining: usize,
        k: usize,
        budget: &OracleBudget,
        counter: &mut u64,
    ) -> Result<Option<u128>> {
        for i in start..=self.n - remaining {
            let next = chosen | 1 << i;
            tick(counter, budget)?;
            if remaining == 1 {
                if self.within_radius(next, k) {
                    return Ok(Some(next));
                }
                continue;
            }
            if !self.within_radius(next | self.suffix[i + 1], k) {
                break;
            }
            if let Some(found) = self.descend_within(i + 1, next, remaining - 1, k, budget, counter)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    /// Visits the cores of exactly `size` vertices in lexicographic order
    /// until `visit` returns `false`. `counter` accumulates visited subsets.
    pub fn for_each_core_of_size<F>(
        &self,
        size: usize,
        budget: &OracleBudget,
        counter: &mut u64,
        visit: &mut F,
    ) -> Result<()>
    where
        F: FnMut(u128) -> bool,
    {
        if size > self.n {
            return Ok(());
        }
        if size == 0 {
            tick(counter, budget)?;
            if self.is_core(0) {
                visit(0);
            }
            return Ok(());
        }
        self.descend(0, 0, size, budget, counter, visit).map(|_| ())
    }

    // Children of a node are subsets of `chosen + i + suffix[i + 1]`, which
    // shrinks as `i` grows, so the first failing superset ends the loop.
    // Ok(false) means the visitor asked to stop.
    fn descend<F>(
        &self,
        start: usize,
        chosen: u128,
        remaining: usize,
        budget: &OracleBudget,
        counter: &mut u64,
        visit: &mut F,
    ) -> Result<bool>
    where
        F: FnMut(u128) -> bool,
    {
        for i in start..=self.n - remaining {
            let next = chosen | 1 << i;
            tick(counter, budget)?;
            if remaining == 1 {
                if self.is_core(next) && !visit(next) {
                    return Ok(false);
                }
                continue;
            }
            if !self.is_core(next | self.suffix[i + 1]) {
                break;
            }
            if !self.descend(i + 1, next, remaining - 1, budget, counter, visit)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// One top-level step of the enumeration: the cores of `size` vertices
    /// whose smallest vertex is `first`. Running the branches `0, 1, ..` in
    /// order and adding their counters reproduces the full enumeration, so
    /// branches can be searched independently and merged afterwards.
    pub fn visit_branch<F>(
        &self,
        first: usize,
        size: usize,
        budget: &OracleBudget,
        counter: &mut u64,
        visit: &mut F,
    ) -> Result<Branch>
    where
        F: FnMut(u128) -> bool,
    {
        debug_assert!(size >= 1 && first + size <= self.n);
        let next = 1u128 << first;
        tick(counter, budget)?;
        if size == 1 {
            return Ok(if self.is_core(next) && !visit(next) { Branch::Stopped } else { Branch::Exhausted });
        }
        if !self.is_core(next | self.suffix[first + 1]) {
            return Ok(Branch::Dead);
        }
        Ok(if self.descend(first + 1, next, size - 1, budget, counter, visit)? {
            Branch::Exhausted
        } else {
            Branch::Stopped
        })
    }

    pub fn first_core_of_size(
        &self,
        size: usize,
        budget: &OracleBudget,
        counter: &mut u64,
    ) -> Result<Option<u128>> {
        let mut found = None;
        self.for_each_core_of_size(size, budget, counter, &mut |set| {
            found = Some(set);
            false
        })?;
        Ok(found)
    }

    pub fn min_core(&self, budget: &OracleBudget) -> Result<(usize, u128)> {
        let mut counter = 0;
        for size in 0..=self.n {
            if let Some(set) = self.first_core_of_size(size, budget, &mut counter)? {
                return Ok((size, set));
            }
        }
        unreachable!("the full vertex set is always a core")
    }

    /// Minimum radius over the cores of exactly `size` vertices.
    pub fn min_radius_of_size(
        &self,
        size: usize,
        budget: &OracleBudget,
        counter: &mut u64,
    ) -> Result<Option<(usize, u128)>> {
        let mut best: Option<(usize, u128)> = None;
        self.for_each_core_of_size(size, budget, counter, &mut |set| {
            let r = self.radius(set).expect("enumerated sets are cores");
            if best.map_or(true, |(b, _)| r < b) {
                best = Some((r, set));
            }
            true
        })?;
        Ok(best)
    }
}

/// How a branch of the enumeration ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Every core in the branch was visited.
    Exhausted,
    /// The visitor asked to stop.
    Stopped,
    /// No core starts here, nor in any later branch.
    Dead,
}

fn tick(counter: &mut u64, budget: &OracleBudget) -> Result<()> {
    *counter += 1;
    if *counter > budget.max_subsets {
        return Err(Error::BudgetExceeded("subset enumeration cap reached"));
    }
    Ok(())
}

fn low_bits(k: usize) -> u128 {
    if k >= 128 {
        u128::MAX
    } else {
        (1u128 << k) - 1
    }
}

pub(crate) fn mask_to_set(mask: u128) -> CoreSet {
    (0..128).filter(|&v| mask >> v & 1 == 1).collect()
}

pub fn oracle_min_core(
    h: &Hypergraph,
    thresholds: Option<&ThresholdMap>,
    budget: OracleBudget,
) -> Result<OracleCore> {
    budget.admit(h.n())?;
    let inst = MaskInstance::new(h, thresholds)?;
    let (size, set) = inst.min_core(&budget)?;
    Ok(OracleCore { size, witness: mask_to_set(set) })
}

pub fn oracle_min_radius_over_min_cores(
    h: &Hypergraph,
    thresholds: Option<&ThresholdMap>,
    budget: OracleBudget,
) -> Result<OracleRadius> {
    budget.admit(h.n())?;
    let inst = MaskInstance::new(h, thresholds)?;
    let (size, _) = inst.min_core(&budget)?;
    let mut counter = 0;
    let (radius, set) = inst
        .min_radius_of_size(size, &budget, &mut counter)?
        .expect("a minimum core exists at its own size");
    Ok(OracleRadius { size, radius, witness: mask_to_set(set) })
}

/// Minimum radius over cores of exactly `size` vertices, if any exists.
pub fn oracle_min_radius_of_size(
    h: &Hypergraph,
    thresholds: Option<&ThresholdMap>,
    size: usize,
    budget: OracleBudget,
) -> Result<Option<(usize, CoreSet)>> {
    budget.admit(h.n())?;
    let inst = MaskInstance::new(h, thresholds)?;
    let mut counter = 0;
    Ok(inst
        .min_radius_of_size(size, &budget, &mut counter)?
        .map(|(r, set)| (r, mask_to_set(set))))
}

/// A core of exactly `size` vertices with radius at most `k`, if any.
pub fn oracle_core_within_radius(
    h: &Hypergraph,
    thresholds: Option<&ThresholdMap>,
    size: usize,
    k: usize,
    budget: OracleBudget,
) -> Result<Option<CoreSet>> {
    budget.admit(h.n())?;
    let inst = MaskInstance::new(h, thresholds)?;
    let mut counter = 0;
    Ok(inst.first_core_within_radius(size, k, &budget, &mut counter)?.map(mask_to_set))
}

// Subsets of 0..k by size, then lexicographically; first accepted one wins.
fn smallest_subset<F>(k: usize, budget: &OracleBudget, accept: F) -> Result<Option<Vec<usize>>>
where
    F: Fn(&[usize]) -> bool,
{
    budget.admit(k)?;
    let mut visited = 0u64;
    for size in 0..=k {
        for subset in crate::combinations::Combinations::new(k, size) {
            visited += 1;
            if visited > budget.max_subsets {
                return Err(Error::BudgetExceeded("subset enumeration cap reached"));
            }
            if accept(&subset) {
                return Ok(Some(subset));
            }
        }
    }
    Ok(None)
}

/// Minimum number of sets covering the universe, with the chosen set indices.
pub fn oracle_setcover(inst: &SetCoverInstance, budget: OracleBudget) -> Result<(usize, Vec<usize>)> {
    let best = smallest_subset(inst.sets().len(), &budget, |chosen| inst.is_cover(chosen))?
        .ok_or(Error::InvalidInstance("sets do not cover the universe"))?;
    Ok((best.len(), best))
}

/// Minimum MINREP size with the chosen `A` and `B` vertices (global numbering
/// `0..|A|` then `|A|..|A|+|B|`).
pub fn oracle_minrep(inst: &MinrepInstance, budget: OracleBudget) -> Result<(usize, Vec<usize>)> {
    let total = inst.a_count() + inst.b_count();
    let best = smallest_subset(total, &budget, |chosen| inst.covers_all(chosen))?
        .expect("all of A and B cover every super-edge");
    Ok((best.len(), best))
}

/// A satisfying assignment, if one exists, by trying all `2^vars`.
pub fn oracle_sat(formula: &CnfFormula, budget: OracleBudget) -> Result<Option<Vec<bool>>> {
    let vars = formula.num_vars();
    budget.admit(vars)?;
    if vars >= 64 || (1u64 << vars) > budget.max_subsets {
        return Err(Error::BudgetExceeded("assignment enumeration cap reached"));
    }
    for bits in 0..1u64 << vars {
        let assignment: Vec<bool> = (0..vars).map(|v| bits >> v & 1 == 1).collect();
        if formula.satisfied_by(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

/// All minimum cores, lexicographically.
pub fn oracle_all_min_cores(h: &Hypergraph, budget: OracleBudget) -> Result<Vec<CoreSet>> {
    budget.admit(h.n())?;
    let inst = MaskInstance::new(h, None)?;
    let (size, _) = inst.min_core(&budget)?;
    let mut counter = 0;
    let mut out = vec![];
    inst.for_each_core_of_size(size, &budget, &mut counter, &mut |set| {
        out.push(mask_to_set(set));
        true
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::propagation::{is_core, radius};

    fn triangle() -> Hypergraph {
        Hypergraph::from_lists(3, [[0, 1], [1, 2], [0, 2]]).unwrap()
    }

    fn set(vs: &[usize]) -> CoreSet {
        CoreSet::new(vs.to_vec())
    }

    #[test]
    fn min_core_examples() {
        let r = oracle_min_core(&triangle(), None, OracleBudget::CORE_DEFAULT).unwrap();
        assert_eq!((r.size, r.witness), (1, set(&[0])));
        let edge = Hypergraph::from_lists(2, [[0, 1]]).unwrap();
        assert_eq!(oracle_min_core(&edge, None, OracleBudget::CORE_DEFAULT).unwrap().size, 1);
        let empty = Hypergraph::from_lists(3, Vec::<Vec<usize>>::new()).unwrap();
        assert_eq!(oracle_min_core(&empty, None, OracleBudget::CORE_DEFAULT).unwrap().size, 3);
    }

    #[test]
    fn min_radius_examples() {
        let b = OracleBudget::RADIUS_DEFAULT;
        let r = oracle_min_radius_over_min_cores(&triangle(), None, b).unwrap();
        assert_eq!((r.size, r.radius, r.witness), (1, 2, set(&[0])));
        let path = Hypergraph::from_lists(3, [[0, 1], [1, 2]]).unwrap();
        let r = oracle_min_radius_over_min_cores(&path, None, b).unwrap();
        assert_eq!((r.size, r.radius, r.witness), (1, 1, set(&[1])));
        let star = Hypergraph::from_lists(4, [[0, 1], [0, 2], [0, 3]]).unwrap();
        let r = oracle_min_radius_over_min_cores(&star, None, b).unwrap();
        assert_eq!((r.size, r.radius, r.witness), (1, 1, set(&[0])));
    }

    #[test]
    fn budget_is_enforced_up_front() {
        let big = Hypergraph::generate_random(19, 4, 2, 3, 1).unwrap();
        assert!(matches!(
            oracle_min_core(&big, None, OracleBudget::CORE_DEFAULT),
            Err(Error::BudgetExceeded(_))
        ));
        let tight = OracleBudget { max_vertices: 18, max_subsets: 3 };
        let h = Hypergraph::generate_random(10, 4, 2, 3, 1).unwrap();
        assert!(matches!(oracle_min_core(&h, None, tight), Err(Error::BudgetExceeded(_))));
    }

    // plain 2^n scan without pruning
    fn unpruned_min_core(h: &Hypergraph) -> (usize, CoreSet) {
        let n = h.n();
        let mut best: Option<(usize, CoreSet)> = None;
        for size in 0..=n {
            for c in crate::combinations::Combinations::new(n, size) {
                let c = CoreSet::new(c);
                if is_core(h, &c, None).unwrap() {
                    best = Some((size, c));
                    break;
                }
            }
            if best.is_some() {
                break;
            }
        }
        best.unwrap()
    }

    #[test]
    fn pruned_enumeration_matches_plain_scan() {
        for seed in 0..200 {
            let n = 1 + (seed % 9) as usize;
            let h = Hypergraph::generate_random(n, (seed % 8) as usize, 1, n.min(4), seed).unwrap();
            let r = oracle_min_core(&h, None, OracleBudget::CORE_DEFAULT).unwrap();
            assert_eq!((r.size, r.witness.clone()), unpruned_min_core(&h), "seed {seed}");
            let rr = oracle_min_radius_over_min_cores(&h, None, OracleBudget::RADIUS_DEFAULT).unwrap();
            assert_eq!(radius(&h, &rr.witness, None).unwrap(), rr.radius);
        }
    }

    #[test]
    fn mask_radius_matches_propagation() {
        for seed in 0..100 {
            let n = 2 + (seed % 7) as usize;
            let h = Hypergraph::generate_random(n, (seed % 7) as usize, 1, n.min(3), seed).unwrap();
            let inst = MaskInstance::new(&h, None).unwrap();
            for bits in 0u128..(1 << n) {
                let c = mask_to_set(bits);
                assert_eq!(inst.radius(bits), radius(&h, &c, None).ok(), "seed {seed}");
            }
        }
    }
    #[test]
    fn branches_reproduce_the_enumeration() {
        for seed in 0..40 {
            let h = Hypergraph::generate_random(7, 5, 1, 4, seed).unwrap();
            let inst = MaskInstance::new(&h, None).unwrap();
            let budget = OracleBudget::CORE_DEFAULT;
            for size in 1..=7 {
                let (mut serial, mut count) = (vec![], 0);
                inst.for_each_core_of_size(size, &budget, &mut count, &mut |s| {
                    serial.push(s);
                    true
                })
                .unwrap();
                let (mut merged, mut total) = (vec![], 0);
                for first in 0..=7 - size {
                    let mut c = 0;
                    let b = inst.visit_branch(first, size, &budget, &mut c, &mut |s| {
                        merged.push(s);
                        true
                    });
                    total += c;
                    if b.unwrap() == Branch::Dead {
                        break;
                    }
                }
                assert_eq!((serial, count), (merged, total), "seed {seed} size {size}");
            }
        }
    }
    #[test]
    fn radius_bounded_search_matches_full_enumeration() {
        for seed in 0..60 {
            let h = Hypergraph::generate_random(8, 6, 1, 4, seed).unwrap();
            let b = OracleBudget::CORE_DEFAULT;
            for size in 0..=8 {
                let best = oracle_min_radius_of_size(&h, None, size, b).unwrap().map(|x| x.0);
                for k in 0..6 {
                    let found = oracle_core_within_radius(&h, None, size, k, b).unwrap();
                    assert_eq!(found.is_some(), best.is_some_and(|r| r <= k), "seed {seed} size {size} k {k}");
                    if let Some(c) = found {
                        assert_eq!(c.len(), size);
                        assert!(radius(&h, &c, None).unwrap() <= k);
                    }
                }
            }
        }
    }
}
