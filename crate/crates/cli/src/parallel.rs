// SPDX-License-Identifier: Apache-2.0

//! Multi-threaded drivers. Results never depend on the thread count or on
//! completion order: workers search independent pieces and the pieces are
//! merged under the same total order the serial code uses.

use rayon::prelude::*;

use hypercore::mincore::{evaluate_deletion, mincore_fpt, MinCoreResult};
use hypercore::oracle::{Branch, MaskInstance, OracleBudget, OracleCore, OracleRadius};
use hypercore::propagation::Propagator;
use hypercore::{Combinations, CoreSet, Error, Hypergraph, Result, ThresholdMap};

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().expect("thread pool")
}

/// [`mincore_fpt`] with the `(m choose a)` peels spread over `jobs` threads.
pub fn mincore_parallel(h: &Hypergraph, a_max: usize, jobs: usize) -> Result<MinCoreResult> {
    if jobs <= 1 {
        return mincore_fpt(h, a_max);
    }
    let propagator = Propagator::new(h, None)?;
    pool(jobs).install(|| {
        for a in 0..=a_max.min(h.m()) {
            if h.m() - a > h.n() {
                continue;
            }
            let best = Combinations::new(h.m(), a)
                .par_bridge()
                .filter_map(|deleted| {
                    evaluate_deletion(h, &propagator, &deleted).map(|(core, radius)| (radius, deleted, core))
                })
                .min_by(|x, y| (x.0, &x.1).cmp(&(y.0, &y.1)));
            if let Some((radius, deleted_edges, core)) = best {
                return Ok(MinCoreResult { core, radius, deleted_edges, parameter_a: a });
            }
        }
        Err(Error::NotFoundWithin { a_max })
    })
}

struct BranchRun {
    count: u64,
    outcome: Result<Branch>,
    found: Option<(usize, u128)>,
}

/// Runs every branch of one size concurrently, then replays them in order,
/// adding counters as the serial enumeration would.
fn merge_branches<F>(
    inst: &MaskInstance,
    size: usize,
    budget: &OracleBudget,
    counter: &mut u64,
    search: F,
) -> Result<Option<(usize, u128)>>
where
    F: Fn(usize, &mut u64) -> (Result<Branch>, Option<(usize, u128)>) + Sync,
{
    if size == 0 {
        *counter += 1;
        if *counter > budget.max_subsets {
            return Err(Error::BudgetExceeded("subset enumeration cap reached"));
        }
        return Ok(inst.is_core(0).then(|| (inst.radius(0).unwrap_or(0), 0)));
    }
    if size > inst.n() {
        return Ok(None);
    }
    let runs: Vec<BranchRun> = (0..=inst.n() - size)
        .into_par_iter()
        .map(|first| {
            let mut count = 0;
            let (outcome, found) = search(first, &mut count);
            BranchRun { count, outcome, found }
        })
        .collect();
    let mut best: Option<(usize, u128)> = None;
    for run in runs {
        *counter += run.count;
        if *counter > budget.max_subsets {
            return Err(Error::BudgetExceeded("subset enumeration cap reached"));
        }
        let outcome = run.outcome?;
        if let Some(f) = run.found {
            if best.map_or(true, |b| f.0 < b.0) {
                best = Some(f);
            }
        }
        if outcome != Branch::Exhausted {
            break;
        }
    }
    Ok(best)
}

fn first_core(inst: &MaskInstance, size: usize, budget: &OracleBudget, counter: &mut u64) -> Result<Option<u128>> {
    let hit = merge_branches(inst, size, budget, counter, |first, count| {
        let mut found = None;
        let outcome = inst.visit_branch(first, size, budget, count, &mut |set| {
            found = Some((0, set));
            false
        });
        (outcome, found)
    })?;
    Ok(hit.map(|(_, set)| set))
}

fn min_core_mask(inst: &MaskInstance, budget: &OracleBudget) -> Result<(usize, u128)> {
    let mut counter = 0;
    for size in 0..=inst.n() {
        if let Some(set) = first_core(inst, size, budget, &mut counter)? {
            return Ok((size, set));
        }
    }
    unreachable!("the full vertex set is always a core")
}

fn admit(h: &Hypergraph, budget: &OracleBudget) -> Result<()> {
    if h.n() > budget.max_vertices {
        return Err(Error::BudgetExceeded("instance larger than the vertex budget"));
    }
    Ok(())
}

fn to_set(mask: u128) -> CoreSet {
    (0..128).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Same answer and budget behaviour as `oracle_min_core`.
pub fn oracle_min_core_parallel(
    h: &Hypergraph,
    thresholds: Option<&ThresholdMap>,
    budget: OracleBudget,
    jobs: usize,
) -> Result<OracleCore> {
    if jobs <= 1 {
        return hypercore::oracle::oracle_min_core(h, thresholds, budget);
    }
    admit(h, &budget)?;
    let inst = MaskInstance::new(h, thresholds)?;
    let (size, set) = pool(jobs).install(|| min_core_mask(&inst, &budget))?;
    Ok(OracleCore { size, witness: to_set(set) })
}

/// Same answer and budget behaviour as `oracle_min_radius_over_min_cores`.
pub fn oracle_min_radius_parallel(
    h: &Hypergraph,
    thresholds: Option<&ThresholdMap>,
    budget: OracleBudget,
    jobs: usize,
) -> Result<OracleRadius> {
    if jobs <= 1 {
        return hypercore::oracle::oracle_min_radius_over_min_cores(h, thresholds, budget);
    }
    admit(h, &budget)?;
    let inst = MaskInstance::new(h, thresholds)?;
    pool(jobs).install(|| {
        let (size, _) = min_core_mask(&inst, &budget)?;
        let mut counter = 0;
        let (radius, set) = merge_branches(&inst, size, &budget, &mut counter, |first, count| {
            let mut best: Option<(usize, u128)> = None;
            let outcome = inst.visit_branch(first, size, &budget, count, &mut |set| {
                let r = inst.radius(set).expect("enumerated sets are cores");
                if best.map_or(true, |(b, _)| r < b) {
                    best = Some((r, set));
                }
                true
            });
            (outcome, best)
        })?
        .expect("a minimum core exists at its own size");
        Ok(OracleRadius { size, radius, witness: to_set(set) })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use hypercore::oracle::{oracle_min_core, oracle_min_radius_over_min_cores};

    #[test]
    fn mincore_matches_serial() {
        for seed in 0..30 {
            let h = Hypergraph::generate_random(9, 7, 2, 4, seed).unwrap();
            let serial = mincore_fpt(&h, 4);
            for jobs in [2, 4] {
                assert_eq!(mincore_parallel(&h, 4, jobs), serial, "seed {seed}");
            }
        }
    }

    #[test]
    fn oracle_matches_serial() {
        for seed in 0..30 {
            let h = Hypergraph::generate_random(10, 6, 1, 4, seed).unwrap();
            let b = OracleBudget::CORE_DEFAULT;
            assert_eq!(oracle_min_core_parallel(&h, None, b, 3), oracle_min_core(&h, None, b));
            assert_eq!(oracle_min_radius_parallel(&h, None, b, 3), oracle_min_radius_over_min_cores(&h, None, b));
        }
    }

    #[test]
    fn budget_errors_match_serial() {
        let h = Hypergraph::generate_random(12, 4, 2, 3, 7).unwrap();
        for cap in [1, 5, 20, 100, 1000, 100_000] {
            let b = OracleBudget { max_vertices: 18, max_subsets: cap };
            assert_eq!(oracle_min_core_parallel(&h, None, b, 4), oracle_min_core(&h, None, b), "cap {cap}");
            assert_eq!(
                oracle_min_radius_parallel(&h, None, b, 4),
                oracle_min_radius_over_min_cores(&h, None, b),
                "cap {cap}"
            );
        }
    }
}
