// SPDX-License-Identifier: Apache-2.0

//! Lower bounds on the radius of a core from neighbourhood size, degree and
//! diameter, and the layer-versus-distance check they rest on.
//!
//! All bounds assume default thresholds and edges of at least two vertices;
//! a singleton edge fires with no assimilated vertex and can place a vertex
//! in layer 1 arbitrarily far from the core.

use crate::error::{Error, Result};
use crate::hypergraph::{Distance, Hypergraph};
use crate::propagation::{propagate, CoreSet};

/// Guard band for comparing integer radii with real bounds.
pub const EPSILON: f64 = 1e-9;

/// `log_base(n / core_size) - 1`, or 0 with `degenerate` set when the base
/// is at most 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogBound {
    pub base: usize,
    pub value: f64,
    pub degenerate: bool,
}

impl LogBound {
    /// Whether `radius` lies strictly above the bound.
    pub fn holds_for(&self, radius: usize) -> bool {
        radius as f64 > self.value + EPSILON
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiameterBound {
    pub diameter: usize,
    /// `floor(diameter / (2 * core_size))`.
    pub value: usize,
    /// `ceil((diameter + 1 - core_size) / (2 * core_size))`, clamped at 0;
    /// every core of that size has at least this radius.
    pub guaranteed: usize,
    /// Whether `guaranteed > value`, i.e. a strict inequality is provable.
    pub strict_guaranteed: bool,
}

impl DiameterBound {
    pub fn strict_holds_for(&self, radius: usize) -> bool {
        radius > self.value
    }

    pub fn weak_holds_for(&self, radius: usize) -> bool {
        radius >= self.guaranteed
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub core_size: usize,
    pub j_neighbors: usize,
    pub d_degree: usize,
    pub diameter: Distance,
    pub neighbor_bound: LogBound,
    pub degree_bound: LogBound,
    /// `None` when the hypergraph is disconnected.
    pub diameter_bound: Option<DiameterBound>,
}

fn log_bound(n: usize, core_size: usize, base: usize) -> Result<LogBound> {
    if core_size < 1 {
        return Err(Error::InvalidCoreSize);
    }
    if base <= 1 {
        return Ok(LogBound { base, value: 0.0, degenerate: true });
    }
    let value = libm::log(n as f64 / core_size as f64) / libm::log(base as f64) - 1.0;
    Ok(LogBound { base, value, degenerate: false })
}

pub fn neighbor_radius_bound(h: &Hypergraph, core_size: usize) -> Result<LogBound> {
    let j = h.neighbor_counts().into_iter().max().unwrap_or(0);
    log_bound(h.n(), core_size, j)
}

pub fn degree_radius_bound(h: &Hypergraph, core_size: usize) -> Result<LogBound> {
    let d = h.degrees().into_iter().max().unwrap_or(0);
    log_bound(h.n(), core_size, d)
}

pub fn diameter_radius_bound(h: &Hypergraph, core_size: usize) -> Result<DiameterBound> {
    if core_size < 1 {
        return Err(Error::InvalidCoreSize);
    }
    let diameter = if h.n() < 2 {
        0
    } else {
        h.diameter()?.finite().ok_or(Error::Disconnected)?
    };
    let c = core_size;
    let value = diameter / (2 * c);
    let guaranteed = (diameter + 1).saturating_sub(c).div_ceil(2 * c);
    Ok(DiameterBound { diameter, value, guaranteed, strict_guaranteed: guaranteed > value })
}

pub fn bound_report(h: &Hypergraph, core_size: usize) -> Result<BoundReport> {
    let diameter = if h.n() < 2 { Distance::Finite(0) } else { h.diameter()? };
    let diameter_bound = match diameter {
        Distance::Finite(_) => Some(diameter_radius_bound(h, core_size)?),
        Distance::Infinite => None,
    };
    let neighbor_bound = neighbor_radius_bound(h, core_size)?;
    let degree_bound = degree_radius_bound(h, core_size)?;
    Ok(BoundReport {
        n: h.n(),
        core_size,
        j_neighbors: neighbor_bound.base,
        d_degree: degree_bound.base,
        diameter,
        neighbor_bound,
        degree_bound,
        diameter_bound,
    })
}

/// Every assimilated vertex sits in a layer at least its hyperpath distance
/// from the core.
pub fn layer_distance_check(h: &Hypergraph, core: &CoreSet) -> Result<bool> {
    let trace = propagate(h, core, None)?;
    if !trace.verdict {
        return Err(Error::NotACore);
    }
    let dist = h.distances_to_set(core.vertices())?;
    Ok(trace.assimilated_at.iter().zip(&dist).all(|(layer, d)| match (layer, d) {
        (Some(layer), Distance::Finite(d)) => layer >= d,
        (Some(_), Distance::Infinite) => false,
        (None, _) => true,
    }))
}

/// Outcome of every bound for one core.
#[derive(Debug, Clone, PartialEq)]
pub struct CoreBoundCheck {
    pub radius: usize,
    pub report: BoundReport,
    pub neighbor_holds: bool,
    pub degree_holds: bool,
    /// `None` when disconnected.
    pub diameter_strict_holds: Option<bool>,
    pub diameter_weak_holds: Option<bool>,
    pub layer_distance_holds: bool,
}

impl CoreBoundCheck {
    /// True unless a bound that is supposed to hold fails: degenerate log
    /// bounds are skipped and the strict diameter form is only required
    /// where it is provable.
    pub fn all_provable_hold(&self) -> bool {
        let log_ok = |b: &LogBound, holds: bool| b.degenerate || holds;
        let diameter_ok = match (&self.report.diameter_bound, self.diameter_strict_holds, self.diameter_weak_holds) {
            (Some(b), Some(strict), Some(weak)) => weak && (!b.strict_guaranteed || strict),
            _ => true,
        };
        log_ok(&self.report.neighbor_bound, self.neighbor_holds)
            && log_ok(&self.report.degree_bound, self.degree_holds)
            && diameter_ok
            && self.layer_distance_holds
    }
}

pub fn check_core_bounds(h: &Hypergraph, core: &CoreSet) -> Result<CoreBoundCheck> {
    let radius = crate::propagation::radius(h, core, None)?;
    let report = bound_report(h, core.len().max(1))?;
    let diameter_strict_holds = report.diameter_bound.map(|b| b.strict_holds_for(radius));
    let diameter_weak_holds = report.diameter_bound.map(|b| b.weak_holds_for(radius));
    Ok(CoreBoundCheck {
        radius,
        neighbor_holds: report.neighbor_bound.holds_for(radius),
        degree_holds: report.degree_bound.holds_for(radius),
        diameter_strict_holds,
        diameter_weak_holds,
        layer_distance_holds: layer_distance_check(h, core)?,
        report,
    })
}
