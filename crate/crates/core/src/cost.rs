//! The scalar objective: path length plus weighted penalties for entering
//! threat discs and for leaving the world box.
//!
//! Both penalties are sampled line integrals along the path, so the cost is
//! continuous in the waypoint coordinates and is exactly the path length for
//! a feasible path.

use thiserror::Error;

use crate::geometry::{sampled_line_integral, segment_violation, ThreatKind, DEFAULT_SAMPLES_PER_SEGMENT};
use crate::path::Path;
use crate::scenario::Scenario;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CostError {
    #[error("path endpoints do not match the scenario start and goal")]
    EndpointMismatch,
    #[error("weight `{0}` must be finite and non-negative")]
    BadWeight(&'static str),
    #[error("at least 2 samples per segment are required, got {0}")]
    TooFewSamples(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostWeights {
    /// Penalty per unit of threat penetration integral.
    pub threat: f64,
    /// Penalty per unit of out-of-bounds excursion integral.
    pub bounds: f64,
    pub radar_multiplier: f64,
    pub artillery_multiplier: f64,
    pub samples_per_segment: usize,
}

impl Default for CostWeights {
    fn default() -> Self {
        Self {
            threat: 1000.0,
            bounds: 1000.0,
            radar_multiplier: 1.0,
            artillery_multiplier: 1.0,
            samples_per_segment: DEFAULT_SAMPLES_PER_SEGMENT,
        }
    }
}

impl CostWeights {
    pub fn validate(&self) -> Result<(), CostError> {
        let checks = [
            ("threat", self.threat),
            ("bounds", self.bounds),
            ("radar_multiplier", self.radar_multiplier),
            ("artillery_multiplier", self.artillery_multiplier),
        ];
        for (name, w) in checks {
            if !(w.is_finite() && w >= 0.0) {
                return Err(CostError::BadWeight(name));
            }
        }
        if self.samples_per_segment < 2 {
            return Err(CostError::TooFewSamples(self.samples_per_segment));
        }
        Ok(())
    }

    pub fn multiplier(&self, kind: ThreatKind) -> f64 {
        match kind {
            ThreatKind::Radar => self.radar_multiplier,
            ThreatKind::Artillery => self.artillery_multiplier,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostBreakdown {
    pub length: f64,
    /// Sum of per-threat violation integrals, each scaled by its kind multiplier.
    pub threat_violation: f64,
    pub bounds_violation: f64,
    pub total: f64,
}

impl CostBreakdown {
    pub fn is_feasible(&self) -> bool {
        self.threat_violation == 0.0 && self.bounds_violation == 0.0
    }
}

/// Scores `path` against `scenario`; fails only if the path endpoints are
/// not the scenario's.
pub fn evaluate(path: &Path, scenario: &Scenario, weights: &CostWeights) -> Result<CostBreakdown, CostError> {
    if path.start() != scenario.start() || path.goal() != scenario.goal() {
        return Err(CostError::EndpointMismatch);
    }
    Ok(evaluate_unchecked(path, scenario, weights))
}

pub(crate) fn evaluate_unchecked(path: &Path, scenario: &Scenario, weights: &CostWeights) -> CostBreakdown {
    let samples = weights.samples_per_segment.max(2);
    let bounds = scenario.bounds();
    let mut length = 0.0;
    let mut threat_violation = 0.0;
    let mut bounds_violation = 0.0;
    for (a, b) in path.segments() {
        length += crate::geometry::distance(a, b);
        for t in scenario.threats() {
            let m = weights.multiplier(t.kind());
            if m != 0.0 {
                threat_violation += m * segment_violation(a, b, t, samples);
            }
        }
        // The box is convex, so a segment with both ends inside never leaves it.
        if !(bounds.contains(a) && bounds.contains(b)) {
            bounds_violation += sampled_line_integral(a, b, samples, |p| bounds.excursion(p));
        }
    }
    let total = length + weights.threat * threat_violation + weights.bounds * bounds_violation;
    CostBreakdown {
        length,
        threat_violation,
        bounds_violation,
        total,
    }
}
