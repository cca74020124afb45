//! Route planning: the swarm engine driven by the penalized path cost.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::cost::{evaluate_unchecked, CostBreakdown, CostError, CostWeights};
use crate::geometry::segment_clearance;
use crate::path::{decode, EncodingSpec, Path};
use crate::pso::{Objective, PsoConfig, PsoError, SearchSpace, SwarmState};
use crate::scenario::Scenario;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PlanError {
    #[error(transparent)]
    Pso(#[from] PsoError),
    #[error(transparent)]
    Cost(#[from] CostError),
}

/// Penalized path cost as a function of the flat waypoint vector.
#[derive(Debug, Clone, Copy)]
pub struct PathObjective<'a> {
    pub scenario: &'a Scenario,
    pub spec: &'a EncodingSpec,
    pub weights: &'a CostWeights,
}

impl PathObjective<'_> {
    pub fn decode(&self, position: &[f64]) -> Option<Path> {
        decode(position, self.spec, self.scenario.start(), self.scenario.goal()).ok()
    }

    pub fn breakdown(&self, position: &[f64]) -> Option<CostBreakdown> {
        self.decode(position)
            .map(|p| evaluate_unchecked(&p, self.scenario, self.weights))
    }
}

impl Objective for PathObjective<'_> {
    fn cost(&self, position: &[f64]) -> f64 {
        self.breakdown(position).map_or(f64::INFINITY, |b| b.total)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HistoryEntry {
    pub iteration: usize,
    pub best_total: f64,
    pub best_length: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub best_path: Path,
    pub best_breakdown: CostBreakdown,
    /// Initial evaluation followed by one entry per iteration.
    pub history: Vec<HistoryEntry>,
    pub feasible: bool,
    pub seed: u64,
    pub wall_time: Duration,
}

impl RunReport {
    /// Smallest signed clearance between the best path and any threat;
    /// `None` for a threat-free scenario.
    pub fn min_clearance(&self, scenario: &Scenario) -> Option<f64> {
        self.best_path
            .segments()
            .flat_map(|(a, b)| scenario.threats().iter().map(move |t| segment_clearance(a, b, t)))
            .reduce(f64::min)
    }

    /// First iteration whose best total is within `rel` (relative) of the
    /// final best total.
    pub fn iterations_to_within(&self, rel: f64) -> usize {
        let last = self.history.last().expect("history is never empty").best_total;
        let limit = last + rel * last.abs();
        self.history
            .iter()
            .find(|h| h.best_total <= limit)
            .map_or(0, |h| h.iteration)
    }
}

fn history_entry(state: &SwarmState, objective: &PathObjective<'_>) -> HistoryEntry {
    let best_length = objective
        .decode(&state.global_best_position)
        .map_or(f64::INFINITY, |p| p.length());
    HistoryEntry {
        iteration: state.iteration,
        best_total: state.global_best_cost,
        best_length,
    }
}

/// Initializes a swarm over the waypoint box and runs the full iteration
/// budget. Always yields a report when the configuration is valid, even if
/// the best path found is infeasible.
pub fn optimize(
    scenario: &Scenario,
    spec: &EncodingSpec,
    config: &PsoConfig,
    weights: &CostWeights,
) -> Result<RunReport, PlanError> {
    weights.validate()?;
    let started = Instant::now();
    let objective = PathObjective {
        scenario,
        spec,
        weights,
    };
    let (lower, upper) = spec.search_box();
    let space = SearchSpace::new(lower, upper)?;
    let mut state = SwarmState::init(&objective, &space, config)?;

    let mut history = Vec::with_capacity(config.iterations + 1);
    history.push(history_entry(&state, &objective));
    for _ in 0..config.iterations {
        state.step(&objective, config);
        let entry = history_entry(&state, &objective);
        debug_assert!(entry.best_total <= history.last().map_or(f64::INFINITY, |h: &HistoryEntry| h.best_total));
        history.push(entry);
    }

    let best_path = objective
        .decode(&state.global_best_position)
        .expect("swarm positions stay finite and correctly sized");
    let best_breakdown = evaluate_unchecked(&best_path, scenario, weights);
    Ok(RunReport {
        feasible: best_breakdown.is_feasible(),
        best_path,
        best_breakdown,
        history,
        seed: config.seed,
        wall_time: started.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{distance, Bounds, Point, Threat};
    use crate::oracle::{grid_shortest_path, GridSpec};
    use crate::pso::Evaluation;

    fn empty_world() -> Scenario {
        let b = Bounds::new(0.0, 100.0, 0.0, 100.0).unwrap();
        Scenario::new("empty", b, Point::new(5.0, 5.0), Point::new(95.0, 95.0), vec![]).unwrap()
    }

    fn spec_for(s: &Scenario) -> EncodingSpec {
        EncodingSpec::new(8, *s.bounds()).unwrap()
    }

    #[test]
    fn empty_world_gives_straight_line() {
        let s = empty_world();
        let r = optimize(
            &s,
            &spec_for(&s),
            &PsoConfig::default().with_seed(3),
            &CostWeights::default(),
        )
        .unwrap();
        let straight = distance(s.start(), s.goal());
        assert!(r.feasible);
        assert!(
            r.best_breakdown.length <= 1.01 * straight,
            "{}",
            r.best_breakdown.length
        );
        assert_eq!(r.history.len(), 301);
        assert_eq!(r.best_breakdown.total, r.best_breakdown.length);
    }

    #[test]
    fn repeated_runs_identical() {
        let s = crate::scenario::generate_scenario(crate::scenario::ComplexityClass::Medium, 11).unwrap();
        let cfg = PsoConfig {
            iterations: 60,
            ..PsoConfig::default().with_seed(5)
        };
        let a = optimize(&s, &spec_for(&s), &cfg, &CostWeights::default()).unwrap();
        let b = optimize(&s, &spec_for(&s), &cfg, &CostWeights::default()).unwrap();
        assert_eq!(a.history, b.history);
        assert_eq!(a.best_path, b.best_path);
        let serial = PsoConfig {
            evaluation: Evaluation::Serial,
            ..cfg
        };
        let c = optimize(&s, &spec_for(&s), &serial, &CostWeights::default()).unwrap();
        assert_eq!(a.history, c.history);
    }

    #[test]
    fn history_is_monotone() {
        let s = crate::scenario::generate_scenario(crate::scenario::ComplexityClass::High, 2).unwrap();
        let r = optimize(
            &s,
            &spec_for(&s),
            &PsoConfig::default().with_seed(2),
            &CostWeights::default(),
        )
        .unwrap();
        for (i, w) in r.history.windows(2).enumerate() {
            assert!(w[1].best_total <= w[0].best_total);
            assert_eq!(w[0].iteration, i);
        }
    }

    #[test]
    fn single_threat_matches_oracle() {
        let b = Bounds::new(-10.0, 110.0, -60.0, 60.0).unwrap();
        let t = Threat::radar(Point::new(50.0, 0.0), 10.0).unwrap();
        let s = Scenario::new("one", b, Point::new(0.0, 0.0), Point::new(100.0, 0.0), vec![t]).unwrap();
        let oracle = grid_shortest_path(&s, GridSpec::new(0.5).unwrap()).unwrap();
        let r = optimize(
            &s,
            &spec_for(&s),
            &PsoConfig::default().with_seed(1),
            &CostWeights::default(),
        )
        .unwrap();
        assert!(r.feasible);
        let ratio = r.best_breakdown.length / oracle.length;
        // The octile grid overestimates the any-angle optimum by up to ~8%.
        assert!((0.92..=1.02).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn translated_scenario_translates_result() {
        let s = crate::scenario::generate_scenario(crate::scenario::ComplexityClass::Low, 4).unwrap();
        let (dx, dy) = (250.0, -125.0);
        let moved = s.translate(dx, dy);
        let cfg = PsoConfig {
            iterations: 25,
            ..PsoConfig::default().with_seed(9)
        };
        let w = CostWeights::default();
        let a = optimize(&s, &spec_for(&s), &cfg, &w).unwrap();
        let b = optimize(&moved, &spec_for(&moved), &cfg, &w).unwrap();
        for (ha, hb) in a.history.iter().zip(&b.history) {
            assert!(
                (ha.best_total - hb.best_total).abs() <= 1e-6 * ha.best_total,
                "{ha:?} {hb:?}"
            );
        }
        for (pa, pb) in a.best_path.vertices().zip(b.best_path.vertices()) {
            assert!((pa.x + dx - pb.x).abs() < 1e-6 && (pa.y + dy - pb.y).abs() < 1e-6);
        }
    }

    #[test]
    fn iterations_to_within_counts_from_start() {
        let mk = |t: f64, i| HistoryEntry {
            iteration: i,
            best_total: t,
            best_length: t,
        };
        let r = RunReport {
            best_path: Path::straight(Point::new(0.0, 0.0), Point::new(1.0, 0.0)),
            best_breakdown: CostBreakdown {
                length: 1.0,
                threat_violation: 0.0,
                bounds_violation: 0.0,
                total: 1.0,
            },
            history: vec![mk(500.0, 0), mk(120.0, 1), mk(100.5, 2), mk(100.0, 3)],
            feasible: true,
            seed: 0,
            wall_time: Duration::ZERO,
        };
        assert_eq!(r.iterations_to_within(0.01), 2);
        assert_eq!(r.iterations_to_within(0.0), 3);
    }
}
