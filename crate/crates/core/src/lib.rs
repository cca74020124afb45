//! Threat-aware route planning for constant-altitude UAVs.
//!
//! A mission is a [`Scenario`]: a rectangular world, a start and a goal, and
//! a field of circular radar and artillery threats. Routes are polylines with
//! a fixed number of free interior waypoints. The planner minimizes path
//! length plus penalties for flying through threat discs or leaving the
//! world, using a global-best particle swarm over the flattened waypoint
//! coordinates. A deterministic 8-connected grid search serves as an
//! independent reference planner.
//!
//! ```no_run
//! use uav_route::prelude::*;
//!
//! let scenario = generate_scenario(ComplexityClass::Medium, 7)?;
//! let spec = EncodingSpec::new(DEFAULT_WAYPOINTS, *scenario.bounds())?;
//! let report = optimize(&scenario, &spec, &PsoConfig::default().with_seed(7), &CostWeights::default())?;
//! println!("length {:.2}, feasible {}", report.best_breakdown.length, report.feasible);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod cli;
pub mod cost;
pub mod geometry;
mod numfmt;
pub mod oracle;
pub mod path;
pub mod planner;
pub mod pso;
pub mod report;
pub mod scenario;

pub use numfmt::sig6;

pub mod prelude {
    pub use crate::cost::{evaluate, CostBreakdown, CostWeights};
    pub use crate::geometry::{distance, segment_clearance, segment_violation, Bounds, Point, Threat, ThreatKind};
    pub use crate::oracle::{grid_shortest_path, octile_lower_bound, GridSpec};
    pub use crate::path::{decode, path_length, EncodingSpec, Path, DEFAULT_WAYPOINTS};
    pub use crate::planner::{optimize, HistoryEntry, RunReport};
    pub use crate::pso::{minimize, Evaluation, PsoConfig, SearchSpace, SwarmState};
    pub use crate::report::{render_svg, write_convergence_csv};
    pub use crate::scenario::{generate_scenario, parse_scenario, serialize_scenario, ComplexityClass, Scenario};
}

pub use prelude::*;
