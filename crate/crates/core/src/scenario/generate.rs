//! Seeded threat-field generators for the three complexity classes.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::{Scenario, ValidationError};
use crate::geometry::{closest_point_on_segment, distance, Bounds, Point, Threat, ThreatKind};
use crate::oracle::{grid_shortest_path, GridSpec};

/// Max distance from a threat center to the start-goal line.
pub const CORRIDOR_HALF_WIDTH: f64 = 35.0;
/// Combined budget for center draws and layout retries.
pub const MAX_GENERATION_ATTEMPTS: usize = 10_000;

const WORLD: (f64, f64) = (0.0, 100.0);
const START: Point = Point::new(5.0, 5.0);
const GOAL: Point = Point::new(95.0, 95.0);
const RADAR_RADIUS: (f64, f64) = (6.0, 12.0);
const ARTILLERY_RADIUS: (f64, f64) = (3.0, 5.0);
const SOLVABILITY_RESOLUTION: f64 = 1.0;
/// Generated coordinates and radii are rounded to 1/QUANTA_PER_UNIT so the
/// serialized file reproduces the in-memory scenario exactly.
const QUANTA_PER_UNIT: f64 = 1000.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComplexityClass {
    Low,
    Medium,
    High,
}

/// Threat counts for one class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassParams {
    pub radars: usize,
    pub artillery: usize,
}

impl ClassParams {
    pub fn total(&self) -> usize {
        self.radars + self.artillery
    }
}

impl ComplexityClass {
    pub const ALL: [ComplexityClass; 3] = [Self::Low, Self::Medium, Self::High];

    pub fn params(&self) -> ClassParams {
        match self {
            Self::Low => ClassParams {
                radars: 3,
                artillery: 2,
            },
            Self::Medium => ClassParams {
                radars: 5,
                artillery: 5,
            },
            Self::High => ClassParams {
                radars: 8,
                artillery: 8,
            },
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Low => "low",
            Self::Medium => "medium",
            Self::High => "high",
        }
    }

    fn stream(&self) -> u64 {
        *self as u64
    }
}

impl fmt::Display for ComplexityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ComplexityClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "low" => Ok(Self::Low),
            "medium" => Ok(Self::Medium),
            "high" => Ok(Self::High),
            other => Err(format!(
                "unknown complexity class `{other}` (expected low, medium or high)"
            )),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenerateError {
    #[error("scenario generation failed after {0} attempts")]
    GenerationFailed(usize),
    #[error(transparent)]
    Validation(#[from] ValidationError),
}

fn quantize(v: f64) -> f64 {
    (v * QUANTA_PER_UNIT).round() / QUANTA_PER_UNIT
}

fn draw_threat(rng: &mut ChaCha8Rng, kind: ThreatKind, attempts: &mut usize) -> Result<Threat, GenerateError> {
    let (r_lo, r_hi) = match kind {
        ThreatKind::Radar => RADAR_RADIUS,
        ThreatKind::Artillery => ARTILLERY_RADIUS,
    };
    loop {
        *attempts += 1;
        if *attempts > MAX_GENERATION_ATTEMPTS {
            return Err(GenerateError::GenerationFailed(MAX_GENERATION_ATTEMPTS));
        }
        let radius = quantize(rng.gen_range(r_lo..r_hi));
        let center = Point::new(
            quantize(rng.gen_range(WORLD.0..WORLD.1)),
            quantize(rng.gen_range(WORLD.0..WORLD.1)),
        );
        let off_line = distance(center, closest_point_on_segment(START, GOAL, center));
        if off_line > CORRIDOR_HALF_WIDTH {
            continue;
        }
        if distance(center, START) <= radius || distance(center, GOAL) <= radius {
            continue;
        }
        return Ok(Threat::new(center, radius, kind).expect("radius drawn from a positive range"));
    }
}

/// Deterministic scenario for `(class, seed)` on the 100 x 100 world from
/// (5, 5) to (95, 95). Layouts are redrawn until the grid planner finds a
/// path at resolution 1.
pub fn generate_scenario(class: ComplexityClass, seed: u64) -> Result<Scenario, GenerateError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(class.stream());
    let bounds = Bounds::new(WORLD.0, WORLD.1, WORLD.0, WORLD.1).expect("static bounds");
    let params = class.params();
    let grid = GridSpec::new(SOLVABILITY_RESOLUTION).expect("static resolution");
    let mut attempts = 0;
    loop {
        let kinds = std::iter::repeat_n(ThreatKind::Radar, params.radars)
            .chain(std::iter::repeat_n(ThreatKind::Artillery, params.artillery));
        let threats = kinds
            .map(|k| draw_threat(&mut rng, k, &mut attempts))
            .collect::<Result<Vec<_>, _>>()?;
        let scenario = Scenario::new(format!("{class}-{seed}"), bounds, START, GOAL, threats)?;
        if grid_shortest_path(&scenario, grid).is_ok() {
            return Ok(scenario);
        }
        attempts += 1;
        if attempts > MAX_GENERATION_ATTEMPTS {
            return Err(GenerateError::GenerationFailed(MAX_GENERATION_ATTEMPTS));
        }
    }
}

/// One radius-10 radar at the midpoint of a seeded start-goal pair.
///
/// The pair has random heading and a length in [60, 100] centred in a
/// 140 x 140 world, leaving room to detour on either side.
pub fn single_threat_scenario(seed: u64) -> Scenario {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(u64::MAX);
    let mid = Point::new(70.0, 70.0);
    let half = rng.gen_range(30.0..50.0);
    let heading: f64 = rng.gen_range(0.0..std::f64::consts::PI);
    let (dx, dy) = (half * heading.cos(), half * heading.sin());
    let start = Point::new(quantize(mid.x - dx), quantize(mid.y - dy));
    let goal = Point::new(quantize(mid.x + dx), quantize(mid.y + dy));
    let bounds = Bounds::new(0.0, 140.0, 0.0, 140.0).expect("static bounds");
    let threat = Threat::radar(mid, 10.0).expect("static radius");
    Scenario::new(format!("single-{seed}"), bounds, start, goal, vec![threat])
        .expect("endpoints are 30+ units from the disc center")
}
