//! Planning scenarios: the world box, start and goal, and the threat field.

mod format;
mod generate;

pub use format::{parse_scenario, serialize_scenario, ParseError};
pub use generate::{
    generate_scenario, single_threat_scenario, ClassParams, ComplexityClass, GenerateError, CORRIDOR_HALF_WIDTH,
    MAX_GENERATION_ATTEMPTS,
};

use thiserror::Error;

use crate::geometry::{distance, Bounds, Point, Threat};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ValidationError {
    #[error("{which} {point} lies outside the world bounds")]
    EndpointOutOfBounds { which: &'static str, point: Point },
    #[error("{which} {point} is not strictly outside threat #{index}")]
    EndpointInThreat {
        which: &'static str,
        point: Point,
        index: usize,
    },
    #[error("center of threat #{index} lies outside the world bounds")]
    ThreatOutOfBounds { index: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    name: String,
    bounds: Bounds,
    start: Point,
    goal: Point,
    threats: Vec<Threat>,
}

impl Scenario {
    /// Builds a scenario and checks that start and goal are inside the box
    /// and outside every disc, and that every threat center is in the box.
    pub fn new(
        name: impl Into<String>,
        bounds: Bounds,
        start: Point,
        goal: Point,
        threats: Vec<Threat>,
    ) -> Result<Self, ValidationError> {
        let s = Self {
            name: name.into(),
            bounds,
            start,
            goal,
            threats,
        };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<(), ValidationError> {
        for (which, point) in [("start", self.start), ("goal", self.goal)] {
            if !self.bounds.contains(point) {
                return Err(ValidationError::EndpointOutOfBounds { which, point });
            }
            if let Some(index) = self
                .threats
                .iter()
                .position(|t| distance(point, t.center()) <= t.radius())
            {
                return Err(ValidationError::EndpointInThreat { which, point, index });
            }
        }
        if let Some(index) = self.threats.iter().position(|t| !self.bounds.contains(t.center())) {
            return Err(ValidationError::ThreatOutOfBounds { index });
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }
    pub fn start(&self) -> Point {
        self.start
    }
    pub fn goal(&self) -> Point {
        self.goal
    }
    pub fn threats(&self) -> &[Threat] {
        &self.threats
    }

    /// Returns a copy with one more threat, revalidated.
    pub fn with_threat(&self, threat: Threat) -> Result<Self, ValidationError> {
        let mut threats = self.threats.clone();
        threats.push(threat);
        Self::new(self.name.clone(), self.bounds, self.start, self.goal, threats)
    }

    /// Shifts every coordinate in the scenario by `(dx, dy)`.
    pub fn translate(&self, dx: f64, dy: f64) -> Self {
        Self {
            name: self.name.clone(),
            bounds: self.bounds.translate(dx, dy),
            start: self.start.translate(dx, dy),
            goal: self.goal.translate(dx, dy),
            threats: self.threats.iter().map(|t| t.translate(dx, dy)).collect(),
        }
    }
}
