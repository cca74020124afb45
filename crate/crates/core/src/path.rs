//! Waypoint paths and their flat particle encoding.
//!
//! A particle position is `[x1, y1, x2, y2, ..., xn, yn]`: the absolute
//! coordinates of the `n` interior waypoints in flight order. Start and goal
//! are fixed by the scenario and never appear in the vector. Decoding does
//! not clamp; out-of-bounds waypoints are left for the cost function to
//! penalize.

use thiserror::Error;

use crate::geometry::{distance, Bounds, Point};

/// Interior waypoint count used when nothing else is configured.
pub const DEFAULT_WAYPOINTS: usize = 8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PathError {
    #[error("dimension mismatch: expected {expected} values, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("position vector contains a non-finite value at index {0}")]
    NonFinite(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Path {
    start: Point,
    goal: Point,
    interior: Vec<Point>,
}

impl Path {
    pub fn new(start: Point, interior: Vec<Point>, goal: Point) -> Self {
        Self { start, goal, interior }
    }

    pub fn straight(start: Point, goal: Point) -> Self {
        Self::new(start, Vec::new(), goal)
    }

    pub fn start(&self) -> Point {
        self.start
    }
    pub fn goal(&self) -> Point {
        self.goal
    }
    pub fn interior(&self) -> &[Point] {
        &self.interior
    }

    /// Number of vertices including start and goal.
    pub fn vertex_count(&self) -> usize {
        self.interior.len() + 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = Point> + '_ {
        std::iter::once(self.start)
            .chain(self.interior.iter().copied())
            .chain(std::iter::once(self.goal))
    }

    /// Consecutive vertex pairs in flight order.
    pub fn segments(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        self.vertices().zip(self.vertices().skip(1))
    }

    /// Sum of segment lengths.
    pub fn length(&self) -> f64 {
        self.segments().map(|(a, b)| distance(a, b)).sum()
    }

    /// Flattens the interior waypoints back into a particle position vector.
    pub fn encode(&self) -> Vec<f64> {
        self.interior.iter().flat_map(|p| [p.x, p.y]).collect()
    }

    pub fn translate(&self, dx: f64, dy: f64) -> Self {
        Self {
            start: self.start.translate(dx, dy),
            goal: self.goal.translate(dx, dy),
            interior: self.interior.iter().map(|p| p.translate(dx, dy)).collect(),
        }
    }
}

/// Free function form of [`Path::length`].
pub fn path_length(path: &Path) -> f64 {
    path.length()
}

/// Shape of the particle search space for a given waypoint count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EncodingSpec {
    n_waypoints: usize,
    bounds: Bounds,
}

impl EncodingSpec {
    pub fn new(n_waypoints: usize, bounds: Bounds) -> Result<Self, PathError> {
        if n_waypoints == 0 {
            return Err(PathError::DimensionMismatch { expected: 2, actual: 0 });
        }
        Ok(Self { n_waypoints, bounds })
    }

    pub fn n_waypoints(&self) -> usize {
        self.n_waypoints
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    /// Particle dimension, `2 * n_waypoints`.
    pub fn dimension(&self) -> usize {
        2 * self.n_waypoints
    }

    /// Per-dimension search box: even dimensions span x, odd dimensions y.
    pub fn search_box(&self) -> (Vec<f64>, Vec<f64>) {
        let b = &self.bounds;
        (0..self.dimension())
            .map(|d| {
                if d % 2 == 0 {
                    (b.x_min(), b.x_max())
                } else {
                    (b.y_min(), b.y_max())
                }
            })
            .unzip()
    }
}

/// Pairs consecutive entries of `position` into interior waypoints.
pub fn decode(position: &[f64], spec: &EncodingSpec, start: Point, goal: Point) -> Result<Path, PathError> {
    if position.len() != spec.dimension() {
        return Err(PathError::DimensionMismatch {
            expected: spec.dimension(),
            actual: position.len(),
        });
    }
    if let Some(i) = position.iter().position(|v| !v.is_finite()) {
        return Err(PathError::NonFinite(i));
    }
    let interior = position.chunks_exact(2).map(|xy| Point::new(xy[0], xy[1])).collect();
    Ok(Path::new(start, interior, goal))
}
