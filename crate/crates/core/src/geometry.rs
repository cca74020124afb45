//! Planar primitives for the constant-altitude world: points, world bounds,
//! circular threats, and the clearance/penetration measures the cost function
//! and the grid planner are built on.

use std::fmt;

use thiserror::Error;

/// Samples per segment used by the cost function unless configured otherwise.
pub const DEFAULT_SAMPLES_PER_SEGMENT: usize = 64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("coordinate is not finite: ({0}, {1})")]
    NonFinitePoint(f64, f64),
    #[error("threat radius must be finite and > 0, got {0}")]
    BadRadius(f64),
    #[error("degenerate bounds: x [{x_min}, {x_max}], y [{y_min}, {y_max}]")]
    BadBounds {
        x_min: f64,
        x_max: f64,
        y_min: f64,
        y_max: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Like [`Point::new`] but rejects NaN and infinite coordinates.
    pub fn try_new(x: f64, y: f64) -> Result<Self, GeometryError> {
        if x.is_finite() && y.is_finite() {
            Ok(Self { x, y })
        } else {
            Err(GeometryError::NonFinitePoint(x, y))
        }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn translate(&self, dx: f64, dy: f64) -> Self {
        Self::new(self.x + dx, self.y + dy)
    }

    fn lerp(&self, other: &Point, t: f64) -> Point {
        Point::new(self.x + (other.x - self.x) * t, self.y + (other.y - self.y) * t)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Euclidean distance.
pub fn distance(p: Point, q: Point) -> f64 {
    (q.x - p.x).hypot(q.y - p.y)
}

/// Axis-aligned world limits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bounds {
    x_min: f64,
    x_max: f64,
    y_min: f64,
    y_max: f64,
}

impl Bounds {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Result<Self, GeometryError> {
        let finite = [x_min, x_max, y_min, y_max].iter().all(|v| v.is_finite());
        if !finite || x_min >= x_max || y_min >= y_max {
            return Err(GeometryError::BadBounds {
                x_min,
                x_max,
                y_min,
                y_max,
            });
        }
        Ok(Self {
            x_min,
            x_max,
            y_min,
            y_max,
        })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }
    pub fn x_max(&self) -> f64 {
        self.x_max
    }
    pub fn y_min(&self) -> f64 {
        self.y_min
    }
    pub fn y_max(&self) -> f64 {
        self.y_max
    }
    pub fn width(&self) -> f64 {
        self.x_max - self.x_min
    }
    pub fn height(&self) -> f64 {
        self.y_max - self.y_min
    }

    /// Closed containment test.
    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.x_min && p.x <= self.x_max && p.y >= self.y_min && p.y <= self.y_max
    }

    /// Distance from `p` to the box; zero inside or on the boundary.
    pub fn excursion(&self, p: Point) -> f64 {
        let dx = (self.x_min - p.x).max(p.x - self.x_max).max(0.0);
        let dy = (self.y_min - p.y).max(p.y - self.y_max).max(0.0);
        dx.hypot(dy)
    }

    pub fn translate(&self, dx: f64, dy: f64) -> Self {
        Self {
            x_min: self.x_min + dx,
            x_max: self.x_max + dx,
            y_min: self.y_min + dy,
            y_max: self.y_max + dy,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ThreatKind {
    Radar,
    Artillery,
}

impl ThreatKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ThreatKind::Radar => "radar",
            ThreatKind::Artillery => "artillery",
        }
    }
}

impl fmt::Display for ThreatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ThreatKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "radar" => Ok(ThreatKind::Radar),
            "artillery" => Ok(ThreatKind::Artillery),
            other => Err(format!("unknown threat kind `{other}`")),
        }
    }
}

/// A circular exclusion disc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Threat {
    center: Point,
    radius: f64,
    kind: ThreatKind,
}

impl Threat {
    pub fn new(center: Point, radius: f64, kind: ThreatKind) -> Result<Self, GeometryError> {
        if !center.is_finite() {
            return Err(GeometryError::NonFinitePoint(center.x, center.y));
        }
        if !(radius.is_finite() && radius > 0.0) {
            return Err(GeometryError::BadRadius(radius));
        }
        Ok(Self { center, radius, kind })
    }

    pub fn radar(center: Point, radius: f64) -> Result<Self, GeometryError> {
        Self::new(center, radius, ThreatKind::Radar)
    }

    pub fn artillery(center: Point, radius: f64) -> Result<Self, GeometryError> {
        Self::new(center, radius, ThreatKind::Artillery)
    }

    pub fn center(&self) -> Point {
        self.center
    }
    pub fn radius(&self) -> f64 {
        self.radius
    }
    pub fn kind(&self) -> ThreatKind {
        self.kind
    }

    /// True iff `p` lies strictly inside the disc.
    pub fn strictly_contains(&self, p: Point) -> bool {
        distance(p, self.center) < self.radius
    }

    /// Penetration depth of a single point, floored at zero.
    pub fn penetration(&self, p: Point) -> f64 {
        (self.radius - distance(p, self.center)).max(0.0)
    }

    pub fn translate(&self, dx: f64, dy: f64) -> Self {
        Self {
            center: self.center.translate(dx, dy),
            ..*self
        }
    }
}

/// Closest point to `c` on the segment `ab`.
pub fn closest_point_on_segment(a: Point, b: Point, c: Point) -> Point {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        return a;
    }
    let t = (((c.x - a.x) * dx + (c.y - a.y) * dy) / len2).clamp(0.0, 1.0);
    a.lerp(&b, t)
}

/// Minimum distance from the threat center to segment `ab`, minus the radius.
///
/// Negative when the segment enters the disc, zero when tangent, positive
/// when clear by that margin.
pub fn segment_clearance(a: Point, b: Point, threat: &Threat) -> f64 {
    // Fixed endpoint order makes the result bitwise symmetric.
    let (a, b) = if (b.x, b.y) < (a.x, a.y) { (b, a) } else { (a, b) };
    let c = threat.center;
    distance(closest_point_on_segment(a, b, c), c) - threat.radius
}

/// Mean of `f` over `samples` equally spaced points on `ab` (endpoints
/// included), times the segment length.
pub(crate) fn sampled_line_integral(a: Point, b: Point, samples: usize, f: impl Fn(Point) -> f64) -> f64 {
    debug_assert!(samples >= 2);
    let len = distance(a, b);
    if len == 0.0 {
        return 0.0;
    }
    let last = (samples - 1) as f64;
    let sum: f64 = (0..samples).map(|i| f(a.lerp(&b, i as f64 / last))).sum();
    sum / samples as f64 * len
}

/// Sampled line integral of penetration depth along `ab`.
///
/// `samples` is raised to 2 if smaller. Exactly zero whenever the segment
/// stays outside the disc.
pub fn segment_violation(a: Point, b: Point, threat: &Threat, samples: usize) -> f64 {
    if segment_clearance(a, b, threat) >= 0.0 {
        return 0.0;
    }
    sampled_line_integral(a, b, samples.max(2), |p| threat.penetration(p))
}
