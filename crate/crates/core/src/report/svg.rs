use std::fmt::Write as _;

use super::ReportError;
use crate::geometry::{Point, ThreatKind};
use crate::path::Path;
use crate::scenario::Scenario;

/// Width and height of the square viewport in pixels.
pub const CANVAS_SIZE: f64 = 800.0;
const MARGIN_FRACTION: f64 = 0.05;
const MARKER_RADIUS: f64 = 6.0;

struct Viewport {
    cx: f64,
    cy: f64,
    scale: f64,
}

impl Viewport {
    fn fit(scenario: &Scenario) -> Self {
        let b = scenario.bounds();
        let span = b.width().max(b.height()) * (1.0 + 2.0 * MARGIN_FRACTION);
        Self {
            cx: (b.x_min() + b.x_max()) / 2.0,
            cy: (b.y_min() + b.y_max()) / 2.0,
            scale: CANVAS_SIZE / span,
        }
    }

    fn map(&self, p: Point) -> (f64, f64) {
        let half = CANVAS_SIZE / 2.0;
        (half + (p.x - self.cx) * self.scale, half - (p.y - self.cy) * self.scale)
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Draws the threat field and the path: unfilled threat circles (radars
/// heavier than artillery), a dashed black route, a red start marker and a
/// blue goal marker.
pub fn render_svg(scenario: &Scenario, path: &Path) -> Result<String, ReportError> {
    if path.start() != scenario.start() || path.goal() != scenario.goal() {
        return Err(ReportError::EndpointMismatch);
    }
    let vp = Viewport::fit(scenario);
    let b = scenario.bounds();
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        CANVAS_SIZE
    );
    let _ = writeln!(out, "  <title>{}</title>", escape(scenario.name()));
    let (x0, y1) = vp.map(Point::new(b.x_min(), b.y_max()));
    let _ = writeln!(
        out,
        r##"  <rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="#ffffff" stroke="#999999" stroke-width="1"/>"##,
        x0,
        y1,
        b.width() * vp.scale,
        b.height() * vp.scale
    );
    for t in scenario.threats() {
        let (x, y) = vp.map(t.center());
        let (stroke, width) = match t.kind() {
            ThreatKind::Radar => ("#555555", 2.0),
            ThreatKind::Artillery => ("#8b4513", 1.5),
        };
        let _ = writeln!(
            out,
            r#"  <circle class="{}" cx="{:.2}" cy="{:.2}" r="{:.2}" fill="none" stroke="{}" stroke-width="{}"/>"#,
            t.kind(),
            x,
            y,
            t.radius() * vp.scale,
            stroke,
            width
        );
    }
    let points: Vec<String> = path
        .vertices()
        .map(|p| {
            let (x, y) = vp.map(p);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(
        out,
        r##"  <polyline class="path" points="{}" fill="none" stroke="#000000" stroke-width="2" stroke-dasharray="6,4"/>"##,
        points.join(" ")
    );
    for (class, p, color) in [("start", path.start(), "#ff0000"), ("goal", path.goal(), "#0000ff")] {
        let (x, y) = vp.map(p);
        let _ = writeln!(
            out,
            r#"  <circle class="{class}" cx="{x:.2}" cy="{y:.2}" r="{MARKER_RADIUS}" fill="{color}" stroke="none"/>"#
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Bounds;

    fn empty() -> Scenario {
        let b = Bounds::new(0.0, 100.0, 0.0, 50.0).unwrap();
        Scenario::new("a<b>&c", b, Point::new(5.0, 5.0), Point::new(95.0, 45.0), vec![]).unwrap()
    }

    #[test]
    fn census_for_straight_path() {
        let s = empty();
        let svg = render_svg(&s, &Path::straight(s.start(), s.goal())).unwrap();
        assert_eq!(svg.matches("<circle").count(), 2);
        assert_eq!(svg.matches("<polyline").count(), 1);
        let pts = svg.split("points=\"").nth(1).unwrap().split('"').next().unwrap();
        assert_eq!(pts.split(' ').count(), 2);
        assert!(svg.contains("a&lt;b&gt;&amp;c"));
    }

    #[test]
    fn aspect_ratio_and_margin() {
        let s = empty();
        let vp = Viewport::fit(&s);
        let (x0, y0) = vp.map(Point::new(0.0, 0.0));
        let (x1, y1) = vp.map(Point::new(100.0, 50.0));
        // The wide side spans 800 / 1.1 pixels, centred.
        assert!((x1 - x0 - CANVAS_SIZE / 1.1).abs() < 1e-9);
        assert!(((y0 - y1) - (x1 - x0) / 2.0).abs() < 1e-9);
        assert!((x0 + x1 - CANVAS_SIZE).abs() < 1e-9);
        assert!(y1 < y0);
    }

    #[test]
    fn mismatched_endpoints() {
        let s = empty();
        let p = Path::straight(Point::new(1.0, 1.0), s.goal());
        assert_eq!(render_svg(&s, &p), Err(ReportError::EndpointMismatch));
    }
}
