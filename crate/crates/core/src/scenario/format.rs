//! Line-oriented scenario files.
//!
//! ```text
//! # comment
//! scenario <name>
//! bounds <x_min> <y_min> <x_max> <y_max>
//! start <x> <y>
//! goal <x> <y>
//! threat <radar|artillery> <cx> <cy> <radius>
//! ```
//!
//! The four header keys are required exactly once; `threat` lines are
//! optional and keep their order. Keys are lowercase and case-sensitive.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Scenario, ValidationError};
use crate::geometry::{Bounds, Point, Threat, ThreatKind};
use crate::numfmt::sig6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: duplicate `{key}` line")]
    DuplicateKey { line: usize, key: &'static str },
    #[error("missing required `{0}` line")]
    MissingKey(&'static str),
    #[error("invalid scenario: {0}")]
    Validation(#[from] ValidationError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn numbers<const N: usize>(line: usize, key: &str, fields: &[&str]) -> Result<[f64; N], ParseError> {
    if fields.len() != N {
        return Err(syntax(
            line,
            format!("`{key}` takes {N} numbers, found {}", fields.len()),
        ));
    }
    let mut out = [0.0; N];
    for (slot, field) in out.iter_mut().zip(fields) {
        let v: f64 = field
            .parse()
            .map_err(|_| syntax(line, format!("`{field}` is not a number")))?;
        if !v.is_finite() {
            return Err(syntax(line, format!("`{field}` is not finite")));
        }
        *slot = v;
    }
    Ok(out)
}

fn set_once<T>(slot: &mut Option<T>, value: T, line: usize, key: &'static str) -> Result<(), ParseError> {
    if slot.is_some() {
        return Err(ParseError::DuplicateKey { line, key });
    }
    *slot = Some(value);
    Ok(())
}

pub fn parse_scenario(text: &str) -> Result<Scenario, ParseError> {
    let mut name = None;
    let mut bounds = None;
    let mut start = None;
    let mut goal = None;
    let mut threats = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, rest) = content
            .split_once(char::is_whitespace)
            .map(|(k, r)| (k, r.trim()))
            .unwrap_or((content, ""));
        let fields: Vec<&str> = rest.split_whitespace().collect();
        match key {
            "scenario" => {
                if rest.is_empty() {
                    return Err(syntax(line, "`scenario` needs a name"));
                }
                set_once(&mut name, rest.to_string(), line, "scenario")?;
            }
            "bounds" => {
                let [x_min, y_min, x_max, y_max] = numbers::<4>(line, key, &fields)?;
                let b = Bounds::new(x_min, x_max, y_min, y_max).map_err(|e| syntax(line, e.to_string()))?;
                set_once(&mut bounds, b, line, "bounds")?;
            }
            "start" => {
                let [x, y] = numbers::<2>(line, key, &fields)?;
                set_once(&mut start, Point::new(x, y), line, "start")?;
            }
            "goal" => {
                let [x, y] = numbers::<2>(line, key, &fields)?;
                set_once(&mut goal, Point::new(x, y), line, "goal")?;
            }
            "threat" => {
                let (kind, nums) = fields
                    .split_first()
                    .ok_or_else(|| syntax(line, "`threat` needs a kind and three numbers"))?;
                let kind: ThreatKind = kind.parse().map_err(|m: String| syntax(line, m))?;
                let [cx, cy, r] = numbers::<3>(line, key, nums)?;
                let t = Threat::new(Point::new(cx, cy), r, kind).map_err(|e| syntax(line, e.to_string()))?;
                threats.push(t);
            }
            other => return Err(syntax(line, format!("unknown key `{other}`"))),
        }
    }

    let name = name.ok_or(ParseError::MissingKey("scenario"))?;
    let bounds = bounds.ok_or(ParseError::MissingKey("bounds"))?;
    let start = start.ok_or(ParseError::MissingKey("start"))?;
    let goal = goal.ok_or(ParseError::MissingKey("goal"))?;
    Ok(Scenario::new(name, bounds, start, goal, threats)?)
}

/// Canonical text form; numbers carry six significant digits.
pub fn serialize_scenario(s: &Scenario) -> String {
    let b = s.bounds();
    let mut out = String::new();
    let _ = writeln!(out, "scenario {}", s.name());
    let _ = writeln!(
        out,
        "bounds {} {} {} {}",
        sig6(b.x_min()),
        sig6(b.y_min()),
        sig6(b.x_max()),
        sig6(b.y_max())
    );
    let _ = writeln!(out, "start {} {}", sig6(s.start().x), sig6(s.start().y));
    let _ = writeln!(out, "goal {} {}", sig6(s.goal().x), sig6(s.goal().y));
    for t in s.threats() {
        let _ = writeln!(
            out,
            "threat {} {} {} {}",
            t.kind(),
            sig6(t.center().x),
            sig6(t.center().y),
            sig6(t.radius())
        );
    }
    out
}
