//! Grid shortest-path planner used to cross-check the swarm optimizer.
//!
//! Lattice nodes sit at `(x_min + i * res, y_min + j * res)` for every node
//! inside the world bounds. A node is blocked iff it lies strictly inside a
//! threat disc. The search is plain uniform-cost (Dijkstra) over the
//! 8-connected lattice; expansion order and tie-breaking are fixed so the
//! result is reproducible bit for bit.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::f64::consts::SQRT_2;

use thiserror::Error;

use crate::geometry::{Point, Threat};
use crate::path::Path;
use crate::scenario::Scenario;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("grid resolution must be finite and > 0, got {0}")]
    BadResolution(f64),
    #[error("start node is inside a threat")]
    StartBlocked,
    #[error("goal node is inside a threat")]
    GoalBlocked,
    #[error("goal is unreachable from start on the grid")]
    NoPath,
}

/// Lattice spacing; connectivity is always 8-neighbour.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    resolution: f64,
}

impl GridSpec {
    pub fn new(resolution: f64) -> Result<Self, OracleError> {
        if resolution.is_finite() && resolution > 0.0 {
            Ok(Self { resolution })
        } else {
            Err(OracleError::BadResolution(resolution))
        }
    }

    pub fn resolution(&self) -> f64 {
        self.resolution
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    /// Exact start, the visited node centers, exact goal.
    pub path: Path,
    pub length: f64,
    /// Grid moves between the snapped start and goal nodes.
    pub moves: usize,
}

/// E, NE, N, NW, W, SW, S, SE.
const NEIGHBOURS: [(i64, i64); 8] = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)];

#[derive(Debug, Clone, Copy, PartialEq)]
struct Entry {
    cost: f64,
    cell: (usize, usize),
}

impl Eq for Entry {}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cost
            .total_cmp(&other.cost)
            .then_with(|| self.cell.cmp(&other.cell))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Lattice<'a> {
    x0: f64,
    y0: f64,
    res: f64,
    nx: usize,
    ny: usize,
    threats: &'a [Threat],
}

impl<'a> Lattice<'a> {
    fn new(scenario: &'a Scenario, res: f64) -> Self {
        let b = scenario.bounds();
        let count = |span: f64| (span / res + 1e-9).floor() as usize + 1;
        Self {
            x0: b.x_min(),
            y0: b.y_min(),
            res,
            nx: count(b.width()),
            ny: count(b.height()),
            threats: scenario.threats(),
        }
    }

    fn point(&self, (i, j): (usize, usize)) -> Point {
        Point::new(self.x0 + i as f64 * self.res, self.y0 + j as f64 * self.res)
    }

    fn snap(&self, p: Point) -> (usize, usize) {
        let snap1 = |v: f64, origin: f64, n: usize| (((v - origin) / self.res).round().max(0.0) as usize).min(n - 1);
        (snap1(p.x, self.x0, self.nx), snap1(p.y, self.y0, self.ny))
    }

    fn index(&self, (i, j): (usize, usize)) -> usize {
        j * self.nx + i
    }

    fn blocked_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.nx * self.ny];
        for j in 0..self.ny {
            for i in 0..self.nx {
                let p = self.point((i, j));
                mask[j * self.nx + i] = self.threats.iter().any(|t| t.strictly_contains(p));
            }
        }
        mask
    }
}

/// Shortest 8-connected lattice path from start to goal.
pub fn grid_shortest_path(scenario: &Scenario, spec: GridSpec) -> Result<OracleResult, OracleError> {
    let grid = Lattice::new(scenario, spec.resolution);
    let blocked = grid.blocked_mask();
    let source = grid.snap(scenario.start());
    let target = grid.snap(scenario.goal());
    if blocked[grid.index(source)] {
        return Err(OracleError::StartBlocked);
    }
    if blocked[grid.index(target)] {
        return Err(OracleError::GoalBlocked);
    }

    let n = grid.nx * grid.ny;
    let mut dist = vec![f64::INFINITY; n];
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut settled = vec![false; n];
    let mut heap = BinaryHeap::new();
    dist[grid.index(source)] = 0.0;
    heap.push(Reverse(Entry {
        cost: 0.0,
        cell: source,
    }));

    let straight = spec.resolution;
    let diagonal = spec.resolution * SQRT_2;
    let mut reached = false;
    while let Some(Reverse(Entry { cost, cell })) = heap.pop() {
        let idx = grid.index(cell);
        if settled[idx] {
            continue;
        }
        settled[idx] = true;
        if cell == target {
            reached = true;
            break;
        }
        for (di, dj) in NEIGHBOURS {
            let (ni, nj) = (cell.0 as i64 + di, cell.1 as i64 + dj);
            if ni < 0 || nj < 0 || ni >= grid.nx as i64 || nj >= grid.ny as i64 {
                continue;
            }
            let next = (ni as usize, nj as usize);
            let nidx = grid.index(next);
            if blocked[nidx] || settled[nidx] {
                continue;
            }
            let step = if di != 0 && dj != 0 { diagonal } else { straight };
            let candidate = cost + step;
            if candidate < dist[nidx] {
                dist[nidx] = candidate;
                parent[nidx] = Some(cell);
                heap.push(Reverse(Entry {
                    cost: candidate,
                    cell: next,
                }));
            }
        }
    }
    if !reached {
        return Err(OracleError::NoPath);
    }

    let mut cells = vec![target];
    while let Some(prev) = parent[grid.index(*cells.last().expect("non-empty"))] {
        cells.push(prev);
    }
    cells.reverse();
    let moves = cells.len() - 1;

    let (start, goal) = (scenario.start(), scenario.goal());
    let mut interior: Vec<Point> = cells.iter().map(|&c| grid.point(c)).collect();
    if interior.first() == Some(&start) {
        interior.remove(0);
    }
    if interior.last() == Some(&goal) {
        interior.pop();
    }
    let path = Path::new(start, interior, goal);
    let length = path.length();
    Ok(OracleResult { path, length, moves })
}

/// Octile distance: shortest 8-connected lattice length in free space.
pub fn octile_lower_bound(start: Point, goal: Point) -> f64 {
    let dx = (goal.x - start.x).abs();
    let dy = (goal.y - start.y).abs();
    dx.max(dy) + (SQRT_2 - 1.0) * dx.min(dy)
}
