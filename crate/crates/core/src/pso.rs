//! Global-best particle swarm optimizer with inertia weight.
//!
//! Each iteration runs in three phases: every random coefficient is drawn
//! serially (particle index order, then dimension order, `r1` before `r2`),
//! all particles are moved and then evaluated (optionally in parallel), and
//! finally personal and global bests are updated serially. Evaluation is the
//! only parallel phase and objectives are pure, so serial and parallel runs
//! are bit-identical.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PsoError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("invalid search space: {0}")]
    Space(String),
}

/// Anything the swarm can minimize.
pub trait Objective: Sync {
    fn cost(&self, position: &[f64]) -> f64;
}

impl<F> Objective for F
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    fn cost(&self, position: &[f64]) -> f64 {
        self(position)
    }
}

/// Per-dimension box used to seed positions and size the velocity clamp.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchSpace {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl SearchSpace {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self, PsoError> {
        if lower.is_empty() || lower.len() != upper.len() {
            return Err(PsoError::Space(format!(
                "need matching non-empty bounds, got {} lower and {} upper",
                lower.len(),
                upper.len()
            )));
        }
        for (d, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(PsoError::Space(format!("dimension {d}: [{lo}, {hi}]")));
            }
        }
        Ok(Self { lower, upper })
    }

    pub fn uniform(dim: usize, lo: f64, hi: f64) -> Result<Self, PsoError> {
        Self::new(vec![lo; dim], vec![hi; dim])
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dimension()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (lo, hi))| v >= lo && v <= hi)
    }

    fn velocity_limits(&self, fraction: f64) -> Vec<f64> {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| fraction * (hi - lo))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Evaluation {
    Serial,
    #[default]
    Parallel,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PsoConfig {
    pub swarm_size: usize,
    pub iterations: usize,
    pub inertia: f64,
    pub cognitive: f64,
    pub social: f64,
    /// Velocity clamp per dimension as a fraction of that dimension's span.
    pub v_max_fraction: f64,
    pub seed: u64,
    pub evaluation: Evaluation,
}

impl Default for PsoConfig {
    fn default() -> Self {
        Self {
            // 40 particles left too many high-complexity runs stuck in an
            // infeasible basin; 60 clears all three complexity classes.
            swarm_size: 60,
            iterations: 300,
            inertia: 0.7298,
            cognitive: 1.49618,
            social: 1.49618,
            v_max_fraction: 0.2,
            seed: 0,
            evaluation: Evaluation::Parallel,
        }
    }
}

impl PsoConfig {
    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }

    pub fn validate(&self) -> Result<(), PsoError> {
        if self.swarm_size < 2 {
            return Err(PsoError::Config(format!(
                "swarm_size must be >= 2, got {}",
                self.swarm_size
            )));
        }
        if self.iterations < 1 {
            return Err(PsoError::Config("iterations must be >= 1".into()));
        }
        if !self.inertia.is_finite() {
            return Err(PsoError::Config("inertia must be finite".into()));
        }
        for (name, c) in [("cognitive", self.cognitive), ("social", self.social)] {
            if !(c.is_finite() && c >= 0.0) {
                return Err(PsoError::Config(format!("{name} must be finite and >= 0, got {c}")));
            }
        }
        if !(self.v_max_fraction > 0.0 && self.v_max_fraction <= 1.0) {
            return Err(PsoError::Config(format!(
                "v_max_fraction must lie in (0, 1], got {}",
                self.v_max_fraction
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Particle {
    pub position: Vec<f64>,
    pub velocity: Vec<f64>,
    pub cost: f64,
    pub best_position: Vec<f64>,
    pub best_cost: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SwarmState {
    pub particles: Vec<Particle>,
    pub global_best_position: Vec<f64>,
    pub global_best_cost: f64,
    pub iteration: usize,
    /// Per-dimension velocity clamp.
    pub v_max: Vec<f64>,
    pub rng: ChaCha8Rng,
}

fn evaluate_all<O: Objective + ?Sized>(objective: &O, positions: &[&[f64]], mode: Evaluation) -> Vec<f64> {
    match mode {
        Evaluation::Serial => positions.iter().map(|x| objective.cost(x)).collect(),
        Evaluation::Parallel => positions.par_iter().map(|x| objective.cost(x)).collect(),
    }
}

impl SwarmState {
    /// Seeds positions uniformly in `space` and velocities uniformly in
    /// `[-v_max, v_max]`, then evaluates every particle once.
    pub fn init<O: Objective + ?Sized>(
        objective: &O,
        space: &SearchSpace,
        config: &PsoConfig,
    ) -> Result<Self, PsoError> {
        config.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let v_max = space.velocity_limits(config.v_max_fraction);
        let dim = space.dimension();

        let mut particles = Vec::with_capacity(config.swarm_size);
        for _ in 0..config.swarm_size {
            let position: Vec<f64> = (0..dim)
                .map(|d| space.lower[d] + rng.gen::<f64>() * (space.upper[d] - space.lower[d]))
                .collect();
            let velocity: Vec<f64> = (0..dim).map(|d| (2.0 * rng.gen::<f64>() - 1.0) * v_max[d]).collect();
            particles.push(Particle {
                best_position: position.clone(),
                position,
                velocity,
                cost: f64::INFINITY,
                best_cost: f64::INFINITY,
            });
        }

        let positions: Vec<&[f64]> = particles.iter().map(|p| p.position.as_slice()).collect();
        let costs = evaluate_all(objective, &positions, config.evaluation);
        for (p, c) in particles.iter_mut().zip(costs) {
            p.cost = c;
            p.best_cost = c;
        }

        let mut state = Self {
            global_best_position: particles[0].best_position.clone(),
            global_best_cost: f64::INFINITY,
            particles,
            iteration: 0,
            v_max,
            rng,
        };
        state.refresh_global_best();
        Ok(state)
    }

    fn refresh_global_best(&mut self) {
        let mut best: Option<usize> = None;
        for (i, p) in self.particles.iter().enumerate() {
            if p.best_cost < self.global_best_cost {
                self.global_best_cost = p.best_cost;
                best = Some(i);
            }
        }
        if let Some(i) = best {
            self.global_best_position = self.particles[i].best_position.clone();
        }
    }

    pub fn dimension(&self) -> usize {
        self.global_best_position.len()
    }

    /// One synchronous swarm update.
    pub fn step<O: Objective + ?Sized>(&mut self, objective: &O, config: &PsoConfig) {
        let dim = self.dimension();
        let coefficients: Vec<(f64, f64)> = (0..self.particles.len() * dim)
            .map(|_| {
                let r1 = self.rng.gen::<f64>();
                let r2 = self.rng.gen::<f64>();
                (r1, r2)
            })
            .collect();

        let gbest = &self.global_best_position;
        for (p, draws) in self.particles.iter_mut().zip(coefficients.chunks_exact(dim)) {
            for d in 0..dim {
                let (r1, r2) = draws[d];
                let x = p.position[d];
                let v = config.inertia * p.velocity[d]
                    + config.cognitive * r1 * (p.best_position[d] - x)
                    + config.social * r2 * (gbest[d] - x);
                let v = v.clamp(-self.v_max[d], self.v_max[d]);
                p.velocity[d] = v;
                p.position[d] = x + v;
            }
        }

        let positions: Vec<&[f64]> = self.particles.iter().map(|p| p.position.as_slice()).collect();
        let costs = evaluate_all(objective, &positions, config.evaluation);
        for (p, c) in self.particles.iter_mut().zip(costs) {
            p.cost = c;
            if c < p.best_cost {
                p.best_cost = c;
                p.best_position.clone_from(&p.position);
            }
        }
        self.refresh_global_best();
        self.iteration += 1;
    }
}

/// Result of [`minimize`].
#[derive(Debug, Clone, PartialEq)]
pub struct Minimum {
    pub position: Vec<f64>,
    pub cost: f64,
    /// Global-best cost after initialization and after every iteration.
    pub history: Vec<f64>,
}

/// Runs a full optimization of an arbitrary objective.
pub fn minimize<O: Objective + ?Sized>(
    objective: &O,
    space: &SearchSpace,
    config: &PsoConfig,
) -> Result<Minimum, PsoError> {
    let mut state = SwarmState::init(objective, space, config)?;
    let mut history = Vec::with_capacity(config.iterations + 1);
    history.push(state.global_best_cost);
    for _ in 0..config.iterations {
        state.step(objective, config);
        history.push(state.global_best_cost);
    }
    Ok(Minimum {
        position: state.global_best_position,
        cost: state.global_best_cost,
        history,
    })
}
