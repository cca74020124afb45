//! Command-line front end: `plan`, `curves`, `gen` and `oracle`.
//!
//! Exit codes: 0 on success with a feasible route, 2 when the best route
//! found is infeasible, 1 on usage or I/O errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path as FsPath, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use crate::cost::CostWeights;
use crate::numfmt::sig6;
use crate::oracle::{grid_shortest_path, GridSpec};
use crate::path::{EncodingSpec, DEFAULT_WAYPOINTS};
use crate::planner::{optimize, RunReport};
use crate::pso::{Evaluation, PsoConfig};
use crate::report::{render_svg, write_convergence_csv, write_curves_csv, CurveRun};
use crate::scenario::{generate_scenario, parse_scenario, serialize_scenario, ComplexityClass, Scenario};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "uav-route",
    version,
    about = "Threat-aware UAV route planning with particle swarms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Optimize one route and write path.svg, convergence.csv and report.txt.
    Plan(PlanArgs),
    /// Run every requested class over several seeds into one curves.csv.
    Curves(CurvesArgs),
    /// Emit a generated scenario file.
    Gen(GenArgs),
    /// Run the grid planner alone.
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Scenario file to load.
    #[arg(long, conflicts_with = "generate")]
    pub scenario: Option<PathBuf>,
    /// Generate a scenario of this complexity class instead.
    #[arg(long)]
    pub generate: Option<ComplexityClass>,
}

#[derive(Debug, Args)]
pub struct TuningArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub iters: Option<usize>,
    #[arg(long)]
    pub swarm: Option<usize>,
    #[arg(long)]
    pub waypoints: Option<usize>,
    #[arg(long = "w-threat")]
    pub w_threat: Option<f64>,
    #[arg(long = "w-bounds")]
    pub w_bounds: Option<f64>,
    /// Evaluate particles on one thread.
    #[arg(long)]
    pub serial: bool,
}

impl TuningArgs {
    fn pso_config(&self, seed: u64) -> PsoConfig {
        let d = PsoConfig::default();
        PsoConfig {
            iterations: self.iters.unwrap_or(d.iterations),
            swarm_size: self.swarm.unwrap_or(d.swarm_size),
            seed,
            evaluation: if self.serial {
                Evaluation::Serial
            } else {
                Evaluation::Parallel
            },
            ..d
        }
    }

    fn weights(&self) -> CostWeights {
        let d = CostWeights::default();
        CostWeights {
            threat: self.w_threat.unwrap_or(d.threat),
            bounds: self.w_bounds.unwrap_or(d.bounds),
            ..d
        }
    }

    fn encoding(&self, scenario: &Scenario) -> Result<EncodingSpec> {
        Ok(EncodingSpec::new(
            self.waypoints.unwrap_or(DEFAULT_WAYPOINTS),
            *scenario.bounds(),
        )?)
    }
}

#[derive(Debug, Args)]
pub struct PlanArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[command(flatten)]
    pub tuning: TuningArgs,
    /// Also run the grid planner and write oracle.txt.
    #[arg(long)]
    pub oracle: bool,
    /// Grid resolution for --oracle.
    #[arg(long, default_value_t = 0.5)]
    pub resolution: f64,
    #[arg(long, default_value = "run")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct CurvesArgs {
    /// Classes to run, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = ComplexityClass::ALL.to_vec())]
    pub generate: Vec<ComplexityClass>,
    #[command(flatten)]
    pub tuning: TuningArgs,
    /// Seeds per class: seed, seed + 1, ..., seed + reps - 1.
    #[arg(long, default_value_t = 1)]
    pub reps: u64,
    #[arg(long, default_value = "curves")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub generate: ComplexityClass,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Directory for `<class>-<seed>.txt`; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0.5)]
    pub resolution: f64,
    /// Directory for oracle.txt and oracle.svg; stdout only when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` (program name first), runs the command, and returns the
/// process exit code. Diagnostics go to stderr as a single line.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return EXIT_OK;
        }
        Err(e) => {
            let rendered = e.to_string();
            let line = rendered.lines().find(|l| !l.trim().is_empty()).unwrap_or("usage error");
            eprintln!("uav-route: {}", line.trim_start_matches("error: "));
            return EXIT_ERROR;
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("uav-route: {e:#}");
            EXIT_ERROR
        }
    }
}

pub fn execute(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Plan(a) => cmd_plan(a),
        Command::Curves(a) => cmd_curves(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Oracle(a) => cmd_oracle(a),
    }
}

fn load_scenario(source: &SourceArgs, seed: u64) -> Result<Scenario> {
    match (&source.scenario, source.generate) {
        (Some(path), None) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("cannot read scenario file {}", path.display()))?;
            parse_scenario(&text).with_context(|| format!("invalid scenario file {}", path.display()))
        }
        (None, Some(class)) => Ok(generate_scenario(class, seed)?),
        (None, None) => bail!("one of --scenario or --generate is required"),
        (Some(_), Some(_)) => bail!("--scenario and --generate are mutually exclusive"),
    }
}

fn write_file(dir: &FsPath, name: &str, contents: &str) -> Result<()> {
    let path = dir.join(name);
    fs::write(&path, contents).with_context(|| format!("cannot write {}", path.display()))
}

fn create_dir(dir: &FsPath) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("cannot create output directory {}", dir.display()))
}

fn report_text(
    scenario: &Scenario,
    report: &RunReport,
    cfg: &PsoConfig,
    spec: &EncodingSpec,
    w: &CostWeights,
) -> String {
    let b = &report.best_breakdown;
    let clearance = report.min_clearance(scenario).map_or_else(|| "none".to_string(), sig6);
    let mut out = String::new();
    let _ = writeln!(out, "scenario: {}", scenario.name());
    let _ = writeln!(out, "seed: {}", cfg.seed);
    let _ = writeln!(out, "feasible: {}", report.feasible);
    let _ = writeln!(out, "best_length: {}", sig6(b.length));
    let _ = writeln!(out, "best_total: {}", sig6(b.total));
    let _ = writeln!(out, "threat_violation: {}", sig6(b.threat_violation));
    let _ = writeln!(out, "bounds_violation: {}", sig6(b.bounds_violation));
    let _ = writeln!(out, "min_threat_clearance: {clearance}");
    let _ = writeln!(out, "iterations: {}", cfg.iterations);
    let _ = writeln!(out, "swarm_size: {}", cfg.swarm_size);
    let _ = writeln!(out, "waypoints: {}", spec.n_waypoints());
    let _ = writeln!(out, "inertia: {}", cfg.inertia);
    let _ = writeln!(out, "cognitive: {}", cfg.cognitive);
    let _ = writeln!(out, "social: {}", cfg.social);
    let _ = writeln!(out, "v_max_fraction: {}", cfg.v_max_fraction);
    let _ = writeln!(out, "w_threat: {}", w.threat);
    let _ = writeln!(out, "w_bounds: {}", w.bounds);
    let _ = writeln!(out, "samples_per_segment: {}", w.samples_per_segment);
    let _ = writeln!(out, "wall_time_ms: {}", report.wall_time.as_millis());
    out
}

fn cmd_plan(args: &PlanArgs) -> Result<i32> {
    let seed = args.tuning.seed;
    let scenario = load_scenario(&args.source, seed)?;
    let cfg = args.tuning.pso_config(seed);
    let weights = args.tuning.weights();
    let spec = args.tuning.encoding(&scenario)?;
    let grid = if args.oracle {
        Some(GridSpec::new(args.resolution)?)
    } else {
        None
    };
    let report = optimize(&scenario, &spec, &cfg, &weights)?;

    create_dir(&args.out)?;
    write_file(&args.out, "path.svg", &render_svg(&scenario, &report.best_path)?)?;
    write_file(&args.out, "convergence.csv", &write_convergence_csv(&report.history)?)?;
    write_file(
        &args.out,
        "report.txt",
        &report_text(&scenario, &report, &cfg, &spec, &weights),
    )?;

    if let Some(grid) = grid {
        let text = match grid_shortest_path(&scenario, grid) {
            Ok(o) => format!(
                "resolution: {}\noracle_length: {}\npso_length: {}\nratio: {}\n",
                sig6(grid.resolution()),
                sig6(o.length),
                sig6(report.best_breakdown.length),
                sig6(report.best_breakdown.length / o.length)
            ),
            Err(e) => format!("resolution: {}\nerror: {e}\n", sig6(grid.resolution())),
        };
        write_file(&args.out, "oracle.txt", &text)?;
    }

    println!(
        "{}: length {} total {} feasible {}",
        scenario.name(),
        sig6(report.best_breakdown.length),
        sig6(report.best_breakdown.total),
        report.feasible
    );
    Ok(if report.feasible { EXIT_OK } else { EXIT_INFEASIBLE })
}

fn cmd_curves(args: &CurvesArgs) -> Result<i32> {
    if args.reps == 0 {
        bail!("--reps must be at least 1");
    }
    if args.generate.is_empty() {
        bail!("no complexity classes requested");
    }
    let jobs: Vec<(ComplexityClass, u64)> = args
        .generate
        .iter()
        .flat_map(|&c| (0..args.reps).map(move |r| (c, args.tuning.seed.wrapping_add(r))))
        .collect();
    let weights = args.tuning.weights();
    let results: Vec<Result<(Scenario, RunReport)>> = jobs
        .par_iter()
        .map(|&(class, seed)| {
            let scenario = generate_scenario(class, seed)?;
            let spec = args.tuning.encoding(&scenario)?;
            let report = optimize(&scenario, &spec, &args.tuning.pso_config(seed), &weights)?;
            Ok((scenario, report))
        })
        .collect();

    create_dir(&args.out)?;
    let mut runs = Vec::with_capacity(jobs.len());
    let mut infeasible = 0;
    for (&(class, seed), result) in jobs.iter().zip(results) {
        let (scenario, report) = result?;
        write_file(
            &args.out,
            &format!("path-{class}-{seed}.svg"),
            &render_svg(&scenario, &report.best_path)?,
        )?;
        if !report.feasible {
            infeasible += 1;
        }
        println!(
            "{class} seed {seed}: length {} feasible {}",
            sig6(report.best_breakdown.length),
            report.feasible
        );
        runs.push(CurveRun {
            class: class.to_string(),
            seed,
            history: report.history,
        });
    }
    write_file(&args.out, "curves.csv", &write_curves_csv(&runs)?)?;
    if infeasible > 0 {
        eprintln!("uav-route: {infeasible} of {} runs ended infeasible", runs.len());
        return Ok(EXIT_INFEASIBLE);
    }
    Ok(EXIT_OK)
}

fn cmd_gen(args: &GenArgs) -> Result<i32> {
    let scenario = generate_scenario(args.generate, args.seed)?;
    let text = serialize_scenario(&scenario);
    match &args.out {
        Some(dir) => {
            create_dir(dir)?;
            let name = format!("{}-{}.txt", args.generate, args.seed);
            write_file(dir, &name, &text)?;
            println!("{}", dir.join(name).display());
        }
        None => print!("{text}"),
    }
    Ok(EXIT_OK)
}

fn cmd_oracle(args: &OracleArgs) -> Result<i32> {
    let scenario = load_scenario(&args.source, args.seed)?;
    let grid = GridSpec::new(args.resolution)?;
    let result = grid_shortest_path(&scenario, grid)?;
    let text = format!(
        "scenario: {}\nresolution: {}\noracle_length: {}\nmoves: {}\n",
        scenario.name(),
        sig6(grid.resolution()),
        sig6(result.length),
        result.moves
    );
    if let Some(dir) = &args.out {
        create_dir(dir)?;
        write_file(dir, "oracle.txt", &text)?;
        write_file(dir, "oracle.svg", &render_svg(&scenario, &result.path)?)?;
    }
    print!("{text}");
    Ok(EXIT_OK)
}
