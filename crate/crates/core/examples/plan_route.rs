//! Plan one route through a generated scenario and write its plot.
//!
//! Usage: `cargo run --release --example plan_route -- [low|medium|high] [seed]`

use std::error::Error;

use uav_route::prelude::*;

fn main() -> Result<(), Box<dyn Error>> {
    let mut args = std::env::args().skip(1);
    let class: ComplexityClass = args.next().as_deref().unwrap_or("high").parse()?;
    let seed: u64 = args.next().map_or(Ok(1), |s| s.parse())?;

    let scenario = generate_scenario(class, seed)?;
    let spec = EncodingSpec::new(DEFAULT_WAYPOINTS, *scenario.bounds())?;
    let config = PsoConfig::default().with_seed(seed);
    let report = optimize(&scenario, &spec, &config, &CostWeights::default())?;

    let b = report.best_breakdown;
    println!("scenario {} with {} threats", scenario.name(), scenario.threats().len());
    println!(
        "straight-line distance {:.2}",
        distance(scenario.start(), scenario.goal())
    );
    println!(
        "best length {:.2}, total {:.2}, feasible {}",
        b.length, b.total, report.feasible
    );
    if let Some(c) = report.min_clearance(&scenario) {
        println!("closest approach to a threat edge {c:.3}");
    }
    println!(
        "settled within 1% after {} iterations ({:.0?})",
        report.iterations_to_within(0.01),
        report.wall_time
    );
    for (i, p) in report.best_path.vertices().enumerate() {
        println!("  {i:>2}: ({:7.3}, {:7.3})", p.x, p.y);
    }

    let file = format!("{}.svg", scenario.name());
    std::fs::write(&file, render_svg(&scenario, &report.best_path)?)?;
    println!("wrote {file}");
    Ok(())
}
