//! Convergence of the swarm planner across the three complexity classes,
//! written as one combined CSV for plotting.

use std::error::Error;

use uav_route::prelude::*;
use uav_route::report::{write_curves_csv, CurveRun};

fn main() -> Result<(), Box<dyn Error>> {
    let mut runs = Vec::new();
    for class in ComplexityClass::ALL {
        for seed in 0..3 {
            let scenario = generate_scenario(class, seed)?;
            let spec = EncodingSpec::new(DEFAULT_WAYPOINTS, *scenario.bounds())?;
            let report = optimize(
                &scenario,
                &spec,
                &PsoConfig::default().with_seed(seed),
                &CostWeights::default(),
            )?;
            let h = &report.history;
            println!(
                "{class:>6} seed {seed}: best total {:>10.2} at start, {:>8.2} after 50 iterations, {:>8.2} after {}; feasible {}",
                h[0].best_total,
                h[50].best_total,
                h[h.len() - 1].best_total,
                h.len() - 1,
                report.feasible
            );
            runs.push(CurveRun {
                class: class.to_string(),
                seed,
                history: report.history,
            });
        }
    }
    std::fs::write("curves.csv", write_curves_csv(&runs)?)?;
    println!("wrote curves.csv");
    Ok(())
}
