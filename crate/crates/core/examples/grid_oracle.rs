//! The grid reference planner: refine the lattice on a generated scenario
//! and compare with the swarm planner's route.

use std::error::Error;

use uav_route::prelude::*;

fn main() -> Result<(), Box<dyn Error>> {
    let scenario = generate_scenario(ComplexityClass::Medium, 4)?;
    println!(
        "octile bound between start and goal: {:.3}",
        octile_lower_bound(scenario.start(), scenario.goal())
    );
    for resolution in [4.0, 2.0, 1.0, 0.5, 0.25] {
        let result = grid_shortest_path(&scenario, GridSpec::new(resolution)?)?;
        println!(
            "resolution {resolution:>4}: length {:.3} over {} moves",
            result.length, result.moves
        );
    }

    let spec = EncodingSpec::new(DEFAULT_WAYPOINTS, *scenario.bounds())?;
    let report = optimize(
        &scenario,
        &spec,
        &PsoConfig::default().with_seed(4),
        &CostWeights::default(),
    )?;
    let oracle = grid_shortest_path(&scenario, GridSpec::new(0.5)?)?;
    println!(
        "swarm route {:.3} (feasible {}), ratio to grid route {:.4}",
        report.best_breakdown.length,
        report.feasible,
        report.best_breakdown.length / oracle.length
    );
    Ok(())
}
