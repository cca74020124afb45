//! Write, read back and validate scenario files.

use std::error::Error;

use uav_route::prelude::*;

fn main() -> Result<(), Box<dyn Error>> {
    let text = "\
# two threats between start and goal
scenario corridor
bounds 0 0 120 60
start 5 30
goal 115 30
threat radar 40 32 12
threat artillery 80 25 4.5
";
    let scenario = parse_scenario(text)?;
    println!("parsed `{}`: {} threats", scenario.name(), scenario.threats().len());
    for t in scenario.threats() {
        println!(
            "  {} at ({}, {}) radius {}",
            t.kind(),
            t.center().x,
            t.center().y,
            t.radius()
        );
    }

    let generated = generate_scenario(ComplexityClass::Low, 12)?;
    let serialized = serialize_scenario(&generated);
    print!("\n{serialized}");
    assert_eq!(parse_scenario(&serialized)?, generated);
    println!("round trip ok");

    let broken = "scenario bad\nbounds 0 0 10 10\nstart 5 5\ngoal 9 9\nthreat radar 5 5 2\n";
    match parse_scenario(broken) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("\nrejected: {e}"),
    }
    Ok(())
}
