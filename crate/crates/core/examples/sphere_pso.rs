//! The swarm engine on its own: minimize a shifted quadratic in four
//! dimensions and show that parallel and serial evaluation agree exactly.

use uav_route::prelude::*;

fn main() {
    let target = [2.5, -1.25, 0.75, -3.0];
    let sphere = |x: &[f64]| x.iter().zip(&target).map(|(a, t)| (a - t).powi(2)).sum::<f64>();
    let space = SearchSpace::uniform(4, -10.0, 10.0).expect("valid box");

    for seed in 0..3 {
        let config = PsoConfig::default().with_seed(seed);
        let best = minimize(&sphere, &space, &config).expect("valid config");
        let serial = minimize(
            &sphere,
            &space,
            &PsoConfig {
                evaluation: Evaluation::Serial,
                ..config
            },
        )
        .expect("valid config");
        assert_eq!(best.history, serial.history);
        println!(
            "seed {seed}: cost {:.3e} at [{}], cost after 10/50/100 iterations {:.2e} / {:.2e} / {:.2e}",
            best.cost,
            best.position
                .iter()
                .map(|v| format!("{v:.5}"))
                .collect::<Vec<_>>()
                .join(", "),
            best.history[10],
            best.history[50],
            best.history[100],
        );
    }
}
