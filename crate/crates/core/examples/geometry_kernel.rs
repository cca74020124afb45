//! Clearance and penetration integrals for a segment against a threat disc.
//!
//! A segment crossing a unit disc through its center accumulates a
//! penetration integral of exactly 1; the sampled estimate converges to it
//! as the sample count grows.

use uav_route::prelude::*;

fn main() {
    let threat = Threat::radar(Point::new(0.0, 0.0), 1.0).expect("valid threat");
    let (a, b) = (Point::new(-2.0, 0.0), Point::new(2.0, 0.0));

    println!("clearance through center: {:+.3}", segment_clearance(a, b, &threat));
    for offset in [0.5, 1.0, 1.5] {
        let (a, b) = (Point::new(-2.0, offset), Point::new(2.0, offset));
        println!(
            "offset {offset}: clearance {:+.3}, violation {:.5}",
            segment_clearance(a, b, &threat),
            segment_violation(a, b, &threat, 64)
        );
    }

    println!("\nsamples  violation  rel. error");
    for samples in [2, 8, 64, 256, 1025, 4097] {
        let v = segment_violation(a, b, &threat, samples);
        println!("{samples:>7}  {v:.6}  {:.3e}", (v - 1.0).abs());
    }
}
