//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use uav_route::geometry::segment_violation;
use uav_route::oracle::{grid_shortest_path, GridSpec};
use uav_route::planner::HistoryEntry;
use uav_route::prelude::*;
use uav_route::scenario::single_threat_scenario;

const SEEDS_PER_CLASS: u64 = 10;

struct Outcome {
    id: &'static str,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

fn non_increasing(history: &[HistoryEntry]) -> bool {
    history.windows(2).all(|w| w[1].best_total <= w[0].best_total)
}

fn plan(scenario: &Scenario, cfg: &PsoConfig) -> RunReport {
    let spec = EncodingSpec::new(DEFAULT_WAYPOINTS, *scenario.bounds()).unwrap();
    optimize(scenario, &spec, cfg, &CostWeights::default()).unwrap()
}

/// Histories emitted by every run in the suite, for the monotonicity check.
#[derive(Default)]
struct Emitted {
    histories: Vec<(String, Vec<HistoryEntry>)>,
}

fn zero_threat_optimality(emitted: &mut Emitted) -> Outcome {
    let b = Bounds::new(0.0, 100.0, 0.0, 100.0).unwrap();
    let s = Scenario::new("empty", b, Point::new(5.0, 5.0), Point::new(95.0, 95.0), vec![]).unwrap();
    let straight = distance(s.start(), s.goal());
    let mut good = 0;
    let mut slowest = Duration::ZERO;
    let mut worst: f64 = 0.0;
    for seed in 0..10 {
        let r = plan(&s, &PsoConfig::default().with_seed(seed));
        let ratio = r.best_breakdown.length / straight;
        worst = worst.max(ratio);
        slowest = slowest.max(r.wall_time);
        if r.feasible && ratio <= 1.01 {
            good += 1;
        }
        emitted.histories.push((format!("empty/{seed}"), r.history));
    }
    Outcome {
        id: "C1",
        title: "zero-threat optimality",
        pass: good >= 9 && slowest < Duration::from_secs(5),
        detail: format!("{good}/10 within 1.01x (worst {worst:.5}), slowest run {slowest:.2?}"),
    }
}

fn oracle_agreement(emitted: &mut Emitted) -> Outcome {
    let grid = GridSpec::new(0.5).unwrap();
    let mut feasible = 0;
    let mut in_band = 0;
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for seed in 0..20 {
        let s = single_threat_scenario(seed);
        let oracle = grid_shortest_path(&s, grid).unwrap();
        let r = plan(&s, &PsoConfig::default().with_seed(seed));
        let ratio = r.best_breakdown.length / oracle.length;
        lo = lo.min(ratio);
        hi = hi.max(ratio);
        if (0.92..=1.02).contains(&ratio) {
            in_band += 1;
        }
        if r.feasible {
            feasible += 1;
        }
        emitted.histories.push((format!("single/{seed}"), r.history));
    }
    Outcome {
        id: "C2",
        title: "oracle agreement",
        pass: in_band == 20 && feasible >= 19,
        detail: format!("{in_band}/20 ratios in [0.92, 1.02] (range {lo:.4}..{hi:.4}), {feasible}/20 feasible"),
    }
}

struct ClassRuns {
    class: ComplexityClass,
    scenarios: Vec<Scenario>,
    reports: Vec<RunReport>,
}

fn run_classes() -> Vec<ClassRuns> {
    ComplexityClass::ALL
        .iter()
        .map(|&class| {
            let scenarios: Vec<_> = (0..SEEDS_PER_CLASS)
                .map(|seed| generate_scenario(class, seed).unwrap())
                .collect();
            let reports = scenarios
                .iter()
                .zip(0..)
                .map(|(s, seed)| plan(s, &PsoConfig::default().with_seed(seed)))
                .collect();
            ClassRuns {
                class,
                scenarios,
                reports,
            }
        })
        .collect()
}

fn feasibility_under_complexity(classes: &[ClassRuns]) -> Outcome {
    let required = [0.9, 0.8, 0.7];
    let mut pass = true;
    let mut parts = Vec::new();
    for (runs, need) in classes.iter().zip(required) {
        let clear = runs
            .reports
            .iter()
            .filter(|r| r.best_breakdown.threat_violation == 0.0)
            .count();
        let rate = clear as f64 / runs.reports.len() as f64;
        pass &= rate >= need;
        parts.push(format!("{} {clear}/{} (need {need})", runs.class, runs.reports.len()));
    }
    Outcome {
        id: "C4",
        title: "feasibility under complexity",
        pass,
        detail: parts.join(", "),
    }
}

fn complexity_ordering(classes: &[ClassRuns]) -> Outcome {
    let lengths: Vec<f64> = classes
        .iter()
        .map(|c| median(c.reports.iter().map(|r| r.best_breakdown.length).collect()))
        .collect();
    let settle: Vec<f64> = classes
        .iter()
        .map(|c| median(c.reports.iter().map(|r| r.iterations_to_within(0.01) as f64).collect()))
        .collect();
    let pass = lengths[0] < lengths[1] && lengths[1] < lengths[2] && settle[0] <= settle[1] && settle[1] <= settle[2];
    Outcome {
        id: "C5",
        title: "complexity ordering",
        pass,
        detail: format!(
            "median length {:.2} / {:.2} / {:.2}, median iterations to 1% {} / {} / {}",
            lengths[0], lengths[1], lengths[2], settle[0], settle[1], settle[2]
        ),
    }
}

fn monotone_convergence(emitted: &Emitted) -> Outcome {
    let mut bad = Vec::new();
    for (name, h) in &emitted.histories {
        let csv = write_convergence_csv(h).unwrap();
        let column: Vec<f64> = csv
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
            .collect();
        if !non_increasing(h) || column.windows(2).any(|w| w[1] > w[0]) {
            bad.push(name.clone());
        }
    }
    Outcome {
        id: "C3",
        title: "monotone convergence",
        pass: bad.is_empty(),
        detail: format!(
            "{} histories checked, {} increasing {:?}",
            emitted.histories.len(),
            bad.len(),
            bad
        ),
    }
}

fn determinism() -> Outcome {
    let mut mismatches = Vec::new();
    for (class, seed) in [(ComplexityClass::Low, 21), (ComplexityClass::High, 22)] {
        let s = generate_scenario(class, seed).unwrap();
        let parallel = PsoConfig::default().with_seed(seed);
        let serial = PsoConfig {
            evaluation: Evaluation::Serial,
            ..parallel.clone()
        };
        let csv = |cfg: &PsoConfig| write_convergence_csv(&plan(&s, cfg).history).unwrap();
        let first = csv(&parallel);
        if csv(&parallel) != first {
            mismatches.push(format!("{class}/{seed} parallel rerun"));
        }
        if csv(&serial) != first {
            mismatches.push(format!("{class}/{seed} serial vs parallel"));
        }
    }
    Outcome {
        id: "C6",
        title: "determinism",
        pass: mismatches.is_empty(),
        detail: if mismatches.is_empty() {
            "byte-identical CSVs across reruns and serial/parallel evaluation".into()
        } else {
            mismatches.join(", ")
        },
    }
}

/// Piecewise Simpson on r - |x| over [-r, r]; exact for the tent profile.
fn diameter_penetration_integral(r: f64) -> f64 {
    let simpson = |lo: f64, hi: f64| {
        let f = |x: f64| (r - f64::abs(x)).max(0.0);
        let n = 100;
        let h = (hi - lo) / n as f64;
        let inner: f64 = (1..n)
            .map(|i| if i % 2 == 1 { 4.0 } else { 2.0 } * f(lo + i as f64 * h))
            .sum();
        (f(lo) + f(hi) + inner) * h / 3.0
    };
    simpson(-r, 0.0) + simpson(0.0, r)
}

fn geometry_accuracy() -> Outcome {
    let exact = diameter_penetration_integral(1.0);
    let t = Threat::radar(Point::new(0.0, 0.0), 1.0).unwrap();
    let (a, b) = (Point::new(-2.0, 0.0), Point::new(2.0, 0.0));
    let fine = segment_violation(a, b, &t, 1025);
    let coarse = segment_violation(a, b, &t, 64);
    let e_fine = (fine - exact).abs() / exact;
    let e_coarse = (coarse - exact).abs() / exact;
    Outcome {
        id: "C7",
        title: "geometry kernel accuracy",
        pass: e_fine < 0.01 && e_coarse < 0.05,
        detail: format!(
            "analytic {exact:.6}; 1025 samples {fine:.6} (err {:.3}%), 64 samples {coarse:.6} (err {:.3}%)",
            100.0 * e_fine,
            100.0 * e_coarse
        ),
    }
}

fn sphere_sanity() -> Outcome {
    let target = [2.5, -1.25, 0.75, -3.0];
    let f = move |x: &[f64]| x.iter().zip(target).map(|(v, a)| (v - a).powi(2)).sum::<f64>();
    let space = SearchSpace::uniform(4, -10.0, 10.0).unwrap();
    let mut good = 0;
    let mut worst: f64 = 0.0;
    for seed in 0..5 {
        let m = minimize(&f, &space, &PsoConfig::default().with_seed(seed)).unwrap();
        let err = m
            .position
            .iter()
            .zip(target)
            .map(|(x, a)| (x - a).abs())
            .fold(0.0, f64::max);
        worst = worst.max(err);
        if err < 1e-3 {
            good += 1;
        }
    }
    Outcome {
        id: "C8",
        title: "sphere-function sanity",
        pass: good == 5,
        detail: format!("{good}/5 seeds within 1e-3 after 300 iterations (worst {worst:.2e})"),
    }
}

fn random_scenario(rng: &mut ChaCha8Rng, i: usize) -> Scenario {
    let q = |v: f64| (v * 1000.0).round() / 1000.0;
    loop {
        let (x0, y0) = (q(rng.gen_range(-500.0..500.0)), q(rng.gen_range(-500.0..500.0)));
        let (w, h) = (q(rng.gen_range(10.0..300.0)), q(rng.gen_range(10.0..300.0)));
        let b = Bounds::new(x0, q(x0 + w), y0, q(y0 + h)).unwrap();
        let pt = |rng: &mut ChaCha8Rng| Point::new(q(rng.gen_range(x0..x0 + w)), q(rng.gen_range(y0..y0 + h)));
        let start = pt(rng);
        let goal = pt(rng);
        let n = rng.gen_range(0..12);
        let threats = (0..n)
            .map(|_| {
                let kind = if rng.gen_bool(0.5) {
                    ThreatKind::Radar
                } else {
                    ThreatKind::Artillery
                };
                Threat::new(pt(rng), q(rng.gen_range(0.5..20.0)), kind).unwrap()
            })
            .collect();
        if let Ok(s) = Scenario::new(format!("random_{i}"), b, start, goal, threats) {
            return s;
        }
    }
}

fn svg_census(svg: &str, threats: usize, vertices: usize) -> Result<(), String> {
    let doc = roxmltree::Document::parse(svg).map_err(|e| e.to_string())?;
    let count = |tag: &str| doc.descendants().filter(|n| n.has_tag_name(tag)).count();
    if count("circle") != threats + 2 || count("polyline") != 1 {
        return Err(format!(
            "census {} circles / {} polylines",
            count("circle"),
            count("polyline")
        ));
    }
    let poly = doc.descendants().find(|n| n.has_tag_name("polyline")).unwrap();
    let points = poly.attribute("points").unwrap_or("").split_whitespace().count();
    if points != vertices {
        return Err(format!("polyline has {points} points, expected {vertices}"));
    }
    Ok(())
}

fn format_round_trips(classes: &[ClassRuns]) -> Outcome {
    let mut failures = Vec::new();

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..100 {
        let s = random_scenario(&mut rng, i);
        match parse_scenario(&serialize_scenario(&s)) {
            Ok(back) if back == s => {}
            other => failures.push(format!("scenario {i}: {other:?}")),
        }
    }

    let mut csv_checked = 0;
    let mut svg_checked = 0;
    for runs in classes {
        for (s, r) in runs.scenarios.iter().zip(&runs.reports) {
            let text = write_convergence_csv(&r.history).unwrap();
            let mut reader = csv::Reader::from_reader(text.as_bytes());
            let headers = reader.headers().unwrap().clone();
            if headers.iter().collect::<Vec<_>>() != ["iteration", "best_total", "best_length"] {
                failures.push(format!("csv header {headers:?}"));
            }
            for (row, h) in reader.records().zip(&r.history) {
                let row = row.unwrap();
                let it: usize = row[0].parse().unwrap();
                let total: f64 = row[1].parse().unwrap();
                let length: f64 = row[2].parse().unwrap();
                let close = |a: f64, b: f64| (a - b).abs() <= 5e-6 * b.abs();
                if it != h.iteration || !close(total, h.best_total) || !close(length, h.best_length) {
                    failures.push(format!("{} csv row {it}", s.name()));
                }
            }
            csv_checked += 1;

            let svg = render_svg(s, &r.best_path).unwrap();
            if let Err(e) = svg_census(&svg, s.threats().len(), r.best_path.vertex_count()) {
                failures.push(format!("{} svg: {e}", s.name()));
            }
            svg_checked += 1;
        }
    }

    Outcome {
        id: "C9",
        title: "format round-trips",
        pass: failures.is_empty(),
        detail: format!(
            "100 scenarios, {csv_checked} CSVs, {svg_checked} SVGs checked; {} failures {:?}",
            failures.len(),
            failures.iter().take(3).collect::<Vec<_>>()
        ),
    }
}

fn main() {
    let started = Instant::now();
    let mut emitted = Emitted::default();
    let mut outcomes = vec![zero_threat_optimality(&mut emitted), oracle_agreement(&mut emitted)];
    let classes = run_classes();
    for runs in &classes {
        for (r, seed) in runs.reports.iter().zip(0..) {
            emitted
                .histories
                .push((format!("{}/{seed}", runs.class), r.history.clone()));
        }
    }
    outcomes.push(monotone_convergence(&emitted));
    outcomes.push(feasibility_under_complexity(&classes));
    outcomes.push(complexity_ordering(&classes));
    outcomes.push(determinism());
    outcomes.push(geometry_accuracy());
    outcomes.push(sphere_sanity());
    outcomes.push(format_round_trips(&classes));
    outcomes.sort_by_key(|o| o.id);

    println!();
    for o in &outcomes {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] {} {}: {}", o.id, o.title, o.detail);
    }
    let failed = outcomes.iter().filter(|o| !o.pass).count();
    println!(
        "\nacceptance: {} passed, {failed} failed ({:.1?})",
        outcomes.len() - failed,
        started.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
