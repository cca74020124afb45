use std::fmt::Write as _;

use super::ReportError;
use crate::numfmt::sig6;
use crate::planner::HistoryEntry;

pub const CONVERGENCE_HEADER: &str = "iteration,best_total,best_length";
pub const CURVES_HEADER: &str = "class,seed,iteration,best_total,best_length";

/// `iteration,best_total,best_length`, one row per entry, LF endings.
pub fn write_convergence_csv(history: &[HistoryEntry]) -> Result<String, ReportError> {
    if history.is_empty() {
        return Err(ReportError::EmptyHistory);
    }
    let mut out = String::with_capacity(32 * (history.len() + 1));
    out.push_str(CONVERGENCE_HEADER);
    out.push('\n');
    for h in history {
        let _ = writeln!(out, "{},{},{}", h.iteration, sig6(h.best_total), sig6(h.best_length));
    }
    Ok(out)
}

/// One optimization run in a multi-class, multi-seed study.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveRun {
    pub class: String,
    pub seed: u64,
    pub history: Vec<HistoryEntry>,
}

/// Concatenates several runs into one long-format table.
pub fn write_curves_csv(runs: &[CurveRun]) -> Result<String, ReportError> {
    let mut out = String::new();
    out.push_str(CURVES_HEADER);
    out.push('\n');
    for run in runs {
        if run.history.is_empty() {
            return Err(ReportError::EmptyHistory);
        }
        for h in &run.history {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                run.class,
                run.seed,
                h.iteration,
                sig6(h.best_total),
                sig6(h.best_length)
            );
        }
    }
    Ok(out)
}
