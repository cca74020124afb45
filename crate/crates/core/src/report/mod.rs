//! Plot and convergence-curve output.

mod csv;
mod svg;

pub use self::csv::{write_convergence_csv, write_curves_csv, CurveRun, CONVERGENCE_HEADER, CURVES_HEADER};
pub use self::svg::{render_svg, CANVAS_SIZE};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReportError {
    #[error("path endpoints do not match the scenario start and goal")]
    EndpointMismatch,
    #[error("convergence history is empty")]
    EmptyHistory,
}
