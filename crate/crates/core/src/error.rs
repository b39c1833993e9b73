use thiserror::Error;

use crate::report::Report;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {left} vs {right}")]
    Shape {
        op: &'static str,
        left: String,
        right: String,
    },
    #[error("map is not idempotent: entry ({row}, {col}) of e∘e is {lhs}, of e is {rhs}")]
    NotIdempotent {
        row: usize,
        col: usize,
        lhs: String,
        rhs: String,
    },
    #[error("map is singular")]
    Singular,
    #[error("antipode missing")]
    MissingAntipode,
    #[error("incompatible actions: {0}")]
    IncompatibleActions(String),
    #[error("{stage} failed at {}", .report.first_failure_name().unwrap_or("?"))]
    Failed { stage: String, report: Box<Report> },
    #[error("subset {which} is not a wide subgroupoid: {reason}")]
    NotWide { which: String, reason: String },
    #[error("factorization is not exact: arrow {arrow} has {count} decompositions")]
    NotExact { arrow: String, count: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn shape(op: &'static str, left: (usize, usize), right: (usize, usize)) -> Self {
        Error::Shape {
            op,
            left: format!("{}x{}", left.0, left.1),
            right: format!("{}x{}", right.0, right.1),
        }
    }

    pub(crate) fn failed(stage: impl Into<String>, report: Report) -> Self {
        Error::Failed {
            stage: stage.into(),
            report: Box::new(report),
        }
    }

    /// The report carried by a failed stage, if any.
    pub fn report(&self) -> Option<&Report> {
        match self {
            Error::Failed { report, .. } => Some(report),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
