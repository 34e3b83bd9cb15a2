use std::io;

use thiserror::Error;

use crate::census::{TriangleType, WedgeType};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A ratio whose denominator is zero (empty graph, empty wedge group, no triangles).
    #[error("undefined value: {0}")]
    Undefined(String),

    #[error("graph has no {0} wedges")]
    NoWedges(WedgeType),

    #[error("{psi} wedges never occur in {tau} triangles")]
    IncompatibleTypes { psi: WedgeType, tau: TriangleType },

    #[error("vertices do not form a triangle")]
    NotATriangle,

    #[error("brute-force census refused: {n} vertices exceeds cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
