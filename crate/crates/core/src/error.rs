//! Error types shared across the solver library.

use thiserror::Error;

/// Where in the grid/time loop a failure occurred. Attached to admissibility
/// and mesh errors so aborted runs point at the offending node.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Location {
    pub node: [usize; 3],
    pub time: f64,
    pub stage: usize,
}

impl std::fmt::Display for Location {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "node ({}, {}, {}) at t = {:.6e}, stage {}",
            self.node[0], self.node[1], self.node[2], self.time, self.stage
        )
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("inadmissible state: {reason} (value {value:.6e}){}", fmt_loc(.location))]
    Inadmissible {
        reason: String,
        value: f64,
        location: Option<Location>,
    },

    #[error("logarithmic mean requires positive arguments, got ({0:.6e}, {1:.6e})")]
    LogMeanDomain(f64, f64),

    #[error("degenerate metric vector at interface (all spatial metrics zero)")]
    DegenerateMetric,

    #[error("tangled mesh: nonpositive Jacobian {value:.6e}{}", fmt_loc(.location))]
    TangledMesh {
        value: f64,
        location: Option<Location>,
    },

    #[error("unsupported order parameter w = {0}, expected 1, 2 or 3")]
    UnsupportedOrder(usize),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn fmt_loc(loc: &Option<Location>) -> String {
    match loc {
        Some(l) => format!(" at {l}"),
        None => String::new(),
    }
}

impl Error {
    pub fn inadmissible(reason: impl Into<String>, value: f64) -> Self {
        Error::Inadmissible {
            reason: reason.into(),
            value,
            location: None,
        }
    }

    /// Attach grid/time context to an admissibility or mesh error.
    pub fn at(self, location: Location) -> Self {
        match self {
            Error::Inadmissible { reason, value, .. } => Error::Inadmissible {
                reason,
                value,
                location: Some(location),
            },
            Error::TangledMesh { value, .. } => Error::TangledMesh {
                value,
                location: Some(location),
            },
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
