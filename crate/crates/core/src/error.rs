use thiserror::Error;

use crate::standardize::StandardizationResult;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("matrix is not unimodular: {0}")]
    NotUnimodular(String),

    #[error("matrix is not symmetric: {0}")]
    NotSymmetric(String),

    #[error("lattice is not a sublattice: {0}")]
    NotSublattice(String),

    #[error("not a direct summand: {0}")]
    NotDirectSummand(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("chain condition rho*pi = 0 violated")]
    ChainConditionViolated,

    #[error("arcs are required when l = {0} > 0")]
    MissingArcs(usize),

    #[error("diagram is not in standard position: {0}")]
    NotStandardPosition(String),

    #[error("displacement does not decompose over alpha + eta: {0}")]
    DecompositionFailed(String),

    #[error("symmetry condition violated: {0}")]
    SymmetryViolated(String),

    #[error("H_1(X) is not zero (free rank {free}, torsion {torsion:?})")]
    H1NotZero { free: usize, torsion: Vec<String> },

    /// `Q` has `|det| != 1`, so `H_1(∂X) != 0`; the pipeline result up to
    /// the orthogonal splitting is carried along.
    #[error("intersection form block is not unimodular (det = {det})")]
    QNotUnimodular { det: String, partial: Box<StandardizationResult> },

    #[error("diagram cannot be normalized: {0}")]
    NotNormalizable(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { location: location.into(), message: message.into() }
    }
}
