use thiserror::Error;

use crate::ambitoric::Violation;
use crate::exactmath::MathError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Math(#[from] MathError),
    #[error("singular point: {0}")]
    Singular(String),
    #[error("point not in the interior of the domain: {0}")]
    NotInterior(String),
    #[error("momentum ({0}) is not in the image of the domain")]
    OutOfImage(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("degenerate facet {0}: derivative vanishes at the endpoint")]
    DegenerateFacet(String),
    #[error("wrong boundary orientation: {0}")]
    Orientation(String),
    #[error("data is not extremal: {}", .0.join("; "))]
    NotExtremal(Vec<String>),
    #[error("invalid data: {}", .0.iter().map(|v| v.detail.as_str()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error("degenerate polytope: {0}")]
    DegeneratePolytope(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("crease does not meet the polytope interior")]
    CreaseMissesPolytope,
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
