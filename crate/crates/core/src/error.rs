use thiserror::Error;

/// Domain errors raised by diagram construction and the symmetric-function layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkewError {
    #[error("cell set is not a skew diagram: {0}")]
    NotSkew(String),
    #[error("diagram is not a ribbon: {0}")]
    NotRibbon(String),
    #[error("diagram is disconnected")]
    Disconnected,
    #[error("ribbon does not protrude: {0}")]
    ProtrusionFailure(String),
    #[error("construction not defined: {0}")]
    NotDefined(String),
    #[error("m-intersection does not exist: {0}")]
    IntersectionUndefined(String),
    #[error("m-intersection is trivial: {0}")]
    TrivialIntersection(String),
    #[error("invalid nesting: {0}")]
    InvalidNesting(String),
    #[error("invalid outside decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("weight mismatch: diagram has {diagram} cells, partition has weight {partition}")]
    WeightMismatch { diagram: usize, partition: usize },
    #[error("fixture mismatch: {0}")]
    FixtureMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl SkewError {
    /// Stable variant name, used in machine-readable error output.
    pub fn name(&self) -> &'static str {
        match self {
            SkewError::NotSkew(_) => "NotSkew",
            SkewError::NotRibbon(_) => "NotRibbon",
            SkewError::Disconnected => "Disconnected",
            SkewError::ProtrusionFailure(_) => "ProtrusionFailure",
            SkewError::NotDefined(_) => "NotDefined",
            SkewError::IntersectionUndefined(_) => "IntersectionUndefined",
            SkewError::TrivialIntersection(_) => "TrivialIntersection",
            SkewError::InvalidNesting(_) => "InvalidNesting",
            SkewError::InvalidDecomposition(_) => "InvalidDecomposition",
            SkewError::WeightMismatch { .. } => "WeightMismatch",
            SkewError::FixtureMismatch(_) => "FixtureMismatch",
            SkewError::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, SkewError>;
