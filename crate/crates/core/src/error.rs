use thiserror::Error;

use crate::field::FieldError;

/// Every failure the geometric kernel can report.
///
/// Variant names double as the error names shown by the script evaluator,
/// so they are stable.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("all homogeneous coordinates are zero")]
    ZeroVector,
    #[error("join/meet of identical arguments")]
    IdenticalArguments,
    #[error("points are not collinear")]
    NotCollinear,
    #[error("cross-ratio is 0/0")]
    DegenerateQuadruple,
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("couple is dual")]
    DualCouple,
    #[error("side is both nil and null")]
    NilNullSide,
    #[error("reflection in a null point")]
    NullMirror,
    #[error("side is nil, null or has coincident members")]
    DegenerateSide,
    #[error("vertex is nil, null or has coincident members")]
    DegenerateVertex,
    #[error("null point or line where a non-null one is required")]
    NullArgument,
    #[error("points are collinear")]
    CollinearPoints,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("zero spread")]
    ZeroSpread,
    #[error("inconsistent data")]
    Inconsistent,
    #[error("vanishing denominator")]
    DegenerateDenominator,
    #[error("triangle is dual")]
    DualTriangle,
    #[error("midpoints absent: {0}")]
    MidpointsAbsent(String),
    #[error("double triangle is degenerate")]
    DegenerateDouble,
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("circle center is null")]
    NullCenter,
    #[error("midlines absent")]
    MidlinesAbsent,
    #[error("couple is degenerate")]
    DegenerateCouple,
    #[error("no intersection in this field")]
    NoIntersection,
    #[error("line is not interior")]
    ExteriorLine,
    #[error("join does not pass through two null points")]
    NoNullPointsOnJoin,
    #[error("auxiliary choices are degenerate")]
    DegenerateAux,
    #[error("generator exhausted its rejection budget")]
    GeneratorExhausted,
}

impl GeomError {
    pub fn name(&self) -> &'static str {
        use GeomError::*;
        match self {
            Field(FieldError::DivisionByZero) => "DivisionByZero",
            Field(FieldError::MixedContexts(..)) => "MixedContexts",
            Field(FieldError::CharacteristicTwo) => "CharacteristicTwo",
            Field(FieldError::NotPrime(_)) => "NotPrime",
            Field(FieldError::Malformed(_)) => "Malformed",
            ZeroVector => "ZeroVector",
            IdenticalArguments => "IdenticalArguments",
            NotCollinear => "NotCollinear",
            DegenerateQuadruple => "DegenerateQuadruple",
            DegenerateConfiguration(_) => "DegenerateConfiguration",
            DualCouple => "DualCouple",
            NilNullSide => "NilNullSide",
            NullMirror => "NullMirror",
            DegenerateSide => "DegenerateSide",
            DegenerateVertex => "DegenerateVertex",
            NullArgument => "NullArgument",
            CollinearPoints => "CollinearPoints",
            HypothesisViolated(_) => "HypothesisViolated",
            ZeroSpread => "ZeroSpread",
            Inconsistent => "Inconsistent",
            DegenerateDenominator => "DegenerateDenominator",
            DualTriangle => "DualTriangle",
            MidpointsAbsent(_) => "MidpointsAbsent",
            DegenerateDouble => "DegenerateDouble",
            UnknownTheorem(_) => "UnknownTheorem",
            NullCenter => "NullCenter",
            MidlinesAbsent => "MidlinesAbsent",
            DegenerateCouple => "DegenerateCouple",
            NoIntersection => "NoIntersection",
            ExteriorLine => "ExteriorLine",
            NoNullPointsOnJoin => "NoNullPointsOnJoin",
            DegenerateAux => "DegenerateAux",
            GeneratorExhausted => "GeneratorExhausted",
        }
    }
}

pub type Result<T, E = GeomError> = std::result::Result<T, E>;
