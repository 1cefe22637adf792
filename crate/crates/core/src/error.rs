use std::fmt;

use thiserror::Error;

/// The algebraic law or well-formedness rule that a validation found broken.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    UnknownId,
    DuplicateId,
    NonParallelBoundary,
    MissingEntry,
    SpuriousEntry,
    BoundaryMismatch,
    IdentityShape,
    UnitLaw,
    Associativity,
    WhiskerFunctoriality,
    WhiskerUnit,
    WhiskerAssociativity,
    Interchange,
    Preservation,
    TransformationIdentity,
    TransformationMarking,
    TransformationComposition,
    TransformationCompatibility,
    ModificationCoherence,
    MarkingIdentities,
    ContractionCenter,
    ContractionIdempotence,
    ContractionFunctoriality,
    ContractionCompatibility,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Law::UnknownId => "unknown-id",
            Law::DuplicateId => "duplicate-id",
            Law::NonParallelBoundary => "non-parallel-boundary",
            Law::MissingEntry => "missing-entry",
            Law::SpuriousEntry => "spurious-entry",
            Law::BoundaryMismatch => "boundary-mismatch",
            Law::IdentityShape => "identity-shape",
            Law::UnitLaw => "unit-law",
            Law::Associativity => "associativity",
            Law::WhiskerFunctoriality => "whisker-functoriality",
            Law::WhiskerUnit => "whisker-unit",
            Law::WhiskerAssociativity => "whisker-associativity",
            Law::Interchange => "interchange",
            Law::Preservation => "preservation",
            Law::TransformationIdentity => "transformation-identity",
            Law::TransformationMarking => "transformation-marking",
            Law::TransformationComposition => "transformation-composition",
            Law::TransformationCompatibility => "transformation-compatibility",
            Law::ModificationCoherence => "modification-coherence",
            Law::MarkingIdentities => "marking-identities",
            Law::ContractionCenter => "contraction-center",
            Law::ContractionIdempotence => "contraction-idempotence",
            Law::ContractionFunctoriality => "contraction-functoriality",
            Law::ContractionCompatibility => "contraction-compatibility",
        };
        f.write_str(name)
    }
}

/// First violated law, with the concrete cells that witness it.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("{law}: {detail}")]
pub struct LawViolation {
    pub law: Law,
    pub detail: String,
}

pub(crate) fn violation(law: Law, detail: impl Into<String>) -> LawViolation {
    LawViolation { law, detail: detail.into() }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CatError {
    #[error(transparent)]
    Law(#[from] LawViolation),
    #[error("unknown {sort} id `{id}`")]
    Unknown { sort: &'static str, id: String },
    #[error("size cap exceeded while building {construction}: {count} {sort} over cap {cap}")]
    SizeCap { construction: &'static str, sort: &'static str, count: usize, cap: usize },
    #[error("{0}")]
    Input(String),
}

impl CatError {
    pub fn unknown(sort: &'static str, id: impl Into<String>) -> Self {
        CatError::Unknown { sort, id: id.into() }
    }

    pub fn is_size_cap(&self) -> bool {
        matches!(self, CatError::SizeCap { .. })
    }
}
