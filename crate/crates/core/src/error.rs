use thiserror::Error;

use crate::flags::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("image table is not a bijection of 0..{degree}")]
    NotAPermutation { degree: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("cycle notation: {0}")]
    CycleSyntax(String),

    #[error("group closure exceeds {cap} elements")]
    ClosureOverflow { cap: usize },

    #[error("invalid flag system: {0}")]
    InvalidFlagSystem(ValidationReport),

    #[error("map has no boundary")]
    NoBoundary,

    #[error("map is already orientable with empty boundary; its double is disconnected")]
    AlreadyOrientableClosed,

    #[error("map is not orientable with empty boundary")]
    NotOrientableClosed,

    #[error("element {element} does not commute with r{generator} at flag {flag}")]
    NotAnAutomorphism {
        element: usize,
        generator: usize,
        flag: usize,
    },

    #[error("automorphism set is not closed under composition")]
    NotClosed,

    #[error("operation requires a map, found a hypermap")]
    HypermapInput,

    #[error("operation requires a map with empty boundary")]
    BorderedInput,

    #[error("{what} requires {requirement}, got {value}")]
    BadParameter {
        what: &'static str,
        requirement: &'static str,
        value: i64,
    },

    #[error("glide {glide} does not act on the {lattice} lattice")]
    LatticeMismatch {
        glide: &'static str,
        lattice: &'static str,
    },

    #[error("generator r{0} is not an involution")]
    NotInvolution(usize),

    #[error("generators do not generate the declared group: {0}")]
    NotGenerating(String),

    #[error("permutation is not an element of the group")]
    NotInGroup,

    #[error("degenerate dihedral subgroup <r{0}, r{1}>")]
    DegenerateSubgroup(usize, usize),

    #[error("the regular map of this model is not orientable with empty boundary")]
    ModelNotOrientable,

    #[error("malformed map file: {0}")]
    MalformedJson(#[from] serde_json::Error),

    #[error("map file declares {declared} flags but r{generator} has {found} entries")]
    FlagCountMismatch {
        declared: usize,
        generator: usize,
        found: usize,
    },
}
