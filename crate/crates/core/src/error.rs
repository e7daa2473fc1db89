use thiserror::Error;

use crate::scales::ScaleFamily;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("duplicate {kind} label {label:?}")]
    DuplicateLabel { kind: &'static str, label: String },

    #[error("incidence matrix is {rows}x{cols} but the context has {objects} objects and {attributes} attributes")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        objects: usize,
        attributes: usize,
    },

    #[error("{family} scale needs size at least {min}, got {size}")]
    SizeBelowMinimum {
        family: ScaleFamily,
        size: usize,
        min: usize,
    },

    #[error("objects {first} and {second} have identical rows on the chosen domain; clarify the context first")]
    UnclarifiedDomain { first: usize, second: usize },

    #[error("apposition needs identical object lists")]
    ObjectMismatch,

    #[error("covering leaves {uncovered} of {total} extents uncovered")]
    IncompleteCovering { uncovered: usize, total: usize },

    #[error("{what} is {value}, above the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("no label for object index {0}")]
    UnresolvableLabel(usize),

    #[error("invalid scale spec {0:?}")]
    InvalidScaleSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
