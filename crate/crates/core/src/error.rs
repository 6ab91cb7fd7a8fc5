use alloc::string::String;

use crate::cell::Cell;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("position {position} is out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("polygon needs n >= 3 and 1 < t <= n, got n = {n}, t = {t}")]
    InvalidPolygon { n: usize, t: usize },
    #[error("splitting needs 1 < t < n, got n = {n}, t = {t}")]
    NoSplit { n: usize, t: usize },
    #[error("diagonal arity must be at least 2, got {0}")]
    InvalidArity(usize),
    #[error("relation index must be at least 2, got {0}")]
    InvalidRelationIndex(usize),
    #[error("cell {0} is not part of this complex")]
    UnknownCell(Cell),
    #[error("value on {cell} is not homogeneous of the expected degree {expected} and arity {arity}")]
    Inhomogeneous {
        cell: Cell,
        expected: i64,
        arity: usize,
    },
    #[error("unsupported surface: {0}")]
    UnsupportedSurface(String),
    #[error("invalid edge word: {0}")]
    InvalidWord(String),
    #[error("projection is not well defined on {cell}: {detail}")]
    IllDefinedProjection { cell: Cell, detail: String },
    #[error("boundary does not vanish mod 2 on {cell}: {boundary}")]
    BoundaryNotZeroMod2 { cell: Cell, boundary: String },
    #[error("scheme is not compatible with its vertex poset: {0}")]
    NotPosetCompatible(String),
}

pub type Result<T> = core::result::Result<T, Error>;
