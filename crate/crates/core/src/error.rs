use thiserror::Error;

use crate::shapes::{Cell, Partition};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts {0:?} are not weakly decreasing")]
    NotPartition(Vec<usize>),

    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: Partition, outer: Partition },

    #[error("row {row} has {got} entries but the shape needs {expected}")]
    RowLength {
        row: usize,
        expected: usize,
        got: usize,
    },

    #[error("entry {entry} at {cell:?} is outside the alphabet [1, {bound}]")]
    EntryOutOfRange { cell: Cell, entry: u32, bound: u32 },

    #[error("tableau is not semistandard at {0:?}")]
    NotSemistandard(Cell),

    #[error("operation needs a straight-shape tableau, got inner shape {0}")]
    NotStraight(Partition),

    #[error("column {0:?} is not strictly increasing")]
    NotColumn(Vec<u32>),

    #[error("cell {0:?} is not the bottom cell of a column")]
    NotColumnBottom(Cell),

    #[error("{outer}/{inner} is not a vertical strip")]
    NotVerticalStrip { inner: Partition, outer: Partition },

    #[error("tableau is not symplectic: first fail at row {0}")]
    NotSymplectic(usize),

    #[error("not a recording tableau: {0} fails")]
    NotRecording(&'static str),

    #[error("not a Littlewood-Richardson-Sundaram tableau: condition {0} fails")]
    NotLrs(&'static str),

    #[error("string decomposition failed: {0}")]
    Strings(String),

    #[error("rectangle {rows}x{cols} does not contain the shape {shape}")]
    RectangleTooSmall {
        rows: usize,
        cols: usize,
        shape: Partition,
    },

    #[error("no expansion exists: {0}")]
    NoExpansion(String),

    #[error("entry {entry} exceeds the alphabet bound {bound}")]
    BoundExceeded { entry: u32, bound: u32 },

    #[error("expansion step {step} failed: {source}")]
    Step {
        step: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },
}
