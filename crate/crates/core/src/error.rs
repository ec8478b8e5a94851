use thiserror::Error;

use crate::complex::Cell;
use crate::matrix::IntegerMatrix;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid cell: {0}")]
    InvalidCell(String),

    #[error("duplicate cell {0}")]
    DuplicateCell(Cell),

    #[error("cell not in complex: {0}")]
    CellNotInComplex(Cell),

    #[error("{cells} cells but {dims} dimensions")]
    DimsLengthMismatch { cells: usize, dims: usize },

    #[error("dimension not monotone: face {face} has dim {face_dim} but coface {coface} has dim {coface_dim}")]
    NonMonotoneDims {
        face: Cell,
        face_dim: usize,
        coface: Cell,
        coface_dim: usize,
    },

    #[error("set is not closed: {cell} is missing its face {missing_face}")]
    NotClosed { cell: Cell, missing_face: Cell },

    #[error("set is not open: {cell} is missing its coface {missing_coface}")]
    NotOpen { cell: Cell, missing_coface: Cell },

    #[error("set is neither open nor closed in the complex")]
    NeitherOpenNorClosed,

    /// `d·d ≠ 0`; the offending product is attached for inspection.
    #[error("not a Δ-set: d^2 != 0 ({} nonzero entries)", .d_squared.count_nonzero())]
    NotDeltaSet { d_squared: IntegerMatrix },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("form is not harmonic: L f != 0")]
    NotHarmonic,

    #[error("form has length {got}, complex has {expected} cells")]
    FormLength { expected: usize, got: usize },

    #[error("invalid sphere matching: {0}")]
    InvalidMatching(String),

    #[error("unknown generator kind `{0}`")]
    UnknownGenerator(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    /// The projection picture disagrees with `b(K) + b(U) - b(G)`.
    #[error("interface nullity {projection} disagrees with b(K)+b(U)-b(G) = {difference}")]
    InterfaceMismatch {
        projection: String,
        difference: String,
    },
}
