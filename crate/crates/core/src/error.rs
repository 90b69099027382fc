use thiserror::Error;

use crate::quiver::DimVector;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,

    #[error("expected dimension vector {expected}, found {found}")]
    WrongDim {
        expected: DimVector,
        found: DimVector,
    },

    #[error("dimension vector {0} is not of the form (n, 2n+2, n)")]
    WrongShape(DimVector),

    #[error("representation is not globally surjective (rank of the phi-matrix is {rank})")]
    NotGloballySurjective { rank: usize },

    #[error("quiver relations violated at ({i},{j})")]
    RelationsViolated { i: usize, j: usize },

    #[error("all homogeneous coordinates are zero")]
    AllZero,

    #[error("monad composite beta*alpha does not vanish")]
    CompositeNonzero,

    #[error("instanton generation failed after {attempts} attempts")]
    GenerationFailed { attempts: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}
