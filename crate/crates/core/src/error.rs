use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("quotient is infinite: invariant factor {index} is zero")]
    InfiniteQuotient { index: usize },

    #[error("no presentation is attached to the group")]
    NoPresentation,

    #[error("degree {0} is not supported here")]
    UnsupportedDegree(usize),

    #[error("bad generator index: {0}")]
    BadIndex(String),

    #[error("cochain and chain live on different groups")]
    GroupMismatch,

    #[error("cochain is not a cocycle: {witness}")]
    NotACocycle { witness: String },

    #[error("alternation is only supported up to degree 4, got {0}")]
    DegreeTooHigh(usize),

    #[error("not a character: {0}")]
    NotACharacter(String),

    #[error("function does not satisfy the lattice-lift identities: {0}")]
    NotLemmaForm(String),

    #[error("weight lattice modulo root lattice is infinite")]
    NonFiniteCenter,

    #[error("coset representatives do not form a transversal: {0}")]
    BadTransversal(String),

    #[error("twist is not in the kernel of Theta: class {0}")]
    NotInKernel(String),

    #[error("q must be a positive rational different from 1, got {0}")]
    BadQ(String),

    #[error("incompatible operands: {0}")]
    Mismatch(String),

    #[error("indices {indices:?} do not satisfy the side conditions of relation {relation}")]
    BadIndices { relation: String, indices: Vec<usize> },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
