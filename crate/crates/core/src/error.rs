use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("pairing matrix is degenerate")]
    DegeneratePairing,
    #[error("tree error: {0}")]
    Tree(String),
    #[error("invalid generator space: {0}")]
    GenSpace(String),
    #[error("cannot normalize: {0}")]
    Normalize(String),
    #[error("{0} is not available for nonsymmetric presentations")]
    NonsymmetricUnsupported(&'static str),
    #[error("generator map is not equivariant")]
    NotEquivariant,
    #[error("generator map is not invertible")]
    Singular,
    #[error("generator map: {0}")]
    Map(String),
    #[error(
        "trisuccessor needs the Koszul dual to have nonzero relations (relation closure is the whole weight-3 space)"
    )]
    TrisuccessorPrecondition,
    #[error("closure of {0} is not stable under the symmetric group")]
    UnstableClosure(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("binding error: {0}")]
    Binding(String),
    #[error("unknown operation `{0}`")]
    UnknownOp(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("scalar conversion failed for {0}")]
    Conversion(String),
    #[error("i/o error: {0}")]
    Io(String),
}
