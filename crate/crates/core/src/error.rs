use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid modulus {0}: expected an odd prime")]
    Modulus(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("polynomial is not symmetric under m -> 1/m; residue {residue}")]
    Symmetry { residue: String },
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("invalid fraction: {0}")]
    Fraction(String),
    #[error("presentation is not a knot group: {0}")]
    NotKnotGroup(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("consistency check failed: {0}")]
    Consistency(String),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("matrix is not unimodular")]
    Determinant,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree; factor it first")]
    NotSquarefree,
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
