use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("relation must be nonconstant")]
    ConstantRelation,
    #[error("leading coefficient {0} of the relation is not a unit")]
    NonUnitLeadingCoefficient(String),
    #[error("division by non-unit literal {0}")]
    NonUnitDivision(String),
    #[error("ring is infinite: {0}")]
    InfiniteRing(String),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("nonzero diagonal entry at ({0},{0})")]
    NonzeroDiagonal(usize),
    #[error("skew symmetry violated at ({0},{1})")]
    NotSkew(usize, usize),
    #[error("pfaffian needs even size, got {0}")]
    OddSize(usize),
    #[error("invalid elementary letter ({i},{j}) for size {size}")]
    BadLetter { i: usize, j: usize, size: usize },
    #[error("row is not unimodular with the given witness: <v,w> = {0}")]
    NotUnimodular(String),
    #[error("row is not unimodular")]
    NoWitness,
    #[error("determinant is {0}, expected 1")]
    DeterminantNotOne(String),
    #[error("pfaffian is {0}, expected 1")]
    PfaffianNotOne(String),
    #[error("pfaffian {0} is not a unit")]
    PfaffianNotUnit(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("search bound exceeded: {0}")]
    SearchBound(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("io: {0}")]
    Io(String),
}
