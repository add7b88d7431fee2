use thiserror::Error;

/// Errors raised by constructors, algorithms and parsers in this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("coefficient overflow in checked 64-bit arithmetic")]
    Overflow,

    #[error("negative structure constant {value} at ({row}, {col}) coefficient {basis}")]
    NegativeCoefficient {
        row: String,
        col: String,
        basis: String,
        value: i128,
    },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("unknown catalog `{0}`")]
    UnknownCatalog(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("{what}: carrier size {size} exceeds bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("semimodules are defined over different semirings")]
    SemiringMismatch,

    #[error("operation requires a semiring with a finite basis")]
    NotBased,

    #[error("not a congruence: {0}")]
    NotACongruence(String),

    #[error("invalid semimodule: {0}")]
    InvalidSemimodule(String),

    #[error("not a left cell: {0:?}")]
    NotALeftCell(Vec<usize>),

    #[error("two-sided cell {0:?} is nilpotent")]
    NilpotentCell(Vec<String>),

    #[error("every two-sided cell annihilates the semimodule")]
    AllAnnihilated,

    #[error("apex is not unique: maximal non-annihilating cells {0:?}")]
    ApexNotUnique(Vec<usize>),

    #[error("apex cell {0:?} is nilpotent")]
    ApexNotIdempotent(Vec<String>),

    #[error("two-sided cell {0:?} annihilates the semimodule only partially")]
    MixedAnnihilation(Vec<String>),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
