use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("attack ({attacker}, {target}) refers to an argument outside 1..={n}")]
    AttackOutOfRange { attacker: usize, target: usize, n: usize },

    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("malformed argument set: {0}")]
    MalformedSet(String),

    #[error("set is not conflict-free: {attacker} attacks {target}")]
    NotConflictFree { attacker: usize, target: usize },

    #[error("set is not admissible: {attacker} attacks {target} and is not counter-attacked")]
    NotAdmissible { attacker: usize, target: usize },

    #[error("oracle refuses framework with {n} arguments (bound {bound})")]
    OracleBound { n: usize, bound: usize },

    #[error("attack probability {0} outside [0, 1]")]
    InvalidProbability(f64),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
