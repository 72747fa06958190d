use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarMismatch { left: usize, right: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    /// Raised by exact division when the divisor does not divide the dividend.
    /// Inside the Alexander pipeline this always indicates a bug.
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },

    #[error("arity mismatch: expected {expected}, found {found}")]
    Arity { expected: usize, found: usize },

    #[error("{0} is not a unit and cannot be raised to a negative power")]
    NotInvertible(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("torus-knot parameters ({p}, {q}) are not coprime")]
    NotCoprime { p: i64, q: i64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("closure is not a knot ({components} components)")]
    NotAKnot { components: usize },

    #[error("braid has no strands")]
    EmptyClosure,

    #[error("presentation carries no component coloring")]
    MissingColoring,

    #[error("presentation carries no meridian/longitude for component {0}")]
    MissingPeripheral(usize),

    #[error("index {index} out of range (length {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("fiber class is disjoint from component {0}: both slope coefficients vanish")]
    FiberDisjoint(usize),

    #[error("the product formula needs at least two link components, got {0}")]
    TooFewComponents(usize),

    #[error("enumeration needs {needed} candidate assignments, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),
}

impl Error {
    /// Input could not be read at all, as opposed to a well-formed input the
    /// mathematics rejects.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}
