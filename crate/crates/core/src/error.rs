use num_bigint::BigInt;
use thiserror::Error;

use crate::vector::IntVec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    RaggedMatrix { row: usize, expected: usize, found: usize },

    #[error("generator {index} is the zero vector")]
    ZeroGenerator { index: usize },

    #[error("semigroup is not pointed: {}", format_witness(.witness))]
    NotPointed { witness: Vec<BigInt> },

    #[error("grading {w} is not strictly positive on generator {generator}")]
    InvalidGrading { w: IntVec, generator: IntVec },

    #[error("not a numerical semigroup: {0}")]
    NotNumerical(String),

    #[error("generator {0} lies in the semigroup of the other generators")]
    NotMinimalGenerators(BigInt),

    #[error("Möbius table is bound to a different semigroup")]
    TableMismatch,

    #[error("lattice is not saturated (elementary divisors {divisors:?})")]
    NotSaturated { divisors: Vec<BigInt> },

    #[error("series gradings or dimensions differ")]
    GradingMismatch,

    #[error("factor t^{0} does not have positive degree")]
    NonPositiveDegreeFactor(IntVec),

    #[error("series term t^{0} of nonpositive degree blocks graded inversion")]
    NonPositiveDegreeTerm(IntVec),

    #[error("constant term {0} is not 1")]
    NonUnitConstantTerm(BigInt),

    #[error("integers {0} and {1} are not coprime")]
    NotCoprime(BigInt, BigInt),

    #[error("{0} is not invertible modulo {1}")]
    NotInvertible(BigInt, BigInt),

    #[error("inconsistent family data: {0}")]
    BadFamilyData(String),

    #[error("{0} does not divide {1}")]
    NotDivisible(BigInt, BigInt),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown label {0:?}")]
    UnknownLabel(String),

    #[error("assignment missing for fragment element {0:?}")]
    IncompleteAssignment(String),

    #[error("invalid poset fragment: {0}")]
    InvalidFragment(String),

    #[error("i/o error: {0}")]
    Io(String),
}

fn format_witness(witness: &[BigInt]) -> String {
    let parts: Vec<String> = witness.iter().map(|c| c.to_string()).collect();
    format!("nonnegative dependency ({}) sums generators to zero", parts.join(", "))
}

pub type Result<T> = std::result::Result<T, Error>;
