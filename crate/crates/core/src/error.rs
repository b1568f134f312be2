use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Only the primes 2, 3, 5 and 7 are supported.
    UnsupportedModulus(u32),
    ModulusMismatch {
        left: u8,
        right: u8,
    },
    /// Attempted to invert zero.
    ZeroInverse,
    ZeroVector,
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// Two equal points do not determine a line.
    DegenerateLine,
    NotALine {
        rank: usize,
    },
    EmptyInput,
    SingularMatrix,
    OutOfRange {
        what: &'static str,
        value: usize,
    },
    /// Search gave up after visiting this many nodes.
    BudgetExceeded {
        nodes: u64,
    },
    Overflow,
    /// Malformed row in the isomorphism table fixture (1-based row number).
    TableRow {
        row: usize,
        reason: String,
    },
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedModulus(q) => {
                write!(f, "unsupported field order {q} (expected 2, 3, 5 or 7)")
            }
            Error::ModulusMismatch { left, right } => {
                write!(
                    f,
                    "field elements from GF({left}) and GF({right}) cannot be combined"
                )
            }
            Error::ZeroInverse => f.write_str("zero has no multiplicative inverse"),
            Error::ZeroVector => f.write_str("the zero vector is not a projective point"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "expected a vector of length {expected}, found {found}")
            }
            Error::DegenerateLine => f.write_str("a line needs two distinct points"),
            Error::NotALine { rank } => write!(f, "subspace of vector rank {rank} is not a line"),
            Error::EmptyInput => f.write_str("empty input"),
            Error::SingularMatrix => f.write_str("matrix is singular"),
            Error::OutOfRange { what, value } => write!(f, "{what} = {value} is out of range"),
            Error::BudgetExceeded { nodes } => {
                write!(f, "search budget exceeded after {nodes} nodes")
            }
            Error::Overflow => f.write_str("arithmetic overflow"),
            Error::TableRow { row, reason } => write!(f, "isomorphism table row {row}: {reason}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
