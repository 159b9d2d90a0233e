use core::fmt;

/// Errors raised by the algebraic core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A one-line word repeats a value. `index` is 1-based.
    DuplicateValue { index: usize, value: usize },
    /// A one-line word has an entry outside `1..=n`. `index` is 1-based.
    ValueOutOfRange { index: usize, value: usize, n: usize },
    EmptyWord,
    /// Transposition endpoints must satisfy `1 <= a < b`.
    InvalidTransposition { a: usize, b: usize },
    /// `S_0` has nothing to enumerate.
    EmptySymmetricGroup,
    /// Bigrassmannian parameters need `r < min(p, q)`.
    InvalidBigrassmannian { r: usize, p: usize, q: usize },
    /// A grid of size `given` cannot hold a permutation of size `needed`.
    GridTooSmall { needed: usize, given: usize },
    /// Degree of the zero polynomial.
    ZeroPolynomial,
    /// The identity has no descent, so no transition step applies.
    NoDescent,
    /// The ambient polynomial ring has no variables.
    EmptyAmbient,
    /// The brute-force oracle refused a problem above its size limits.
    TooLarge { what: &'static str, count: u128, limit: u128 },
    /// A minor uses a matrix entry that is not an ambient variable.
    VariableOutsideAmbient { row: usize, col: usize },
    Parse(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DuplicateValue { index, value } => {
                write!(f, "duplicate value {value} at index {index}")
            }
            Error::ValueOutOfRange { index, value, n } => {
                write!(f, "value {value} at index {index} is outside 1..={n}")
            }
            Error::EmptyWord => f.write_str("empty one-line word"),
            Error::InvalidTransposition { a, b } => {
                write!(f, "invalid transposition ({a}, {b}): need 1 <= a < b")
            }
            Error::EmptySymmetricGroup => f.write_str("n must be at least 1"),
            Error::InvalidBigrassmannian { r, p, q } => {
                write!(f, "bigrassmannian needs r < min(p, q), got r={r}, p={p}, q={q}")
            }
            Error::GridTooSmall { needed, given } => {
                write!(f, "grid size {given} is smaller than the permutation size {needed}")
            }
            Error::ZeroPolynomial => f.write_str("the zero polynomial has no degree"),
            Error::NoDescent => f.write_str("no descent: the identity has no transition step"),
            Error::EmptyAmbient => f.write_str("ambient ring has no variables"),
            Error::TooLarge { what, count, limit } => {
                write!(f, "too large: {count} {what} exceeds the limit of {limit}")
            }
            Error::VariableOutsideAmbient { row, col } => {
                write!(f, "z_{{{row},{col}}} is not an ambient variable")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
