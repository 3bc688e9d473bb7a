use core::fmt;

/// Errors surfaced by exact-arithmetic and representation-building operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Matrix shapes incompatible for the requested operation.
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    NotSquare {
        rows: usize,
        cols: usize,
    },
    IndexOutOfRange {
        index: usize,
        bound: usize,
    },
    DuplicateIndex {
        index: usize,
    },
    /// All-zero matrix has no projective canonical form.
    ZeroMatrix,
    DivisionByZero,
    /// Exact quotient exists in Q(ω) but not with dyadic coefficients.
    NonDyadicQuotient,
    /// Requested size exceeds the desk-scale capacity guard.
    Capacity {
        what: &'static str,
        requested: usize,
        max: usize,
    },
    /// Anyon count must be even and at least 4.
    InvalidAnyonCount {
        anyons: usize,
    },
    GeneratorIndex {
        index: usize,
        strands: usize,
    },
    StrandMismatch {
        word: usize,
        rep: usize,
    },
    DimensionMismatch {
        left: usize,
        right: usize,
    },
    /// Two construction routes that must agree did not; never expected to fire.
    ConstructionIntegrity(&'static str),
    WordSyntax {
        token: alloc::string::String,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ShapeMismatch { left, right } => write!(
                f,
                "shape mismatch: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::NotSquare { rows, cols } => write!(f, "matrix is not square: {rows}x{cols}"),
            Error::IndexOutOfRange { index, bound } => {
                write!(f, "index {index} out of range (bound {bound})")
            }
            Error::DuplicateIndex { index } => write!(f, "duplicate index {index}"),
            Error::ZeroMatrix => write!(f, "all-zero matrix is degenerate here"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NonDyadicQuotient => {
                write!(f, "exact quotient leaves the dyadic coefficient ring")
            }
            Error::Capacity {
                what,
                requested,
                max,
            } => write!(f, "{what} capacity exceeded: {requested} > {max}"),
            Error::InvalidAnyonCount { anyons } => {
                write!(f, "anyon count must be even and >= 4, got {anyons}")
            }
            Error::GeneratorIndex { index, strands } => {
                write!(f, "generator index {index} invalid for {strands} strands")
            }
            Error::StrandMismatch { word, rep } => {
                write!(f, "word on {word} strands, representation has {rep}")
            }
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::ConstructionIntegrity(what) => {
                write!(f, "construction integrity violated: {what}")
            }
            Error::WordSyntax { token } => write!(f, "bad braid-word token: {token:?}"),
        }
    }
}

impl core::error::Error for Error {}
