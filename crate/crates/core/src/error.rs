use std::fmt;

/// Error type for the exact-geometry layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoreError {
    /// Syntax error in a polynomial literal; `pos` is a byte offset.
    Parse { pos: usize, msg: String },
    /// Exponents must be nonnegative rationals.
    NegativeExponent { e1: String, e2: String },
    /// Operation needs a nonzero polynomial.
    EmptyPolynomial,
    /// Evaluation or substitution left the domain (negative base under a
    /// fractional power, fractional power of a polynomial, ...).
    Domain(String),
    /// The requested face has no finite weight (vertex or axis ray).
    NoFiniteWeight,
    /// The given line does not support the polyhedron.
    NotSupporting(String),
    /// `dilate` with a ratio that is not an exact power for some exponent.
    IncompatibleDilation(String),
    /// Input is outside the phase family this pipeline handles.
    OutsideFamily(String),
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::Parse { pos, msg } => write!(f, "parse error at byte {pos}: {msg}"),
            CoreError::NegativeExponent { e1, e2 } => {
                write!(f, "negative exponent ({e1}, {e2}); support must lie in the closed positive quadrant")
            }
            CoreError::EmptyPolynomial => write!(f, "zero polynomial has no Newton polyhedron"),
            CoreError::Domain(msg) => write!(f, "domain error: {msg}"),
            CoreError::NoFiniteWeight => {
                write!(f, "face carries no finite weight (vertex or axis-parallel ray)")
            }
            CoreError::NotSupporting(msg) => write!(f, "line is not supporting: {msg}"),
            CoreError::IncompatibleDilation(msg) => {
                write!(f, "dilation ratio incompatible with exponent denominators: {msg}")
            }
            CoreError::OutsideFamily(msg) => write!(f, "outside the handled phase family: {msg}"),
        }
    }
}

impl std::error::Error for CoreError {}
