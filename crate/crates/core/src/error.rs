use std::fmt;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The requested characteristic is not a prime number.
    NotPrime(u64),
    /// The field order does not fit the supported element encoding.
    FieldTooLarge { p: u32, e: u32 },
    /// A user-supplied modulus is not monic, has the wrong degree, or is reducible.
    InvalidModulus(String),
    /// An integer does not encode an element of the field in use.
    NotInField { value: u32, order: u32 },
    /// Two objects were defined over different fields.
    FieldMismatch,
    /// Vectors or matrices with incompatible shapes.
    DimensionMismatch(String),
    /// A coordinate index outside `0..n`.
    IndexOutOfRange { index: usize, len: usize },
    /// An exhaustive computation would exceed the configured budget.
    CapExceeded {
        what: &'static str,
        required: u128,
        cap: u64,
    },
    /// `C2` is not contained in `C1`.
    NotNested,
    /// The pair does not define a CSS-T code, so the requested analysis does not apply.
    NotCsst,
    /// A parameter violates an operation precondition.
    InvalidParameter(String),
    /// Malformed textual input.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not a prime"),
            Error::FieldTooLarge { p, e } => {
                write!(f, "field order {p}^{e} does not fit in 32 bits")
            }
            Error::InvalidModulus(msg) => write!(f, "invalid modulus: {msg}"),
            Error::NotInField { value, order } => {
                write!(f, "{value} is not an element of a field of order {order}")
            }
            Error::FieldMismatch => write!(f, "objects are defined over different fields"),
            Error::DimensionMismatch(msg) => write!(f, "dimension mismatch: {msg}"),
            Error::IndexOutOfRange { index, len } => {
                write!(f, "coordinate {index} out of range for length {len}")
            }
            Error::CapExceeded { what, required, cap } => {
                write!(f, "{what} needs {required} steps, above the cap of {cap}")
            }
            Error::NotNested => write!(f, "C2 is not a subcode of C1"),
            Error::NotCsst => write!(f, "the pair does not define a CSS-T code"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
