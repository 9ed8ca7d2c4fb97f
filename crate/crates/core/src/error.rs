use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Domain errors raised by the library. Each variant maps to a stable,
/// machine-readable code used by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring descriptor: {0}")]
    InvalidRing(String),

    #[error("coefficient sequence of length {len} exceeds the {slots} slots of the ring")]
    TooManyCoefficients { len: usize, slots: usize },

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("not invertible in truncated ring: constant term is {0}")]
    NotInvertible(String),

    #[error("power {power} out of range 0..={top}")]
    PowerOutOfRange { power: i64, top: usize },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),

    #[error("malformed space spec `{0}`")]
    MalformedSpec(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("malformed index `{0}`")]
    MalformedIndex(String),

    #[error("invalid table: {0}")]
    InvalidTable(String),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(u64, u64),

    #[error("inconsistent degree pair: {0}")]
    InconsistentDegrees(String),

    #[error("{0}")]
    InconsistentTables(String),

    #[error("{0} is not a prime power")]
    NotPrimePower(String),

    #[error("residue fields of sizes {0} and {1} have the same characteristic")]
    SameCharacteristic(u64, u64),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidRing(_) => "invalid_ring",
            Error::TooManyCoefficients { .. } => "too_many_coefficients",
            Error::RingMismatch(_) => "ring_mismatch",
            Error::NotInvertible(_) => "not_invertible",
            Error::PowerOutOfRange { .. } => "power_out_of_range",
            Error::UnknownFamily(_) => "unknown_family",
            Error::UnsupportedFamily(_) => "unsupported_family",
            Error::MalformedSpec(_) => "malformed_spec",
            Error::InvalidParameters(_) => "invalid_parameters",
            Error::Unsupported(_) => "unsupported",
            Error::MalformedIndex(_) => "malformed_index",
            Error::InvalidTable(_) => "invalid_table",
            Error::DimensionMismatch(..) => "dimension_mismatch",
            Error::InconsistentDegrees(_) => "inconsistent_degrees",
            Error::InconsistentTables(_) => "inconsistent_tables",
            Error::NotPrimePower(_) => "not_prime_power",
            Error::SameCharacteristic(..) => "same_characteristic",
        }
    }
}
