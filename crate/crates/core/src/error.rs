use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size {0} out of range (2 <= q <= {max})", max = crate::sequence::MAX_Q)]
    InvalidAlphabet(u64),

    #[error("alphabet mismatch: q = {left} vs q = {right}")]
    AlphabetMismatch { left: u32, right: u32 },

    #[error("residue {value} out of range for q = {q}")]
    ResidueOutOfRange { value: u64, q: u32 },

    #[error("empty {0}")]
    Empty(&'static str),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A theorem's hypothesis does not hold for the supplied parameters.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    /// An input that must carry a correlation property (e.g. "is a CCC") failed verification.
    #[error("verification refused: {0}")]
    VerificationRefused(String),

    /// A constructor's own output failed its post-condition check.
    #[error("output verification failed: {0}")]
    VerificationFailed(String),

    #[error("{value} out of range for {positions} base-{q} digits")]
    DigitOutOfRange { value: u64, positions: usize, q: u32 },

    #[error("unsupported Golay kernel length {0} (available: 1, 2, 10, 26)")]
    UnknownKernel(usize),

    #[error("document error: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
