//! Crate-wide error type.
//!
//! Integrity failures are deliberately separate variants from plain I/O
//! errors: they map to a distinct exit code in the CLI, mirroring how a
//! kernel block layer reports `EILSEQ` instead of `EIO`.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The backing store cannot hold even the minimal layout.
    #[error("backing store too small: need at least {needed} bytes, have {available}")]
    TooSmall { needed: u64, available: u64 },

    #[error("sector {sector} out of range (device has {limit} sectors)")]
    OutOfRange { sector: u64, limit: u64 },

    #[error("bad superblock magic")]
    BadMagic,

    #[error("unsupported format version {0}")]
    BadVersion(u16),

    /// Superblock geometry no longer fits the backing store (it shrank),
    /// or its fields are internally inconsistent.
    #[error("geometry mismatch: {0}")]
    GeometryMismatch(String),

    /// A journal slot that passed its commit checksum contains entries the
    /// writer could never have produced. Unlike a torn tail this cannot be
    /// a crash artifact.
    #[error("corrupt journal: {0}")]
    CorruptJournal(String),

    /// A single transaction exceeds the whole journal ring.
    #[error("journal full: transaction needs {needed} bytes, ring holds {capacity}")]
    JournalFull { needed: u64, capacity: u64 },

    /// Authentication or checksum failure. Carries the first offending
    /// logical sector; the entire request it belonged to failed.
    #[error("integrity violation at sector {sector}")]
    IntegrityViolation { sector: u64 },

    /// The sector's metadata still carries the formatted-but-uninitialized
    /// marker; a re-encryption pass over the device is required first.
    #[error("sector {sector} not initialized: device needs a re-encryption pass")]
    IntegrityUnformatted { sector: u64 },

    #[error("wrong key length: suite needs {expected} bytes, got {actual}")]
    WrongKeyLength { expected: usize, actual: usize },

    #[error("configuration mismatch: {0}")]
    ConfigMismatch(String),

    /// Random IVs must be persisted in per-sector metadata; a suite with no
    /// metadata space cannot regenerate its IV per write.
    #[error("random IV requires per-sector metadata to store it: {0}")]
    RandomIvWithoutTag(String),

    /// The system RNG could not produce IV bytes. Writes must fail rather
    /// than fall back to a predictable value.
    #[error("entropy source unavailable")]
    EntropyUnavailable,

    #[error("invalid fault plan: {0}")]
    InvalidPlan(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Error {
        Error::Io(std::io::Error::new(std::io::ErrorKind::InvalidData, e))
    }
}

impl Error {
    /// True for errors that mean "the stored bytes are not trustworthy",
    /// as opposed to I/O or usage problems.
    pub fn is_integrity(&self) -> bool {
        matches!(
            self,
            Error::IntegrityViolation { .. } | Error::IntegrityUnformatted { .. }
        )
    }
}
