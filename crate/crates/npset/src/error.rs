use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{n} and {p} are not coprime")]
    NotCoprime { p: u64, n: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("factoring {0} exceeded the configured effort bound")]
    FactorEffort(u64),

    #[error("q = {q} exceeds the oracle bound {bound}")]
    OracleBound { q: u64, bound: u64 },

    #[error("polynomial moduli differ: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("cache engine version mismatch: file has {found:?}, engine is {expected}")]
    CacheVersion { found: String, expected: String },

    #[error("cache parse error at line {line}: {reason}")]
    CacheParse { line: usize, reason: String },

    #[error("polynomial parse error: {0}")]
    PolyParse(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
