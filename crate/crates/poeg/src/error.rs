use thiserror::Error;

/// Errors reported by group construction and the exact-arithmetic pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group specification: {0}")]
    InvalidSpec(String),

    #[error("Cayley table rejected: {axiom} fails, witness {witness}")]
    InvalidTable {
        axiom: &'static str,
        witness: String,
    },

    #[error("operation requires an abelian group")]
    NotAbelian,

    #[error("operation requires a group of prime-power order {expected}, got order {got}")]
    NotPGroup { expected: String, got: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not an odd prime")]
    OddPrimeRequired(u64),

    #[error("invalid factorization: {0}")]
    BadFactorization(String),

    #[error("dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("partition is not equitable: vertices {u} and {v} of block {block} have {cu} and {cv} neighbours in block {into}")]
    NotEquitable {
        block: usize,
        into: usize,
        u: usize,
        v: usize,
        cu: usize,
        cv: usize,
    },

    #[error("vertex set is not a connected component of the graph")]
    NotAComponent,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
