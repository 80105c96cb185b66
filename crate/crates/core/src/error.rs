use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid linear order: {0}")]
    InvalidOrder(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("orders on different alternative sets: expected n = {expected}, found n = {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("n = {n} exceeds the enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("n = {n} is too small; at least {min} alternatives required")]
    TooSmall { n: usize, min: usize },
    #[error("order {0} is not in the domain")]
    NotInDomain(String),
    #[error("invalid K: {0}")]
    InvalidK(String),
    #[error("incomplete never-condition set: {0}")]
    Incomplete(String),
    #[error("invalid necklace: {0}")]
    InvalidNecklace(String),
    #[error("w-convexity is undefined for the empty bead set")]
    EmptyBeadSet,
    #[error("domain is not a Condorcet domain (triple {0} admits no never condition)")]
    NotCondorcet(String),
    #[error("domain lacks 12…n or n…21")]
    NotMaximalWidth,
    #[error("invalid swap sequence: {0}")]
    InvalidSwaps(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("parse error on line {line}: {message}")]
    ParseLine { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
