use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("order {0} does not divide {1}")]
    OrderMismatch(u64, u64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("group mismatch")]
    GroupMismatch,
    #[error("element index {0} out of range for group of order {1}")]
    IndexOutOfRange(usize, usize),
    #[error("multiplication table is not associative at triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} has no two-sided inverse")]
    NotInvertible(usize),
    #[error("no two-sided identity in explicit table")]
    NoIdentity,
    #[error("cochain is not normalized at ({0}, {1})")]
    NotNormalized(usize, usize),
    #[error("2-cochain is not a cocycle (d2 fails at triple ({0}, {1}, {2}))")]
    NotACocycle(usize, usize, usize),
    #[error("map is not a homomorphism at pair ({0}, {1})")]
    NotAHomomorphism(usize, usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("not special: {0}")]
    NotSpecial(String),
    #[error("twist equation ({eq}) violated at {witness}")]
    TwistRejected { eq: String, witness: String },
    #[error("metric block for sector {0} is degenerate")]
    DegenerateMetric(usize),
    #[error("value is not a root of unity of order dividing {0}")]
    NotARootOfUnity(u64),
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
