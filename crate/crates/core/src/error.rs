use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("both inputs are zero")]
    BothZero,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("{0} is not an element of the stable ring")]
    NotInRing(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("ring Z[√{0}·i] is not a maximal order; ideal-theoretic certificates are refused")]
    NotMaximalOrder(u64),
    #[error("plant is zero")]
    ZeroPlant,
    #[error("plant lies in the stable ring; its first elementary factor is degenerate")]
    PlantInRing,
    #[error("plant is not causal")]
    NotCausal,
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no ω ≤ {0} satisfies the membership conditions")]
    OmegaMaxExceeded(u32),
    #[error("controller denominator vanishes for the chosen r1, r2")]
    ConditionIiiViolated,
    #[error("no elementary-factor witnesses found: {0}")]
    WitnessSearchExhausted(String),
    #[error("closed loop is ill-posed (1 + p·c = 0)")]
    IllPosed,
    #[error("synthesized controller failed closed-loop verification")]
    VerificationFailed,
}

pub type Result<T> = std::result::Result<T, Error>;
