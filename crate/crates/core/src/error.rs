use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("division by zero coefficient")]
    DivisionByZero,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("ring mismatch: operands live in different polynomial rings")]
    RingMismatch,

    #[error("point has {found} coordinates, ring has {expected} variables")]
    PointLength { expected: usize, found: usize },

    #[error("input is not homogeneous")]
    NotHomogeneous,

    #[error("Hilbert function tail not stabilized up to degree {0}")]
    TailNotStabilized(u32),

    #[error("saturation did not reach a fixed point within {0} steps")]
    SaturationDiverged(usize),

    #[error("not a curve: Hilbert polynomial has degree {0}")]
    NotACurve(i64),

    #[error("ideal is not saturated")]
    NotSaturated,

    #[error("point does not lie on the scheme")]
    PointNotOnScheme,

    #[error("projection center lies on the scheme")]
    CenterOnScheme,

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("section is finite: the hyperplane contains no component")]
    SectionFinite,

    #[error("complete intersection is not contained in the linked ideal")]
    NotContained,

    #[error("not a complete intersection: {0}")]
    NotCompleteIntersection(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("exact division failed")]
    NotDivisible,
}

pub type Result<T> = std::result::Result<T, Error>;
