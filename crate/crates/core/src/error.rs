use num_bigint::BigInt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Input outside the half-open strip [-1/phi^2, 1/phi) or another stated domain.
    #[error("{0} lies outside the domain {1}")]
    OutOfDomain(String, &'static str),

    /// Evaluation requested exactly at a staircase breakpoint or domain boundary.
    #[error("{0} is a breakpoint or boundary point; the staircase is not defined there")]
    Breakpoint(String),

    /// A recursion or descent exceeded its configured depth bound, signalling
    /// a point where termination is not established.
    #[error("depth bound {limit} exceeded during {what}")]
    DepthExceeded { what: &'static str, limit: usize },

    /// A lattice point that is not of the form (x, conjugate(x)) with x in the strip.
    #[error("({x}, {y}) is not a point of the orbit lattice")]
    InvalidPoint { x: String, y: String },

    /// The brute-force oracle refuses inputs above its configured bound.
    #[error("n = {n} exceeds the brute-force oracle bound {bound}")]
    OracleBoundExceeded { n: BigInt, bound: BigInt },

    /// Level sets exist only for positive ratio values.
    #[error("level sets are defined for positive ratios only, got {0}")]
    NonpositiveRatio(String),

    /// Negative index where a nonnegative one is required.
    #[error("expected a nonnegative integer, got {0}")]
    NegativeIndex(BigInt),

    /// A patch must list at least one ratio.
    #[error("a patch needs at least one ratio entry")]
    EmptyPatch,
}
