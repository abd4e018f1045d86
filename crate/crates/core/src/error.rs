use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("empty set: a compact set needs at least one interval")]
    EmptySet,
    #[error("invalid endpoint in interval [{lo}, {hi}]")]
    InvalidEndpoint { lo: f64, hi: f64 },
    #[error("cantor level {level} exceeds the configured maximum {max}")]
    LevelOverflow { level: u32, max: u32 },
    #[error("cannot parse set literal `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("chain enumeration needs finite point sets (set {index} has a nondegenerate interval)")]
    FiniteOnly { index: usize },
    #[error("chain enumeration would visit {size} tuples (limit {limit})")]
    TooLarge { size: u128, limit: u128 },
    #[error("weights and sets differ in length ({weights} vs {sets})")]
    LengthMismatch { weights: usize, sets: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("exponent {0} outside (0, 1]")]
    BadExponent(f64),
    #[error("branch {branch} is not contractive (|alpha| = {alpha})")]
    NotContractive { branch: usize, alpha: f64 },
    #[error("value {index} is not a single interval")]
    ConvexityRequired { index: usize },
    #[error(
        "branch {branch}: endpoint condition needs width {required} but target interval has width {available}"
    )]
    EndpointInfeasible {
        branch: usize,
        required: f64,
        available: f64,
    },
    #[error("branch values disagree at x = {x} (gap {gap})")]
    Glue { x: f64, gap: f64 },
    #[error("no convergence after {iterations} iterations (last step {last_step})")]
    NoConvergence { iterations: usize, last_step: f64 },
    #[error("probability vector is invalid: {0}")]
    BadWeights(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("csv: {0}")]
    Csv(String),
}

pub type Result<T> = std::result::Result<T, Error>;
