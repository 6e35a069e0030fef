use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("omega and k must have the same length (got {omega} and {k})")]
    LengthMismatch { omega: usize, k: usize },
    #[error("at least two oscillators are required (got {0})")]
    TooFew(usize),
    #[error("at most {max} oscillators are supported here (got {n})")]
    SizeLimit { n: usize, max: usize },
    #[error("input conditions violated: {0}")]
    Invalid(String),
    #[error("R = {r} lies below the domain boundary {boundary}")]
    Domain { r: f64, boundary: f64 },
    #[error("interval lies entirely below the domain boundary")]
    EmptyDomain,
    #[error("order parameter vanishes; the phase shift is undefined")]
    ZeroOrderParameter,
    #[error("|sin theta| = {0} exceeds 1; candidate root is spurious")]
    SineOverflow(f64),
    #[error("the sequential skip rule requires k to be nonincreasing after sorting")]
    SkipWithoutIc4,
    #[error("n = {0} has the wrong parity for this family")]
    Parity(usize),
    #[error("q = {q} is outside the admissible range (q < {bound})")]
    Range { q: String, bound: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
