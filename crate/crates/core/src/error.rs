use thiserror::Error;

/// Errors raised by the library.
///
/// Verification failures are never errors: they are reported as flags on the
/// corresponding report structs. Errors are reserved for invalid inputs and
/// for exceeding the enumeration caps.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system spec: {0}")]
    InvalidSpec(String),
    #[error("pairing <v, a^vee> is not an integer (2*{num}/{den})")]
    NonCrystallographicInput { num: i64, den: i64 },
    #[error("root system {0} is reduced; expected a non-reduced (BC) system")]
    NotNonReduced(String),
    #[error("invalid letter {letter} for a rank-{rank} system (letters are 1-based)")]
    InvalidLetter { letter: usize, rank: usize },
    #[error("could not parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("enumeration exceeded cap {cap} (stopped after {partial})")]
    EnumerationCapExceeded { cap: usize, partial: usize },
    #[error("group of order {order} exceeds the limit {limit}")]
    GroupTooLarge { order: usize, limit: usize },
    #[error("weight coordinate {0} does not fit the packed orbit representation")]
    WeightOverflow(i64),
    #[error("witness construction does not apply: {0}")]
    WitnessNotApplicable(String),
    #[error("rank {rank} is too small (need at least {min})")]
    RankTooSmall { rank: usize, min: usize },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("H = B ∩ N is not normal in N")]
    HNotNormal,
    #[error("action is not 2-transitive")]
    NotTwoTransitive,
    #[error("no element g with gBg^-1 = B' was found")]
    NoConjugatorFound,
    #[error("subgroup search failed: {0}")]
    SubgroupNotFound(String),
    #[error("{what} exceeded cap {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
