use alloc::string::String;

/// Errors raised by group construction and the analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("not a group: {reason} (witness {witness:?})")]
    NotAGroup {
        reason: &'static str,
        witness: [usize; 3],
    },
    #[error("size limit exceeded: {what} would pass the cap of {cap}")]
    SizeLimitExceeded { what: &'static str, cap: usize },
    #[error("subgroup is not normal: conjugating {member} by {by} leaves it")]
    NotNormal { member: usize, by: usize },
    #[error("group is not nilpotent")]
    NotNilpotent,
    #[error("group order is not a prime power")]
    NotPGroup,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u64, u64),
    #[error("expected nilpotency class 2, found class {0}")]
    WrongClass(usize),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(&'static str),
    #[error("automorphism search passed its budget of {budget} nodes (candidate space {candidate_space})")]
    BudgetExceeded { budget: u64, candidate_space: u128 },
    #[error("internal disagreement: {0}")]
    InternalDisagreement(&'static str),
    #[error("target subgroup is not central")]
    NotCentral,
    #[error("group is not purely non-abelian")]
    NotPurelyNonabelian,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = core::result::Result<T, Error>;
