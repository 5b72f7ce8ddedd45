use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("invalid root ({i}, {j}, barred={barred}) for rank {n}")]
    InvalidRoot { n: usize, i: usize, j: usize, barred: bool },
    #[error("weight has {got} coordinates, expected {expected}")]
    WeightLength { got: usize, expected: usize },
    #[error("entry {entry} is outside 1..={max}")]
    EntryOutOfRange { entry: usize, max: usize },
    #[error("malformed tableau: {0}")]
    MalformedTableau(String),
    #[error("tableau is not symplectic PBW-semistandard")]
    NotSemistandard,
    #[error("exponent vector lies outside the FFLV polytope")]
    OutsidePolytope,
    #[error("no admissible column for operator f({i},{j})")]
    NoAdmissibleColumn { i: usize, j: usize },
    #[error("invalid Pluecker index: {0}")]
    InvalidIndex(String),
    #[error("invalid minor: {0}")]
    InvalidMinor(String),
    #[error("minor is reverse-admissible, no symplectic relation applies")]
    ReverseAdmissible,
    #[error("minor is not reverse-admissible")]
    NotReverseAdmissible,
    #[error("maximal witness is not unique: {0}")]
    AmbiguousWitness(String),
    #[error("invalid relation parameters: {0}")]
    InvalidRelation(String),
    #[error("no value supplied for variable {0}")]
    MissingVariable(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("weyl dimension product is not integral")]
    NonIntegral,
    #[error("degenerate operators do not commute: {0}")]
    NonCommuting(String),
    #[error("straightening budget of {0} steps exhausted")]
    BudgetExhausted(usize),
    #[error("no decreasing rewrite for {0}")]
    NoRewrite(String),
}

impl Error {
    /// Stable machine-readable tag.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroRank => "zero_rank",
            Error::InvalidRoot { .. } => "invalid_root",
            Error::WeightLength { .. } => "weight_length",
            Error::EntryOutOfRange { .. } => "entry_out_of_range",
            Error::MalformedTableau(_) => "malformed_tableau",
            Error::NotSemistandard => "not_semistandard",
            Error::OutsidePolytope => "outside_polytope",
            Error::NoAdmissibleColumn { .. } => "no_admissible_column",
            Error::InvalidIndex(_) => "invalid_index",
            Error::InvalidMinor(_) => "invalid_minor",
            Error::ReverseAdmissible => "reverse_admissible",
            Error::NotReverseAdmissible => "not_reverse_admissible",
            Error::AmbiguousWitness(_) => "ambiguous_witness",
            Error::InvalidRelation(_) => "invalid_relation",
            Error::MissingVariable(_) => "missing_variable",
            Error::RingMismatch(_) => "ring_mismatch",
            Error::NonIntegral => "non_integral",
            Error::NonCommuting(_) => "non_commuting",
            Error::BudgetExhausted(_) => "budget_exhausted",
            Error::NoRewrite(_) => "no_rewrite",
        }
    }
}
