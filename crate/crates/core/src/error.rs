use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("cannot parse {token:?}: {reason}")]
    Parse { token: String, reason: String },

    #[error("insertion site {site} out of range for a permutation of length {len}")]
    SiteOutOfRange { site: usize, len: usize },

    #[error("the empty permutation has no entry equal to 1")]
    EmptyPermutation,

    #[error("n = {n} exceeds the {what} cap of {cap}")]
    Capacity {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("{row}: n = {n} is below the stated range n >= {valid_from}")]
    BelowRange {
        row: String,
        n: u32,
        valid_from: u32,
    },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("{0} is not defined at this index")]
    Domain(&'static str),

    #[error(
        "pruned search and filter-all oracle disagree on {id} at n = {n}: {pruned} vs {oracle}"
    )]
    OracleDivergence {
        id: String,
        n: usize,
        pruned: u64,
        oracle: u64,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
