use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("element {element} does not lie in {group}")]
    NotInGroup { element: String, group: String },

    #[error("invalid label for {group}: {label}")]
    InvalidLabel { group: String, label: String },

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("{what} needs {needed} but the budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u64,
        budget: u64,
    },

    #[error("element {0} does not centralize the base element")]
    NotInCentralizer(String),

    #[error("element maps a cycle block inconsistently: {0}")]
    InconsistentBlock(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("class functions belong to different groups")]
    GroupMismatch,

    #[error("linear character is not multiplicative: {0}")]
    NotAHomomorphism(String),

    #[error("element does not stabilize the fixed space")]
    NotStable,
}
