use crate::report::CheckReport;

/// Errors produced by constructors and checkers across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("universe must contain at least one element")]
    EmptyUniverse,
    #[error("parameter set must contain at least one parameter")]
    EmptyParameters,
    #[error("universe has {size} elements, at most {max} are supported", max = crate::context::MAX_UNIVERSE)]
    UniverseTooLarge { size: usize },
    #[error("identifier `{0}` is empty or contains whitespace")]
    InvalidIdentifier(String),
    #[error("duplicate identifier `{0}`")]
    DuplicateIdentifier(String),
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("assignment is missing parameter `{0}`; soft sets must be total on the parameter set")]
    MissingParameter(String),
    #[error("parameter `{0}` is assigned more than once")]
    DuplicateParameter(String),
    #[error("point map is missing an image for element `{0}`")]
    MissingImage(String),
    #[error("operands belong to different soft contexts")]
    ContextMismatch,
    #[error("collection is not a soft topology: {}", .0.summary())]
    InvalidTopology(Box<CheckReport>),
    #[error("instance requires {required} enumerated objects but the budget allows {limit}")]
    InstanceTooLarge { required: u128, limit: u128 },
    #[error("point map is not a bijection")]
    NotBijective,
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
}
