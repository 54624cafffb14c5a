use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every domain failure the library can report.
///
/// [`Error::code`] gives the stable machine-readable tag used in CLI output.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("stratum ({0}) is empty")]
    EmptyStratum(String),
    #[error("invalid double cover: {0}")]
    InvalidSpec(String),

    #[error("splitting an even order {order} into two parts requires both parts even, got {parts:?}")]
    ParityViolation { order: i32, parts: Vec<i32> },
    #[error("split parts {parts:?} do not sum to {order}")]
    BadSum { order: i32, parts: Vec<i32> },
    #[error("invalid split: {0}")]
    InvalidSplit(String),
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(u32, u32),
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid grouping: {0}")]
    InvalidGrouping(String),

    #[error("invalid letter: {0}")]
    InvalidLetter(String),
    #[error("invalid surface: {0}")]
    InvalidSurface(String),
    #[error("no other weights to balance against")]
    NoOtherWeights,
    #[error("factorization precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("word is not in the kernel of the Abel-Jacobi map (image {0:?})")]
    NotInKernel(Vec<i64>),
    #[error("certificate rejected: {0}")]
    CertificateRejected(String),

    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("genus {g} outside the embeddable range [{min}, {max}] for K_{n}")]
    OutOfRange { n: usize, g: u32, min: u32, max: u32 },
    #[error("search budget exhausted: {0}")]
    Budget(String),
    #[error("no edge borders two distinct faces")]
    NoRemovableEdge,
    #[error("bound violation: {0}")]
    BoundViolation(String),
    #[error("{faces} faces exceed the planar limit for {vertices} vertices")]
    TooManyFaces { faces: usize, vertices: usize },
    #[error("graph has a loop or a double edge")]
    NotSimple,
    #[error("{0}")]
    Precondition(String),

    #[error("malformed input: {0}")]
    Input(String),
}

impl Error {
    /// Stable tag naming the error variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidSignature(_) => "InvalidSignature",
            Error::EmptyStratum(_) => "EmptyStratum",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::ParityViolation { .. } => "ParityViolation",
            Error::BadSum { .. } => "BadSum",
            Error::InvalidSplit(_) => "InvalidSplit",
            Error::GenusMismatch(..) => "GenusMismatch",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::InvalidGrouping(_) => "InvalidGrouping",
            Error::InvalidLetter(_) => "InvalidLetter",
            Error::InvalidSurface(_) => "InvalidSurface",
            Error::NoOtherWeights => "NoOtherWeights",
            Error::PreconditionUnmet(_) => "PreconditionUnmet",
            Error::NotInKernel(_) => "NotInKernel",
            Error::CertificateRejected(_) => "CertificateRejected",
            Error::InvalidMap(_) => "InvalidMap",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::Budget(_) => "Budget",
            Error::NoRemovableEdge => "NoRemovableEdge",
            Error::BoundViolation(_) => "BoundViolation",
            Error::TooManyFaces { .. } => "TooManyFaces",
            Error::NotSimple => "NotSimple",
            Error::Precondition(_) => "Precondition",
            Error::Input(_) => "Input",
        }
    }
}
