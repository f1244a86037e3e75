use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate identifier `{0}`")]
    Duplicate(String),
    #[error("path `{0}` is not composable")]
    NonComposable(String),
    #[error("relation `{0}` is not admissible: {1}")]
    Inadmissible(String, String),
    #[error("algebra is infinite-dimensional (nonzero path `{0}` can be pumped)")]
    InfiniteDimensional(String),
    #[error("operation requires monomial relations")]
    NonMonomial,
    #[error("invalid vertex subset: {0}")]
    InvalidSubset(String),
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("presentation mismatch between modules")]
    PresentationMismatch,
    #[error("no projective module available at vertex `{0}`")]
    MissingProjective(String),
    #[error("cutoff {0} exceeded")]
    CutoffExceeded(usize),
    #[error("Cartan matrix is not unimodular")]
    NotUnimodular,
    #[error("matrix size mismatch")]
    SizeMismatch,
    #[error("zero dimension vector")]
    ZeroVector,
    #[error("side assignment failed: {0}")]
    SideAssignment(String),
    #[error("enumeration guard exceeded: {0}")]
    Guard(String),
    #[error("invalid string: {0}")]
    InvalidString(String),
    #[error("isomorphism test inconclusive after {0} coefficient tuples")]
    Inconclusive(usize),
    #[error("margin violation in {op}: support {lo}..{hi} too close to window {wlo}..{whi}")]
    Margin { op: String, lo: i64, hi: i64, wlo: i64, whi: i64 },
    #[error("could not recognize module as a string: {0}")]
    Recognition(String),
    #[error("module is projective: {0}")]
    Projective(String),
    #[error("depth limit {0} exceeded")]
    Depth(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
