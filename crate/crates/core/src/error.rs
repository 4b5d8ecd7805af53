use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("degenerate Coxeter diagram: {0}")]
    DegenerateDiagram(String),
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error("root orbit exceeded {cap} roots; diagram is probably not of finite type")]
    InfiniteTypeSuspected { cap: usize },
    #[error("group enumeration exceeded {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("elements belong to different Coxeter systems")]
    SystemMismatch,
    #[error("elements are not comparable in Bruhat order")]
    NotComparable,
    #[error("interval length {len} exceeds the chain enumeration guard {max}")]
    IntervalTooLong { len: usize, max: usize },
    #[error("basis is singular")]
    SingularBasis,
    #[error("ordering keys of roots {0} and {1} tie")]
    TieDetected(usize, usize),
    #[error("vector has non-positive coordinate sum")]
    NonPositiveSum,
    #[error("cones intersect outside the origin")]
    ConesIntersect,
    #[error("size guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
    #[error("duplicate point {0} in hull input")]
    DuplicatePoint(usize),
    #[error("all generators fixed: base point would be zero")]
    AllGeneratorsFixed,
    #[error("base point parabolic set does not match")]
    ParabolicMismatch,
    #[error("face is not a Bruhat interval")]
    FaceNotInterval,
    #[error("interval does not have length two")]
    NotLengthTwo,
    #[error("length-two interval is not a diamond")]
    NotDiamond,
    #[error("Gelfand-Serganova clauses disagree")]
    DisagreementDetected,
    #[error("no extremal coset element found")]
    NoExtremum,
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("tolerances must be positive and finite")]
    InvalidTolerance,
    #[error("invalid element data: {0}")]
    InvalidElement(String),
}
