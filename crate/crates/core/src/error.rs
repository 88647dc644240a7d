use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("expected {expected} values, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial involves more than one variable")]
    NotUnivariate,
    #[error("index {index} out of range (size {size})")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("ideal is not cofinite (quotient is infinite-dimensional)")]
    NotCofinite,
    #[error("maximal ideal without rational point: found {found} rational points, quotient dimension {dimension}")]
    NonRationalPoint { found: usize, dimension: usize },
    #[error("evaluation matrix is singular")]
    SingularEvaluation,

    #[error("not a generalized Cartan matrix: {0}")]
    NotGcm(String),
    #[error("generalized Cartan matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("Cartan matrix is not of finite type")]
    NotFiniteType,
    #[error("weight is not dominant integral")]
    NotDominant,
    #[error("weight has {found} pairings, rank is {rank}")]
    WeightLength { rank: usize, found: usize },
    #[error("character tables refer to different Cartan data")]
    ContextMismatch,
    #[error("character table depth {available} is below requested depth {requested}")]
    InsufficientDepth { requested: usize, available: usize },
    #[error("Freudenthal denominator vanishes at drop {0} with nonzero numerator")]
    FreudenthalDegenerate(String),

    #[error("missing psi entry for h{} at monomial `{monomial}`", .coroot + 1)]
    /// `coroot` is zero-based; messages print it one-based as `h1, h2, ...`.
    MissingPsiEntry { coroot: usize, monomial: String },
    #[error("psi key h{} at `{monomial}` names no coroot or standard monomial", .coroot + 1)]
    UnknownPsiKey { coroot: usize, monomial: String },
    #[error("duplicate psi entry for h{} at monomial `{monomial}`", .coroot + 1)]
    DuplicatePsiEntry { coroot: usize, monomial: String },
    #[error("decomposition is not integrable")]
    NotIntegrable,
    #[error("oracle supports only type A Cartan matrices: {0}")]
    UnsupportedOracleType(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "Syntax",
            Error::UnknownVariable(_) => "UnknownVariable",
            Error::RingMismatch => "RingMismatch",
            Error::ArityMismatch { .. } => "ArityMismatch",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::NotUnivariate => "NotUnivariate",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotCofinite => "NotCofinite",
            Error::NonRationalPoint { .. } => "NonRationalPoint",
            Error::SingularEvaluation => "SingularEvaluation",
            Error::NotGcm(_) => "NotGCM",
            Error::NotSymmetrizable => "NotSymmetrizable",
            Error::NotFiniteType => "NotFiniteType",
            Error::NotDominant => "NotDominant",
            Error::WeightLength { .. } => "WeightLength",
            Error::ContextMismatch => "ContextMismatch",
            Error::InsufficientDepth { .. } => "InsufficientDepth",
            Error::FreudenthalDegenerate(_) => "FreudenthalDegenerate",
            Error::MissingPsiEntry { .. } => "MissingPsiEntry",
            Error::UnknownPsiKey { .. } => "UnknownPsiKey",
            Error::DuplicatePsiEntry { .. } => "DuplicatePsiEntry",
            Error::NotIntegrable => "NotIntegrable",
            Error::UnsupportedOracleType(_) => "UnsupportedOracleType",
        }
    }
}
