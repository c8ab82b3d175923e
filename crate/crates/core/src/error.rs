use thiserror::Error;

/// Errors raised by the algebra engine.
///
/// Variants are grouped by the layer that produces them; the frontend maps
/// every variant except [`Error::BadInput`] to the "mathematical error" exit
/// code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("root of unity of order {order} needs a conductor divisible by it (conductor is {conductor})")]
    ConductorTooSmall { order: u32, conductor: u32 },
    #[error("unsupported conductor {0}")]
    BadConductor(u32),

    #[error("relation is not homogeneous: {0}")]
    NotGraded(String),
    #[error("relation of degree one makes a generator redundant: {0}")]
    RedundantGenerator(String),
    #[error("degree {degree} exceeds the truncation bound {bound}")]
    TruncationExceeded { degree: u32, bound: u32 },

    #[error("q-matrix is not multiplicatively antisymmetric: {0}")]
    BadQMatrix(String),
    #[error("quotient collapses to the zero algebra")]
    DegenerateQuotient,

    #[error("group closure exceeds {0} elements")]
    NotFiniteWithinBound(usize),
    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("generated group is trivial")]
    TrivialGroupRejected,

    #[error("bad pair: {0}")]
    BadPair(String),
    #[error("element is not an eigenvector: {0}")]
    NotEigen(String),
    #[error("element is not central: {0}")]
    NotCentral(String),
    #[error("elements do not q-commute: {0}")]
    NotQCommuting(String),
    #[error("pair is not pertinent: group element {element} leaves residue {residue}")]
    NotPertinent { element: usize, residue: String },
    #[error("bad input: {0}")]
    BadInput(String),

    #[error("an exact GK-dimension of the algebra is required")]
    NeedsGKdim,
    #[error("window of width {window} needs more degrees than the {available} available")]
    InsufficientDegrees { window: usize, available: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable variant name, used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::ConductorTooSmall { .. } => "ConductorTooSmall",
            Error::BadConductor(_) => "BadConductor",
            Error::NotGraded(_) => "NotGraded",
            Error::RedundantGenerator(_) => "RedundantGenerator",
            Error::TruncationExceeded { .. } => "TruncationExceeded",
            Error::BadQMatrix(_) => "BadQMatrix",
            Error::DegenerateQuotient => "DegenerateQuotient",
            Error::NotFiniteWithinBound(_) => "NotFiniteWithinBound",
            Error::NotAnAutomorphism(_) => "NotAnAutomorphism",
            Error::TrivialGroupRejected => "TrivialGroupRejected",
            Error::BadPair(_) => "BadPair",
            Error::NotEigen(_) => "NotEigen",
            Error::NotCentral(_) => "NotCentral",
            Error::NotQCommuting(_) => "NotQCommuting",
            Error::NotPertinent { .. } => "NotPertinent",
            Error::BadInput(_) => "BadInput",
            Error::NeedsGKdim => "NeedsGKdim",
            Error::InsufficientDegrees { .. } => "InsufficientDegrees",
        }
    }
}
