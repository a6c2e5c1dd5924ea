use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Domain errors raised by the geometry kernel.
///
/// [`Error::name`] returns a stable identifier for each variant; the CLI
/// prints it when mapping a failure to exit status 1.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("the zero vector does not represent a point")]
    NullVector,

    #[error("non-finite component in input")]
    NonFinite,

    #[error("cannot parse {0:?}")]
    Parse(String),

    #[error("parameter t = {t} outside [-1, 1]")]
    ParamOutOfRange { t: f64 },

    #[error("q_t(v) = {q:e} is not positive at t = {t}: the ray misses the surface")]
    OutsideCone { t: f64, q: f64 },

    #[error("angular distance is undefined at t = 0; use distance")]
    ZeroParam,

    #[error("operation requires t > 0, got t = {t}")]
    NonPositiveParam { t: f64 },

    #[error("vector is not tangent at the base point (pairing residual {residual:e})")]
    NotTangent { residual: f64 },

    #[error("direction is not unit-speed (metric norm {norm:e})")]
    NotUnitTangent { norm: f64 },

    #[error("points coincide")]
    CoincidentPoints,

    #[error("point coincides with the angle vertex")]
    CoincidentWithVertex,

    #[error("lines are identical")]
    IdenticalLines,

    #[error("lines do not intersect in this geometry")]
    NoIntersection,

    #[error("degenerate triangle: {0}")]
    DegenerateTriangle(String),

    #[error("no right angle at C (found {angle} rad)")]
    NoRightAngle { angle: f64 },

    #[error("invalid side lengths: {0}")]
    InvalidSides(String),

    #[error("need at least {need} points, got {got}")]
    TooFewPoints { got: usize, need: usize },

    #[error("insufficient samples: {0}")]
    InsufficientSamples(String),

    #[error("extrapolants did not converge (error estimate {error_estimate:e})")]
    NoConvergence { error_estimate: f64 },

    #[error("fit is ill-conditioned for the requested order")]
    IllConditioned,

    #[error("evaluator failed at t = {t}: {source}")]
    EvaluatorDomain {
        t: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("unknown quantity {0:?}")]
    UnknownQuantity(String),

    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),
}

impl Error {
    /// Stable variant identifier, used in CLI diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NullVector => "NullVector",
            Error::NonFinite => "NonFinite",
            Error::Parse(_) => "ParseError",
            Error::ParamOutOfRange { .. } => "ParamOutOfRange",
            Error::OutsideCone { .. } => "OutsideCone",
            Error::ZeroParam => "ZeroParam",
            Error::NonPositiveParam { .. } => "NonPositiveParam",
            Error::NotTangent { .. } => "NotTangent",
            Error::NotUnitTangent { .. } => "NotUnitTangent",
            Error::CoincidentPoints => "CoincidentPoints",
            Error::CoincidentWithVertex => "CoincidentWithVertex",
            Error::IdenticalLines => "IdenticalLines",
            Error::NoIntersection => "NoIntersection",
            Error::DegenerateTriangle(_) => "DegenerateTriangle",
            Error::NoRightAngle { .. } => "NoRightAngle",
            Error::InvalidSides(_) => "InvalidSides",
            Error::TooFewPoints { .. } => "TooFewPoints",
            Error::InsufficientSamples(_) => "InsufficientSamples",
            Error::NoConvergence { .. } => "NoConvergence",
            Error::IllConditioned => "IllConditioned",
            Error::EvaluatorDomain { .. } => "EvaluatorDomainError",
            Error::UnknownQuantity(_) => "UnknownQuantity",
            Error::UnknownSuite(_) => "UnknownSuite",
        }
    }
}
