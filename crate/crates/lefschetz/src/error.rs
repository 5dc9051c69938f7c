use thiserror::Error;

/// Errors shared across the exact-arithmetic kernels and the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("division is not exact")]
    NotExact,

    #[error("division by zero")]
    DivisionByZero,

    #[error("specialization exponent {value} is negative on monomial {monomial}")]
    NegativeSpecialization { monomial: String, value: i64 },

    #[error("designated basis element maps to {0}, not a generator of the free quotient")]
    NotAGenerator(String),

    #[error("projection does not annihilate the abelianized action")]
    QuotientActionNontrivial,

    #[error("free quotient has rank zero; zeta degenerates to a single-variable Lefschetz function")]
    DegenerateQuotient,

    #[error("zeta function has no reduced form")]
    NotReduced,

    #[error("class (a, b) is not a section class")]
    NotASection,

    #[error("section enumeration supports exactly one deck variable, got {0}")]
    DeckRankUnsupported(usize),

    #[error("polynomial has no real root")]
    NoRealRoot,

    #[error("point lies on a slit or an edge of the polygon")]
    BoundaryPoint,

    #[error("point lies outside the polygon")]
    OutsidePolygon,

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
