use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("ideal is not primary to the maximal ideal: {0}")]
    NotPrimary(String),
    #[error("inhomogeneous generator {0}: the graded backend only accepts homogeneous ideals")]
    Inhomogeneous(String),
    #[error("ideal is not generated in a single degree; reduction search is not available")]
    NotEquigenerated,
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("containment violated: {0}")]
    ContainmentViolated(String),
    #[error("randomized search exhausted after {attempts} attempts")]
    SearchExhausted { attempts: u32 },
    #[error("no reduction number found up to {r_max}")]
    NotAReduction { r_max: u32 },
    #[error("Hilbert function not stable on the last window of a table of length {len}")]
    WindowUnstable { len: usize },
    #[error("element does not lie in the ideal")]
    NotInIdeal,
    #[error("element lies in the square of the ideal")]
    InIdealSquare,
    #[error("multiplication by the element is not injective in degree {degree}")]
    NotSuperficial { degree: u32 },
    #[error("quotient not representable: {0}")]
    QuotientNotRepresentable(String),
    #[error("truncation overflow: level {required} needed")]
    TruncationOverflow { required: u32 },
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("Huckaba-Marley sandwich violated: lower {lower}, e1 {e1}, upper {upper}")]
    SandwichViolated { lower: i64, e1: i64, upper: i64 },
    #[error("{0}")]
    Invalid(String),
}
