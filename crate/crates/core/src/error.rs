use thiserror::Error;

/// Errors raised by field, group, transform and bentness operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NonPrime(u32),
    #[error("extension degree must be positive")]
    ZeroDegree,
    #[error("field of order {p}^{degree} exceeds the supported size")]
    FieldTooLarge { p: u32, degree: u32 },
    #[error("modulus has degree {got:?}, expected {expected}")]
    DegreeMismatch { expected: usize, got: Option<usize> },
    #[error("modulus is not monic")]
    NotMonic,
    #[error("modulus is reducible over GF(p)")]
    ReducibleModulus,
    #[error("coefficient vector {coeffs:?} is not an element of the field")]
    InvalidElement { coeffs: Vec<u32> },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} does not divide the circle order")]
    InvalidDivisor(u64),
    #[error("factor Z_{0} is inadmissible: {0} does not divide the circle order")]
    InadmissibleFactor(u32),
    #[error("group has no factors or a factor with zero multiplicity")]
    EmptyGroup,
    #[error("element shape does not match the group: {0}")]
    ShapeMismatch(String),
    #[error("functions are defined over different groups")]
    SpecMismatch,
    #[error("size {size} exceeds the enumeration bound {bound}")]
    TooLarge { size: u128, bound: u128 },
    #[error("value at element #{index} does not lie on the unit circle")]
    NotCircleValued { index: usize },
    #[error("function is not bent")]
    NotBent,
    #[error("{0} is not a quadratic residue modulo {1}")]
    NotQuadraticResidue(u32, u32),
    #[error("search space of {candidates} candidates exceeds the budget of {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },
    #[error("value order {0} does not divide the circle order")]
    InvalidOrder(u32),
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("value at element #{index} does not lie on the unit hypersphere")]
    NotOnHypersphere { index: usize },
    #[error("table has {got} entries, the group has {expected} elements")]
    TableLength { expected: usize, got: usize },
    #[error("exponent {exponent} is out of range for order {order}")]
    InvalidExponent { exponent: u32, order: u32 },
    #[error("no field context given for the group")]
    MissingContext,
}

impl Error {
    /// Stable machine-readable identifier, used in structured error records.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonPrime(_) => "NonPrime",
            Error::ZeroDegree => "ZeroDegree",
            Error::FieldTooLarge { .. } => "FieldTooLarge",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::NotMonic => "NotMonic",
            Error::ReducibleModulus => "ReducibleModulus",
            Error::InvalidElement { .. } => "InvalidElement",
            Error::DivisionByZero => "DivisionByZero",
            Error::InvalidDivisor(_) => "InvalidDivisor",
            Error::InadmissibleFactor(_) => "InadmissibleFactor",
            Error::EmptyGroup => "EmptyGroup",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::SpecMismatch => "SpecMismatch",
            Error::TooLarge { .. } => "TooLarge",
            Error::NotCircleValued { .. } => "NotCircleValued",
            Error::NotBent => "NotBent",
            Error::NotQuadraticResidue(..) => "NotQuadraticResidue",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::InvalidOrder(_) => "InvalidOrder",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::DimensionMismatch(..) => "DimensionMismatch",
            Error::NotOnHypersphere { .. } => "NotOnHypersphere",
            Error::TableLength { .. } => "TableLength",
            Error::InvalidExponent { .. } => "InvalidExponent",
            Error::MissingContext => "MissingContext",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
