use thiserror::Error;

use crate::report::Report;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("map is singular")]
    SingularMap,
    #[error("input is not a 3-Hom-pre-Lie algebra: {0}")]
    NotAPreLie(Box<Report>),
    #[error("input is not a 3-Hom-L-dendriform algebra: {0}")]
    NotALDend(Box<Report>),
    #[error("base algebra fails its axioms: {0}")]
    BadBase(Box<Report>),
    #[error("not a representation: {0}")]
    BadRep(Box<Report>),
    #[error("not an O-operator: {0}")]
    NotAnOOperator(Box<Report>),
    #[error("not a Nijenhuis operator: {0}")]
    NotNijenhuis(Box<Report>),
    #[error("not a derivation: {0}")]
    NotADerivation(Box<Report>),
    #[error("not a trace function: {0}")]
    NotATrace(String),
    #[error("operators do not commute")]
    NotCommuting,
    #[error("bilinear form is degenerate or invalid: {0}")]
    Degenerate(String),
    #[error("not a product structure: {0}")]
    NotAProduct(Box<Report>),
    #[error("not a complex structure: {0}")]
    NotAComplexStructure(Box<Report>),
    #[error("not a valid decomposition: {0}")]
    NotADecomposition(String),
    #[error("complex structure has no real form: {0}")]
    NotRealizable(String),
    #[error("wrong scalar mode: {0}")]
    ModeError(String),
    #[error("deformation order {0} is not supported (maximum 2)")]
    OrderTooHigh(usize),
}

impl Error {
    /// The report carried by verdict-style errors, if any.
    pub fn report(&self) -> Option<&Report> {
        match self {
            Error::NotAPreLie(r)
            | Error::NotALDend(r)
            | Error::BadBase(r)
            | Error::BadRep(r)
            | Error::NotAnOOperator(r)
            | Error::NotNijenhuis(r)
            | Error::NotADerivation(r)
            | Error::NotAProduct(r)
            | Error::NotAComplexStructure(r) => Some(r),
            _ => None,
        }
    }
}

/// Converts a failing report into the given error.
pub(crate) fn require(report: Report, err: fn(Box<Report>) -> Error) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(err(Box::new(report)))
    }
}
