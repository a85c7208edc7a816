use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("unsupported generator parameter: {0}")]
    UnsupportedParameter(String),

    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),

    #[error("vertex {0} has degree zero")]
    DegreeZero(usize),

    #[error("vertices {0} and {1} lie in different components")]
    Unreachable(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not regular")]
    IrregularGraph,

    #[error("graph is neither strongly regular nor regular of diameter at most 2")]
    UnsupportedGraph,

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("potential is not 1-Lipschitz: |f({u}) - f({v})| = {gap} exceeds distance {dist}")]
    NotLipschitz { u: usize, v: usize, gap: u64, dist: u32 },

    #[error("invalid two-step pairing: {0}")]
    InvalidPairing(String),

    #[error("matching size {m} outside 0..={max}")]
    InvalidMatchingSize { m: usize, max: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("scaled masses overflow 64-bit integers")]
    Overflow,

    #[error("certificate mismatch: primal {primal} != dual {dual}")]
    CertificateMismatch { primal: Box<Rational>, dual: Box<Rational> },

    #[error("formula value {formula} disagrees with transport value {flow}")]
    FormulaMismatch { formula: Box<Rational>, flow: Box<Rational> },

    #[error("curvature is not linear in eps below {0}")]
    NonlinearActivity(Rational),
}

impl Error {
    /// True for failures that indicate an internal mathematical inconsistency
    /// rather than bad input.
    pub fn is_inconsistency(&self) -> bool {
        matches!(
            self,
            Error::CertificateMismatch { .. }
                | Error::FormulaMismatch { .. }
                | Error::NonlinearActivity(_)
                | Error::NoConvergence(_)
        )
    }
}
