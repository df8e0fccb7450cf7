use std::fmt;

use phaselab_core::CoreError;
use phaselab_quad::QuadError;

#[derive(Debug)]
pub enum VerifyError {
    Quad(QuadError),
    Core(CoreError),
    Domain(String),
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::Quad(e) => write!(f, "quadrature: {e}"),
            VerifyError::Core(e) => write!(f, "geometry: {e}"),
            VerifyError::Domain(msg) => write!(f, "domain: {msg}"),
        }
    }
}

impl std::error::Error for VerifyError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            VerifyError::Quad(e) => Some(e),
            VerifyError::Core(e) => Some(e),
            VerifyError::Domain(_) => None,
        }
    }
}

impl From<QuadError> for VerifyError {
    fn from(e: QuadError) -> Self {
        VerifyError::Quad(e)
    }
}

impl From<CoreError> for VerifyError {
    fn from(e: CoreError) -> Self {
        VerifyError::Core(e)
    }
}

impl VerifyError {
    /// Quadrature budget exhaustion is inconclusive rather than a failure;
    /// callers map this to a distinct exit status.
    pub fn is_inconclusive(&self) -> bool {
        matches!(
            self,
            VerifyError::Quad(QuadError::ResolutionBudget { .. })
        )
    }
}
