use std::error::Error;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum QuadError {
    /// The requested accuracy needs more panels than the budget allows.
    ResolutionBudget { needed: usize, budget: usize },
    /// Not enough usable sample points for a fit.
    InsufficientData { got: usize, need: usize },
    Domain(String),
}

impl fmt::Display for QuadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadError::ResolutionBudget { needed, budget } => {
                write!(f, "oscillation needs {needed} panels, budget is {budget}")
            }
            QuadError::InsufficientData { got, need } => {
                write!(f, "need at least {need} data points, got {got}")
            }
            QuadError::Domain(msg) => write!(f, "{msg}"),
        }
    }
}

impl Error for QuadError {}
