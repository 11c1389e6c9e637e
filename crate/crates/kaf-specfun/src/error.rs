use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum SpecFunError {
    #[error("gamma pole at nonpositive integer {0}")]
    GammaPole(f64),
    #[error("series did not reach tolerance {tol:e} within {terms} terms (last term {last:e})")]
    NonConvergence { terms: usize, tol: f64, last: f64 },
    #[error("argument outside domain: {0}")]
    Domain(String),
}

impl SpecFunError {
    pub fn domain(msg: impl Into<String>) -> Self {
        SpecFunError::Domain(msg.into())
    }
}
