use thiserror::Error;

#[derive(Debug, Error)]
pub enum TransformError {
    #[error(transparent)]
    SpecFun(#[from] kaf_specfun::SpecFunError),
    #[error(transparent)]
    Quad(#[from] kaf_quadrature::QuadError),
    #[error(transparent)]
    Dunkl(#[from] kaf_dunkl::DunklError),
    #[error(transparent)]
    Sl2(#[from] kaf_sl2::Sl2Error),
    #[error(transparent)]
    Kernel(#[from] kaf_kernels::KernelError),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("scope error: {0}")]
    Scope(String),
    #[error("convergence error: {0}")]
    Convergence(String),
}

impl TransformError {
    pub fn domain(msg: impl Into<String>) -> Self {
        TransformError::Domain(msg.into())
    }

    pub fn scope(msg: impl Into<String>) -> Self {
        TransformError::Scope(msg.into())
    }

    pub fn convergence(msg: impl Into<String>) -> Self {
        TransformError::Convergence(msg.into())
    }
}
