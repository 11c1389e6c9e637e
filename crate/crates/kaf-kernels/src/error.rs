use thiserror::Error;

#[derive(Debug, Error)]
pub enum KernelError {
    #[error(transparent)]
    SpecFun(#[from] kaf_specfun::SpecFunError),
    #[error(transparent)]
    Quad(#[from] kaf_quadrature::QuadError),
    #[error(transparent)]
    Dunkl(#[from] kaf_dunkl::DunklError),
    #[error(transparent)]
    Sl2(#[from] kaf_sl2::Sl2Error),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("unsupported scope: {0}")]
    Scope(String),
}

impl KernelError {
    pub fn domain(msg: impl Into<String>) -> Self {
        KernelError::Domain(msg.into())
    }

    pub fn pole(msg: impl Into<String>) -> Self {
        KernelError::Pole(msg.into())
    }

    pub fn scope(msg: impl Into<String>) -> Self {
        KernelError::Scope(msg.into())
    }
}
