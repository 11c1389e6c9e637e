use thiserror::Error;

#[derive(Debug, Error)]
pub enum Sl2Error {
    #[error(transparent)]
    SpecFun(#[from] kaf_specfun::SpecFunError),
    #[error(transparent)]
    Quad(#[from] kaf_quadrature::QuadError),
    #[error(transparent)]
    Dunkl(#[from] kaf_dunkl::DunklError),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("truncation error: {0}")]
    Truncation(String),
}

impl Sl2Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Sl2Error::Domain(msg.into())
    }

    pub fn truncation(msg: impl Into<String>) -> Self {
        Sl2Error::Truncation(msg.into())
    }
}
