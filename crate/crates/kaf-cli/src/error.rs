use kaf_transform::TransformError;
use std::fmt;

/// Failure classes mapped to exit codes: usage/config errors exit 2,
/// numerical non-convergence exits 3 (verification failures exit 1 but are
/// not errors — they are reported results).
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numeric(String),
}

pub const EXIT_VERIFY_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Numeric(_) => EXIT_NUMERIC,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Numeric(m) => write!(f, "{m}"),
        }
    }
}

impl From<TransformError> for CliError {
    fn from(e: TransformError) -> Self {
        match e {
            TransformError::Convergence(m) => CliError::Numeric(m),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<kaf_kernels::KernelError> for CliError {
    fn from(e: kaf_kernels::KernelError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<kaf_sl2::Sl2Error> for CliError {
    fn from(e: kaf_sl2::Sl2Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<kaf_quadrature::QuadError> for CliError {
    fn from(e: kaf_quadrature::QuadError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}
