use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n must be ≥ 2 (got {0})")]
    InvalidN(u32),
    #[error("derivation does not preserve the ideal: y does not divide the d/dy coefficient")]
    NotLogarithmic,
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("unsupported cochain degree {0}: the complex vanishes above degree 2")]
    UnsupportedDegree(usize),
    #[error("image vector {0} is not in the kernel span (d∘d ≠ 0)")]
    ImageNotInKernel(usize),
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable '{name}' at byte {offset}")]
    UnknownVariable { name: String, offset: usize },
    #[error("invalid weight window {min}..{max}")]
    InvalidWindow { min: i64, max: i64 },
    #[error("unknown complex variant '{0}'")]
    UnknownVariant(String),
    #[error("variant '{0}' needs parameter {1}")]
    MissingParameter(String, &'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
