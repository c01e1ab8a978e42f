use thiserror::Error;

use crate::quadrature::QuadratureError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error(transparent)]
    Quadrature(#[from] QuadratureError),

    #[error("unknown identity `{id}` (known: {})", known.join(", "))]
    UnknownIdentity { id: String, known: Vec<&'static str> },

    #[error("insufficient precision: inputs carry {have} digits, at least {need} are required")]
    InsufficientPrecision { have: u32, need: u32 },

    #[error("no integer relation found with {digits} digits and norm bound {norm_bound:e}")]
    RelationNotFound { digits: u32, norm_bound: f64 },
}
