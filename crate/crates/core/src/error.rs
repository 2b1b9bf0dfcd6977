use thiserror::Error;

/// Errors raised by the simulation library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    #[error("negative time {0}")]
    NegativeTime(f64),

    #[error("angle {name} = {value} outside {range}")]
    AngleOutOfRange { name: &'static str, value: f64, range: &'static str },

    #[error("spectral density of an ideal cavity is a point mass")]
    IdealCavitySpectrum,

    #[error("dominant decay mode is degenerate (Re Ω = {0:e}); evaluate at large τ directly")]
    DegenerateMode(f64),

    #[error("measurement outcome has zero probability (squared norm {0:e})")]
    ZeroProbability(f64),

    #[error("state is not normalized (squared norm {0})")]
    NotNormalized(f64),

    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),

    #[error("grid too coarse for stable integration: |Ω|h = {0}")]
    GridTooCoarse(f64),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid averaging spec: {0}")]
    InvalidAverageSpec(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
