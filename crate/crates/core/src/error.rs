use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Squared amplitudes of an initial state do not sum to one.
    #[error("state is not normalized: sum of |c|^2 = {norm}")]
    Normalization { norm: f64 },

    /// A probability or grid parameter left its allowed range.
    #[error("{what} = {value} is outside {range}")]
    Domain {
        what: &'static str,
        value: f64,
        range: &'static str,
    },

    /// The state carries weight on the |121>/|212> or |112>/|221> pairs.
    #[error("state is not admissible for the symmetric game: w3 = {w3}, w4 = {w4}")]
    Admissibility { w3: f64, w4: f64 },

    #[error("coalition analysis needs a two-member coalition, got {size} member(s)")]
    CoalitionSize { size: usize },

    #[error("degenerate zero-sum game: {0}")]
    Degenerate(&'static str),

    #[error("not a density matrix: {0}")]
    NotDensityMatrix(String),
}
