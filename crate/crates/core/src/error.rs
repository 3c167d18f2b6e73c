use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument outside the domain of the operation (e.g. a Hermite degree
    /// above the basis order).
    #[error("domain error: {0}")]
    Domain(String),

    /// Non-finite input values or samples.
    #[error("input error: {0}")]
    Input(String),

    /// Invalid basis configuration.
    #[error("configuration error: {0}")]
    Config(String),

    /// Two operands were built on incompatible bases.
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A sampled family failed the tail-energy test at the current order.
    #[error(
        "family is not of class S at order {order}: column {column} has tail residual {residual:e} > {threshold:e}"
    )]
    NotSchwartzAtResolution {
        order: usize,
        column: usize,
        residual: f64,
        threshold: f64,
    },

    /// A family matrix is too ill-conditioned to act as a basis.
    #[error("ill-conditioned basis: condition number {condition:e} exceeds {bound:e}")]
    IllConditionedBasis { condition: f64, bound: f64 },

    #[error("malformed data: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
