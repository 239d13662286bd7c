use thiserror::Error;

/// Errors raised by the exact arithmetic, geometry and module layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: q = {left} vs q = {right}")]
    RingMismatch { left: u32, right: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("unsupported field order q = {0} (supported: 2, 3, 5, 7)")]
    UnsupportedQ(u64),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("ambient space mismatch: {0}")]
    AmbientMismatch(String),

    #[error("invalid subspace: {0}")]
    InvalidSubspace(String),

    #[error("invalid module type (alpha={alpha}, beta={beta}, rho={rho}) for h={h}, k={k}")]
    InvalidType {
        alpha: i64,
        beta: i64,
        rho: i64,
        h: i64,
        k: i64,
    },

    #[error("capacity exceeded: {size} elements > cap {cap}")]
    Capacity { size: String, cap: u64 },

    #[error("module of type {0} has no weight space at level k; endpoint data undefined")]
    NoLevelK(String),

    #[error("central scalar collision between types {0} and {1}")]
    ScalarCollision(String, String),

    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
