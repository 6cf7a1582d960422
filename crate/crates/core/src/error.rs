use thiserror::Error;

/// Errors produced by partition, map and series operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cell (col={col}, row={row}) is not in the diagram")]
    CellOutOfDiagram { col: u32, row: u32 },

    /// `map` is one of `rho1`, `psi2`, `rho1_inv`, `psi2_inv`.
    #[error("{map} is undefined on a diagram with first row {first_row} and first column {first_col}")]
    UndefinedMap { map: &'static str, first_row: u32, first_col: u32 },

    /// `step` is the 1-based composition index (outermost-first) whose map failed.
    #[error("inadmissible composition (fails at step {step})")]
    Inadmissible { step: usize },

    #[error("domain violation: {0}")]
    DomainViolation(String),

    #[error("series q-bounds differ ({left} vs {right})")]
    BoundMismatch { left: u32, right: u32 },

    #[error("geometric factor with q-exponent 0 cannot be inverted under q-truncation")]
    NonInvertible,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
