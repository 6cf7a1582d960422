//! Mod-3 arm/leg weights on integer partitions, the Dyson maps `ρ₁`/`ψ₂`
//! and the decomposition of partitions into {1,2}-compositions, the row
//! insertion bijection `Λ′ × Λ″ → Λ`, and truncated `q,t`-series for the
//! associated generating functions, together with a finite-range
//! verification harness.
//!
//! ```
//! use z3hilb::{dyson, Partition, WeightKind};
//!
//! let lam: Partition = "6,4".parse().unwrap();
//! assert_eq!(lam.weight(WeightKind::WtTilde), 4);
//! assert_eq!(dyson::phi(&lam).count_twos(), 4);
//! ```

pub mod dyson;
pub mod enumerate;
pub mod error;
pub mod insertion;
pub mod partition;
pub mod series;
pub mod shard;
pub mod verify;

pub use enumerate::{compositions_12, partitions_of, partitions_where, Composition12, Part12};
pub use error::{Error, Result};
pub use partition::{Cell, CellStat, Partition, WeightKind};
pub use series::{BiSeries, ProductFormula};
pub use verify::{Check, VerificationReport};
