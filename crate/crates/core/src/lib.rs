//! Exact combinatorics of ℓ-regular partitions.
//!
//! A partition is ℓ-regular when none of its parts is divisible by ℓ. This
//! crate provides
//!
//! - [`partition`]: the [`Partition`] type and its literal syntax (`5,3^2,1`)
//! - [`constraint`] and [`enumerate`]: partition families and exhaustive
//!   generators over them
//! - [`maps`]: the involutions ψ_ℓ, the bijection σ_ℓ and Glaisher's
//!   bijection φ_r, with step-by-step traces
//! - [`series`]: truncated power series over big integers and the
//!   generating functions of every counting sequence
//! - [`counting`]: counts by enumeration, series or closed form, and
//!   verifiers for the signed-count identities they satisfy
//!
//! ```
//! use regpart::{maps::psi, Partition};
//!
//! let lambda: Partition = "5,4,3^2,2^2,1".parse().unwrap();
//! let (image, _case) = psi(&lambda, 6).unwrap();
//! assert_eq!(image.to_string(), "5,3^2,2^4,1");
//! ```

pub mod constraint;
pub mod counting;
pub mod enumerate;
pub mod error;
pub mod maps;
pub mod partition;
pub mod series;

pub use constraint::{satisfies, PartitionConstraint};
pub use counting::{
    count, count_table, pair_table, pentagonal_delta1, triangular_delta3, verify_identity,
    verify_parity, CountMethod, IdentityReport, IdentityRow, IdentityTag, PairTable, Stat,
};
pub use enumerate::{enumerate_partitions, tally_lengths, LengthTally, PartitionStream};
pub use error::{Error, Result};
pub use maps::{Action, CaseLabel, MapTrace, Step, StepOrder};
pub use partition::{format_partition, length, parse_partition, weight, Partition, MAX_WEIGHT};
pub use series::{
    gf, product, series_mul, series_reciprocal, FactorKind, FactorSpec, GfKind, TruncatedSeries,
};

pub use num_bigint::BigInt;
