//! Exact character combinatorics for symmetric groups and their Sylow
//! normalizers: partitions and abaci, p'-degree characters, normalizer
//! labels, Sylow restrictions, and degree-dominating McKay bijections.

pub mod bijection;
pub mod checks;
pub mod error;
pub mod lr;
pub mod normalizer;
pub mod partition;
pub mod scalar;
pub mod sylow;
pub mod sym;

pub use error::{Error, Result};
pub use partition::{
    core_quotient, degree, degree_as, from_core_quotient, is_core, n_s_invariant, BetaSet, CoreQuotient, Hook,
    Partition,
};

/// Arbitrary-precision character degree.
pub type BigDegree = num_bigint::BigUint;
pub type Cyclo = sylow::CycloInt<num_bigint::BigInt>;
