//! Characters of symmetric groups: p'-degree enumeration, blocks by
//! p^k-core, Δ strata, Murnaghan–Nakayama values and hook addition.

mod block;
mod hook_add;
mod mn;
mod pprime;
mod tuples;

pub use block::{block, delta_sets, delta_stratum, PPrimeBlock};
pub use hook_add::add_hook_partitions;
pub use mn::{mn_value, MnCache};
pub use pprime::{count_pprime, enumerate_pprime, enumerate_pprime_bruteforce, top_digit, TopDigit};
pub use tuples::{count_tuples, partition_tuples, tuples_where};
