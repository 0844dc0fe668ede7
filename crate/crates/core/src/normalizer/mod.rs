//! Labels and degrees of the p'-degree characters of Sylow normalizers
//! `N_n`, together with the distinguished label families used when
//! matching against symmetric-group characters.

mod labels;
mod subsets;
mod wreath;

pub use labels::{enum_norm_pk, NormPkLabel};
pub use subsets::{case_one_m_set, distinguished_subset, Family};
pub use wreath::{enum_norm_apk, enum_norm_n, max_degree_apk, Digit, NormalizerCharLabel, WreathAssignment};
