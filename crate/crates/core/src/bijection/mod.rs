//! Degree-dominating bijections between `Irr_{p'}(S_n)` and `Irr_{p'}(N_n)`.

mod engine;
mod matching;
mod verify;

pub use engine::{build_bijection, BijectionRecord, BlockTrace, Pair, Strategy};
pub use matching::{
    dominance_feasible, dominance_match, max_bipartite_matching, relation_match_exists, DegreeRelation,
};
pub use verify::{verify_bijection, VerifyReport};
