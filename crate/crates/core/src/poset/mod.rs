//! Matchings on `{1, 2, …}`, the moves between them, and the orders they
//! generate.

mod colored;
mod gamma;
mod matching;
mod moves;
mod search;

pub use colored::{degree_one_leq, degree_one_moves, enumerate_colored_sets, Color, ColoredMove, ColoredSet};
pub use gamma::{example_gamma, replay_remark, sigma, RemarkReplay, ReplayStep};
pub use matching::{
    edge_cmp, edge_leq, enumerate_matchings, perfect_matchings, total_order, total_order_with, Edge, EdgeReading,
    Matching,
};
pub use moves::{all_moves, type1_moves, type2_moves, Move};
pub use search::{
    antichain_search, antichain_search_bounded, bfs_path, comparability_witness, leq, leq_full, leq_type1,
    poset_width, replay, PosetOrder, DEFAULT_BUDGET,
};
