//! Constructive lemmas: matchings from covers, cross-cuts, rainbow paths, leveled quasi-trees,
//! spiders, and the even and odd level expansions.

mod basic;
mod constants;
mod even;
mod expand;
mod odd;
mod quasi;
mod spider;

pub use basic::{
    cross_cut, matching_from_cover, maximal_matching, rainbow_path, vertex_cover, CrossCut, MatchingCover, VertexCover,
    EXACT_COVER_MAX_N,
};
pub use constants::{
    even_base, even_supply_base, expansion_factor, odd_c, odd_heavy_degree, odd_p, theorem_coefficient,
    theorem_constants, Parity, TheoremConstants,
};
pub use even::{expand_level_even, EvenParams};
pub use expand::{ExpansionOutcome, ExpansionStep, Regime};
pub use odd::{expand_level_odd, OddParams};
pub use quasi::{joining_path, LevelKind, LeveledQuasiTree, SegmentEdge};
pub use spider::{find_spider, Spider, SpiderResult};
