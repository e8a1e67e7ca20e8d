//! Sunflower contraction and the independent-set pipeline for cycle-free hypergraphs, plus
//! exhaustive small Ramsey numbers `R(C^r_ℓ, K^r_t)`.

mod exact;
mod ordered;
mod pipeline;
mod reduce;

pub use exact::{ramsey_csv, ramsey_exact_small, validate_witness, RamseyReport, RAMSEY_CSV_HEADER};
pub use ordered::{
    bfs_level_independent, increasing_path_partition, validate_classes, validate_increasing, LevelSet, PathPartition,
};
pub use pipeline::{independent_set_pipeline, shadow_baseline, PipelineTrace, Stage, VERIFY_MAX_N};
pub use reduce::{
    contract_sunflowers, linear_extract, local_sparsity_audit, pair_load_bound, remove_supersets, two_q_linearity,
    PairLoad, SparsityAudit, SparsityRow,
};
