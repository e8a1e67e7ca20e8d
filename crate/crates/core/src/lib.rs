//! Linear uniform hypergraphs: linear cycles, linear Turán numbers,
//! lower-bound constructions and Ramsey-type independent-set reductions.
//!
//! The crate is organised bottom-up:
//!
//! * [`hypercore`]: hypergraph storage, shadows, links, expansions, peeling.
//! * [`certify`]: exact searches returning re-checkable certificates.
//! * [`lemma`]: constructive lemmas (matchings, cross-cuts, rainbow paths,
//!   quasi-trees, spiders and the two level-expansion procedures).
//! * [`extremal`]: exact linear Turán numbers by pruned branch-and-bound.
//! * [`construct`]: 3-AP-free sets, the tripartite triangle-free construction
//!   and random packing with deletion.
//! * [`ramsey`]: sunflower contraction and the independent-set pipeline,
//!   plus exhaustive small Ramsey numbers.
//!
//! Numeric thresholds are generic over [`Scalar`]; the aliases below fix the
//! common choices.

pub mod certify;
pub mod construct;
pub mod error;
pub mod extremal;
pub mod gen;
pub mod hypercore;
pub mod lemma;
pub mod ramsey;
pub mod rng;
pub mod scalar;

pub use error::{Error, Result, Violation};
pub use hypercore::{Edge, EdgeId, Hypergraph, LinearHypergraph, PairColoring, Vertex};
pub use scalar::Scalar;

/// Exact rational with machine-word numerator and denominator.
pub type Rational = num_rational::Ratio<i64>;
/// Arbitrary-precision rational.
pub type BigRational = num_rational::BigRational;
/// Double precision scalar.
pub type Real = f64;
/// Single precision scalar.
pub type Real32 = f32;

/// Default node budget for exhaustive searches.
pub const DEFAULT_BUDGET: u64 = 10_000_000;
