//! Edge-graceful labelings of disjoint unions of 2r-regular multigraphs.
//!
//! A `(p, q)` multigraph is edge graceful when its edges can be labeled
//! `1..=q` so that the vertex sums, reduced modulo `p`, are all distinct.
//! This crate builds such labelings for `kG` (odd `k`) out of a labeling or
//! a striation of `G`, checks the known necessary conditions, verifies
//! labelings and striations, and provides exhaustive backtracking searches
//! that both supply base labelings and cross-check the constructions on
//! small instances.
//!
//! Label arithmetic is generic over the unsigned integer type (see
//! [`Label`]); the aliases below fix it to `u64` or `u32`.

pub mod budget;
pub mod conditions;
pub mod error;
pub mod factor;
pub mod graph;
pub mod label;
pub mod labeling;
pub mod lifting;
pub mod search;
pub mod striation;
mod text;

pub use budget::{SearchBudget, SearchOutcome, SearchStatus};
pub use conditions::{
    graph_conditions, lo_condition, union_feasibility, ConditionReport, Requirement,
};
pub use error::{Error, Result, Violation};
pub use factor::{two_factorize, FactorizationDefect, TwoFactorization};
pub use graph::{
    cartesian_product, complete, cycle, cycle_power, disjoint_union, regularity, MultiGraph,
    RegularityInfo, UnionIndex,
};
pub use label::Label;
pub use labeling::{
    induced_vertex_labels, verify_edge_graceful, EdgeLabeling, GracefulVerdict, InducedLabels,
    LabelDefect,
};
pub use lifting::{
    induced_shift_check, lift_striaeform, lift_theorem2, LiftMethod, LiftPlan, Lifted,
};
pub use search::{conjecture_sweep, search_edge_graceful, search_striation};
pub use striation::{
    extract_stria_bases, residue_rep, verify_striation, StriaBases, StriaEntry, Striation,
    StriationVerdict,
};

pub type EdgeLabeling64 = EdgeLabeling<u64>;
pub type EdgeLabeling32 = EdgeLabeling<u32>;
pub type Striation64 = Striation<u64>;
pub type Striation32 = Striation<u32>;
pub type InducedLabels64 = InducedLabels<u64>;
pub type GracefulVerdict64 = GracefulVerdict<u64>;
pub type Lifted64 = Lifted<u64>;
