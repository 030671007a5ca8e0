//! Exact solvers for maximum (weight) colorful independent sets in colored
//! interval graphs, covering job-interval selection and independent sets in
//! edge-wise unions of two interval graphs.
//!
//! The pipeline: normalize interval representations to minimum compactness
//! ([`interval`]), model instances as colored interval graphs or two-graph
//! unions ([`colored`]), then solve exactly with the subset dynamic
//! programs ([`dp`]), the search tree ([`branch`]), randomized recoloring
//! ([`color_coding`]) or cluster-cluster matching, and shrink instances
//! first with the data reduction rules ([`reductions`]). The [`oracle`]
//! module holds independent brute-force solvers used as ground truth in
//! tests, and [`gen`] produces random and satisfiability-derived instances.

pub mod branch;
pub mod color_coding;
pub mod colored;
pub mod dp;
pub mod error;
pub mod gen;
pub mod interval;
pub mod oracle;
pub mod reductions;
pub mod solution;

pub use branch::{first_clique, solve_branch, solve_branch_with, BranchOptions, FirstClique};
pub use color_coding::{recolor, solve_cc, solve_cc_exhaustive, trials_needed, CcConfig};
pub use colored::{
    build_live_index, stats, two_union_to_cisl, ColorSide, ColoredIntervalGraph, GraphStats,
    LiveColorIndex, Side, TwoUnionInstance, VertexMap,
};
pub use dp::{
    decide, solve_dp_gamma, solve_dp_q_value, solve_dp_q_witness, DEFAULT_GAMMA_LIMIT,
    DEFAULT_Q_LIMIT,
};
pub use error::{CoreError, Result};
pub use gen::{gen_cisl, gen_two_union, reduce_sat3, GenParams};
pub use interval::{
    compactify, is_cluster, is_proper_rep, max_length, maximal_cliques, CompactRep, Interval,
    IntervalSet,
};
pub use oracle::{brute_max_cis, brute_pareto, brute_two_union, sat3_satisfiable, Cnf3};
pub use reductions::{
    color_pack_reduce, greedy_maximal_cis, kernelize_proper, pareto_survivors_4d,
    signature_reduce, solve_cluster_cluster, ColorPackReduction, KernelOutcome, Signature,
    SignatureReduction,
};
pub use solution::{check_colorful_independent, check_two_union_independent, Solution, Violation};
