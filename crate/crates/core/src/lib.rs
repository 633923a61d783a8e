//! Exact MaxCut parameterized above the Poljak-Turzík bound.
//!
//! Given a graph `G` with positive integer edge weights and an excess `k`,
//! the crate decides whether `G` has a cut of weight at least
//! `w(G)/2 + w_MSF(G)/4 + k/4` and, on request, constructs one. All bound
//! arithmetic happens in quarter units ([`Quarters`]).
//!
//! The pipeline:
//!
//! 1. [`reduction::reduce`] applies eight reduction rules driven by the
//!    block-cut forest, collecting a marked set `S` such that `G − S` is a
//!    uniform-clique-forest, or stopping early once the bound already
//!    certifies the answer.
//! 2. [`ucf::solve_ucf`] solves MaxCut with vertex weights on
//!    uniform-clique-forests in linear time.
//! 3. [`driver`] enumerates the placements of `S` and combines the two.
//! 4. [`reconstruct`] replays a reduction trace backwards to build a witness
//!    cut when the bound alone decides the instance.
//!
//! [`oracle`] holds brute-force ground truth for testing, and [`io`] the
//! graph file format, instance generators and trace records.

pub mod cli;
pub mod driver;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod reconstruct;
pub mod reduction;
pub mod ucf;

pub use driver::{
    combine_subset, decide, decide_k, decide_target, solve, Instance, Verdict, VerdictPath,
};
pub use graph::{
    block_cut_forest, edwards_erdos_quarters, msf_weight, normalize_multigraph,
    poljak_turzik_quarters, target_quarters, BlockCutForest, Cut, GraphError, Quarters, Vertex,
    Weight, WeightedGraph,
};
pub use reduction::{
    apply_rule, check_rule, classify_leaf_block, reduce, select_rule, verify_ucf, Mode,
    ReductionOutcome, ReductionStep, RuleInstance,
};
pub use ucf::{solve_ucf, VertexWeights};
