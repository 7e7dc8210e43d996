//! König–Egerváry set collections and graphs.
//!
//! * [`sets`]: relevance, the `e` functional, KE and hereditary-KE (hke)
//!   predicates by three independent routes, partition and removal defects,
//!   and the m-invariant with its signed partition law.
//! * [`graph`]: exact α, μ and `Ω(G)`, KE-graph recognition, hke
//!   certificates, and realizability of a collection inside some `Ω(G)`.
//! * [`explorer`]: seeded instance generators and a stress harness that
//!   checks each theorem over exhaustive small instances.
//! * [`cli`]: the `ke` command-line front end.

pub mod cli;
mod error;
pub mod explorer;
pub mod graph;
pub mod io;
mod limits;
pub mod report;
pub mod sets;

pub use error::{Error, Result};
pub use graph::{Graph, Matching};
pub use limits::{Limits, MAX_ENUMERABLE_MEMBERS, MAX_GRAPH_VERTICES};
pub use sets::{
    alpha, compute_m, e_value, is_hke_bruteforce, is_hke_bruteforce_bounded, is_hke_via_duality,
    is_hke_via_existential, is_ke, partition_defect, refines, removal_defect, signed_partition_law,
    triangle_hke_check, Bipartition, FiniteSet, MInvariantResult, SetCollection,
};
