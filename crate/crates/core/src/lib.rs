//! Distinguishing chromatic numbers of small graphs.
//!
//! A proper vertex colouring is *distinguishing* when the identity is the
//! only colour-preserving automorphism; the *distinguishing chromatic
//! number* is the minimum number of colours in such a colouring. This crate
//! provides:
//!
//! - an immutable bitmask graph type with graph6 I/O ([`graph`]);
//! - colour-preserving automorphism groups, fixed vertices, certification
//!   and canonical forms ([`symmetry`]);
//! - exact solvers for chromatic and distinguishing chromatic numbers and
//!   the distinguishing chromatic index ([`exact`]);
//! - constructive colouring procedures for C4-free, chordal, 2K2-free,
//!   claw-free and (claw, diamond)-free graphs, with extremal-family
//!   classification ([`constructive`]);
//! - isomorphism-free enumeration of small connected graphs and exhaustive
//!   bound sweeps with JSONL reports and a result cache ([`corpus`]);
//! - the `distchrom` command-line interface ([`cli`]).
//!
//! All types are immutable after construction and all operations are pure,
//! so everything is safe to call concurrently.

pub mod cli;
pub mod constructive;
pub mod corpus;
pub mod error;
pub mod exact;
pub mod graph;
pub mod symmetry;

pub use error::{Error, Result};

/// Solver version used in cache keys and reports.
pub const SOLVER_VERSION: &str = env!("CARGO_PKG_VERSION");
