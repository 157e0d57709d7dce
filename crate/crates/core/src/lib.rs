//! Structural sparsity parameters of finite graphs.
//!
//! The crate computes and cross-verifies, at desk scale, the
//! r-neighbourhood complexity `nu_r`, the weak r-colouring number
//! `wcol_r`, the r-centred colouring number `chi_r` and the topological
//! grad at half-integer depths, together with the combinatorial objects
//! that connect them (signature neighbourhoods, blow-up graphs,
//! refinement chains, weak-reachability witness sets).

pub mod centred;
pub mod complexity;
pub mod expansion;
pub mod graph;
pub mod signatures;
pub mod suites;
pub mod wcol;

mod error;

pub use error::{Error, Result};
