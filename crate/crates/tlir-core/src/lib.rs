//! Locally irregular total colorings.
//!
//! A *total coloring* assigns positive integer colors to the vertices and
//! edges of a graph whose vertices are split into *full* ones (counted in
//! their own degree) and *empty* ones (not counted). For a color k, the total
//! k-degree of a vertex is the number of incident k-edges, plus one when the
//! vertex itself is colored k. A coloring is *locally irregular* when every
//! colored edge sees two different total degrees of its own class at its
//! endpoints.
//!
//! The crate provides, in layers:
//!
//! - [`graph`], [`blocks`], [`classify`]: the data model, block–cut trees,
//!   and class recognizers with certificates;
//! - [`coloring`]: partial total colorings and the verifiers everything else
//!   is measured against;
//! - [`oracle`]: exhaustive minimum-color searches for desk-size graphs,
//!   used to cross-check the constructive algorithms;
//! - [`bipartite`], [`cactus`], [`subcubic`], [`split`], [`chromatic`],
//!   [`acyclic`]: constructive colorings for the supported graph classes,
//!   each self-verifying its output before returning;
//! - [`generate`]: seeded random and exhaustive graph generators for tests
//!   and the command line.
//!
//! Every constructive entry point runs the independent verifier on its own
//! result and reports an internal-invariant error instead of returning a bad
//! coloring.

#![forbid(unsafe_code)]

pub mod acyclic;
pub mod bipartite;
pub mod blocks;
pub mod cactus;
pub mod chromatic;
pub mod split;
pub mod classify;
pub mod coloring;
pub mod error;
pub mod generate;
mod mis;
pub mod oracle;
pub mod graph;
pub mod subcubic;

pub use coloring::TotalColoring;
pub use error::{Error, Result};
pub use graph::TotalGraph;
