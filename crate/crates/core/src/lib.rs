//! Brauer graph algebras.
//!
//! A Brauer graph is read from a `.bg.json` document into a [`graph::BrauerGraph`].
//! From it the crate builds the quiver with relations, computes string syzygies and
//! minimal projective resolutions of simple modules combinatorially, classifies the
//! algebra by Koszul-type properties, and checks every prediction against a
//! brute-force linear-algebra model in [`oracle`].

pub mod census;
pub mod classify;
pub mod cli;
pub mod graph;
pub mod oracle;
pub mod presentation;
pub mod resolution;
pub mod samples;
pub mod strings;
pub mod verify;

pub use graph::{BrauerGraph, GraphData, GraphError, HalfEdge};
pub use presentation::Presentation;
