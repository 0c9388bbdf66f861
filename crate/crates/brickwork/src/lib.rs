//! Exact combinatorics of brick tilings on symmetric groups.
//!
//! A permutation decomposes into cycles; each cycle becomes a labelled
//! horizontal brick, and the bricks can tile Young diagrams row by row.
//! Counting those tilings (ordered, unordered, or one brick per row)
//! yields class functions on the symmetric group that interpolate between
//! permutation characters and conjugacy-class indicators. This crate
//! computes all of these objects exactly, together with the character
//! theory they decompose into (irreducible characters, Kostka numbers,
//! Kronecker coefficients), character polynomials in cycle-count
//! variables, cycle-index generating series, a GF(2) chain complex built
//! from the tiling poset, and the reduced Kronecker coefficients of hook
//! triples via a generating-function pipeline.
//!
//! Everything is integer or rational arithmetic; there is no floating
//! point anywhere. All enumeration orders are canonical and documented so
//! outputs are byte-stable.

pub mod charpoly;
pub mod classfn;
pub mod cli;
pub mod config;
pub mod counting;
pub mod cycleindex;
pub mod error;
pub mod gf2;
pub mod homology;
pub mod partition;
pub mod permutation;
pub mod poly;
pub mod render;
pub mod rosas;
pub mod schema;
pub mod series;
pub mod tiling;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{compositions_of, partitions_of, Composition, Partition};
pub use permutation::Permutation;
