//! Connected-partition decompositions and improper colourings for graphs
//! excluding a complete minor, a complete-bipartite minor, or an immersion.
//!
//! The crate is organised around three layers:
//!
//! - constructive algorithms that either produce a width-bounded connected
//!   partition (and colourings derived from it) or a minor-model certificate
//!   refuting the hypothesis ([`kt_decomp`], [`bipartite`], [`immersion`]);
//! - the LexBFS machinery those algorithms are built on ([`lexbfs`],
//!   [`skeleton`], [`partition`], [`colnums`]);
//! - independent brute-force verifiers for every emitted object ([`oracles`]).
//!
//! All algorithms are deterministic: vertex sets iterate in sorted order and
//! every tie is broken by smallest vertex id, so certificates and reports are
//! reproducible byte for byte.

pub mod bipartite;
pub mod colnums;
pub mod error;
pub mod graph;
pub mod immersion;
pub mod kt_decomp;
pub mod lexbfs;
pub mod oracles;
pub mod partition;
pub mod skeleton;

pub use error::Error;
pub use graph::{BlockCutTree, Family, Graph};
pub use kt_decomp::{DecompositionOutcome, MinorModel, Pattern};
pub use partition::{Colouring, ConnectedPartition, PartMeta};
