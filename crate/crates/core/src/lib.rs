//! Combinatorial invariants of graph C*-algebras.
//!
//! A graph is a finite vertex set with edge multiplicities in ℕ ∪ {∞}. From it
//! this crate computes the saturated hereditary vertex sets, the lattice of
//! gauge-invariant ideals `J(H, B)` with their quotient graphs, the
//! gauge-invariant primitive ideals (maximal tails and breaking vertices), the
//! structural conditions (K) and (L), and the groups K₀ and K₁ via the Smith
//! normal form of the vertex-matrix map.
//!
//! The crate is `no_std` and only needs `alloc`. IO lives in `gia-cli`.

#![no_std]

extern crate alloc;

mod error;

pub mod cycles;
pub mod graph;
pub mod hereditary;
pub mod ideals;
pub mod ktheory;
pub mod primitive;

pub use error::Error;
pub use graph::{EGraph, GraphBuilder, Multiplicity, Reachability, Vertex, VertexSet};
pub use ideals::{IdealSpec, Quotient, QuotientVertex};
pub use ktheory::{AbelianGroup, BlockSplit, IntMatrix, KGroups, SnfResult};

/// Default cap on the vertex count for operations that enumerate all subsets.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 20;

/// Hard ceiling for subset enumeration; subsets are walked as `u64` masks.
pub const MAX_ENUMERATION_LIMIT: usize = 63;

pub type Result<T> = core::result::Result<T, Error>;
