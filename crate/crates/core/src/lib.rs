//! Spectral graph theory toolkit for signless Laplacian Nordhaus–Gaddum bounds.

pub mod algebraic;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod partitions;
pub mod poly;
pub mod spectra;
pub mod theorems;

pub use algebraic::AlgebraicReal;
pub use error::{Error, Result};
pub use graph::{from_graph6, parse_family, to_graph6, Graph, HFamilyParams, MAX_ORDER};
pub use poly::Poly;
