//! Exact analysis of prime-order element graphs of finite groups.
//!
//! Γ(G) has the elements of a finite group G as vertices, with x ~ y
//! whenever x ≠ y and the order of xy is prime. This crate builds these
//! graphs (and general Cayley sum graphs over abelian groups), computes
//! adjacency and Laplacian spectra in exact integer arithmetic, decides
//! planarity and clique numbers, classifies components against structural
//! templates, and checks equitable-partition quotients. All results are
//! exact; floating point appears only in optional sanity cross-checks.

pub mod catalog;
pub mod clique;
pub mod error;
pub mod graph;
pub mod group;
pub mod matrix;
pub mod numth;
pub mod planar;
pub mod poly;
pub mod spectra;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{build_cayley_sum, build_poeg, Graph};
pub use group::{CharacterIndex, Group, GroupSpec};
pub use matrix::IntMatrix;
pub use poly::IntPoly;
pub use spectra::{MatrixKind, SpectrumReport};
