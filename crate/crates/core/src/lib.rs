//! Colored Gaussian graphical models on RCOP block graphs.
//!
//! The crate decides whether a colored graph is an RCOP block graph, builds
//! the shortest-path monomial maps and the completion graph, emits a Markov
//! basis of the toric vanishing ideal, and checks every artifact against
//! exact-arithmetic and brute-force oracles.
//!
//! ```
//! use rcop_toric::{corpus, markov};
//!
//! let paw = corpus::paw();
//! let basis = markov::rcop_basis(&paw).unwrap();
//! assert_eq!(basis.len(), 6);
//! ```

pub mod blockpath;
pub mod corpus;
pub mod error;
pub mod generate;
pub mod graph;
pub mod linalg;
pub mod markov;
pub mod symmetry;
pub mod toric;
pub mod verify;

mod union_find;

pub use error::{Error, Result};
pub use graph::{ColorId, ColorKind, ColoredGraph, Edge};
