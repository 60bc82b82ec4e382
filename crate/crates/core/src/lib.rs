//! Exact computations with Lie-Yamaguti algebras, their representations and
//! relative Rota-Baxter operators.
//!
//! Everything is carried out over the rationals. Structures are given by
//! structure constants on a chosen basis; identities are certified by
//! evaluating them on all basis tuples, which suffices by multilinearity.
//! Cochain complexes are assembled as explicit matrices so that cohomology
//! reduces to rank computations.

pub mod catalog;
pub mod complex;
pub mod deformation;
pub mod error;
pub mod linalg;
pub mod rbo;
pub mod rbo_cohomology;
pub mod structures;

pub use error::{Error, Result};
