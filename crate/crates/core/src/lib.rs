//! Finite-dimensional algebras given by quivers with relations.
//!
//! The modules build on one another: [`presentation`] parses and normalizes
//! quivers with relations, [`linrep`] computes with their representations,
//! and the remaining modules layer forms, gentle combinatorics, string
//! modules, the repetitive window and structural checks on top.

pub mod error;
pub mod forms;
pub mod gentle;
pub mod linrep;
pub mod presentation;
pub mod repetitive;
pub mod strings;
pub mod structure;

pub use error::{Error, Result};
pub use linrep::{Algebra, Matrix, ModuleMap, Rep, Q};
pub use presentation::{family, parse_presentation, AlgebraPresentation, FamilyParams};
