//! Complete-graph decompositions (planar, outerplanar, girth-4), the optimal
//! complete colorings built on them, and the independent machinery that
//! verifies every claim: exact bound formulas, a planarity oracle, partition
//! audits, and brute-force achromatic solvers for desk-scale graphs.

pub mod construct;
pub mod decompose;
pub mod dot;
pub mod embed;
pub mod error;
pub mod exec;
pub mod factorization;
pub mod graph;
pub mod json;
pub mod platonic;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Mode;
