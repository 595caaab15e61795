//! Ideals generated by the diagonal 2-minors of a graph, realized as toric
//! ideals.
//!
//! The crate builds the vector configuration `A_G` of a graph `G`, computes
//! Gröbner, circuit, Graver and universal Gröbner bases of the ideal `P_G`
//! with exact integer arithmetic, and constructs graphs `H` whose toric
//! ideal `I_H` equals `P_G`.

pub mod algebra;
pub mod bases;
pub mod constructions;
pub mod encoding;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod matrix;
pub mod suite;
pub mod var;
pub mod worked_examples;

pub use error::{Error, ParseError, Result};
pub use var::VarId;
