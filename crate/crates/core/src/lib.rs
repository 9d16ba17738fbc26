//! Graphs embedded on surfaces: quadrangulation parity, local colorings,
//! semi-free group labels and the surgeries that build odd quadrangulations.

pub mod constructions;
pub mod error;
pub mod graph;
pub mod localcolor;
pub mod quadform;
pub mod semifree;
pub mod surface;
pub mod trisub;

pub use error::{Error, Result};
