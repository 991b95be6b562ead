//! Exact verification of the principal realization of the Yangian Y(gl(n)).
//!
//! Everything is computed in cyclotomic fields with big-rational
//! coordinates, so each identity is checked with zero tolerance.

pub mod cli;
pub mod error;
pub mod exact_arith;
pub mod principal_gl;
pub mod rep_engine;
pub mod report;
pub mod yangian_core;

pub use error::{Error, Result};
