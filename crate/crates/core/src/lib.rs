//! Exact polyhedral toolkit for the total matching polytope.

pub mod balas;
pub mod catalog;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod solver;

pub use error::{Error, Result};
