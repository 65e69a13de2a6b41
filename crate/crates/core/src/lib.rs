//! Exact rational convex polytopes in dimensions 2 to 4.
//!
//! The crate computes Minkowski combinations, volumes and the mixed volume
//! `V_{n-1,1}`, and turns the Brunn-Minkowski inequality, the Minkowski mixed
//! volume inequality and their equality case (homothety) into exact decision
//! procedures. Everything geometric is exact; decimal renderings appear only
//! where a quantity is irrational (n-th roots, lengths) and are labeled as such.

pub mod arith;
pub mod error;
pub mod exec;
pub mod geometry;
pub mod grids;
pub mod homothety;
pub mod inequality;
pub mod minkowski;
pub mod random;
pub mod reconstruct;
pub mod steiner;

pub use arith::{Decimal, Rat};
pub use error::{Error, Result};
pub use exec::Exec;
pub use geometry::{bodies_equal, project, Direction, Facet, Polytope, Projection, Subspace, Vector};
