//! Exact rational geometry substrate: vectors, hulls, support functions,
//! projections.

pub(crate) mod hull;
pub mod linalg;
mod polytope;
mod subspace;
mod vector;

pub use polytope::{bodies_equal, Facet, Polytope, MAX_AMBIENT_DIM, MIN_AMBIENT_DIM};
pub use subspace::{project, shadow, Projection, Subspace};
pub use vector::{Direction, Vector};
