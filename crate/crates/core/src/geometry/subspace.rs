//! Linear subspaces with rational bases and orthogonal projection onto them.
//!
//! A projected body is expressed in the coordinates `y = (b_1 . x, ..., b_k . x)`
//! for basis `b_1..b_k`. In these coordinates the restriction identity holds
//! verbatim: for `w = sum a_i b_i` in the subspace, `h_{K_xi}(a) = h_K(w)`.
//! Intrinsic k-volumes are recovered as `vol_y(image)^2 / det(Gram)` (rational).

use num_traits::Zero;

use super::linalg::{det, EchelonBasis};
use super::polytope::Polytope;
use super::vector::{Direction, Vector};
use crate::arith::Rat;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: Vec<Vector>,
    gram: Vec<Vec<Rat>>,
}

impl Subspace {
    pub fn new(basis: Vec<Vector>) -> Result<Subspace> {
        let n = basis.first().ok_or(Error::DegenerateBasis)?.dim();
        if basis.len() >= n || basis.iter().any(|b| b.dim() != n) {
            return Err(Error::DegenerateBasis);
        }
        let mut echelon = EchelonBasis::new();
        if !basis.iter().all(|b| echelon.insert(b)) {
            return Err(Error::DegenerateBasis);
        }
        let gram = basis
            .iter()
            .map(|a| basis.iter().map(|b| a.dot(b)).collect())
            .collect();
        Ok(Subspace { basis, gram })
    }

    /// Span of the given standard axes.
    pub fn coordinate(n: usize, axes: &[usize]) -> Result<Subspace> {
        Self::new(axes.iter().map(|&i| Vector::axis(n, i)).collect())
    }

    /// `w^perp`, with basis `w_j e_i - w_i e_j` (`i != j`) for the first index
    /// `j` where `w_j != 0`. For `w = e_n` this is `e_1, ..., e_{n-1}`.
    pub fn orthogonal_complement(w: &Direction) -> Subspace {
        let w = w.vector();
        let n = w.dim();
        let j = (0..n).find(|&i| !w[i].is_zero()).expect("non-zero direction");
        let basis: Vec<Vector> = (0..n)
            .filter(|&i| i != j)
            .map(|i| {
                let mut c = Vector::zero(n).into_coords();
                c[i] = w[j].clone();
                c[j] = -&w[i];
                Vector::new(c)
            })
            .collect();
        Subspace::new(basis).expect("complement basis is independent")
    }

    /// `Span{vectors}^perp` for independent `vectors`, by exact Gram-Schmidt.
    pub fn complement_of_span(vectors: &[Vector]) -> Result<Subspace> {
        let n = vectors.first().ok_or(Error::DegenerateBasis)?.dim();
        let mut ortho: Vec<Vector> = Vec::new();
        let reduce = |v: &Vector, ortho: &[Vector]| {
            ortho.iter().fold(v.clone(), |r, o| {
                let f = r.dot(o) / o.norm_squared();
                r.add_scaled(&-f, o)
            })
        };
        for v in vectors {
            let u = reduce(v, &ortho);
            if u.is_zero() {
                return Err(Error::DegenerateBasis);
            }
            ortho.push(u);
        }
        let mut basis = Vec::new();
        for i in 0..n {
            if ortho.len() == n {
                break;
            }
            let r = reduce(&Vector::axis(n, i), &ortho);
            if !r.is_zero() {
                ortho.push(r.clone());
                basis.push(r);
            }
        }
        Subspace::new(basis)
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis[0].dim()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn gram(&self) -> &[Vec<Rat>] {
        &self.gram
    }

    pub fn gram_det(&self) -> Rat {
        det(&self.gram)
    }

    /// Coordinates `(b_i . x)_i` of the projection of `x`.
    pub fn coordinates(&self, x: &Vector) -> Vector {
        Vector::new(self.basis.iter().map(|b| b.dot(x)).collect())
    }

    /// The ambient vector `sum a_i b_i`.
    pub fn embed(&self, a: &Vector) -> Vector {
        let mut out = Vector::zero(self.ambient_dim());
        for (ai, b) in a.coords().iter().zip(&self.basis) {
            out = out.add_scaled(ai, b);
        }
        out
    }

    pub fn contains(&self, w: &Vector) -> bool {
        let mut e = EchelonBasis::new();
        for b in &self.basis {
            e.insert(b);
        }
        e.contains(w)
    }
}

/// Orthogonal projection `K_xi`, in the coordinates of [`Subspace::coordinates`].
#[derive(Clone, Debug)]
pub struct Projection {
    pub body: Polytope,
    pub subspace: Subspace,
}

impl Projection {
    /// Degenerate images (of lower dimension than the subspace) are legal.
    pub fn is_degenerate(&self) -> bool {
        !self.body.is_full_dimensional()
    }

    /// Squared intrinsic k-volume of the projection: `vol_y^2 / det(Gram)`.
    pub fn squared_volume(&self) -> Rat {
        let v = self.body.cached_volume();
        v * v / self.subspace.gram_det()
    }
}

pub fn project(k: &Polytope, xi: &Subspace) -> Result<Projection> {
    k.require_dim(xi.ambient_dim())?;
    let images: Vec<Vector> = k.vertices().iter().map(|v| xi.coordinates(v)).collect();
    Ok(Projection {
        body: Polytope::from_points(&images)?,
        subspace: xi.clone(),
    })
}

/// Projection onto `w^perp`.
pub fn shadow(k: &Polytope, w: &Direction) -> Result<Projection> {
    k.require_dim(w.dim())?;
    project(k, &Subspace::orthogonal_complement(w))
}
