use num_traits::{Signed, Zero};

use super::hull::{full_hull, RawHull};
use super::linalg::{affine_basis, rank, EchelonBasis};
use super::vector::{Direction, Vector};
use crate::arith::{int, Rat};
use crate::error::{Error, Result};

pub const MIN_AMBIENT_DIM: usize = 2;
pub const MAX_AMBIENT_DIM: usize = 4;

/// Facet of a full-dimensional polytope: `{x : normal . x = offset}` intersected with the body.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    normal: Vector,
    offset: Rat,
    vertex_indices: Vec<usize>,
    pseudo_volume: Rat,
}

impl Facet {
    /// Outward normal, scaled to a primitive integer vector.
    pub fn normal(&self) -> &Vector {
        &self.normal
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    /// Indices into [`Polytope::vertices`] of the vertices on this facet.
    pub fn vertex_indices(&self) -> &[usize] {
        &self.vertex_indices
    }

    /// `(n-1)`-volume of the facet multiplied by `|normal|`; always rational.
    pub fn pseudo_volume(&self) -> &Rat {
        &self.pseudo_volume
    }
}

/// Convex polytope with rational vertices in R^n.
///
/// The vertex list holds extreme points only, sorted lexicographically, so two
/// equal bodies have identical representations. Facets are present only for
/// full-dimensional bodies. Lower-dimensional bodies (segments, faces,
/// degenerate projections) are legal values with volume 0.
#[derive(Clone, Debug)]
pub struct Polytope {
    dim: usize,
    affine_dim: usize,
    vertices: Vec<Vector>,
    facets: Vec<Facet>,
    volume: Rat,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

fn check_points(points: &[Vector], dims: std::ops::RangeInclusive<usize>) -> Result<usize> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let n = first.dim();
    if !dims.contains(&n) {
        return Err(Error::AmbientDim(n));
    }
    if let Some(bad) = points.iter().find(|p| p.dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.dim(),
        });
    }
    Ok(n)
}

impl Polytope {
    /// Hull of a point set spanning R^n, `2 <= n <= 4`.
    pub fn convex_hull(points: &[Vector]) -> Result<Polytope> {
        check_points(points, MIN_AMBIENT_DIM..=MAX_AMBIENT_DIM)?;
        let p = Self::hull_unchecked(points);
        if !p.is_full_dimensional() {
            return Err(Error::Dimension {
                ambient: p.dim,
                affine_dim: p.affine_dim,
            });
        }
        Ok(p)
    }

    /// Hull of any non-empty point set in R^1..R^4; the result may be lower-dimensional.
    pub fn from_points(points: &[Vector]) -> Result<Polytope> {
        check_points(points, 1..=MAX_AMBIENT_DIM)?;
        Ok(Self::hull_unchecked(points))
    }

    fn hull_unchecked(points: &[Vector]) -> Polytope {
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        let n = pts[0].dim();
        let basis = affine_basis(&pts);
        let k = basis.len() - 1;
        if k == n {
            return Self::from_raw(n, &pts, full_hull(&pts));
        }
        if k == 0 {
            return Polytope {
                dim: n,
                affine_dim: 0,
                vertices: vec![pts[0].clone()],
                facets: Vec::new(),
                volume: Rat::zero(),
            };
        }
        // Coordinates on which the affine hull projects injectively.
        let mut echelon = EchelonBasis::new();
        for &i in &basis[1..] {
            echelon.insert(&(&pts[i] - &pts[basis[0]]));
        }
        let mut cols = echelon.pivots();
        cols.sort_unstable();
        let shadow: Vec<Vector> = pts
            .iter()
            .map(|p| Vector::new(cols.iter().map(|&c| p[c].clone()).collect()))
            .collect();
        let raw = full_hull(&shadow);
        let mut vertices: Vec<Vector> = raw.vertices.iter().map(|&i| pts[i].clone()).collect();
        vertices.sort();
        Polytope {
            dim: n,
            affine_dim: k,
            vertices,
            facets: Vec::new(),
            volume: Rat::zero(),
        }
    }

    fn from_raw(n: usize, pts: &[Vector], raw: RawHull) -> Polytope {
        let mut order = raw.vertices.clone();
        order.sort_by(|&a, &b| pts[a].cmp(&pts[b]));
        let mut position = vec![usize::MAX; pts.len()];
        for (canon, &orig) in order.iter().enumerate() {
            position[orig] = canon;
        }
        let vertices: Vec<Vector> = order.iter().map(|&i| pts[i].clone()).collect();
        let mut facets: Vec<Facet> = raw
            .facets
            .into_iter()
            .map(|f| {
                let mut vertex_indices: Vec<usize> =
                    f.points.iter().map(|&i| position[i]).collect();
                vertex_indices.sort_unstable();
                Facet {
                    normal: f.normal,
                    offset: f.offset,
                    vertex_indices,
                    pseudo_volume: f.pseudo_volume,
                }
            })
            .collect();
        facets.sort_by(|a, b| a.normal.cmp(&b.normal));
        Polytope {
            dim: n,
            affine_dim: n,
            vertices,
            facets,
            volume: raw.volume,
        }
    }

    /// Axis-aligned box `[lo_1, hi_1] x ... x [lo_n, hi_n]`.
    pub fn cuboid(lo: &[Rat], hi: &[Rat]) -> Result<Polytope> {
        let n = lo.len();
        let pts: Vec<Vector> = (0..1usize << n)
            .map(|mask| {
                Vector::new(
                    (0..n)
                        .map(|i| {
                            if mask >> i & 1 == 1 {
                                hi[i].clone()
                            } else {
                                lo[i].clone()
                            }
                        })
                        .collect(),
                )
            })
            .collect();
        Self::from_points(&pts)
    }

    /// `[0, 1]^n`.
    pub fn unit_cube(n: usize) -> Polytope {
        Self::cuboid(&vec![int(0); n], &vec![int(1); n]).expect("unit cube")
    }

    /// `conv{o, e_1, ..., e_n}`.
    pub fn standard_simplex(n: usize) -> Polytope {
        let mut pts = vec![Vector::zero(n)];
        pts.extend((0..n).map(|i| Vector::axis(n, i)));
        Self::from_points(&pts).expect("standard simplex")
    }

    /// Segment from `a` to `b`.
    pub fn segment(a: &Vector, b: &Vector) -> Result<Polytope> {
        Self::from_points(&[a.clone(), b.clone()])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the affine hull.
    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == self.dim
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Exact volume from the boundary triangulation; 0 for lower-dimensional bodies.
    pub(crate) fn cached_volume(&self) -> &Rat {
        &self.volume
    }

    pub(crate) fn require_full(&self) -> Result<()> {
        if self.is_full_dimensional() {
            Ok(())
        } else {
            Err(Error::LowerDimensional {
                ambient: self.dim,
                affine_dim: self.affine_dim,
            })
        }
    }

    pub(crate) fn require_dim(&self, n: usize) -> Result<()> {
        if self.dim == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: n,
            })
        }
    }

    /// `h_K(w)` for an arbitrary vector `w` of matching length.
    pub(crate) fn support_vec(&self, w: &Vector) -> Rat {
        self.vertices
            .iter()
            .map(|v| v.dot(w))
            .max()
            .expect("polytope has at least one vertex")
    }

    /// Support function `h_K(w) = max_{x in K} x . w`.
    pub fn support(&self, w: &Direction) -> Result<Rat> {
        self.require_dim(w.dim())?;
        Ok(self.support_vec(w.vector()))
    }

    /// Support set `K^w`: the face of `K` on which `h_K(w)` is attained.
    pub fn support_set(&self, w: &Direction) -> Result<Polytope> {
        let h = self.support(w)?;
        let face: Vec<Vector> = self
            .vertices
            .iter()
            .filter(|v| v.dot(w.vector()) == h)
            .cloned()
            .collect();
        Polytope::from_points(&face)
    }

    /// Average of the vertices. Commutes with homotheties `x -> a x + t`.
    pub fn vertex_centroid(&self) -> Vector {
        let mut sum = Vector::zero(self.dim);
        for v in &self.vertices {
            sum = &sum + v;
        }
        sum.scaled(&Rat::new(1.into(), (self.vertices.len() as i64).into()))
    }

    pub fn translate(&self, t: &Vector) -> Polytope {
        assert_eq!(t.dim(), self.dim);
        Polytope {
            dim: self.dim,
            affine_dim: self.affine_dim,
            vertices: self.vertices.iter().map(|v| v + t).collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet {
                    offset: &f.offset + f.normal.dot(t),
                    ..f.clone()
                })
                .collect(),
            volume: self.volume.clone(),
        }
    }

    /// Dilation `a K` about the origin; `a = 0` collapses to the origin.
    pub fn scale(&self, a: &Rat) -> Result<Polytope> {
        if a.is_negative() {
            return Err(Error::NegativeCoefficient);
        }
        if a.is_zero() {
            return Polytope::from_points(&[Vector::zero(self.dim)]);
        }
        let ridge_factor = crate::arith::pow(a, self.dim as u32 - 1);
        Ok(Polytope {
            dim: self.dim,
            affine_dim: self.affine_dim,
            vertices: self.vertices.iter().map(|v| v.scaled(a)).collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet {
                    offset: &f.offset * a,
                    pseudo_volume: &f.pseudo_volume * &ridge_factor,
                    ..f.clone()
                })
                .collect(),
            volume: &self.volume * &ridge_factor * a,
        })
    }

    /// `a K + t`.
    pub fn homothetic_image(&self, a: &Rat, t: &Vector) -> Result<Polytope> {
        Ok(self.scale(a)?.translate(t))
    }

    /// Image of the body under an arbitrary map of its vertices, re-hulled.
    pub fn map_vertices(&self, f: impl Fn(&Vector) -> Vector) -> Result<Polytope> {
        let pts: Vec<Vector> = self.vertices.iter().map(f).collect();
        Polytope::from_points(&pts)
    }

    /// Whether `x` satisfies every facet inequality. Full-dimensional bodies only.
    pub fn contains(&self, x: &Vector) -> Result<bool> {
        self.require_full()?;
        Ok(self.facets.iter().all(|f| f.normal.dot(x) <= f.offset))
    }

    /// Edges as pairs of vertex indices (full-dimensional bodies, `n >= 2`).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        if !self.is_full_dimensional() {
            return Vec::new();
        }
        let n = self.dim;
        let mut on: Vec<Vec<usize>> = vec![Vec::new(); self.vertices.len()];
        for (fi, f) in self.facets.iter().enumerate() {
            for &v in &f.vertex_indices {
                on[v].push(fi);
            }
        }
        let mut edges = Vec::new();
        for i in 0..self.vertices.len() {
            for j in i + 1..self.vertices.len() {
                let common: Vec<Vector> = on[i]
                    .iter()
                    .filter(|f| on[j].contains(f))
                    .map(|&f| self.facets[f].normal.clone())
                    .collect();
                if common.len() >= n - 1 && rank(&common) == n - 1 {
                    edges.push((i, j));
                }
            }
        }
        edges
    }
}

/// Exact equality of bodies via their canonical vertex lists.
pub fn bodies_equal(k: &Polytope, l: &Polytope) -> bool {
    k == l
}
