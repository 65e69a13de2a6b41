//! Exact convex hulls of full-dimensional point sets in R^1..R^4.
//!
//! R^2 uses Andrew's monotone chain. R^3 and R^4 use beneath-beyond
//! insertion over a simplicial boundary, followed by merging coplanar
//! simplices into facets keyed by their primitive integer normal. A facet is
//! visible from a new point only when the point lies strictly above it, so
//! points coplanar with a facet never delete it.

use std::collections::HashMap;

use num_traits::{Signed, Zero};

use super::linalg::{affine_basis, cross, primitive, rank};
use super::vector::Vector;
use crate::arith::{factorial, int, Rat};

#[derive(Clone, Debug)]
pub(crate) struct RawFacet {
    pub normal: Vector,
    pub offset: Rat,
    /// Indices (into the input) of the extreme points on this facet.
    pub points: Vec<usize>,
    pub pseudo_volume: Rat,
}

#[derive(Clone, Debug)]
pub(crate) struct RawHull {
    pub vertices: Vec<usize>,
    pub facets: Vec<RawFacet>,
    pub volume: Rat,
}

/// Hull of a deduplicated point set whose affine span is the whole space.
pub(crate) fn full_hull(points: &[Vector]) -> RawHull {
    match points[0].dim() {
        1 => interval(points),
        2 => monotone_chain(points),
        _ => beneath_beyond(points),
    }
}

fn interval(points: &[Vector]) -> RawHull {
    let lo = (0..points.len()).min_by(|&a, &b| points[a].cmp(&points[b])).unwrap();
    let hi = (0..points.len()).max_by(|&a, &b| points[a].cmp(&points[b])).unwrap();
    let facets = vec![
        RawFacet {
            normal: Vector::from_ints(&[-1]),
            offset: -&points[lo][0],
            points: vec![lo],
            pseudo_volume: int(1),
        },
        RawFacet {
            normal: Vector::from_ints(&[1]),
            offset: points[hi][0].clone(),
            points: vec![hi],
            pseudo_volume: int(1),
        },
    ];
    RawHull {
        vertices: vec![lo, hi],
        facets,
        volume: &points[hi][0] - &points[lo][0],
    }
}

fn turn(o: &Vector, a: &Vector, b: &Vector) -> Rat {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Counter-clockwise indices of the strictly extreme points of a planar set.
pub(crate) fn ccw_hull_indices(points: &[Vector]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].cmp(&points[b]));
    let mut chain: Vec<usize> = Vec::with_capacity(2 * order.len());
    for pass in 0..2 {
        let start = chain.len();
        let iter: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(order.iter())
        } else {
            Box::new(order.iter().rev())
        };
        for &i in iter {
            while chain.len() >= start + 2 {
                let k = chain.len();
                if turn(&points[chain[k - 2]], &points[chain[k - 1]], &points[i]).is_positive() {
                    break;
                }
                chain.pop();
            }
            chain.push(i);
        }
        chain.pop();
    }
    chain
}

fn monotone_chain(points: &[Vector]) -> RawHull {
    let ring = ccw_hull_indices(points);
    let k = ring.len();
    let mut facets = Vec::with_capacity(k);
    let mut twice_area = Rat::zero();
    for i in 0..k {
        let (a, b) = (ring[i], ring[(i + 1) % k]);
        let (pa, pb) = (&points[a], &points[b]);
        twice_area += &pa[0] * &pb[1] - &pa[1] * &pb[0];
        let outward = cross(&[pb - pa]);
        let normal = primitive(&outward);
        facets.push(RawFacet {
            offset: normal.dot(pa),
            pseudo_volume: outward.dot(&normal),
            normal,
            points: vec![a, b],
        });
    }
    RawHull {
        vertices: ring,
        facets,
        volume: twice_area / int(2),
    }
}

struct Simplex {
    verts: Vec<usize>,
    normal: Vector,
    offset: Rat,
}

fn oriented_simplex(points: &[Vector], verts: Vec<usize>, interior: &Vector) -> Simplex {
    let p0 = &points[verts[0]];
    let rows: Vec<Vector> = verts[1..].iter().map(|&v| &points[v] - p0).collect();
    let mut normal = cross(&rows);
    debug_assert!(!normal.is_zero(), "degenerate boundary simplex");
    if normal.dot(interior) > normal.dot(p0) {
        normal = normal.neg();
    }
    let offset = normal.dot(p0);
    Simplex {
        verts,
        normal,
        offset,
    }
}

fn beneath_beyond(points: &[Vector]) -> RawHull {
    let d = points[0].dim();
    let seed = affine_basis(points);
    assert_eq!(seed.len(), d + 1, "input is not full-dimensional");

    let mut interior = Vector::zero(d);
    for &i in &seed {
        interior = &interior + &points[i];
    }
    let interior = interior.scaled(&Rat::new(1.into(), (d as i64 + 1).into()));

    let mut simplices: Vec<Simplex> = (0..=d)
        .map(|skip| {
            let verts: Vec<usize> = seed
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != skip)
                .map(|(_, &v)| v)
                .collect();
            let mut verts = verts;
            verts.sort_unstable();
            oriented_simplex(points, verts, &interior)
        })
        .collect();

    let mut in_seed = vec![false; points.len()];
    for &i in &seed {
        in_seed[i] = true;
    }

    for (i, p) in points.iter().enumerate() {
        if in_seed[i] {
            continue;
        }
        let visible: Vec<bool> = simplices
            .iter()
            .map(|s| s.normal.dot(p) > s.offset)
            .collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }
        let mut ridges: HashMap<Vec<usize>, u32> = HashMap::new();
        for (s, _) in simplices.iter().zip(&visible).filter(|(_, &v)| v) {
            for skip in 0..s.verts.len() {
                let ridge: Vec<usize> = s
                    .verts
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &v)| v)
                    .collect();
                *ridges.entry(ridge).or_insert(0) += 1;
            }
        }
        let mut keep = visible.iter().map(|v| !v);
        simplices.retain(|_| keep.next().unwrap());
        for (ridge, count) in ridges {
            if count != 1 {
                continue;
            }
            let mut verts = ridge;
            verts.push(i);
            verts.sort_unstable();
            simplices.push(oriented_simplex(points, verts, &interior));
        }
    }

    merge_simplices(points, &simplices, &interior)
}

fn merge_simplices(points: &[Vector], simplices: &[Simplex], interior: &Vector) -> RawHull {
    let d = points[0].dim();
    let ridge_factorial = Rat::from_integer(factorial(d - 1));
    let full_factorial = Rat::from_integer(factorial(d));

    let mut groups: HashMap<Vector, Rat> = HashMap::new();
    let mut volume = Rat::zero();
    let mut boundary: Vec<usize> = Vec::new();
    for s in simplices {
        let key = primitive(&s.normal);
        let piece = s.normal.dot(&key).abs() / &ridge_factorial;
        *groups.entry(key).or_insert_with(Rat::zero) += piece;
        volume += (&s.offset - s.normal.dot(interior)).abs() / &full_factorial;
        boundary.extend_from_slice(&s.verts);
    }
    boundary.sort_unstable();
    boundary.dedup();

    let mut facets: Vec<RawFacet> = groups
        .into_iter()
        .map(|(normal, pseudo_volume)| {
            let offset = normal.dot(&points[boundary_point_on(&normal, points, &boundary)]);
            RawFacet {
                normal,
                offset,
                points: Vec::new(),
                pseudo_volume,
            }
        })
        .collect();

    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); points.len()];
    for (fi, f) in facets.iter().enumerate() {
        for &q in &boundary {
            if f.normal.dot(&points[q]) == f.offset {
                incident[q].push(fi);
            }
        }
    }
    let vertices: Vec<usize> = boundary
        .iter()
        .copied()
        .filter(|&q| {
            let normals: Vec<Vector> = incident[q].iter().map(|&f| facets[f].normal.clone()).collect();
            normals.len() >= d && rank(&normals) == d
        })
        .collect();
    for &v in &vertices {
        for &f in &incident[v] {
            facets[f].points.push(v);
        }
    }
    RawHull {
        vertices,
        facets,
        volume,
    }
}

/// Any boundary point maximizing `normal`; used to pin the facet offset.
fn boundary_point_on(normal: &Vector, points: &[Vector], boundary: &[usize]) -> usize {
    boundary
        .iter()
        .copied()
        .max_by(|&a, &b| normal.dot(&points[a]).cmp(&normal.dot(&points[b])))
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;

    fn cube_points(extra: &[Vector]) -> Vec<Vector> {
        let mut pts = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    pts.push(Vector::from_ints(&[x, y, z]));
                }
            }
        }
        pts.extend_from_slice(extra);
        pts
    }

    #[test]
    fn cube_with_coplanar_and_interior_points() {
        let extra = vec![
            Vector::new(vec![frac(1, 2), frac(1, 2), frac(1, 2)]),
            Vector::new(vec![frac(1, 2), frac(1, 2), int(0)]),
            Vector::new(vec![frac(1, 2), int(0), int(0)]),
        ];
        let pts = cube_points(&extra);
        let h = full_hull(&pts);
        assert_eq!(h.vertices.len(), 8);
        assert_eq!(h.facets.len(), 6);
        assert_eq!(h.volume, int(1));
        for f in &h.facets {
            assert_eq!(f.points.len(), 4);
            assert_eq!(f.pseudo_volume, int(1));
        }
    }

    #[test]
    fn square_drops_collinear_points() {
        let pts = vec![
            Vector::from_ints(&[0, 0]),
            Vector::from_ints(&[2, 0]),
            Vector::from_ints(&[1, 0]),
            Vector::from_ints(&[2, 2]),
            Vector::from_ints(&[0, 2]),
            Vector::from_ints(&[1, 1]),
        ];
        let h = full_hull(&pts);
        assert_eq!(h.vertices.len(), 4);
        assert_eq!(h.volume, int(4));
    }

    #[test]
    fn four_dimensional_cross_polytope() {
        let mut pts = Vec::new();
        for i in 0..4 {
            for s in [-1, 1] {
                let mut c = [0i64; 4];
                c[i] = s;
                pts.push(Vector::from_ints(&c));
            }
        }
        pts.push(Vector::zero(4));
        let h = full_hull(&pts);
        assert_eq!(h.vertices.len(), 8);
        assert_eq!(h.facets.len(), 16);
        // 2^4 / 4! = 2/3
        assert_eq!(h.volume, frac(2, 3));
    }
}
