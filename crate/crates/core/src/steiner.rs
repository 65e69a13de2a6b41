//! Steiner symmetrization of planar and spatial polytopes.
//!
//! Points are written `x = alpha w + sum beta_i u_i` with `u_i` a basis of
//! `w^perp`. The chord of `K` over a shadow point `beta` is the interval
//! `[lo(beta), hi(beta)]` cut out by the facets that are not parallel to `w`;
//! the symmetral keeps each chord length and centres it at `alpha = 0`. The
//! half-chord function is concave and piecewise linear, so the symmetral is
//! the hull of the points `(+-half_chord(beta), beta)` over the vertices of
//! its linearity regions.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use num_traits::{Signed, Zero};

use crate::arith::{int, Rat};
use crate::error::{Error, Result};
use crate::geometry::linalg::solve;
use crate::geometry::{Direction, Polytope, Subspace, Vector};
use crate::grids::farey_half_turn_cycle;
use crate::minkowski::{sum, surface_area, volume};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exactness {
    /// Planar symmetral, exact.
    Exact2D,
    /// Spatial symmetral with breakpoints at projected vertices and at
    /// crossings of projected edges; exact.
    Overlay3D,
    /// Spatial symmetral with breakpoints at projected vertices only; an
    /// inner approximation in general.
    Triangulated3D,
}

impl Exactness {
    pub fn is_exact(self) -> bool {
        self != Exactness::Triangulated3D
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerResult {
    pub symmetral: Polytope,
    pub direction: Direction,
    pub exactness: Exactness,
}

struct Frame {
    w: Vector,
    u: Subspace,
}

impl Frame {
    fn new(w: &Direction) -> Frame {
        Frame {
            w: w.vector().clone(),
            u: Subspace::orthogonal_complement(w),
        }
    }

    /// `beta` with `x = alpha w + sum beta_i u_i`.
    fn shadow_coords(&self, x: &Vector) -> Vector {
        let rhs = self.u.coordinates(x).into_coords();
        Vector::new(solve(self.u.gram(), &rhs).expect("Gram matrix is invertible"))
    }

    fn point(&self, alpha: &Rat, beta: &Vector) -> Vector {
        self.u.embed(beta).add_scaled(alpha, &self.w)
    }
}

/// `(lo, hi)` of the chord over `beta`.
fn chord(k: &Polytope, frame: &Frame, beta: &Vector) -> (Rat, Rat) {
    let base = frame.u.embed(beta);
    let mut lo: Option<Rat> = None;
    let mut hi: Option<Rat> = None;
    for f in k.facets() {
        let nw = f.normal().dot(&frame.w);
        if nw.is_zero() {
            continue;
        }
        let bound = (f.offset() - f.normal().dot(&base)) / &nw;
        if nw.is_positive() {
            hi = Some(hi.map_or(bound.clone(), |h| h.min(bound)));
        } else {
            lo = Some(lo.map_or(bound.clone(), |l| l.max(bound)));
        }
    }
    (lo.expect("bounded body"), hi.expect("bounded body"))
}

fn cross2(a: &Vector, b: &Vector) -> Rat {
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// Intersection points of planar segments, including touching endpoints.
fn crossings(segments: &[(Vector, Vector)]) -> Vec<Vector> {
    let mut out = Vec::new();
    for (i, (p1, p2)) in segments.iter().enumerate() {
        let r = p2 - p1;
        for (p3, p4) in &segments[i + 1..] {
            let s = p4 - p3;
            let d = cross2(&r, &s);
            if d.is_zero() {
                continue;
            }
            let q = p3 - p1;
            let t = cross2(&q, &s) / &d;
            let v = cross2(&q, &r) / &d;
            let unit = |x: &Rat| !x.is_negative() && *x <= int(1);
            if unit(&t) && unit(&v) {
                out.push(p1.add_scaled(&t, &r));
            }
        }
    }
    out
}

fn symmetral_from_breakpoints(k: &Polytope, frame: &Frame, breakpoints: BTreeSet<Vector>) -> Result<Polytope> {
    let mut pts = Vec::with_capacity(2 * breakpoints.len());
    for beta in &breakpoints {
        let (lo, hi) = chord(k, frame, beta);
        let half = (hi - lo) / int(2);
        pts.push(frame.point(&half, beta));
        pts.push(frame.point(&-half, beta));
    }
    Polytope::convex_hull(&pts)
}

fn check_input(k: &Polytope, w: &Direction) -> Result<()> {
    k.require_dim(w.dim())?;
    k.require_full()?;
    if k.dim() > 3 {
        return Err(Error::Dimension {
            ambient: k.dim(),
            affine_dim: k.affine_dim(),
        });
    }
    Ok(())
}

/// `st_w(K)`, exact in both supported dimensions.
pub fn steiner_symmetral(k: &Polytope, w: &Direction) -> Result<SteinerResult> {
    check_input(k, w)?;
    let frame = Frame::new(w);
    let projected: Vec<Vector> = k.vertices().iter().map(|v| frame.shadow_coords(v)).collect();
    let mut breakpoints: BTreeSet<Vector> = projected.iter().cloned().collect();
    let exactness = if k.dim() == 2 {
        Exactness::Exact2D
    } else {
        let segments: Vec<(Vector, Vector)> = k
            .edges()
            .into_iter()
            .map(|(i, j)| (projected[i].clone(), projected[j].clone()))
            .collect();
        breakpoints.extend(crossings(&segments));
        Exactness::Overlay3D
    };
    Ok(SteinerResult {
        symmetral: symmetral_from_breakpoints(k, &frame, breakpoints)?,
        direction: w.clone(),
        exactness,
    })
}

/// Spatial symmetral using projected vertices as the only breakpoints. Its
/// volume never exceeds `V(K)`.
pub fn steiner_symmetral_triangulated(k: &Polytope, w: &Direction) -> Result<SteinerResult> {
    check_input(k, w)?;
    if k.dim() == 2 {
        return steiner_symmetral(k, w);
    }
    let frame = Frame::new(w);
    let breakpoints = k.vertices().iter().map(|v| frame.shadow_coords(v)).collect();
    Ok(SteinerResult {
        symmetral: symmetral_from_breakpoints(k, &frame, breakpoints)?,
        direction: w.clone(),
        exactness: Exactness::Triangulated3D,
    })
}

/// Reflection through `w^perp`.
pub fn reflect(k: &Polytope, w: &Direction) -> Result<Polytope> {
    k.require_dim(w.dim())?;
    let u = w.vector();
    let nsq = u.norm_squared();
    k.map_vertices(|x| x.add_scaled(&(int(-2) * x.dot(u) / &nsq), u))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Containment {
    pub contained: bool,
    /// `st_w(K) + st_w(L)`.
    pub left: Polytope,
    /// `st_w(K + L)`.
    pub right: Polytope,
    /// First vertex of `left` outside `right`.
    pub outside: Option<Vector>,
}

/// Decides `st_w(K) + st_w(L) ⊆ st_w(K + L)` by testing every vertex of the
/// left side against the facet inequalities of the right side.
pub fn superadditivity_check(k: &Polytope, l: &Polytope, w: &Direction) -> Result<Containment> {
    let left = sum(&steiner_symmetral(k, w)?.symmetral, &steiner_symmetral(l, w)?.symmetral)?;
    let right = steiner_symmetral(&sum(k, l)?, w)?.symmetral;
    let mut outside = None;
    for v in left.vertices() {
        if !right.contains(v)? {
            outside = Some(v.clone());
            break;
        }
    }
    Ok(Containment {
        contained: outside.is_none(),
        left,
        right,
        outside,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct RoundingStep {
    pub step: usize,
    pub direction: Direction,
    pub volume: Rat,
    /// `perimeter^2 / (4 pi area)`; 1 for a disc.
    pub isoperimetric_ratio: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RoundingTrace {
    pub steps: Vec<RoundingStep>,
    pub body: Polytope,
}

/// Directions of the order-4 Farey half-turn cycle.
pub fn default_schedule() -> Vec<Direction> {
    farey_half_turn_cycle(4)
}

fn isoperimetric_ratio(p: &Polytope) -> Result<f64> {
    let per = surface_area(p)?.numeric(20).to_f64();
    let area = crate::arith::rat_to_f64(&volume(p));
    Ok(per * per / (4.0 * PI * area))
}

/// Symmetrizes a planar body `steps` times along the cyclic `schedule`.
pub fn rounding_iteration(k: &Polytope, schedule: &[Direction], steps: usize) -> Result<RoundingTrace> {
    if k.dim() != 2 {
        return Err(Error::Dimension {
            ambient: k.dim(),
            affine_dim: k.affine_dim(),
        });
    }
    if schedule.is_empty() {
        return Err(Error::EmptySchedule);
    }
    let mut body = k.clone();
    let mut out = Vec::with_capacity(steps);
    for step in 1..=steps {
        let w = &schedule[(step - 1) % schedule.len()];
        body = steiner_symmetral(&body, w)?.symmetral;
        out.push(RoundingStep {
            step,
            direction: w.clone(),
            volume: volume(&body),
            isoperimetric_ratio: isoperimetric_ratio(&body)?,
        });
    }
    Ok(RoundingTrace { steps: out, body })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;

    fn v(c: &[i64]) -> Vector {
        Vector::from_ints(c)
    }

    fn d(c: &[i64]) -> Direction {
        Direction::from_ints(c).unwrap()
    }

    fn rat_point(c: &[Rat]) -> Vector {
        Vector::new(c.to_vec())
    }

    #[test]
    fn square_along_e1() {
        let s = steiner_symmetral(&Polytope::unit_cube(2), &d(&[1, 0])).unwrap();
        let want = Polytope::cuboid(&[frac(-1, 2), int(0)], &[frac(1, 2), int(1)]).unwrap();
        assert_eq!(s.symmetral, want);
        assert_eq!(s.exactness, Exactness::Exact2D);
    }

    #[test]
    fn triangle_along_e1() {
        let s = steiner_symmetral(&Polytope::standard_simplex(2), &d(&[1, 0])).unwrap();
        let want = Polytope::convex_hull(&[
            rat_point(&[frac(-1, 2), int(0)]),
            rat_point(&[frac(1, 2), int(0)]),
            v(&[0, 1]),
        ])
        .unwrap();
        assert_eq!(s.symmetral, want);
        assert_eq!(volume(&s.symmetral), frac(1, 2));
    }

    #[test]
    fn square_along_diagonal() {
        let s = steiner_symmetral(&Polytope::unit_cube(2), &d(&[1, 1])).unwrap();
        let h = frac(1, 2);
        let want = Polytope::convex_hull(&[
            rat_point(&[h.clone(), h.clone()]),
            rat_point(&[-&h, -&h]),
            rat_point(&[-&h, h.clone()]),
            rat_point(&[h.clone(), -&h]),
        ])
        .unwrap();
        assert_eq!(s.symmetral, want);
        assert_eq!(volume(&s.symmetral), int(1));
    }

    #[test]
    fn symmetry_and_idempotence() {
        let k = Polytope::convex_hull(&[v(&[0, 0]), v(&[5, 1]), v(&[2, 4]), v(&[-1, 3])]).unwrap();
        for w in [d(&[1, 0]), d(&[2, 1]), d(&[-1, 3])] {
            let s = steiner_symmetral(&k, &w).unwrap().symmetral;
            assert_eq!(volume(&s), volume(&k));
            assert_eq!(reflect(&s, &w).unwrap(), s);
            assert_eq!(steiner_symmetral(&s, &w).unwrap().symmetral, s);
        }
    }

    #[test]
    fn spatial_boxes_and_simplices() {
        let bx = Polytope::cuboid(&[int(0), int(0), int(0)], &[int(2), int(1), int(3)]).unwrap();
        for k in [bx, Polytope::standard_simplex(3), Polytope::unit_cube(3)] {
            for w in [d(&[1, 0, 0]), d(&[0, 0, 1]), d(&[1, 1, 0]), d(&[1, 2, 3])] {
                let s = steiner_symmetral(&k, &w).unwrap();
                assert_eq!(s.exactness, Exactness::Overlay3D);
                assert_eq!(volume(&s.symmetral), volume(&k), "{w}");
                assert_eq!(reflect(&s.symmetral, &w).unwrap(), s.symmetral);
                let t = steiner_symmetral_triangulated(&k, &w).unwrap();
                assert!(volume(&t.symmetral) <= volume(&k));
            }
        }
    }

    #[test]
    fn triangulated_variant_can_lose_volume() {
        // Cube along a generic direction: upper and lower envelopes cross.
        let k = Polytope::unit_cube(3);
        let w = d(&[1, 2, 3]);
        let t = steiner_symmetral_triangulated(&k, &w).unwrap();
        assert!(volume(&t.symmetral) <= int(1));
        assert_eq!(volume(&steiner_symmetral(&k, &w).unwrap().symmetral), int(1));
    }

    #[test]
    fn four_dimensions_rejected() {
        let k = Polytope::unit_cube(4);
        assert!(matches!(
            steiner_symmetral(&k, &Direction::axis(4, 0)),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn superadditivity_examples() {
        let s = Polytope::unit_cube(2);
        let t = Polytope::standard_simplex(2);
        let c = superadditivity_check(&s, &s, &d(&[1, 0])).unwrap();
        assert!(c.contained);
        assert_eq!(c.left, c.right);
        assert!(superadditivity_check(&s, &t, &d(&[1, 0])).unwrap().contained);
        assert!(superadditivity_check(&s, &t, &d(&[1, 1])).unwrap().contained);
    }

    #[test]
    fn rounding_examples() {
        let s = Polytope::unit_cube(2);
        let tr = rounding_iteration(&s, &[d(&[1, 0])], 3).unwrap();
        assert!(tr.steps.iter().all(|st| st.volume == int(1)));
        assert_eq!(tr.body, steiner_symmetral(&s, &d(&[1, 0])).unwrap().symmetral);
        let sched = [d(&[1, 0]), d(&[0, 1]), d(&[1, 1]), d(&[1, -1])];
        let tr = rounding_iteration(&Polytope::standard_simplex(2), &sched, 8).unwrap();
        assert_eq!(tr.steps.len(), 8);
        assert!(tr.steps.iter().all(|st| st.volume == frac(1, 2)));
        assert!(tr.steps.iter().all(|st| st.isoperimetric_ratio >= 1.0));
        assert_eq!(rounding_iteration(&s, &[], 3), Err(Error::EmptySchedule));
        assert_eq!(default_schedule().len(), 12);
    }
}
