//! Planar support-function recovery from mixed areas against triangles, and
//! the translate test built on it.
//!
//! A triangle with outward normals `n_i` (not normalized) and edge vectors
//! `beta_i R(n_i)` (`R` the quarter turn, `sum beta_i n_i = 0`) has
//! `A(K, T) = (1/2) sum beta_i h_K(n_i)`. After corner normalization
//! `h_K(-e_1) = h_K(-e_2) = 0`, so one unknown support value remains.

use num_traits::{One, Signed, Zero};

use crate::arith::{int, Rat};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::geometry::linalg::solve;
use crate::geometry::{bodies_equal, Direction, Polytope, Vector};
use crate::minkowski::{mixed_volume_base_height, mixed_volume_interp, MixedVolumeMethod};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerNormalizedBody {
    pub body: Polytope,
    pub applied_translation: Vector,
}

fn require_plane(k: &Polytope) -> Result<()> {
    if k.dim() != 2 || !k.is_full_dimensional() {
        return Err(Error::Dimension {
            ambient: k.dim(),
            affine_dim: k.affine_dim(),
        });
    }
    Ok(())
}

/// Translates `K` by `(h_K(-e_1), h_K(-e_2))` so that both values vanish.
pub fn corner_normalize(k: &Polytope) -> Result<CornerNormalizedBody> {
    require_plane(k)?;
    let t = Vector::new(vec![
        k.support(&Direction::from_ints(&[-1, 0])?)?,
        k.support(&Direction::from_ints(&[0, -1])?)?,
    ]);
    Ok(CornerNormalizedBody {
        body: k.translate(&t),
        applied_translation: t,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeTriangle {
    pub triangle: Polytope,
    pub hypotenuse_normal: Direction,
    /// Hypotenuse length times `|w|`, i.e. `c |w|^2`.
    pub hypotenuse_pseudo_length: Rat,
}

fn in_open_quadrant(w: &Vector) -> bool {
    w[0].is_positive() && w[1].is_positive()
}

pub fn probe_triangle(w: &Direction) -> Result<ProbeTriangle> {
    probe_triangle_scaled(w, &Rat::one())
}

/// `conv{o, (c w_2, 0), (0, c w_1)}`, with outward normals `-e_1`, `-e_2` and
/// a multiple of `w`.
pub fn probe_triangle_scaled(w: &Direction, c: &Rat) -> Result<ProbeTriangle> {
    let v = w.vector();
    if v.dim() != 2 || !in_open_quadrant(v) || !c.is_positive() {
        return Err(Error::Quadrant);
    }
    let pts = [
        Vector::zero(2),
        Vector::new(vec![&v[1] * c, Rat::zero()]),
        Vector::new(vec![Rat::zero(), &v[0] * c]),
    ];
    Ok(ProbeTriangle {
        triangle: Polytope::convex_hull(&pts)?,
        hypotenuse_normal: w.clone(),
        hypotenuse_pseudo_length: c * v.norm_squared(),
    })
}

/// Mixed-area function `T -> A(K, T)` of a fixed planar body `K`.
pub trait MixedAreaOracle: Sync {
    fn mixed_area(&self, triangle: &Polytope) -> Result<Rat>;
}

impl<F> MixedAreaOracle for F
where
    F: Fn(&Polytope) -> Result<Rat> + Sync,
{
    fn mixed_area(&self, triangle: &Polytope) -> Result<Rat> {
        self(triangle)
    }
}

/// Oracle for `K` backed by one of the two mixed-volume implementations.
#[derive(Clone, Debug)]
pub struct BodyOracle {
    pub body: Polytope,
    pub method: MixedVolumeMethod,
}

impl MixedAreaOracle for BodyOracle {
    fn mixed_area(&self, triangle: &Polytope) -> Result<Rat> {
        let r = match self.method {
            MixedVolumeMethod::BaseHeight => mixed_volume_base_height(triangle, &self.body),
            MixedVolumeMethod::Interpolation => mixed_volume_interp(&self.body, triangle),
        };
        r.map(|m| m.value).map_err(|e| Error::Oracle(e.to_string()))
    }
}

/// `h_K(w) = 2 A(K, Delta_w) |w|^2 / pseudo_length` for `w` in the open
/// positive quadrant.
pub fn recover_support(oracle: &dyn MixedAreaOracle, w: &Direction) -> Result<Rat> {
    recover_support_scaled(oracle, w, &Rat::one())
}

pub fn recover_support_scaled(oracle: &dyn MixedAreaOracle, w: &Direction, c: &Rat) -> Result<Rat> {
    let p = probe_triangle_scaled(w, c)?;
    let a = oracle.mixed_area(&p.triangle)?;
    Ok(int(2) * a * w.vector().norm_squared() / p.hypotenuse_pseudo_length)
}

/// Triangle whose outward normals are `normals` (up to positive scaling), with
/// the coefficient of `normals[0]` equal to 1. Returns the triangle and the
/// coefficients of the other two normals, or `None` unless they positively span.
fn triangle_with_normals(normals: [&Vector; 3]) -> Option<(Polytope, [Rat; 2])> {
    let [w, a, b] = normals;
    // beta_a a + beta_b b = -w
    let m = vec![vec![a[0].clone(), b[0].clone()], vec![a[1].clone(), b[1].clone()]];
    let beta = solve(&m, &[-&w[0], -&w[1]])?;
    if !beta.iter().all(Signed::is_positive) {
        return None;
    }
    let quarter = |n: &Vector, s: &Rat| Vector::new(vec![-(&n[1] * s), &n[0] * s]);
    let one = Rat::one();
    let mut edges = [quarter(w, &one), quarter(a, &beta[0]), quarter(b, &beta[1])];
    let turn = &edges[0][0] * &edges[1][1] - &edges[0][1] * &edges[1][0];
    if turn.is_negative() {
        edges.swap(1, 2);
    }
    let p1 = edges[0].clone();
    let p2 = &p1 + &edges[1];
    let tri = Polytope::convex_hull(&[Vector::zero(2), p1, p2]).ok()?;
    Some((tri, [beta[0].clone(), beta[1].clone()]))
}

/// `h_K(w)` from the triangle with normals `w`, `-e_i` (support 0) and `q`
/// (support `h_q`).
fn recover_from_triangle(
    oracle: &dyn MixedAreaOracle,
    w: &Vector,
    neg_axis: &Vector,
    q: &Vector,
    h_q: &Rat,
) -> Result<Rat> {
    let (tri, beta) = triangle_with_normals([w, neg_axis, q]).ok_or(Error::Quadrant)?;
    let a = oracle.mixed_area(&tri)?;
    Ok(int(2) * a - &beta[1] * h_q)
}

/// Default auxiliary first-quadrant normal and the negative axis it is paired with.
fn auxiliary(w: &Vector) -> (Vector, Vector) {
    let (x, y) = (&w[0], &w[1]);
    let neg_e1 = Vector::from_ints(&[-1, 0]);
    let neg_e2 = Vector::from_ints(&[0, -1]);
    if x.is_negative() && y.is_positive() {
        (Vector::new(vec![x.abs(), y.clone()]), neg_e2)
    } else if x.is_positive() && y.is_negative() {
        (Vector::new(vec![x.clone(), y.abs()]), neg_e1)
    } else if y.is_negative() {
        (Vector::new(vec![x.abs() + y.abs(), y.abs()]), neg_e1)
    } else {
        // w = (-a, 0)
        (Vector::new(vec![x.abs(), x.abs()]), neg_e2)
    }
}

/// `h_K(w)` for `w` outside the open positive quadrant, from the triangle with
/// normals `w`, a negative axis, and a first-quadrant `q` whose support
/// value is recovered first.
pub fn recover_support_other_quadrants(oracle: &dyn MixedAreaOracle, w: &Direction) -> Result<Rat> {
    let v = w.vector();
    if v.dim() != 2 {
        return Err(Error::Quadrant);
    }
    if in_open_quadrant(v) {
        return Err(Error::Quadrant);
    }
    if v[0].is_positive() && v[1].is_zero() {
        // e_1 direction: normals w, -e_2 and a second-quadrant helper
        let helper = Vector::new(vec![-&v[0], v[0].clone()]);
        let h = recover_support_other_quadrants(oracle, &Direction::new(helper.clone())?)?;
        return recover_from_triangle(oracle, v, &Vector::from_ints(&[0, -1]), &helper, &h);
    }
    if v[1].is_positive() && v[0].is_zero() {
        let helper = Vector::new(vec![v[1].clone(), -&v[1]]);
        let h = recover_support_other_quadrants(oracle, &Direction::new(helper.clone())?)?;
        return recover_from_triangle(oracle, v, &Vector::from_ints(&[-1, 0]), &helper, &h);
    }
    let (q, axis) = auxiliary(v);
    recover_with_auxiliary(oracle, w, &Direction::new(q)?, &axis)
}

/// Same as [`recover_support_other_quadrants`] with an explicit auxiliary
/// normal `q` in the open positive quadrant, paired with whichever negative
/// axis yields a valid triangle.
pub fn recover_support_with_auxiliary(oracle: &dyn MixedAreaOracle, w: &Direction, q: &Direction) -> Result<Rat> {
    if !in_open_quadrant(q.vector()) || in_open_quadrant(w.vector()) {
        return Err(Error::Quadrant);
    }
    for axis in [Vector::from_ints(&[-1, 0]), Vector::from_ints(&[0, -1])] {
        if triangle_with_normals([w.vector(), &axis, q.vector()]).is_some() {
            return recover_with_auxiliary(oracle, w, q, &axis);
        }
    }
    Err(Error::Quadrant)
}

fn recover_with_auxiliary(oracle: &dyn MixedAreaOracle, w: &Direction, q: &Direction, axis: &Vector) -> Result<Rat> {
    let h_q = recover_support(oracle, q)?;
    recover_from_triangle(oracle, w.vector(), axis, q.vector(), &h_q)
}

/// Dispatches on the quadrant of `w`.
pub fn recover_support_any(oracle: &dyn MixedAreaOracle, w: &Direction) -> Result<Rat> {
    if in_open_quadrant(w.vector()) {
        recover_support(oracle, w)
    } else {
        recover_support_other_quadrants(oracle, w)
    }
}

/// Recovered supports of a corner-normalized body over a direction grid.
pub fn recover_on_grid(exec: Exec, body: &Polytope, grid: &[Direction]) -> Result<Vec<Rat>> {
    let oracle = BodyOracle {
        body: body.clone(),
        method: MixedVolumeMethod::BaseHeight,
    };
    exec.try_map(grid, |w| recover_support_any(&oracle, w))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranslateDecision {
    pub translates: bool,
    /// `t` with `L = K + t`, when they are translates.
    pub translation: Option<Vector>,
    /// A direction where the normalized supports differ.
    pub witness: Option<Direction>,
    /// `(w, h_{K'}(w), h_{L'}(w))` recovered from mixed areas.
    pub trace: Vec<(Direction, Rat, Rat)>,
}

pub fn translates_decision(k: &Polytope, l: &Polytope, grid: &[Direction]) -> Result<TranslateDecision> {
    translates_decision_with(Exec::default(), k, l, grid)
}

pub fn translates_decision_with(exec: Exec, k: &Polytope, l: &Polytope, grid: &[Direction]) -> Result<TranslateDecision> {
    let (kn, ln) = (corner_normalize(k)?, corner_normalize(l)?);
    let hk = recover_on_grid(exec, &kn.body, grid)?;
    let hl = recover_on_grid(exec, &ln.body, grid)?;
    let trace: Vec<(Direction, Rat, Rat)> = grid.iter().cloned().zip(hk).zip(hl).map(|((w, a), b)| (w, a, b)).collect();
    if bodies_equal(&kn.body, &ln.body) {
        return Ok(TranslateDecision {
            translates: true,
            translation: Some(&kn.applied_translation - &ln.applied_translation),
            witness: None,
            trace,
        });
    }
    let witness = trace.iter().find(|(_, a, b)| a != b).map(|(w, _, _)| w.clone()).or_else(|| {
        kn.body
            .facets()
            .iter()
            .chain(ln.body.facets())
            .map(|f| f.normal())
            .find(|u| kn.body.support_vec(u) != ln.body.support_vec(u))
            .map(|u| Direction::new(u.clone()).expect("facet normals are non-zero"))
    });
    Ok(TranslateDecision {
        translates: false,
        translation: None,
        witness,
        trace,
    })
}
