//! Homothety detection, the shadow-alignment normalization used to decide
//! homothety from hyperplane projections, and sweeps of the mixed-volume
//! functional equality that characterizes the equality case.
//!
//! For rational full-dimensional bodies a homothety `K = aL + x` forces `a` to
//! be rational (it is a ratio of support widths), so the exact test below is
//! complete: `a` must be the rational n-th root of `V(K) / V(L)`.

use crate::arith::{exact_root, int, pow, rat_to_f64, Rat};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::geometry::{bodies_equal, shadow, Direction, Polytope, Vector};
use crate::grids::axes_and_diagonals;
use crate::inequality::interpolate;
use crate::minkowski::{mixed_volume, projection_prism_volume, volume};

/// `K = a L + x` with `a > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomothetyWitness {
    pub a: Rat,
    pub x: Vector,
}

impl HomothetyWitness {
    /// `a L + x`.
    pub fn apply(&self, l: &Polytope) -> Result<Polytope> {
        l.homothetic_image(&self.a, &self.x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbsenceReason {
    VolumeRatioNotRationalPower,
    /// The candidate `a L + x` differs from `K`.
    CandidateMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Homothety {
    Present(HomothetyWitness),
    Absent(AbsenceReason),
}

impl Homothety {
    pub fn witness(&self) -> Option<&HomothetyWitness> {
        match self {
            Homothety::Present(w) => Some(w),
            Homothety::Absent(_) => None,
        }
    }
}

pub fn detect_homothety(k: &Polytope, l: &Polytope) -> Result<Homothety> {
    l.require_dim(k.dim())?;
    k.require_full()?;
    l.require_full()?;
    let ratio = volume(k) / volume(l);
    let Some(a) = exact_root(&ratio, k.dim() as u32) else {
        return Ok(Homothety::Absent(AbsenceReason::VolumeRatioNotRationalPower));
    };
    if k.vertices().len() != l.vertices().len() {
        return Ok(Homothety::Absent(AbsenceReason::CandidateMismatch));
    }
    let x = &k.vertex_centroid() - &l.vertex_centroid().scaled(&a);
    let w = HomothetyWitness { a, x };
    if bodies_equal(k, &w.apply(l)?) {
        Ok(Homothety::Present(w))
    } else {
        Ok(Homothety::Absent(AbsenceReason::CandidateMismatch))
    }
}

/// Floating-point cross-check: estimates `a` from the volume ratio and
/// compares support widths `h(u) + h(-u)` over axes and diagonals with
/// relative tolerance `1e-9`. Returns the estimate when all widths agree.
pub fn numeric_homothety_estimate(k: &Polytope, l: &Polytope) -> Result<Option<f64>> {
    l.require_dim(k.dim())?;
    k.require_full()?;
    l.require_full()?;
    let n = k.dim();
    let a = (rat_to_f64(&volume(k)) / rat_to_f64(&volume(l))).powf(1.0 / n as f64);
    for u in axes_and_diagonals(n) {
        let width = |p: &Polytope| rat_to_f64(&(p.support(&u).unwrap() + p.support(&u.neg()).unwrap()));
        let (wk, wl) = (width(k), width(l));
        if (wk - a * wl).abs() > 1e-9 * wk.abs().max(1.0) {
            return Ok(None);
        }
    }
    Ok(Some(a))
}

/// `K' = K + k_shift` and `L' = l_scale L + l_shift` with both resting on
/// `x_n = 0` and sharing their `e_n`-shadow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalization {
    pub k: Polytope,
    pub l: Polytope,
    pub k_shift: Vector,
    pub l_scale: Rat,
    pub l_shift: Vector,
}

impl Normalization {
    /// The homothety `K = a L + x` implied by `K' = L'`.
    pub fn composed_witness(&self) -> HomothetyWitness {
        HomothetyWitness {
            a: self.l_scale.clone(),
            x: &self.l_shift - &self.k_shift,
        }
    }
}

fn min_coordinate(p: &Polytope, i: usize) -> Rat {
    p.vertices().iter().map(|v| v[i].clone()).min().expect("non-empty")
}

fn require_three(k: &Polytope) -> Result<()> {
    if k.dim() < 3 {
        return Err(Error::Dimension {
            ambient: k.dim(),
            affine_dim: k.affine_dim(),
        });
    }
    Ok(())
}

pub fn rogers_normalize(k: &Polytope, l: &Polytope) -> Result<Normalization> {
    require_three(k)?;
    l.require_dim(k.dim())?;
    k.require_full()?;
    l.require_full()?;
    let n = k.dim();
    let en = Direction::axis(n, n - 1);
    let (ks, ls) = (shadow(k, &en)?.body, shadow(l, &en)?.body);
    // shadow coordinates for e_n are the first n-1 coordinates
    let Homothety::Present(w) = detect_homothety(&ks, &ls)? else {
        return Err(Error::NotHomotheticProjection);
    };
    let mut k_shift = Vector::zero(n).into_coords();
    k_shift[n - 1] = -min_coordinate(k, n - 1);
    let mut l_shift = w.x.into_coords();
    l_shift.push(-(&w.a * min_coordinate(l, n - 1)));
    let (k_shift, l_shift) = (Vector::new(k_shift), Vector::new(l_shift));
    Ok(Normalization {
        k: k.translate(&k_shift),
        l: l.homothetic_image(&w.a, &l_shift)?,
        k_shift,
        l_scale: w.a,
        l_shift,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// The shadows onto `w^perp` are not homothetic.
    Shadow,
    /// After normalization the support functions differ at `w`.
    Support,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProjectionConclusion {
    Homothetic(HomothetyWitness),
    NotHomothetic { direction: Direction, evidence: Evidence },
}

pub fn homothetic_projections_conclude(
    k: &Polytope,
    l: &Polytope,
    directions: &[Direction],
) -> Result<ProjectionConclusion> {
    homothetic_projections_conclude_with(Exec::default(), k, l, directions)
}

/// Refutes from any non-homothetic shadow in `directions`; otherwise confirms
/// or refutes through [`rogers_normalize`] and exact body comparison.
pub fn homothetic_projections_conclude_with(
    exec: Exec,
    k: &Polytope,
    l: &Polytope,
    directions: &[Direction],
) -> Result<ProjectionConclusion> {
    require_three(k)?;
    l.require_dim(k.dim())?;
    k.require_full()?;
    l.require_full()?;
    let n = k.dim();
    let en = Direction::axis(n, n - 1);
    let mut dirs = vec![en.clone()];
    dirs.extend(directions.iter().filter(|d| **d != en).cloned());
    let checks = exec.try_map(&dirs, |w| {
        detect_homothety(&shadow(k, w)?.body, &shadow(l, w)?.body).map(|h| h.witness().is_some())
    })?;
    if let Some(i) = checks.iter().position(|ok| !ok) {
        return Ok(ProjectionConclusion::NotHomothetic {
            direction: dirs[i].clone(),
            evidence: Evidence::Shadow,
        });
    }
    let norm = rogers_normalize(k, l)?;
    if bodies_equal(&norm.k, &norm.l) {
        return Ok(ProjectionConclusion::Homothetic(norm.composed_witness()));
    }
    let candidates = norm.k.facets().iter().chain(norm.l.facets());
    for f in candidates {
        let u = f.normal();
        if norm.k.support_vec(u) != norm.l.support_vec(u) {
            return Ok(ProjectionConclusion::NotHomothetic {
                direction: Direction::new(u.clone())?,
                evidence: Evidence::Support,
            });
        }
    }
    unreachable!("distinct polytopes differ in the support of some facet normal")
}

/// Boxes with one side of length 2 along each axis, the standard simplex, and
/// segments `o -> w` along the axes and diagonals.
pub fn default_test_bodies(n: usize) -> Vec<Polytope> {
    let mut out = Vec::new();
    for i in 0..n {
        let mut hi = vec![int(1); n];
        hi[i] = int(2);
        out.push(Polytope::cuboid(&vec![int(0); n], &hi).expect("box"));
    }
    out.push(Polytope::standard_simplex(n));
    for w in axes_and_diagonals(n) {
        out.push(Polytope::segment(&Vector::zero(n), w.vector()).expect("segment"));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refutation {
    /// `V(K_l)` differs from `V(K)`.
    Volume { lambda: Rat },
    /// The compared mixed volumes differ for test body `body`.
    MixedVolume { lambda: Rat, body: usize },
    /// The projection prism volumes differ along `direction`.
    Projection { lambda: Rat, direction: Direction },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EqualityConclusion {
    Homothetic(HomothetyWitness),
    NotEqualityCase(Refutation),
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualityCaseTrace {
    pub lambdas: Vec<Rat>,
    /// `V(K_l)` per grid point.
    pub volumes: Vec<Rat>,
    /// `pairs[i][j]`: the compared values for `lambdas[i]` and test body `j`.
    pub pairs: Vec<Vec<(Rat, Rat)>>,
    /// `projections[i][j]`: prism volume pair for `lambdas[i]` and direction `j`.
    pub projections: Vec<Vec<(Rat, Rat)>>,
    pub directions: Vec<Direction>,
    pub conclusion: EqualityConclusion,
}

impl EqualityCaseTrace {
    pub fn all_equal(&self) -> bool {
        self.pairs.iter().chain(&self.projections).flatten().all(|(a, b)| a == b)
    }
}

/// `(V_{n-1}` prism of `K_l` along `w`, same for `L)`.
pub fn projection_equality_step(k: &Polytope, l: &Polytope, lambda: &Rat, w: &Direction) -> Result<(Rat, Rat)> {
    let kl = interpolate(k, l, lambda)?;
    Ok((projection_prism_volume(&kl, w)?, projection_prism_volume(l, w)?))
}

/// Compares `V_{n-1,1}(K_l, M)` with `V_{n-1,1}(L, M)` and the projection
/// prism volumes of `K_l` and `L` over the grids. Requires `V(K) = V(L)`.
pub fn functional_equality_sweep(
    k: &Polytope,
    l: &Polytope,
    lambdas: &[Rat],
    bodies: &[Polytope],
    directions: &[Direction],
) -> Result<EqualityCaseTrace> {
    functional_equality_sweep_with(Exec::default(), k, l, lambdas, bodies, directions)
}

pub fn functional_equality_sweep_with(
    exec: Exec,
    k: &Polytope,
    l: &Polytope,
    lambdas: &[Rat],
    bodies: &[Polytope],
    directions: &[Direction],
) -> Result<EqualityCaseTrace> {
    l.require_dim(k.dim())?;
    k.require_full()?;
    l.require_full()?;
    if volume(k) != volume(l) {
        return Err(Error::VolumeMismatch);
    }
    sweep(exec, k, l, lambdas, bodies, directions, mixed_volume)
}

/// Scale-invariant variant for bodies of different volume: compares
/// `V_{n-1,1}(K_m, M)^n / V(K_m)^(n-1)` with the same quotient for `L`. The
/// quotient is unchanged by dilating the first argument, so it agrees with the
/// raw comparison after normalizing both bodies to unit volume, up to a
/// monotone reparametrization of the grid.
pub fn scale_free_sweep(
    k: &Polytope,
    l: &Polytope,
    lambdas: &[Rat],
    bodies: &[Polytope],
    directions: &[Direction],
) -> Result<EqualityCaseTrace> {
    l.require_dim(k.dim())?;
    k.require_full()?;
    l.require_full()?;
    let n = k.dim() as u32;
    sweep(Exec::default(), k, l, lambdas, bodies, directions, |body, m| {
        Ok(pow(&mixed_volume(body, m)?, n) / pow(&volume(body), n - 1))
    })
}

fn sweep<F>(
    exec: Exec,
    k: &Polytope,
    l: &Polytope,
    lambdas: &[Rat],
    bodies: &[Polytope],
    directions: &[Direction],
    compare: F,
) -> Result<EqualityCaseTrace>
where
    F: Fn(&Polytope, &Polytope) -> Result<Rat> + Sync + Send,
{
    if lambdas.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = k.dim();
    let scale_free = volume(k) != volume(l);
    let prism = |p: &Polytope, w: &Direction| -> Result<Rat> {
        let v = projection_prism_volume(p, w)?;
        if scale_free {
            // prism volume is homogeneous of degree n-1
            Ok(pow(&v, n as u32) / pow(&volume(p), n as u32 - 1))
        } else {
            Ok(v)
        }
    };
    let interpolants = exec.try_map(lambdas, |t| interpolate(k, l, t))?;
    let volumes: Vec<Rat> = interpolants.iter().map(volume).collect();
    let l_pairs = exec.try_map(bodies, |m| compare(l, m))?;
    let l_prisms = exec.try_map(directions, |w| prism(l, w))?;
    let pairs = exec.try_map(&interpolants, |kl| {
        bodies
            .iter()
            .zip(&l_pairs)
            .map(|(m, lv)| Ok((compare(kl, m)?, lv.clone())))
            .collect::<Result<Vec<_>>>()
    })?;
    let projections = exec.try_map(&interpolants, |kl| {
        directions
            .iter()
            .zip(&l_prisms)
            .map(|(w, lv)| Ok((prism(kl, w)?, lv.clone())))
            .collect::<Result<Vec<_>>>()
    })?;
    let conclusion = conclude(k, l, lambdas, &volumes, &pairs, &projections, directions, scale_free)?;
    Ok(EqualityCaseTrace {
        lambdas: lambdas.to_vec(),
        volumes,
        pairs,
        projections,
        directions: directions.to_vec(),
        conclusion,
    })
}

#[allow(clippy::too_many_arguments)]
fn conclude(
    k: &Polytope,
    l: &Polytope,
    lambdas: &[Rat],
    volumes: &[Rat],
    pairs: &[Vec<(Rat, Rat)>],
    projections: &[Vec<(Rat, Rat)>],
    directions: &[Direction],
    scale_free: bool,
) -> Result<EqualityConclusion> {
    for (i, t) in lambdas.iter().enumerate() {
        let expected = if scale_free {
            // V(K_t)^(1/n) affine in t  <=>  equality in Brunn-Minkowski
            let n = k.dim() as u32;
            match (exact_root(&volume(k), n), exact_root(&volume(l), n)) {
                (Some(a), Some(b)) => Some(pow(&((int(1) - t) * a + t * b), n)),
                _ => None,
            }
        } else {
            Some(volume(k))
        };
        if let Some(e) = expected {
            if volumes[i] != e {
                return Ok(EqualityConclusion::NotEqualityCase(Refutation::Volume { lambda: t.clone() }));
            }
        }
        if let Some(j) = pairs[i].iter().position(|(a, b)| a != b) {
            return Ok(EqualityConclusion::NotEqualityCase(Refutation::MixedVolume {
                lambda: t.clone(),
                body: j,
            }));
        }
        if let Some(j) = projections[i].iter().position(|(a, b)| a != b) {
            return Ok(EqualityConclusion::NotEqualityCase(Refutation::Projection {
                lambda: t.clone(),
                direction: directions[j].clone(),
            }));
        }
    }
    Ok(match detect_homothety(k, l)? {
        Homothety::Present(w) => EqualityConclusion::Homothetic(w),
        Homothety::Absent(_) => EqualityConclusion::Inconclusive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;
    use crate::grids::verification_directions;
    use num_traits::Zero;

    fn square() -> Polytope {
        Polytope::unit_cube(2)
    }

    fn cube() -> Polytope {
        Polytope::unit_cube(3)
    }

    fn v(c: &[i64]) -> Vector {
        Vector::from_ints(c)
    }

    #[test]
    fn detects_scaled_translate() {
        let k = square().homothetic_image(&int(2), &v(&[3, 4])).unwrap();
        let h = detect_homothety(&k, &square()).unwrap();
        assert_eq!(
            h,
            Homothety::Present(HomothetyWitness {
                a: int(2),
                x: v(&[3, 4])
            })
        );
    }

    #[test]
    fn irrational_ratio_is_absent() {
        let r = Polytope::cuboid(&[int(0), int(0)], &[int(2), int(1)]).unwrap();
        assert_eq!(
            detect_homothety(&square(), &r).unwrap(),
            Homothety::Absent(AbsenceReason::VolumeRatioNotRationalPower)
        );
        assert_eq!(numeric_homothety_estimate(&square(), &r).unwrap(), None);
    }

    #[test]
    fn rotated_square_is_itself() {
        let rotated = square().map_vertices(|p| Vector::new(vec![int(1) - &p[1], p[0].clone()])).unwrap();
        let w = detect_homothety(&square(), &rotated).unwrap();
        assert_eq!(w.witness().unwrap().a, int(1));
        assert!(w.witness().unwrap().x.is_zero());
    }

    #[test]
    fn equal_volume_mismatch() {
        let tri = Polytope::convex_hull(&[v(&[0, 0]), v(&[2, 0]), v(&[0, 1])]).unwrap();
        let flip = Polytope::convex_hull(&[v(&[0, 0]), v(&[2, 0]), v(&[2, 1])]).unwrap();
        assert_eq!(
            detect_homothety(&tri, &flip).unwrap(),
            Homothety::Absent(AbsenceReason::CandidateMismatch)
        );
    }

    #[test]
    fn normalize_scaled_cube() {
        let l = cube().homothetic_image(&int(2), &v(&[1, 1, 1])).unwrap();
        let n = rogers_normalize(&cube(), &l).unwrap();
        assert_eq!(n.k, cube());
        assert_eq!(n.l, cube());
        assert_eq!(n.l_scale, frac(1, 2));
        let w = n.composed_witness();
        assert_eq!(w.apply(&l).unwrap(), cube());
    }

    #[test]
    fn normalize_vertical_translate() {
        let n = rogers_normalize(&cube(), &cube().translate(&v(&[0, 0, 9]))).unwrap();
        assert_eq!((n.k, n.l), (cube(), cube()));
    }

    #[test]
    fn normalize_rejections() {
        let bx = Polytope::cuboid(&[int(0), int(0), int(0)], &[int(2), int(1), int(1)]).unwrap();
        assert_eq!(rogers_normalize(&cube(), &bx), Err(Error::NotHomotheticProjection));
        assert!(matches!(
            rogers_normalize(&square(), &square()),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn normalized_shadows_coincide() {
        let l = cube().homothetic_image(&frac(1, 3), &v(&[2, -1, 5])).unwrap();
        let n = rogers_normalize(&cube(), &l).unwrap();
        for w in verification_directions(3, 5, 3) {
            if !w.vector()[2].is_zero() {
                continue;
            }
            assert_eq!(shadow(&n.k, &w).unwrap().body, shadow(&n.l, &w).unwrap().body);
        }
    }

    fn seven_directions() -> Vec<Direction> {
        axes_and_diagonals(3)
    }

    #[test]
    fn concludes_homothetic() {
        let l = cube().homothetic_image(&int(3), &v(&[2, 0, 1])).unwrap();
        let c = homothetic_projections_conclude(&cube(), &l, &seven_directions()).unwrap();
        let ProjectionConclusion::Homothetic(w) = c else { panic!("{c:?}") };
        assert_eq!(w.a, frac(1, 3));
        assert_eq!(w.apply(&l).unwrap(), cube());
        let c = homothetic_projections_conclude(&cube(), &cube(), &seven_directions()).unwrap();
        assert_eq!(
            c,
            ProjectionConclusion::Homothetic(HomothetyWitness {
                a: int(1),
                x: Vector::zero(3)
            })
        );
    }

    #[test]
    fn concludes_not_homothetic() {
        let mut pts = cube().vertices().to_vec();
        pts.push(v(&[2, 2, 2]));
        let pulled = Polytope::convex_hull(&pts).unwrap();
        let c = homothetic_projections_conclude(&cube(), &pulled, &seven_directions()).unwrap();
        let ProjectionConclusion::NotHomothetic { direction, evidence } = c else { panic!() };
        assert_eq!(evidence, Evidence::Shadow);
        assert_eq!(direction, Direction::axis(3, 2));
    }

    #[test]
    fn sweep_on_translates() {
        let l = square().translate(&v(&[4, 4]));
        let g = [int(0), frac(1, 2), int(1)];
        let bodies = default_test_bodies(2);
        let dirs = axes_and_diagonals(2);
        let t = functional_equality_sweep(&square(), &l, &g, &bodies, &dirs).unwrap();
        assert!(t.all_equal());
        assert!(t.volumes.iter().all(|x| *x == int(1)));
        assert!(matches!(t.conclusion, EqualityConclusion::Homothetic(_)));
        let t = functional_equality_sweep(&cube(), &cube(), &g, &default_test_bodies(3), &[]).unwrap();
        assert!(t.all_equal());
    }

    #[test]
    fn sweep_refutes_rectangle() {
        let r = Polytope::cuboid(&[int(0), int(0)], &[int(2), frac(1, 2)]).unwrap();
        let g = [int(0), frac(1, 2), int(1)];
        let t = functional_equality_sweep(&square(), &r, &g, &[square()], &[]).unwrap();
        assert_eq!(t.pairs[0][0], (int(1), frac(5, 4)));
        assert_eq!(
            t.conclusion,
            EqualityConclusion::NotEqualityCase(Refutation::MixedVolume { lambda: int(0), body: 0 })
        );
        let twice = square().scale(&int(2)).unwrap();
        assert_eq!(
            functional_equality_sweep(&square(), &twice, &g, &[square()], &[]),
            Err(Error::VolumeMismatch)
        );
    }

    #[test]
    fn projection_steps() {
        let l = cube().translate(&v(&[1, 2, 3]));
        assert_eq!(
            projection_equality_step(&cube(), &l, &frac(1, 2), &Direction::axis(3, 0)).unwrap(),
            (int(1), int(1))
        );
        let w = Direction::from_ints(&[1, 1, 0]).unwrap();
        let (a, b) = projection_equality_step(&cube(), &cube(), &frac(1, 4), &w).unwrap();
        assert_eq!(a, b);
        let r = Polytope::cuboid(&[int(0), int(0)], &[int(2), frac(1, 2)]).unwrap();
        assert_eq!(
            projection_equality_step(&square(), &r, &int(0), &Direction::axis(2, 0)).unwrap(),
            (int(1), frac(1, 2))
        );
    }

    #[test]
    fn scale_free_sweep_accepts_homothets() {
        let l = square().homothetic_image(&int(3), &v(&[1, -2])).unwrap();
        let g = crate::grids::uniform_grid(4);
        let t = scale_free_sweep(&square(), &l, &g, &default_test_bodies(2), &axes_and_diagonals(2)).unwrap();
        assert!(t.all_equal());
        assert!(matches!(t.conclusion, EqualityConclusion::Homothetic(_)));
        let r = Polytope::cuboid(&[int(0), int(0)], &[int(2), int(1)]).unwrap();
        let t = scale_free_sweep(&square(), &r, &g, &default_test_bodies(2), &[]).unwrap();
        assert!(matches!(t.conclusion, EqualityConclusion::NotEqualityCase(_)));
    }
}
