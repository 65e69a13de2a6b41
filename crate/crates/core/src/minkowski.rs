//! Minkowski combinations, exact volume, and the mixed volume `V_{n-1,1}`
//! computed two independent ways: by differentiating the volume polynomial
//! `eps -> V(K + eps L)` obtained from exact interpolation, and by the
//! base-height sum over the facets of the first argument.

use num_traits::{Signed, Zero};

use crate::arith::{frac, int, Decimal, Rat};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::geometry::linalg::solve;
use crate::geometry::{Direction, Polytope, Vector};

/// `a K + b L`, the hull of all pairwise vertex combinations.
pub fn combine(a: &Rat, k: &Polytope, b: &Rat, l: &Polytope) -> Result<Polytope> {
    if a.is_negative() || b.is_negative() {
        return Err(Error::NegativeCoefficient);
    }
    l.require_dim(k.dim())?;
    if b.is_zero() {
        return k.scale(a);
    }
    if a.is_zero() {
        return l.scale(b);
    }
    let ka: Vec<Vector> = k.vertices().iter().map(|x| x.scaled(a)).collect();
    let lb: Vec<Vector> = l.vertices().iter().map(|y| y.scaled(b)).collect();
    let mut pts = Vec::with_capacity(ka.len() * lb.len());
    for x in &ka {
        for y in &lb {
            pts.push(x + y);
        }
    }
    Polytope::from_points(&pts)
}

/// `K + L`.
pub fn sum(k: &Polytope, l: &Polytope) -> Result<Polytope> {
    combine(&int(1), k, &int(1), l)
}

/// Exact n-volume; 0 for lower-dimensional bodies.
pub fn volume(k: &Polytope) -> Rat {
    k.cached_volume().clone()
}

/// Coefficients `c_0..c_n` with `V(K + eps L) = sum c_i eps^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumePolynomial {
    pub coefficients: Vec<Rat>,
}

impl VolumePolynomial {
    pub fn eval(&self, eps: &Rat) -> Rat {
        self.coefficients
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * eps + c)
    }

    pub fn degree_bound(&self) -> usize {
        self.coefficients.len() - 1
    }
}

pub fn volume_polynomial(k: &Polytope, l: &Polytope) -> Result<VolumePolynomial> {
    volume_polynomial_with(Exec::default(), k, l)
}

/// Samples `eps = 0, 1, ..., n + 1`, solves the Vandermonde system on the first
/// `n + 1` nodes and checks the fitted polynomial against the last one.
pub fn volume_polynomial_with(exec: Exec, k: &Polytope, l: &Polytope) -> Result<VolumePolynomial> {
    let n = k.dim();
    l.require_dim(n)?;
    let nodes: Vec<i64> = (0..=n as i64 + 1).collect();
    let values = exec.try_map(&nodes, |&e| {
        combine(&int(1), k, &int(e), l).map(|p| volume(&p))
    })?;
    let matrix: Vec<Vec<Rat>> = nodes[..=n]
        .iter()
        .map(|&e| (0..=n).map(|j| crate::arith::pow(&int(e), j as u32)).collect())
        .collect();
    let coefficients = solve(&matrix, &values[..=n]).expect("Vandermonde matrix is invertible");
    let poly = VolumePolynomial { coefficients };
    if poly.eval(&int(nodes[n + 1])) != values[n + 1] {
        return Err(Error::InterpolationInconsistency);
    }
    Ok(poly)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MixedVolumeMethod {
    BaseHeight,
    Interpolation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedVolumeResult {
    pub value: Rat,
    pub method: MixedVolumeMethod,
}

/// `V_{n-1,1}(K, L) = c_1 / n`.
pub fn mixed_volume_interp(k: &Polytope, l: &Polytope) -> Result<MixedVolumeResult> {
    mixed_volume_interp_with(Exec::default(), k, l)
}

pub fn mixed_volume_interp_with(exec: Exec, k: &Polytope, l: &Polytope) -> Result<MixedVolumeResult> {
    let poly = volume_polynomial_with(exec, k, l)?;
    Ok(MixedVolumeResult {
        value: &poly.coefficients[1] / int(k.dim() as i64),
        method: MixedVolumeMethod::Interpolation,
    })
}

/// `V_{n-1,1}(P, K) = (1/n) sum_F h_K(u_F) V_{n-1}(F)`, evaluated in the
/// rational form `h_K(normal) * pseudo_volume / |normal|^2` per facet.
pub fn mixed_volume_base_height(p: &Polytope, k: &Polytope) -> Result<MixedVolumeResult> {
    p.require_full()?;
    k.require_dim(p.dim())?;
    let total = p.facets().iter().fold(Rat::zero(), |acc, f| {
        acc + k.support_vec(f.normal()) * f.pseudo_volume() / f.normal().norm_squared()
    });
    Ok(MixedVolumeResult {
        value: total / int(p.dim() as i64),
        method: MixedVolumeMethod::BaseHeight,
    })
}

/// Base-height when the first body is full-dimensional, interpolation otherwise.
pub fn mixed_volume(k: &Polytope, l: &Polytope) -> Result<Rat> {
    if k.is_full_dimensional() {
        mixed_volume_base_height(k, l).map(|r| r.value)
    } else {
        mixed_volume_interp(k, l).map(|r| r.value)
    }
}

/// Mixed area `A(K, L)` of planar bodies.
pub fn mixed_area(k: &Polytope, l: &Polytope) -> Result<Rat> {
    if k.dim() != 2 {
        return Err(Error::Dimension {
            ambient: k.dim(),
            affine_dim: k.affine_dim(),
        });
    }
    l.require_dim(2)?;
    match (k.is_full_dimensional(), l.is_full_dimensional()) {
        (true, _) => mixed_volume_base_height(k, l).map(|r| r.value),
        (false, true) => mixed_volume_base_height(l, k).map(|r| r.value),
        (false, false) => mixed_volume_interp(k, l).map(|r| r.value),
    }
}

/// `V(K + [o, w]) - V(K)`, which equals `|w| V_{n-1}(K_u)` for `u = w / |w|`.
pub fn projection_prism_volume(k: &Polytope, w: &Direction) -> Result<Rat> {
    k.require_dim(w.dim())?;
    let seg = Polytope::segment(&Vector::zero(k.dim()), w.vector())?;
    Ok(volume(&sum(k, &seg)?) - volume(k))
}

/// Surface area as a sum of `pseudo_volume / |normal|` terms, each kept as the
/// rational pair `(pseudo_volume, |normal|^2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceArea {
    pub terms: Vec<(Rat, Rat)>,
}

impl SurfaceArea {
    /// Exact value when every normal has rational length.
    pub fn exact(&self) -> Option<Rat> {
        self.terms.iter().try_fold(Rat::zero(), |acc, (pv, nsq)| {
            crate::arith::exact_root(nsq, 2).map(|len| acc + pv / len)
        })
    }

    /// Truncated decimal value with `digits` digits, accurate to `terms * 10^-(digits+8)`.
    pub fn numeric(&self, digits: u32) -> Decimal {
        let scale = digits + 8;
        self.terms.iter().fold(Decimal::zero(scale), |acc, (pv, nsq)| {
            // pv / sqrt(nsq) = sqrt(pv^2 / nsq)
            &acc + &Decimal::sqrt(&(pv * pv / nsq), scale)
        })
    }
}

pub fn surface_area(p: &Polytope) -> Result<SurfaceArea> {
    p.require_full()?;
    Ok(SurfaceArea {
        terms: p
            .facets()
            .iter()
            .map(|f| (f.pseudo_volume().clone(), f.normal().norm_squared()))
            .collect(),
    })
}

/// Rational polygon with `4m` vertices inside the unit disc approximating the
/// regular `4m`-gon whose vertices sit at angles `(k + 1/2) * 2 pi / (4m)`.
///
/// Coordinates are the cosines and sines truncated toward zero on the grid
/// `10^-12 Z`, so every vertex lies in the disc and all denominators divide
/// `10^12`. The other three quadrants follow by exact quarter turns.
pub fn ball_approximant(m: usize) -> Result<Polytope> {
    assert!(m >= 1);
    let grid = 1e12_f64;
    let denom: i64 = 1_000_000_000_000;
    let quadrant: Vec<Vector> = (0..m)
        .map(|k| {
            let theta = (k as f64 + 0.5) * std::f64::consts::FRAC_PI_2 / m as f64;
            let (s, c) = theta.sin_cos();
            Vector::new(vec![
                frac((c * grid).trunc() as i64, denom),
                frac((s * grid).trunc() as i64, denom),
            ])
        })
        .collect();
    let mut pts = Vec::with_capacity(4 * m);
    for q in 0..4 {
        for v in &quadrant {
            let (mut x, mut y) = (v[0].clone(), v[1].clone());
            for _ in 0..q {
                let nx = -y;
                y = x;
                x = nx;
            }
            pts.push(Vector::new(vec![x, y]));
        }
    }
    Polytope::convex_hull(&pts)
}
