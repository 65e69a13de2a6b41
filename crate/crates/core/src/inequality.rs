//! Checkers for the Brunn-Minkowski inequality, the Minkowski mixed-volume
//! inequality and its normalized form, the concavity profile of
//! `t -> V((1-t)K + tL)^(1/n)`, and the first-variation identity.
//!
//! Every comparison that can be settled in rational arithmetic is settled
//! exactly. The Brunn-Minkowski form involves sums of n-th roots; its equality
//! verdict is taken from the exact mixed-volume comparison (the two
//! inequalities share their equality case) and its slack is rendered to
//! [`DIGITS`] digits for display.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::{exact_root, int, pow, rat_string, Decimal, Rat};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::grids::uniform_grid;
use crate::geometry::Polytope;
use crate::minkowski::{combine, mixed_volume, mixed_volume_base_height, volume, volume_polynomial};

/// Digits of the decimal slack renderings.
pub const DIGITS: u32 = 50;
/// Root-bearing slacks above `-10^-SLACK_TOLERANCE_EXP` count as non-negative.
pub const SLACK_TOLERANCE_EXP: u32 = 30;
const GUARD: u32 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Strict,
    Equality,
    Violation,
}

impl Verdict {
    fn of(lhs: &Rat, rhs: &Rat) -> Verdict {
        match lhs.cmp(rhs) {
            std::cmp::Ordering::Greater => Verdict::Strict,
            std::cmp::Ordering::Equal => Verdict::Equality,
            std::cmp::Ordering::Less => Verdict::Violation,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::Strict => "Strict",
            Verdict::Equality => "Equality",
            Verdict::Violation => "Violation",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    /// `V(K_l)^(1/n) >= (1-l) V(K)^(1/n) + l V(L)^(1/n)`.
    BrunnMinkowski,
    /// `V_{n-1,1}(K,L)^n >= V(K)^(n-1) V(L)`.
    Minkowski,
    /// `V_{n-1,1}(K,L)^n / (V(K)^(n-1) V(L)) >= 1`.
    Normalized,
}

impl Form {
    pub fn name(self) -> &'static str {
        match self {
            Form::BrunnMinkowski => "BM",
            Form::Minkowski => "MMV",
            Form::Normalized => "MMV1",
        }
    }
}

/// One side of an inequality: a rational, or a combination
/// `sum c_i r_i^(1/n)` of n-th roots of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Quantity {
    Exact(Rat),
    Roots { n: u32, terms: Vec<(Rat, Rat)> },
}

impl Quantity {
    pub fn exact(&self) -> Option<Rat> {
        match self {
            Quantity::Exact(r) => Some(r.clone()),
            Quantity::Roots { n, terms } => terms.iter().try_fold(Rat::zero(), |acc, (c, r)| {
                exact_root(r, *n).map(|root| acc + c * root)
            }),
        }
    }

    pub fn numeric(&self, scale: u32) -> Decimal {
        match self {
            Quantity::Exact(r) => Decimal::from_rat(r, scale),
            Quantity::Roots { n, terms } => terms.iter().fold(Decimal::zero(scale), |acc, (c, r)| {
                &acc + &Decimal::root(r, *n, scale).mul_rat(c)
            }),
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Exact(r) => write!(f, "{}", rat_string(r)),
            Quantity::Roots { n, terms } => {
                let parts: Vec<String> = terms
                    .iter()
                    .map(|(c, r)| {
                        if c.is_one() {
                            format!("({})^(1/{n})", rat_string(r))
                        } else {
                            format!("{}*({})^(1/{n})", rat_string(c), rat_string(r))
                        }
                    })
                    .collect();
                f.write_str(&parts.join(" + "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityReport {
    pub form: Form,
    pub lambda: Option<Rat>,
    pub lhs: Quantity,
    pub rhs: Quantity,
    /// `lhs - rhs`, truncated decimal.
    pub slack: Decimal,
    pub verdict: Verdict,
    /// Set when a body has zero volume and the inequality holds trivially.
    pub degenerate: bool,
}

impl InequalityReport {
    pub fn is_violation(&self) -> bool {
        self.verdict == Verdict::Violation
    }
}

/// The two exact sides `V_{n-1,1}(K,L)^n` and `V(K)^(n-1) V(L)`.
fn minkowski_sides(k: &Polytope, l: &Polytope) -> Result<(Rat, Rat, Rat)> {
    l.require_dim(k.dim())?;
    let n = k.dim() as u32;
    let mv = mixed_volume(k, l)?;
    let lhs = pow(&mv, n);
    let rhs = pow(&volume(k), n - 1) * volume(l);
    Ok((mv, lhs, rhs))
}

/// Exact Minkowski comparison. Zero-volume inputs are accepted and flagged
/// as degenerate; the right-hand side then vanishes.
pub fn minkowski_check(k: &Polytope, l: &Polytope) -> Result<InequalityReport> {
    let (_, lhs, rhs) = minkowski_sides(k, l)?;
    Ok(InequalityReport {
        form: Form::Minkowski,
        lambda: None,
        slack: Decimal::from_rat(&(&lhs - &rhs), DIGITS + GUARD),
        verdict: Verdict::of(&lhs, &rhs),
        degenerate: volume(k).is_zero() || volume(l).is_zero(),
        lhs: Quantity::Exact(lhs),
        rhs: Quantity::Exact(rhs),
    })
}

/// Scale-free form of the normalized inequality: the quotient
/// `V_{n-1,1}(K,L)^n / (V(K)^(n-1) V(L))` compared with 1.
pub fn normalized_check(k: &Polytope, l: &Polytope) -> Result<InequalityReport> {
    l.require_dim(k.dim())?;
    if !k.is_full_dimensional() || !l.is_full_dimensional() {
        return Err(Error::ZeroVolume);
    }
    let (_, lhs, rhs) = minkowski_sides(k, l)?;
    let q = lhs / rhs;
    let one = Rat::one();
    Ok(InequalityReport {
        form: Form::Normalized,
        lambda: None,
        slack: Decimal::from_rat(&(&q - &one), DIGITS + GUARD),
        verdict: Verdict::of(&q, &one),
        degenerate: false,
        lhs: Quantity::Exact(q),
        rhs: Quantity::Exact(one),
    })
}

fn check_unit_interval(t: &Rat) -> Result<()> {
    if t.is_negative() || *t > Rat::one() {
        Err(Error::LambdaRange)
    } else {
        Ok(())
    }
}

/// `(1-t) K + t L`.
pub fn interpolate(k: &Polytope, l: &Polytope, t: &Rat) -> Result<Polytope> {
    check_unit_interval(t)?;
    combine(&(Rat::one() - t), k, t, l)
}

pub fn bm_check(k: &Polytope, l: &Polytope, lambda: &Rat) -> Result<InequalityReport> {
    bm_check_digits(k, l, lambda, DIGITS)
}

/// Brunn-Minkowski at `lambda`, slack rendered with `digits` digits.
pub fn bm_check_digits(k: &Polytope, l: &Polytope, lambda: &Rat, digits: u32) -> Result<InequalityReport> {
    check_unit_interval(lambda)?;
    l.require_dim(k.dim())?;
    k.require_full()?;
    l.require_full()?;
    let n = k.dim() as u32;
    let kl = interpolate(k, l, lambda)?;
    let lhs = Quantity::Roots {
        n,
        terms: vec![(Rat::one(), volume(&kl))],
    };
    let rhs = Quantity::Roots {
        n,
        terms: vec![(Rat::one() - lambda, volume(k)), (lambda.clone(), volume(l))],
    };
    let scale = digits + GUARD;
    let slack = &lhs.numeric(scale) - &rhs.numeric(scale);
    let endpoint = lambda.is_zero() || lambda.is_one();
    let verdict = if endpoint {
        Verdict::Equality
    } else {
        let (_, a, b) = minkowski_sides(k, l)?;
        match Verdict::of(&a, &b) {
            Verdict::Equality => Verdict::Equality,
            Verdict::Strict if slack.at_least_neg_pow10(SLACK_TOLERANCE_EXP) => Verdict::Strict,
            _ => Verdict::Violation,
        }
    };
    Ok(InequalityReport {
        form: Form::BrunnMinkowski,
        lambda: Some(lambda.clone()),
        lhs,
        rhs,
        slack,
        verdict,
        degenerate: false,
    })
}

/// `k / 8` for `k = 0..=8`.
pub fn default_grid() -> Vec<Rat> {
    uniform_grid(8)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MidpointCertificate {
    pub t1: Rat,
    pub t3: Rat,
    /// `f((t1 + t3) / 2)`.
    pub f_mid: Rat,
    pub holds: bool,
    /// Decided in rational arithmetic rather than with the decimal tolerance.
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcavityProfile {
    pub n: u32,
    /// `(t, f(t))` in grid order.
    pub samples: Vec<(Rat, Rat)>,
    /// `f(t)^(1/n)` per sample.
    pub roots: Vec<Decimal>,
    pub certificates: Vec<MidpointCertificate>,
}

impl ConcavityProfile {
    pub fn is_concave(&self) -> bool {
        self.certificates.iter().all(|c| c.holds)
    }

    pub fn is_constant(&self) -> bool {
        self.samples.windows(2).all(|w| w[0].1 == w[1].1)
    }
}

/// `2 f_m^(1/n) >= f_1^(1/n) + f_3^(1/n)`.
fn midpoint_holds(n: u32, f1: &Rat, fm: &Rat, f3: &Rat) -> (bool, bool) {
    if n == 2 {
        // 2 sqrt(fm) >= sqrt(f1) + sqrt(f3)  <=>  d >= 0 and d^2 >= 4 f1 f3, d = 4 fm - f1 - f3
        let d = int(4) * fm - f1 - f3;
        let holds = !d.is_negative() && &d * &d >= int(4) * f1 * f3;
        return (holds, true);
    }
    if let (Some(r1), Some(r3)) = (exact_root(f1, n), exact_root(f3, n)) {
        let avg = (r1 + r3) / int(2);
        return (*fm >= pow(&avg, n), true);
    }
    let scale = DIGITS + GUARD;
    let two = int(2);
    let lhs = Decimal::root(fm, n, scale).mul_rat(&two);
    let rhs = &Decimal::root(f1, n, scale) + &Decimal::root(f3, n, scale);
    ((&lhs - &rhs).at_least_neg_pow10(SLACK_TOLERANCE_EXP), false)
}

pub fn concavity_profile(k: &Polytope, l: &Polytope, grid: &[Rat]) -> Result<ConcavityProfile> {
    concavity_profile_with(Exec::default(), k, l, grid)
}

/// Exact `f(t) = V((1-t)K + tL)` on the grid plus a midpoint certificate for
/// every consecutive triple `t1, t2, t3` (evaluated at `(t1 + t3) / 2`).
pub fn concavity_profile_with(exec: Exec, k: &Polytope, l: &Polytope, grid: &[Rat]) -> Result<ConcavityProfile> {
    grid.iter().try_for_each(check_unit_interval)?;
    l.require_dim(k.dim())?;
    let n = k.dim() as u32;
    let f = |t: &Rat| interpolate(k, l, t).map(|p| volume(&p));
    let values = exec.try_map(grid, f)?;
    let triples: Vec<usize> = (0..grid.len().saturating_sub(2)).collect();
    let certificates = exec.try_map(&triples, |&i| {
        let (t1, t2, t3) = (&grid[i], &grid[i + 1], &grid[i + 2]);
        let mid = (t1 + t3) / int(2);
        let f_mid = if mid == *t2 { values[i + 1].clone() } else { f(&mid)? };
        let (holds, exact) = midpoint_holds(n, &values[i], &f_mid, &values[i + 2]);
        Ok::<_, Error>(MidpointCertificate {
            t1: t1.clone(),
            t3: t3.clone(),
            f_mid,
            holds,
            exact,
        })
    })?;
    let scale = DIGITS + GUARD;
    Ok(ConcavityProfile {
        n,
        roots: values.iter().map(|v| Decimal::root(v, n, scale)).collect(),
        samples: grid.iter().cloned().zip(values).collect(),
        certificates,
    })
}

/// Coefficients of `f(t) = V((1-t)K + tL) = sum_i c_i t^i (1-t)^(n-i)` in the
/// monomial basis, from the exact volume polynomial `c` of `eps -> V(K + eps L)`.
pub fn interpolation_polynomial(k: &Polytope, l: &Polytope) -> Result<Vec<Rat>> {
    let c = volume_polynomial(k, l)?.coefficients;
    let n = c.len() - 1;
    let mut out = vec![Rat::zero(); n + 1];
    for (i, ci) in c.iter().enumerate() {
        // t^i (1-t)^(n-i) = sum_j binom(n-i, j) (-1)^j t^(i+j)
        let mut b = Rat::one();
        for j in 0..=n - i {
            let term = ci * &b;
            if j % 2 == 0 {
                out[i + j] += term;
            } else {
                out[i + j] -= term;
            }
            b = b * int((n - i - j) as i64) / int(j as i64 + 1);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivativeIdentity {
    /// `f'(0)` read off the interpolation polynomial.
    pub derivative: Rat,
    /// `-n V(K) + n V_{n-1,1}(K, L)` with the base-height mixed volume.
    pub first_variation: Rat,
    pub difference: Rat,
}

pub fn derivative_identity_check(k: &Polytope, l: &Polytope) -> Result<DerivativeIdentity> {
    l.require_dim(k.dim())?;
    k.require_full()?;
    l.require_full()?;
    let n = int(k.dim() as i64);
    let derivative = interpolation_polynomial(k, l)?[1].clone();
    let mv = mixed_volume_base_height(k, l)?.value;
    let first_variation = &n * (mv - volume(k));
    Ok(DerivativeIdentity {
        difference: &derivative - &first_variation,
        derivative,
        first_variation,
    })
}

/// Decomposition `V(K_t) = (1-t) V_{n-1,1}(K_t, K) + t V_{n-1,1}(K_t, L)` and
/// the two Minkowski bounds it is combined with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinkowskiTrace {
    pub t: Rat,
    pub volume: Rat,
    /// `V_{n-1,1}(K_t, K_t)`, which must equal `volume`.
    pub self_mixed: Rat,
    pub mixed_with_k: Rat,
    pub mixed_with_l: Rat,
    pub identity_holds: bool,
    /// `V_{n-1,1}(K_t, K)^n` vs `V(K_t)^(n-1) V(K)`.
    pub bound_k: Verdict,
    /// `V_{n-1,1}(K_t, L)^n` vs `V(K_t)^(n-1) V(L)`.
    pub bound_l: Verdict,
}

pub fn mmv_implies_bm_trace(k: &Polytope, l: &Polytope, t: &Rat) -> Result<MinkowskiTrace> {
    check_unit_interval(t)?;
    l.require_dim(k.dim())?;
    k.require_full()?;
    l.require_full()?;
    let n = k.dim() as u32;
    let kt = interpolate(k, l, t)?;
    let vol = volume(&kt);
    let self_mixed = mixed_volume_base_height(&kt, &kt)?.value;
    let mk = mixed_volume_base_height(&kt, k)?.value;
    let ml = mixed_volume_base_height(&kt, l)?.value;
    let combo = (Rat::one() - t) * &mk + t * &ml;
    let base = pow(&vol, n - 1);
    Ok(MinkowskiTrace {
        t: t.clone(),
        identity_holds: self_mixed == vol && combo == vol,
        bound_k: Verdict::of(&pow(&mk, n), &(&base * volume(k))),
        bound_l: Verdict::of(&pow(&ml, n), &(&base * volume(l))),
        volume: vol,
        self_mixed,
        mixed_with_k: mk,
        mixed_with_l: ml,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;
    use crate::geometry::Vector;

    fn pts(c: &[[i64; 2]]) -> Vec<Vector> {
        c.iter().map(|p| Vector::from_ints(p)).collect()
    }

    fn half() -> Rat {
        frac(1, 2)
    }

    fn square() -> Polytope {
        Polytope::unit_cube(2)
    }

    fn rect() -> Polytope {
        Polytope::cuboid(&[int(0), int(0)], &[int(2), int(1)]).unwrap()
    }

    fn diamond() -> Polytope {
        Polytope::convex_hull(&pts(&[[1, 0], [0, 1], [-1, 0], [0, -1]])).unwrap()
    }

    fn shifted(p: &Polytope, t: &[i64]) -> Polytope {
        p.translate(&Vector::from_ints(t))
    }

    #[test]
    fn bm_square_rectangle() {
        let r = bm_check(&square(), &rect(), &half()).unwrap();
        assert_eq!(r.verdict, Verdict::Strict);
        assert_eq!(r.lhs.numeric(20).render(6), "1.224744");
        assert_eq!(r.rhs.numeric(20).render(6), "1.207106");
        assert!(!r.slack.is_negative());
    }

    #[test]
    fn bm_equality_for_homothets() {
        let r = bm_check(&square(), &shifted(&square(), &[5, 5]), &frac(3, 10)).unwrap();
        assert_eq!(r.verdict, Verdict::Equality);
        let big = square().homothetic_image(&int(3), &Vector::from_ints(&[1, 1])).unwrap();
        let r = bm_check(&square(), &big, &half()).unwrap();
        assert_eq!(r.verdict, Verdict::Equality);
        assert_eq!(r.lhs.exact(), Some(int(2)));
        assert_eq!(r.rhs.exact(), Some(int(2)));
    }

    #[test]
    fn bm_errors() {
        let seg = Polytope::segment(&Vector::zero(2), &Vector::axis(2, 0)).unwrap();
        assert!(matches!(
            bm_check(&seg, &square(), &half()),
            Err(Error::LowerDimensional { .. })
        ));
        assert_eq!(bm_check(&square(), &square(), &int(2)), Err(Error::LambdaRange));
        assert_eq!(bm_check(&square(), &square(), &frac(-1, 3)), Err(Error::LambdaRange));
    }

    #[test]
    fn minkowski_examples() {
        let r = minkowski_check(&square(), &diamond()).unwrap();
        assert_eq!(r.verdict, Verdict::Strict);
        assert_eq!(r.lhs, Quantity::Exact(int(4)));
        assert_eq!(r.rhs, Quantity::Exact(int(2)));
        let l = square().homothetic_image(&int(2), &Vector::from_ints(&[7, 0])).unwrap();
        let r = minkowski_check(&square(), &l).unwrap();
        assert_eq!(r.verdict, Verdict::Equality);
        assert_eq!(r.lhs, Quantity::Exact(int(4)));
    }

    #[test]
    fn minkowski_degenerate_is_flagged() {
        let seg = Polytope::segment(&Vector::zero(2), &Vector::axis(2, 0)).unwrap();
        let r = minkowski_check(&seg, &square()).unwrap();
        assert!(r.degenerate);
        assert_eq!(r.rhs, Quantity::Exact(int(0)));
        // A(segment, S) = 1/2, so the left side is 1/4
        assert_eq!(r.lhs, Quantity::Exact(frac(1, 4)));
        assert_ne!(r.verdict, Verdict::Violation);
    }

    #[test]
    fn normalized_examples() {
        assert_eq!(normalized_check(&square(), &square()).unwrap().verdict, Verdict::Equality);
        let r = normalized_check(&square(), &diamond()).unwrap();
        assert_eq!(r.lhs, Quantity::Exact(int(2)));
        assert_eq!(r.verdict, Verdict::Strict);
        let bx = Polytope::cuboid(&[int(0), int(0), int(0)], &[int(2), int(1), frac(1, 2)]).unwrap();
        let r = normalized_check(&Polytope::unit_cube(3), &bx).unwrap();
        // V(C, box) = (2 + 1 + 1/2) / 3 = 7/6; quotient (7/6)^3 / 1
        assert_eq!(r.lhs, Quantity::Exact(frac(343, 216)));
        assert_eq!(r.verdict, Verdict::Strict);
        let seg = Polytope::segment(&Vector::zero(2), &Vector::axis(2, 0)).unwrap();
        assert_eq!(normalized_check(&seg, &square()), Err(Error::ZeroVolume));
    }

    #[test]
    fn profiles() {
        let g = [int(0), half(), int(1)];
        let p = concavity_profile(&square(), &shifted(&square(), &[1, 0]), &g).unwrap();
        assert!(p.is_constant());
        let p = concavity_profile(&square(), &rect(), &g).unwrap();
        let f: Vec<Rat> = p.samples.iter().map(|s| s.1.clone()).collect();
        assert_eq!(f, vec![int(1), frac(3, 2), int(2)]);
        assert!(p.is_concave());
        assert!(p.certificates[0].exact);
        let two = square().scale(&int(2)).unwrap();
        let p = concavity_profile(&square(), &two, &g).unwrap();
        let f: Vec<Rat> = p.samples.iter().map(|s| s.1.clone()).collect();
        assert_eq!(f, vec![int(1), frac(9, 4), int(4)]);
        assert_eq!(p.roots[1].render(3), "1.500");
        assert!(p.is_concave());
    }

    #[test]
    fn profile_on_default_grid_in_three_dimensions() {
        let bx = Polytope::cuboid(&[int(0), int(0), int(0)], &[int(2), int(1), int(3)]).unwrap();
        let p = concavity_profile(&Polytope::standard_simplex(3), &bx, &default_grid()).unwrap();
        assert_eq!(p.certificates.len(), 7);
        assert!(p.is_concave());
    }

    #[test]
    fn expansion_matches_direct_volumes() {
        let (k, l) = (square(), diamond());
        let c = interpolation_polynomial(&k, &l).unwrap();
        for t in default_grid() {
            let direct = volume(&interpolate(&k, &l, &t).unwrap());
            let horner = c.iter().rev().fold(Rat::zero(), |acc, ci| acc * &t + ci);
            assert_eq!(direct, horner);
        }
    }

    #[test]
    fn derivative_examples() {
        let d = derivative_identity_check(&square(), &square()).unwrap();
        assert!(d.difference.is_zero() && d.derivative.is_zero());
        let d = derivative_identity_check(&square(), &diamond()).unwrap();
        assert!(d.difference.is_zero());
        assert_eq!(d.derivative, int(2));
        let c = Polytope::unit_cube(3);
        let d = derivative_identity_check(&c, &c.translate(&Vector::from_ints(&[1, 2, 3]))).unwrap();
        assert!(d.difference.is_zero() && d.derivative.is_zero());
    }

    #[test]
    fn decomposition_trace() {
        let tr = mmv_implies_bm_trace(&square(), &rect(), &half()).unwrap();
        assert!(tr.identity_holds);
        assert_eq!(tr.volume, frac(3, 2));
        let tr = mmv_implies_bm_trace(&square(), &square(), &frac(2, 7)).unwrap();
        assert!(tr.identity_holds);
        assert_eq!(tr.volume, int(1));
        let c = Polytope::unit_cube(3);
        let tr = mmv_implies_bm_trace(&c, &c.scale(&int(2)).unwrap(), &half()).unwrap();
        assert_eq!(tr.volume, frac(27, 8));
        assert_eq!(tr.mixed_with_k, frac(9, 4));
        assert_eq!(tr.mixed_with_l, frac(9, 2));
        assert_eq!((tr.bound_k, tr.bound_l), (Verdict::Equality, Verdict::Equality));
    }
}
