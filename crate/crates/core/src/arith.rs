//! Exact rational scalars and fixed-point decimal renderings of algebraic
//! quantities (roots and square roots of rationals).

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number; always kept in lowest terms with a positive denominator.
pub type Rat = BigRational;

pub fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"` (optional sign, decimal digits).
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p = BigInt::from_str(p).ok()?;
    let q = BigInt::from_str(q).ok()?;
    if q.is_zero() {
        return None;
    }
    Some(Rat::new(p, q))
}

/// Canonical `"p/q"` string (`"p"` for integers).
pub fn rat_string(r: &Rat) -> String {
    r.to_string()
}

pub fn pow(r: &Rat, e: u32) -> Rat {
    let mut out = Rat::one();
    for _ in 0..e {
        out *= r;
    }
    out
}

/// Exact `n`-th root of a non-negative rational, if it is rational.
pub fn exact_root(r: &Rat, n: u32) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let p = r.numer().nth_root(n);
    let q = r.denom().nth_root(n);
    if num_traits::pow(p.clone(), n as usize) == *r.numer()
        && num_traits::pow(q.clone(), n as usize) == *r.denom()
    {
        Some(Rat::new(p, q))
    } else {
        None
    }
}

pub fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Fixed-point decimal `mantissa / 10^scale`. Used to render irrational
/// quantities (n-th roots of rationals and their combinations) to a chosen
/// number of digits. All constructors truncate toward negative infinity, so a
/// sum of `k` terms is within `k * 10^-scale` of the true value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Decimal {
    mantissa: BigInt,
    scale: u32,
}

fn ten_pow(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), e as usize)
}

impl Decimal {
    pub fn zero(scale: u32) -> Self {
        Decimal {
            mantissa: BigInt::zero(),
            scale,
        }
    }

    pub fn from_rat(r: &Rat, scale: u32) -> Self {
        let m = (r.numer() * ten_pow(scale)).div_floor(r.denom());
        Decimal { mantissa: m, scale }
    }

    /// `floor(r^(1/n) * 10^scale) / 10^scale` for `r >= 0`.
    pub fn root(r: &Rat, n: u32, scale: u32) -> Self {
        assert!(!r.is_negative(), "root of a negative rational");
        let shifted = (r.numer() * ten_pow(scale * n)).div_floor(r.denom());
        Decimal {
            mantissa: shifted.nth_root(n),
            scale,
        }
    }

    pub fn sqrt(r: &Rat, scale: u32) -> Self {
        Self::root(r, 2, scale)
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn mul_rat(&self, r: &Rat) -> Self {
        let m = (&self.mantissa * r.numer()).div_floor(r.denom());
        Decimal {
            mantissa: m,
            scale: self.scale,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    /// Compares `self` with `10^-exp`, i.e. returns `self >= -10^-exp`.
    pub fn at_least_neg_pow10(&self, exp: u32) -> bool {
        if exp >= self.scale {
            return self.mantissa >= -BigInt::one();
        }
        self.mantissa >= -ten_pow(self.scale - exp)
    }

    /// `|self| <= 10^-exp`.
    pub fn within_pow10(&self, exp: u32) -> bool {
        if exp >= self.scale {
            return self.mantissa.abs() <= BigInt::one();
        }
        self.mantissa.abs() <= ten_pow(self.scale - exp)
    }

    pub fn to_f64(&self) -> f64 {
        let s = self.render(self.scale.min(30));
        s.parse().unwrap_or(f64::NAN)
    }

    /// Decimal string with exactly `digits` digits after the point (truncated).
    pub fn render(&self, digits: u32) -> String {
        let m = if digits >= self.scale {
            &self.mantissa * ten_pow(digits - self.scale)
        } else {
            self.mantissa.div_floor(&ten_pow(self.scale - digits))
        };
        let neg = m.sign() == Sign::Minus;
        let mut abs = m.abs().to_string();
        if digits == 0 {
            return if neg { format!("-{abs}") } else { abs };
        }
        let width = digits as usize + 1;
        if abs.len() < width {
            abs = format!("{}{}", "0".repeat(width - abs.len()), abs);
        }
        let (int_part, frac_part) = abs.split_at(abs.len() - digits as usize);
        format!("{}{}.{}", if neg { "-" } else { "" }, int_part, frac_part)
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, u32) {
        use std::cmp::Ordering::*;
        match self.scale.cmp(&other.scale) {
            Equal => (self.mantissa.clone(), other.mantissa.clone(), self.scale),
            Less => (
                &self.mantissa * ten_pow(other.scale - self.scale),
                other.mantissa.clone(),
                other.scale,
            ),
            Greater => (
                self.mantissa.clone(),
                &other.mantissa * ten_pow(self.scale - other.scale),
                self.scale,
            ),
        }
    }
}

impl Add for &Decimal {
    type Output = Decimal;
    fn add(self, rhs: &Decimal) -> Decimal {
        let (a, b, scale) = self.aligned(rhs);
        Decimal {
            mantissa: a + b,
            scale,
        }
    }
}

impl Sub for &Decimal {
    type Output = Decimal;
    fn sub(self, rhs: &Decimal) -> Decimal {
        let (a, b, scale) = self.aligned(rhs);
        Decimal {
            mantissa: a - b,
            scale,
        }
    }
}

impl Neg for Decimal {
    type Output = Decimal;
    fn neg(self) -> Decimal {
        Decimal {
            mantissa: -self.mantissa,
            scale: self.scale,
        }
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(self.scale))
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
