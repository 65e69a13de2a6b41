//! Small exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::vector::Vector;
use crate::arith::{lcm_of_denominators, Rat};

/// Determinant of a square matrix given by rows, by fraction-based Gaussian
/// elimination.
pub fn det(rows: &[Vec<Rat>]) -> Rat {
    let n = rows.len();
    match n {
        0 => return Rat::one(),
        1 => return rows[0][0].clone(),
        2 => return &rows[0][0] * &rows[1][1] - &rows[0][1] * &rows[1][0],
        3 => {
            let r = rows;
            return &r[0][0] * (&r[1][1] * &r[2][2] - &r[1][2] * &r[2][1])
                - &r[0][1] * (&r[1][0] * &r[2][2] - &r[1][2] * &r[2][0])
                + &r[0][2] * (&r[1][0] * &r[2][1] - &r[1][1] * &r[2][0]);
        }
        _ => {}
    }
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let mut result = Rat::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            result = -result;
        }
        let p = m[col][col].clone();
        result *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            let (top, bottom) = m.split_at_mut(r);
            subtract_row(&mut bottom[0][col..], &top[col][col..], &f);
        }
    }
    result
}

/// Generalized cross product of `d - 1` vectors in R^d: the vector `N` with
/// `N . x = det(x, rows...)` for every `x`. Zero iff the rows are dependent.
pub fn cross(rows: &[Vector]) -> Vector {
    let d = rows.len() + 1;
    if d == 2 {
        return Vector::new(vec![rows[0][1].clone(), -&rows[0][0]]);
    }
    if d == 3 {
        let (a, b) = (&rows[0], &rows[1]);
        return Vector::new(vec![
            &a[1] * &b[2] - &a[2] * &b[1],
            &a[2] * &b[0] - &a[0] * &b[2],
            &a[0] * &b[1] - &a[1] * &b[0],
        ]);
    }
    let coords = (0..d)
        .map(|i| {
            let minor: Vec<Vec<Rat>> = rows
                .iter()
                .map(|r| {
                    r.coords()
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .map(|(_, c)| c.clone())
                        .collect()
                })
                .collect();
            let m = det(&minor);
            if i % 2 == 0 {
                m
            } else {
                -m
            }
        })
        .collect();
    Vector::new(coords)
}

/// Scales a non-zero rational vector to the unique primitive integer vector
/// with the same direction.
pub fn primitive(v: &Vector) -> Vector {
    let l = lcm_of_denominators(v.coords());
    let ints: Vec<BigInt> = v
        .coords()
        .iter()
        .map(|c| c.numer() * (&l / c.denom()))
        .collect();
    let g = ints
        .iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.clone();
    }
    Vector::new(
        ints.into_iter()
            .map(|x| Rat::from_integer(x / &g))
            .collect(),
    )
}

/// Incremental row-echelon basis used to decide linear independence.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: Vec<(usize, Vector)>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot columns of the accepted rows, in insertion order.
    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    fn reduce(&self, v: &Vector) -> Vector {
        let mut r = v.clone();
        for (pivot, row) in &self.rows {
            if !r[*pivot].is_zero() {
                let f = &r[*pivot] / &row[*pivot];
                r = r.add_scaled(&-f, row);
            }
        }
        r
    }

    /// Adds `v` if it is independent of the current rows; returns whether it was added.
    pub fn insert(&mut self, v: &Vector) -> bool {
        let r = self.reduce(v);
        match (0..r.dim()).find(|&i| !r[i].is_zero()) {
            Some(p) => {
                self.rows.push((p, r));
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }
}

pub fn rank(vectors: &[Vector]) -> usize {
    let mut b = EchelonBasis::new();
    for v in vectors {
        b.insert(v);
    }
    b.rank()
}

/// Indices of a maximal affinely independent subset, chosen greedily in order.
pub fn affine_basis(points: &[Vector]) -> Vec<usize> {
    let Some(p0) = points.first() else {
        return Vec::new();
    };
    let mut basis = EchelonBasis::new();
    let mut chosen = vec![0];
    for (i, p) in points.iter().enumerate().skip(1) {
        if basis.rank() == p0.dim() {
            break;
        }
        if basis.insert(&(p - p0)) {
            chosen.push(i);
        }
    }
    chosen
}

/// `row -= f * pivot`.
fn subtract_row(row: &mut [Rat], pivot: &[Rat], f: &Rat) {
    for (x, y) in row.iter_mut().zip(pivot) {
        *x -= f * y;
    }
}

/// Solves the square system `a x = b` exactly; `None` if singular.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot, col);
        let p = m[col][col].clone();
        for x in &mut m[col][col..] {
            *x /= &p;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            let pivot_row = m[col][col..].to_vec();
            subtract_row(&mut m[r][col..], &pivot_row, &f);
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}
