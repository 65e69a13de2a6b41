//! Deterministic direction and parameter grids.

use crate::arith::{frac, Rat};
use crate::geometry::{Direction, Vector};
use crate::random::{random_direction, seeded};

/// Farey sequence of the given order: reduced `p/q` in `[0, 1]`, `q <= order`, ascending.
pub fn farey(order: u64) -> Vec<(u64, u64)> {
    let mut out = vec![(0, 1)];
    let (mut a, mut b, mut c, mut d) = (0u64, 1u64, 1u64, order);
    while c <= order {
        let k = (order + b) / d;
        let (na, nb, nc, nd) = (c, d, k * c - a, k * d - b);
        out.push((na, nb));
        a = na;
        b = nb;
        c = nc;
        d = nd;
    }
    out
}

fn quarter_turn(v: &Vector) -> Vector {
    Vector::new(vec![-&v[1], v[0].clone()])
}

/// 64 planar directions, 16 per quadrant. The first-quadrant block is
/// `(q - p, p)` for 16 evenly spaced terms of the order-8 Farey sequence
/// restricted to `[0, 1)` (angles in `[0, 90)` degrees, starting with `e_1`);
/// the other blocks are its exact quarter turns.
pub fn farey_direction_grid() -> Vec<Direction> {
    let base: Vec<(u64, u64)> = farey(8).into_iter().filter(|&(p, q)| p < q).collect();
    let picks = 16;
    let block: Vec<Vector> = (0..picks)
        .map(|i| {
            let (p, q) = base[i * base.len() / picks];
            Vector::from_ints(&[(q - p) as i64, p as i64])
        })
        .collect();
    let mut out = Vec::with_capacity(4 * picks);
    let mut current = block;
    for _ in 0..4 {
        out.extend(current.iter().cloned().map(|v| Direction::new(v).unwrap()));
        current = current.iter().map(quarter_turn).collect();
    }
    out
}

/// Directions covering angles `[0, 180)` built from the order-`order` Farey
/// sequence; used as the default Steiner schedule (order 4).
pub fn farey_half_turn_cycle(order: u64) -> Vec<Direction> {
    let f = farey(order);
    let mut out: Vec<Direction> = f
        .iter()
        .map(|&(p, q)| Direction::from_ints(&[(q - p) as i64, p as i64]).unwrap())
        .collect();
    out.extend(
        f.iter()
            .filter(|&&(p, q)| p > 0 && p < q)
            .rev()
            .map(|&(p, q)| Direction::from_ints(&[-((q - p) as i64), p as i64]).unwrap()),
    );
    out
}

/// `k / denom` for `k = 0..=denom`.
pub fn uniform_grid(denom: i64) -> Vec<Rat> {
    (0..=denom).map(|k| frac(k, denom)).collect()
}

/// Axes `e_i` followed by the diagonals `e_i + e_j` and `e_i - e_j` (`i < j`).
pub fn axes_and_diagonals(n: usize) -> Vec<Direction> {
    let mut out: Vec<Direction> = (0..n).map(|i| Direction::axis(n, i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            for s in [1i64, -1] {
                let mut c = vec![0i64; n];
                c[i] = 1;
                c[j] = s;
                out.push(Direction::from_ints(&c).unwrap());
            }
        }
    }
    out
}

pub const DEFAULT_DIRECTION_SEED: u64 = 0x5eed_0002;

/// Axes, diagonals and `random` seeded rational directions.
pub fn verification_directions(n: usize, random: usize, seed: u64) -> Vec<Direction> {
    let mut out = axes_and_diagonals(n);
    let mut rng = seeded(seed);
    out.extend((0..random).map(|_| random_direction(&mut rng, n, 5)));
    out
}
