//! Seeded rational specialisations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::Rational;

/// Seed used by every specialised check unless a caller overrides it.
pub const DEFAULT_SEED: u64 = 20_240_917;

/// `count` points with `len` integer coordinates in `[-bound, bound]`.
pub fn sample_points(seed: u64, count: usize, len: usize, bound: i64) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..len)
                .map(|_| Rational::from(rng.gen_range(-bound..=bound)))
                .collect()
        })
        .collect()
}

/// Inverts a square rational matrix by Gauss-Jordan.
pub fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        let inv = a[col][col].recip()?;
        for c in 0..2 * n {
            a[col][c] *= &inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..2 * n {
                let t = &f * &a[col][c];
                a[r][c] -= &t;
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_points_repeat() {
        assert_eq!(sample_points(7, 3, 4, 9), sample_points(7, 3, 4, 9));
        assert_ne!(sample_points(7, 3, 4, 9), sample_points(8, 3, 4, 9));
    }

    #[test]
    fn inverse_of_two_by_two() {
        let m = vec![
            vec![Rational::from(2), Rational::from(1)],
            vec![Rational::from(1), Rational::from(1)],
        ];
        let inv = invert(&m).unwrap();
        assert_eq!(inv[0], vec![Rational::from(1), Rational::from(-1)]);
        assert_eq!(inv[1], vec![Rational::from(-1), Rational::from(2)]);
        assert!(invert(&[vec![Rational::zero()]]).is_none());
    }
}
