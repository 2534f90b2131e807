//! Deterministic sampling helpers: low-discrepancy sequences for coverage
//! tests and seeded random angle compositions for extremality searches.

use rand::Rng;
use std::f64::consts::{FRAC_PI_2, PI};

/// Van der Corput radical inverse of `index` in the given base: the classic
/// low-discrepancy point sequence in [0, 1).
pub fn radical_inverse(mut index: u64, base: u64) -> f64 {
    let inv_base = 1.0 / base as f64;
    let mut fraction = inv_base;
    let mut result = 0.0;
    while index > 0 {
        result += (index % base) as f64 * fraction;
        index /= base;
        fraction *= inv_base;
    }
    result
}

/// `index`-th point of the Halton sequence in the unit cube (bases 2, 3, 5).
pub fn halton3(index: u64) -> [f64; 3] {
    [
        radical_inverse(index, 2),
        radical_inverse(index, 3),
        radical_inverse(index, 5),
    ]
}

/// Draws a uniformly random composition of `n` half-angles that sum to π with
/// every part strictly inside (0, π/2): exponential draws normalized onto the
/// constraint simplex, rejecting the (rare) draws with an oversized part.
pub fn random_half_angle_composition(n: usize, rng: &mut impl Rng) -> Vec<f64> {
    assert!(n >= 3, "a composition needs at least 3 parts");
    loop {
        let draws: Vec<f64> = (0..n)
            .map(|_| {
                let u: f64 = rng.random_range(0.0..1.0);
                -(1.0 - u).ln()
            })
            .collect();
        let total: f64 = draws.iter().sum();
        if total <= 0.0 {
            continue;
        }
        let alphas: Vec<f64> = draws.iter().map(|d| d / total * PI).collect();
        if alphas.iter().all(|&a| a > 1e-9 && a < FRAC_PI_2 - 1e-12) {
            return alphas;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn radical_inverse_matches_hand_values() {
        assert_eq!(radical_inverse(1, 2), 0.5);
        assert_eq!(radical_inverse(2, 2), 0.25);
        assert_eq!(radical_inverse(3, 2), 0.75);
        assert_eq!(radical_inverse(1, 3), 1.0 / 3.0);
        assert!((radical_inverse(5, 3) - 7.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn compositions_satisfy_their_constraints() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 3..=8 {
            for _ in 0..200 {
                let c = random_half_angle_composition(n, &mut rng);
                assert_eq!(c.len(), n);
                assert!((c.iter().sum::<f64>() - PI).abs() < 1e-12);
                assert!(c.iter().all(|&a| a > 0.0 && a < FRAC_PI_2));
            }
        }
    }
}
