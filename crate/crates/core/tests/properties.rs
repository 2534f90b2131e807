//! Randomized property checks: extremality of the regular shapes, metric
//! identities, symmetry invariances, and kernel agreement on arbitrary
//! frames.

use closepack::barlow::{generate_packing, packing_density, StackingSequence};
use closepack::planar::{
    circumscribed_area_perimeter, regular_polygon_extremes, AngleComposition2D,
};
use closepack::pyramid::{tight_pyramid_metrics, TightPyramid};
use closepack::sampling::random_half_angle_composition;
use closepack::solid_angle::{
    solid_angle_from_rays, triangle_solid_angle, SphericalTriangleAngles,
};
use closepack::Vec3;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CLOSE_DENSITY: f64 = 0.740_480_489_693_061_3; // π/√18

fn composition(seed: u64, n: usize) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_half_angle_composition(n, &mut rng)
}

fn direction(rng: &mut ChaCha8Rng) -> Vec3 {
    let z: f64 = rng.random_range(-1.0..1.0);
    let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let r = (1.0 - z * z).sqrt();
    Vec3::new(r * phi.cos(), r * phi.sin(), z)
}

proptest! {
    /// Among polygons circumscribing a fixed circle, the regular one has the
    /// least area and the least perimeter.
    #[test]
    fn regular_polygon_minimizes_area_and_perimeter(
        seed in any::<u64>(),
        n in 3usize..9,
        radius in 0.5f64..2.0,
    ) {
        let alphas = composition(seed, n);
        let c = AngleComposition2D::new(alphas, radius).unwrap();
        let (area, perimeter) = circumscribed_area_perimeter(&c);
        let (reg_area, reg_perimeter) = regular_polygon_extremes(n as u32, radius).unwrap();
        prop_assert!(area >= reg_area - 1e-12 * reg_area);
        prop_assert!(perimeter >= reg_perimeter - 1e-12 * reg_perimeter);
    }

    /// A polygon circumscribing a circle of radius r has area r·L/2.
    #[test]
    fn circumscribed_area_is_half_radius_times_perimeter(
        seed in any::<u64>(),
        n in 3usize..9,
        radius in 0.5f64..2.0,
    ) {
        let alphas = composition(seed, n);
        let c = AngleComposition2D::new(alphas, radius).unwrap();
        let (area, perimeter) = circumscribed_area_perimeter(&c);
        prop_assert!((area - radius * perimeter / 2.0).abs() <= 1e-12 * area.max(1.0));
    }

    /// Sector volume is a third of the apex solid angle, and the fill ratio
    /// is their quotient with the pyramid volume.
    #[test]
    fn pyramid_metric_identities(seed in any::<u64>(), n in 3usize..7) {
        let alphas = composition(seed, n);
        let m = tight_pyramid_metrics(&TightPyramid::new(alphas).unwrap()).unwrap();
        let omega = m.omega.steradians();
        prop_assert!((m.tau - omega / 3.0).abs() <= 1e-13 * omega.max(1.0));
        prop_assert!((m.eta - m.tau / m.volume).abs() <= 1e-12);
    }

    /// Every pyramid quantity depends only on the half-angle multiset, not
    /// on the order the angles appear around the base.
    #[test]
    fn pyramid_metrics_ignore_angle_order(
        seed in any::<u64>(),
        n in 3usize..7,
        rotate in 0usize..6,
        reverse in any::<bool>(),
    ) {
        let alphas = composition(seed, n);
        let m = tight_pyramid_metrics(&TightPyramid::new(alphas.clone()).unwrap()).unwrap();
        let mut shuffled = alphas;
        shuffled.rotate_left(rotate % n);
        if reverse {
            shuffled.reverse();
        }
        let s = tight_pyramid_metrics(&TightPyramid::new(shuffled).unwrap()).unwrap();
        prop_assert!((m.omega.steradians() - s.omega.steradians()).abs() <= 1e-12);
        prop_assert!((m.volume - s.volume).abs() <= 1e-12);
    }

    /// The spherical-excess kernel and the direct vector kernel agree on
    /// arbitrary well-conditioned frames.
    #[test]
    fn solid_angle_kernels_agree(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (u, v, w) = loop {
            let u = direction(&mut rng);
            let v = direction(&mut rng);
            let w = direction(&mut rng);
            if u.triple(v, w).abs() > 0.05 {
                break (u, v, w);
            }
        };
        let spherical = triangle_solid_angle(&SphericalTriangleAngles::from_rays(u, v, w).unwrap())
            .unwrap()
            .steradians();
        let direct = solid_angle_from_rays(u, v, w).unwrap().angle.steradians();
        prop_assert!((spherical - direct).abs() <= 1e-10);
    }

    /// Every valid stacking sequence packs at the close-packing density.
    /// Sequences are built to be valid by construction: each step moves to
    /// one of the two other layer letters, and the tail is trimmed until it
    /// differs from the head (a two-letter chain always does).
    #[test]
    fn all_stackings_reach_the_close_packing_density(
        first in 0u8..3,
        steps in prop::collection::vec(1u8..3, 1..=5),
    ) {
        let mut letters = vec![first];
        for &step in &steps {
            letters.push((letters.last().unwrap() + step) % 3);
        }
        while letters.len() > 2 && letters[letters.len() - 1] == letters[0] {
            letters.pop();
        }
        let text: String = letters.iter().map(|&l| (b'A' + l) as char).collect();
        let seq = StackingSequence::parse(&text).unwrap();
        let region = generate_packing(&seq, 1, 1).unwrap();
        let density = packing_density(&region).unwrap();
        prop_assert!((density - CLOSE_DENSITY).abs() <= 1e-12);
    }
}
