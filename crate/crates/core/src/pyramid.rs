//! Pyramids with apex at a unit sphere's center whose base plane is tangent
//! to the sphere, sized so that a second unit sphere rests tangent to the
//! first and to every lateral face. That tangency pins the distance from the
//! base tangent point to every base edge at exactly 1/√3, so the base is a
//! polygon circumscribing the circle of radius 1/√3 around the tangent point
//! and is described by its vertex half-angle composition.

use crate::error::{GeomError, Result};
use crate::profiles::wedge_fill_profile;
use crate::sampling::random_half_angle_composition;
use crate::solid_angle::{SolidAngle, FOUR_PI};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{FRAC_PI_2, PI};

/// Distance from the base tangent point to every base edge.
pub const APOTHEM: f64 = 0.577_350_269_189_625_8; // 1/√3

/// A tangency-constrained pyramid, described by the half-angles αᵢ at the
/// base tangent point (one per base vertex, summing to π).
#[derive(Debug, Clone)]
pub struct TightPyramid {
    alphas: Vec<f64>,
}

impl TightPyramid {
    pub fn new(alphas: Vec<f64>) -> Result<Self> {
        if alphas.len() < 3 {
            return Err(GeomError::domain(format!(
                "a pyramid base needs at least 3 vertices, got {}",
                alphas.len()
            )));
        }
        for (i, &a) in alphas.iter().enumerate() {
            if !a.is_finite() || a <= 0.0 || a >= FRAC_PI_2 {
                return Err(GeomError::domain(format!(
                    "half-angle {i} = {a} must lie in (0, π/2)"
                )));
            }
        }
        let sum: f64 = alphas.iter().sum();
        if (sum - PI).abs() > 1e-12 {
            return Err(GeomError::domain(format!(
                "half-angles sum to {sum}, expected π within 1e-12"
            )));
        }
        Ok(TightPyramid { alphas })
    }

    /// The pyramid with a regular n-gon base: all half-angles π/n.
    pub fn regular(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(GeomError::domain(format!("need n ≥ 3 base edges, got {n}")));
        }
        TightPyramid::new(vec![PI / n as f64; n as usize])
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }

    pub fn apothem(&self) -> f64 {
        APOTHEM
    }
}

/// The four quantities of interest for a tight pyramid.
#[derive(Debug, Clone, Copy)]
pub struct PyramidMetrics {
    /// Solid angle at the apex.
    pub omega: SolidAngle,
    /// Volume of the unit-sphere sector inside the pyramid: ω/3.
    pub tau: f64,
    /// Pyramid volume: base area (Σ tan αᵢ)/3 times height 1, over 3.
    pub volume: f64,
    /// Fill ratio τ/V.
    pub eta: f64,
}

/// Solid angle of one of the two congruent wedges that the perpendicular
/// from the tangent point onto an edge cuts from that edge's sector. The
/// wedge is exactly the fill-profile cone with opening α and leg 1/√3.
fn half_wedge_solid_angle(alpha: f64) -> Result<f64> {
    Ok(3.0 * wedge_fill_profile(alpha, APOTHEM)?.sector_volume)
}

/// Metrics of an arbitrary tight pyramid. The apex solid angle is assembled
/// from the 2n triangular wedges around the tangent point, two per base
/// vertex; every output depends only on the half-angle multiset.
pub fn tight_pyramid_metrics(p: &TightPyramid) -> Result<PyramidMetrics> {
    let tan_sum: f64 = p.alphas().iter().map(|a| a.tan()).sum();
    let base_area = tan_sum / 3.0;
    let volume = base_area / 3.0;
    let mut omega = 0.0;
    for &a in p.alphas() {
        omega += 2.0 * half_wedge_solid_angle(a)?;
    }
    let omega = SolidAngle::new(omega)?;
    let tau = omega.sector_volume();
    Ok(PyramidMetrics {
        omega,
        tau,
        volume,
        eta: tau / volume,
    })
}

/// Metrics of the regular n-gonal tight pyramid.
pub fn regular_tight_pyramid(n: u32) -> Result<PyramidMetrics> {
    tight_pyramid_metrics(&TightPyramid::regular(n)?)
}

/// Outcome of the random search for a non-regular pyramid beating the
/// regular one.
#[derive(Debug, Clone)]
pub struct ExtremalityReport {
    pub trials: u32,
    pub counterexamples: u32,
    /// A composition that undercut the regular ω, τ or V (or exceeded its η),
    /// if any was found.
    pub first_counterexample: Option<Vec<f64>>,
}

impl ExtremalityReport {
    pub fn ok(&self) -> bool {
        self.counterexamples == 0
    }
}

/// Samples random half-angle compositions and checks that each has strictly
/// larger ω, τ and V than the regular pyramid, and smaller η. Comparisons
/// allow 1e-13 of slack so near-regular draws are not misreported.
pub fn regularity_is_extremal(n: u32, trials: u32, seed: u64) -> Result<ExtremalityReport> {
    if !(3..=6).contains(&n) {
        return Err(GeomError::domain(format!(
            "extremality search covers n in 3..=6, got {n}"
        )));
    }
    if trials == 0 {
        return Err(GeomError::domain("need at least one trial"));
    }
    let regular = regular_tight_pyramid(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counterexamples = 0;
    let mut first = None;
    for _ in 0..trials {
        let alphas = random_half_angle_composition(n as usize, &mut rng);
        let m = tight_pyramid_metrics(&TightPyramid::new(alphas.clone())?)?;
        let beats_regular = m.omega.steradians() >= regular.omega.steradians() - 1e-13
            && m.tau >= regular.tau - 1e-13
            && m.volume >= regular.volume - 1e-13
            && m.eta <= regular.eta + 1e-13;
        if !beats_regular {
            counterexamples += 1;
            if first.is_none() {
                first = Some(alphas);
            }
        }
    }
    Ok(ExtremalityReport {
        trials,
        counterexamples,
        first_counterexample: first,
    })
}

/// Solid-angle budget for a hypothetical polyhedron of triangular, square and
/// pentagonal faces, each face cut out by a tight pyramid around one sphere.
#[derive(Debug, Clone, Copy)]
pub struct SolidAngleBudget {
    /// Whether the face multiset passes the handshake condition (total edge
    /// count Σ nᵢ even) needed to bound any polyhedron at all.
    pub parity_ok: bool,
    /// Lower bound on the total apex solid angle: Σ of the regular tight
    /// pyramids' angles, in steradians. May exceed the full sphere — that is
    /// the point of the budget.
    pub min_total_steradians: f64,
    /// Whether the lower bound already overfills the sphere (> 4π).
    pub exceeds_4pi: bool,
}

/// Adds up the minimal apex solid angles for the given face sizes. Since the
/// regular tight pyramid minimizes the apex angle for its edge count, a total
/// above 4π proves the arrangement cannot surround one sphere.
pub fn thirteen_spheres_budget(face_sizes: &[u32]) -> Result<SolidAngleBudget> {
    if face_sizes.is_empty() {
        return Err(GeomError::domain("face list must be non-empty"));
    }
    let mut total = 0.0;
    let mut edge_sum: u64 = 0;
    for &n in face_sizes {
        if !(3..=5).contains(&n) {
            return Err(GeomError::domain(format!(
                "face size {n} outside the supported range 3..=5"
            )));
        }
        total += regular_tight_pyramid(n)?.omega.steradians();
        edge_sum += n as u64;
    }
    Ok(SolidAngleBudget {
        parity_ok: edge_sum.is_multiple_of(2),
        min_total_steradians: total,
        exceeds_4pi: total > FOUR_PI,
    })
}

/// Largest number of disjoint tight n-gonal pyramids that fit around one
/// sphere by solid angle alone: floor(4π/ωₙ).
pub fn max_tight_pyramids(n: u32) -> Result<u32> {
    if !(3..=5).contains(&n) {
        return Err(GeomError::domain(format!(
            "packing bound supports n in 3..=5, got {n}"
        )));
    }
    Ok((FOUR_PI / regular_tight_pyramid(n)?.omega.steradians()).floor() as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference values for the regular pyramids, frozen from an independent
    // high-precision evaluation.
    const OMEGA_3: f64 = 1.194812833293;
    const OMEGA_4: f64 = 1.010721020568;
    const OMEGA_5: f64 = 0.942529557096;

    #[test]
    fn regular_metrics_match_reference_values() {
        let cases = [
            (3, OMEGA_3, 0.398270944431, 0.577350269190, 0.689825510932),
            (4, OMEGA_4, 0.336907006856, 4.0 / 9.0, 0.758040765426),
            (5, OMEGA_5, 0.314176519032, 0.403634737781, 0.778368385138),
        ];
        for (n, omega, tau, volume, eta) in cases {
            let m = regular_tight_pyramid(n).unwrap();
            assert!((m.omega.steradians() - omega).abs() < 1e-10, "omega n={n}");
            assert!((m.tau - tau).abs() < 1e-10, "tau n={n}");
            assert!((m.volume - volume).abs() < 1e-12, "volume n={n}");
            assert!((m.eta - eta).abs() < 1e-10, "eta n={n}");
        }
    }

    #[test]
    fn exact_volume_forms() {
        assert!((regular_tight_pyramid(3).unwrap().volume - 3.0_f64.sqrt() / 3.0).abs() < 1e-15);
        assert!((regular_tight_pyramid(4).unwrap().volume - 4.0 / 9.0).abs() < 1e-15);
        let v5 = 5.0 * (PI / 5.0).tan() / 9.0;
        assert!((regular_tight_pyramid(5).unwrap().volume - v5).abs() < 1e-15);
    }

    #[test]
    fn metrics_are_internally_consistent() {
        for n in 3..=6 {
            let m = regular_tight_pyramid(n).unwrap();
            assert!((m.tau - m.omega.steradians() / 3.0).abs() < 1e-14);
            assert!((m.eta - m.tau / m.volume).abs() < 1e-14);
            assert!(m.eta > 0.0 && m.eta < 1.0);
        }
    }

    #[test]
    fn metrics_ignore_half_angle_order() {
        let a = TightPyramid::new(vec![0.5, 0.9, 1.0, PI - 2.4]).unwrap();
        let b = TightPyramid::new(vec![PI - 2.4, 0.9, 0.5, 1.0]).unwrap();
        let ma = tight_pyramid_metrics(&a).unwrap();
        let mb = tight_pyramid_metrics(&b).unwrap();
        assert!((ma.omega.steradians() - mb.omega.steradians()).abs() < 1e-13);
        assert!((ma.volume - mb.volume).abs() < 1e-13);
        assert!((ma.eta - mb.eta).abs() < 1e-13);
    }

    #[test]
    fn paired_complement_composition_has_third_of_pi_angle() {
        let alpha = 2.0_f64.sqrt().atan();
        let p = TightPyramid::new(vec![alpha, FRAC_PI_2 - alpha, FRAC_PI_2 - alpha, alpha]).unwrap();
        let m = tight_pyramid_metrics(&p).unwrap();
        assert!((m.omega.steradians() - PI / 3.0).abs() < 1e-10);
    }

    #[test]
    fn twelve_third_pi_angles_fill_the_sphere() {
        assert!((12.0 * (PI / 3.0) - FOUR_PI).abs() < 1e-14);
    }

    #[test]
    fn perturbed_square_pyramid_grows() {
        let p = TightPyramid::new(vec![PI / 4.0 + 0.1, PI / 4.0 - 0.1, PI / 4.0, PI / 4.0]).unwrap();
        let m = tight_pyramid_metrics(&p).unwrap();
        assert!(m.volume > 4.0 / 9.0);
    }

    #[test]
    fn random_search_finds_no_counterexample() {
        let r = regularity_is_extremal(4, 2000, 7).unwrap();
        assert!(r.ok(), "counterexample: {:?}", r.first_counterexample);
    }

    #[test]
    fn regular_composition_is_its_own_fixed_point() {
        let m = tight_pyramid_metrics(&TightPyramid::regular(4).unwrap()).unwrap();
        let reg = regular_tight_pyramid(4).unwrap();
        assert!((m.volume - reg.volume).abs() < 1e-13);
        assert!((m.omega.steradians() - reg.omega.steradians()).abs() < 1e-13);
    }

    #[test]
    fn budgets_match_reference_arithmetic() {
        let b = thirteen_spheres_budget(&[4; 13]).unwrap();
        assert!(b.parity_ok);
        assert!((b.min_total_steradians - 13.139373267381).abs() < 1e-9);
        assert!(b.exceeds_4pi);

        let mut faces = vec![5; 11];
        faces.push(4);
        faces.push(3);
        let b = thirteen_spheres_budget(&faces).unwrap();
        assert!(b.parity_ok);
        assert!((b.min_total_steradians - 12.573358981938).abs() < 1e-9);
        assert!(b.exceeds_4pi);
        assert!((b.min_total_steradians - FOUR_PI - 0.006988367553).abs() < 1e-6);

        let mut faces = vec![5; 10];
        faces.extend_from_slice(&[4, 4, 4]);
        let b = thirteen_spheres_budget(&faces).unwrap();
        assert!(!b.exceeds_4pi);

        let b = thirteen_spheres_budget(&[5; 13]).unwrap();
        assert!(!b.parity_ok);
    }

    #[test]
    fn pyramid_count_bounds() {
        assert_eq!(max_tight_pyramids(3).unwrap(), 10);
        assert_eq!(max_tight_pyramids(4).unwrap(), 12);
        assert_eq!(max_tight_pyramids(5).unwrap(), 13);
        assert!(max_tight_pyramids(6).is_err());
    }

    #[test]
    fn invalid_pyramids_are_rejected() {
        assert!(TightPyramid::new(vec![1.0, 1.0]).is_err());
        assert!(TightPyramid::new(vec![FRAC_PI_2, 1.0, PI - FRAC_PI_2 - 1.0]).is_err());
        assert!(TightPyramid::regular(2).is_err());
        assert!(thirteen_spheres_budget(&[6]).is_err());
        assert!(thirteen_spheres_budget(&[]).is_err());
    }
}
