//! Solid-angle kernels: a closed-form spherical-triangle formula, an
//! independent vector-algebra formula, a fan decomposition for polygonal
//! cones, and a seeded Monte Carlo estimator used as a cross-check oracle.

use crate::error::{GeomError, Result};
use crate::vec3::Vec3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

pub const FOUR_PI: f64 = 4.0 * PI;

/// Tolerance under which a slightly negative quarter-angle tangent factor is
/// treated as exactly zero (rounding at a degenerate spherical triangle).
const QUARTER_ANGLE_CLAMP: f64 = 1e-14;

/// Tolerance on the normalized triple product below which three rays are
/// reported as coplanar.
const COPLANAR_EPS: f64 = 1e-12;

/// A solid angle in steradians, in [0, 4π].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct SolidAngle(f64);

impl SolidAngle {
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || !(0.0..=FOUR_PI + 1e-12).contains(&value) {
            return Err(GeomError::domain(format!(
                "solid angle {value} outside [0, 4π]"
            )));
        }
        Ok(SolidAngle(value.clamp(0.0, FOUR_PI)))
    }

    pub fn steradians(self) -> f64 {
        self.0
    }

    /// Volume of the unit-sphere sector subtending this angle (ω/3).
    pub fn sector_volume(self) -> f64 {
        self.0 / 3.0
    }
}

/// The three arc angles at the sphere center between the three rays of a
/// trihedral corner, with their quarter-sum combinations.
#[derive(Debug, Clone, Copy)]
pub struct SphericalTriangleAngles {
    pub alpha: f64,
    pub beta: f64,
    pub phi: f64,
}

impl SphericalTriangleAngles {
    pub fn new(alpha: f64, beta: f64, phi: f64) -> Result<Self> {
        for (name, v) in [("alpha", alpha), ("beta", beta), ("phi", phi)] {
            if !v.is_finite() || v <= 0.0 || v >= PI {
                return Err(GeomError::domain(format!(
                    "arc angle {name} = {v} must lie in (0, π)"
                )));
            }
        }
        // Each arc must be shorter than the other two combined; allow the
        // equality case up to the clamp tolerance (handled as a zero-area
        // degenerate triangle downstream).
        let checks = [
            ("alpha < beta + phi", beta + phi - alpha),
            ("beta < alpha + phi", alpha + phi - beta),
            ("phi < alpha + beta", alpha + beta - phi),
        ];
        for (name, slack) in checks {
            if slack < -4.0 * QUARTER_ANGLE_CLAMP {
                return Err(GeomError::domain(format!(
                    "arc angles violate the spherical triangle inequality {name}"
                )));
            }
        }
        if alpha + beta + phi >= 2.0 * PI {
            return Err(GeomError::domain(
                "arc angles violate alpha + beta + phi < 2π",
            ));
        }
        Ok(SphericalTriangleAngles { alpha, beta, phi })
    }

    /// Arc angles of the trihedral corner spanned by three rays.
    pub fn from_rays(u: Vec3, v: Vec3, w: Vec3) -> Result<Self> {
        let [u, v, w] = unit_rays(u, v, w)?;
        SphericalTriangleAngles::new(u.angle_to(v), v.angle_to(w), w.angle_to(u))
    }

    /// Quarter-sum combinations (p, p1, p2, p3) of the arc angles.
    pub fn quarter_sums(&self) -> [f64; 4] {
        let (a, b, f) = (self.alpha, self.beta, self.phi);
        [
            (a + b + f) / 4.0,
            (a + b - f) / 4.0,
            (a - b + f) / 4.0,
            (-a + b + f) / 4.0,
        ]
    }
}

/// Solid angle of a trihedral corner from its three arc angles, via the
/// quarter-angle tangent product ω = 4·arctan √(tan p · tan p1 · tan p2 · tan p3).
pub fn triangle_solid_angle(angles: &SphericalTriangleAngles) -> Result<SolidAngle> {
    let mut product = 1.0;
    for q in angles.quarter_sums() {
        let mut t = q.tan();
        if t < 0.0 {
            if t > -QUARTER_ANGLE_CLAMP {
                t = 0.0;
            } else {
                return Err(GeomError::domain(format!(
                    "negative quarter-angle tangent {t} (degenerate beyond rounding)"
                )));
            }
        }
        product *= t;
    }
    SolidAngle::new(4.0 * product.sqrt().atan())
}

/// Result of the ray-based solid-angle formula. `degenerate` is set when the
/// rays are coplanar through the origin, in which case the angle is zero.
#[derive(Debug, Clone, Copy)]
pub struct RaySolidAngle {
    pub angle: SolidAngle,
    pub degenerate: bool,
}

fn unit_rays(u: Vec3, v: Vec3, w: Vec3) -> Result<[Vec3; 3]> {
    let mut out = [Vec3::ZERO; 3];
    for (i, r) in [u, v, w].into_iter().enumerate() {
        if !r.is_finite() {
            return Err(GeomError::domain("ray with non-finite coordinates"));
        }
        out[i] = r
            .normalized()
            .ok_or_else(|| GeomError::domain("zero vector cannot be used as a ray"))?;
    }
    Ok(out)
}

/// Solid angle of the trihedral cone spanned by three rays, computed directly
/// from vector algebra: ω = 2·atan2(|det[û,v̂,ŵ]|, 1 + û·v̂ + v̂·ŵ + ŵ·û).
///
/// Independent of [`triangle_solid_angle`]; the two agree to ~1e−10 on
/// non-degenerate cones, which the test suite exploits as a cross-check.
pub fn solid_angle_from_rays(u: Vec3, v: Vec3, w: Vec3) -> Result<RaySolidAngle> {
    let [u, v, w] = unit_rays(u, v, w)?;
    let det = u.triple(v, w).abs();
    if det <= COPLANAR_EPS {
        return Ok(RaySolidAngle {
            angle: SolidAngle::new(0.0)?,
            degenerate: true,
        });
    }
    let denom = 1.0 + u.dot(v) + v.dot(w) + w.dot(u);
    let angle = 2.0 * det.atan2(denom);
    Ok(RaySolidAngle {
        angle: SolidAngle::new(angle)?,
        degenerate: false,
    })
}

/// Solid angle of the convex cone with the given apex over an ordered base
/// loop, summed as a fan of trihedral cones rooted at the first loop vertex.
///
/// The loop need not be planar (vertex figures of a polyhedron are not); it
/// must wind once around the cone axis so the fan triangles are disjoint.
pub fn polygon_cone_solid_angle(apex: Vec3, base_loop: &[Vec3]) -> Result<SolidAngle> {
    if base_loop.len() < 3 {
        return Err(GeomError::domain(format!(
            "base loop needs at least 3 vertices, got {}",
            base_loop.len()
        )));
    }
    let mut rays = Vec::with_capacity(base_loop.len());
    for b in base_loop {
        let r = (*b - apex)
            .normalized()
            .ok_or_else(|| GeomError::domain("base vertex coincides with the apex"))?;
        rays.push(r);
    }
    // All rays coplanar through the apex means the cone is flat (e.g. the apex
    // lies on the plane of a planar base loop).
    let n = rays[0].cross(rays[1]);
    let coplanar = if n.norm() <= COPLANAR_EPS {
        true
    } else {
        let n = n.normalized().unwrap();
        rays.iter().all(|r| n.dot(*r).abs() <= COPLANAR_EPS)
    };
    if coplanar {
        return Err(GeomError::domain(
            "apex lies on the base plane (flat cone)",
        ));
    }
    let mut total = 0.0;
    for i in 1..rays.len() - 1 {
        let angles = SphericalTriangleAngles::from_rays(rays[0], rays[i], rays[i + 1])?;
        total += triangle_solid_angle(&angles)?.steradians();
    }
    SolidAngle::new(total)
}

/// Monte Carlo estimate of a trihedral cone's solid angle.
#[derive(Debug, Clone, Copy)]
pub struct McEstimate {
    pub estimate: f64,
    pub standard_error: f64,
    pub samples: u64,
}

/// Estimates the solid angle of the cone spanned by three rays by sampling
/// directions uniformly on the sphere. Identical seed and sample count always
/// produce the identical estimate.
pub fn monte_carlo_cone_solid_angle(
    u: Vec3,
    v: Vec3,
    w: Vec3,
    samples: u64,
    seed: u64,
) -> Result<McEstimate> {
    if samples == 0 {
        return Err(GeomError::domain("sample count must be positive"));
    }
    let [u, v, w] = unit_rays(u, v, w)?;
    let det = u.triple(v, w);
    if det.abs() <= COPLANAR_EPS {
        return Err(GeomError::domain("coplanar rays span no solid cone"));
    }
    let sign = det.signum();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits: u64 = 0;
    for _ in 0..samples {
        let z: f64 = rng.random_range(-1.0..1.0);
        let phi: f64 = rng.random_range(0.0..2.0 * PI);
        let r = (1.0 - z * z).max(0.0).sqrt();
        let d = Vec3::new(r * phi.cos(), r * phi.sin(), z);
        // d lies in the cone iff its coordinates in the (u, v, w) frame are
        // all non-negative, i.e. the three replaced determinants share the
        // frame determinant's sign.
        if sign * d.triple(v, w) >= 0.0
            && sign * u.triple(d, w) >= 0.0
            && sign * u.triple(v, d) >= 0.0
        {
            hits += 1;
        }
    }
    let p = hits as f64 / samples as f64;
    Ok(McEstimate {
        estimate: FOUR_PI * p,
        standard_error: FOUR_PI * (p * (1.0 - p) / samples as f64).sqrt(),
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const FRAC_PI_2: f64 = PI / 2.0;

    #[test]
    fn octant_has_angle_pi_over_two() {
        let angles = SphericalTriangleAngles::new(FRAC_PI_2, FRAC_PI_2, FRAC_PI_2).unwrap();
        let omega = triangle_solid_angle(&angles).unwrap().steradians();
        assert!((omega - FRAC_PI_2).abs() < 1e-14);

        let rays = solid_angle_from_rays(
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
            Vec3::new(0.0, 0.0, 1.0),
        )
        .unwrap();
        assert!(!rays.degenerate);
        assert!((rays.angle.steradians() - FRAC_PI_2).abs() < 1e-14);
    }

    #[test]
    fn regular_triangular_corner_wedge_value() {
        // One of the six congruent wedges of the regular three-sided tight
        // pyramid: a sixth of its apex solid angle.
        let angles =
            SphericalTriangleAngles::new(0.5235987755982988, 0.8570719478501301, 0.7137243789447657)
                .unwrap();
        let omega = triangle_solid_angle(&angles).unwrap().steradians();
        assert!((omega - 0.1991354722).abs() < 1e-9);
    }

    #[test]
    fn coplanar_rays_report_degenerate_zero() {
        let r = solid_angle_from_rays(
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
            Vec3::new(-1.0, 0.0, 0.0),
        )
        .unwrap();
        assert!(r.degenerate);
        assert_eq!(r.angle.steradians(), 0.0);
    }

    #[test]
    fn zero_ray_is_a_domain_error() {
        let e = solid_angle_from_rays(Vec3::ZERO, Vec3::new(0.0, 1.0, 0.0), Vec3::new(0.0, 0.0, 1.0));
        assert!(matches!(e, Err(GeomError::Domain(_))));
    }

    #[test]
    fn kernels_agree_on_fixed_frames() {
        let frames = [
            (
                Vec3::new(1.0, 0.2, -0.3),
                Vec3::new(-0.4, 1.0, 0.1),
                Vec3::new(0.3, -0.2, 1.0),
            ),
            (
                Vec3::new(2.0, 0.0, 0.5),
                Vec3::new(0.1, 1.5, 0.2),
                Vec3::new(0.4, 0.4, 3.0),
            ),
        ];
        for (u, v, w) in frames {
            let a = SphericalTriangleAngles::from_rays(u, v, w).unwrap();
            let lhs = triangle_solid_angle(&a).unwrap().steradians();
            let rhs = solid_angle_from_rays(u, v, w).unwrap().angle.steradians();
            assert!((lhs - rhs).abs() < 1e-12, "{lhs} vs {rhs}");
        }
    }

    #[test]
    fn cube_face_cone_is_a_sixth_of_the_sphere() {
        let base = [
            Vec3::new(1.0, 1.0, 1.0),
            Vec3::new(-1.0, 1.0, 1.0),
            Vec3::new(-1.0, -1.0, 1.0),
            Vec3::new(1.0, -1.0, 1.0),
        ];
        let omega = polygon_cone_solid_angle(Vec3::ZERO, &base).unwrap().steradians();
        assert!((omega - FOUR_PI / 6.0).abs() < 1e-13);
    }

    #[test]
    fn fan_root_choice_does_not_matter() {
        let base = [
            Vec3::new(1.2, 0.9, 1.0),
            Vec3::new(-1.0, 1.1, 1.0),
            Vec3::new(-0.8, -1.0, 1.0),
            Vec3::new(1.0, -1.3, 1.0),
        ];
        let rotated: Vec<Vec3> = base.iter().cycle().skip(2).take(4).copied().collect();
        let a = polygon_cone_solid_angle(Vec3::ZERO, &base).unwrap().steradians();
        let b = polygon_cone_solid_angle(Vec3::ZERO, &rotated).unwrap().steradians();
        assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn splitting_a_base_across_a_chord_is_additive() {
        let hex: Vec<Vec3> = (0..6)
            .map(|k| {
                let t = 2.0 * PI * k as f64 / 6.0;
                Vec3::new(t.cos(), t.sin(), 0.9)
            })
            .collect();
        let whole = polygon_cone_solid_angle(Vec3::ZERO, &hex).unwrap().steradians();
        let left = polygon_cone_solid_angle(Vec3::ZERO, &hex[0..4]).unwrap().steradians();
        let right: Vec<Vec3> = vec![hex[3], hex[4], hex[5], hex[0]];
        let right = polygon_cone_solid_angle(Vec3::ZERO, &right).unwrap().steradians();
        assert!((whole - (left + right)).abs() < 1e-12);
    }

    #[test]
    fn flat_cone_is_a_domain_error() {
        let base = [
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
            Vec3::new(-1.0, -1.0, 0.0),
        ];
        let e = polygon_cone_solid_angle(Vec3::ZERO, &base);
        assert!(matches!(e, Err(GeomError::Domain(_))));
    }

    #[test]
    fn monte_carlo_is_deterministic_and_close_on_the_octant() {
        let u = Vec3::new(1.0, 0.0, 0.0);
        let v = Vec3::new(0.0, 1.0, 0.0);
        let w = Vec3::new(0.0, 0.0, 1.0);
        let a = monte_carlo_cone_solid_angle(u, v, w, 200_000, 42).unwrap();
        let b = monte_carlo_cone_solid_angle(u, v, w, 200_000, 42).unwrap();
        assert_eq!(a.estimate, b.estimate);
        assert!((a.estimate - FRAC_PI_2).abs() < 3.0 * a.standard_error);
    }
}
