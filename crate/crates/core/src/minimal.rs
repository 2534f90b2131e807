//! Blocks with a unit sphere centered at every vertex, no two spheres
//! overlapping. The family of interest: the volume-minimizing tetrahedra,
//! quadrilateral pyramids, and hexahedra under that separation constraint,
//! and the prism splitting that shows the hexahedra tile space at the
//! close-packing density.

use crate::error::{GeomError, Result};
use crate::polyhedron::{parallelepiped, quad_pyramid, Polyhedron};
use crate::vec3::Vec3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

/// Required center separation: twice the unit radius.
pub const MIN_SEPARATION: f64 = 2.0;
/// Slack allowed on the separation constraint before a pair counts as
/// violated.
pub const SEPARATION_TOL: f64 = 1e-12;

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// A polyhedral block whose vertices all carry unit spheres, pairwise
/// non-overlapping.
#[derive(Debug, Clone)]
pub struct VertexSphereBlock {
    polyhedron: Polyhedron,
}

impl VertexSphereBlock {
    pub fn new(polyhedron: Polyhedron) -> Result<Self> {
        polyhedron.validate()?;
        let v = &polyhedron.vertices;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                let d = v[i].distance(v[j]);
                if d < MIN_SEPARATION - SEPARATION_TOL {
                    return Err(GeomError::domain(format!(
                        "vertices {i} and {j} are {d} apart; spheres overlap"
                    )));
                }
            }
        }
        Ok(VertexSphereBlock { polyhedron })
    }

    pub fn polyhedron(&self) -> &Polyhedron {
        &self.polyhedron
    }

    pub fn volume(&self) -> f64 {
        self.polyhedron.volume()
    }

    /// Total solid angle the block subtends at its own vertices, and the
    /// fraction of the block's volume filled by the vertex spheres:
    /// (Σ ωᵥ, (Σ ωᵥ/3)/V). A block tiling space corner-to-corner must
    /// average 4π per block to leave no gaps at the sphere centers.
    pub fn vertex_sphere_density(&self) -> Result<(f64, f64)> {
        let omegas = self.polyhedron.vertex_solid_angles()?;
        let total: f64 = omegas.iter().sum();
        Ok((total, total / 3.0 / self.volume()))
    }
}

/// Volume of the one-parameter tetrahedron family interpolating the two
/// minimal tetrahedra: base edge pair at distance 2x, remaining distances 2.
/// V(x) = 2x√(3 − x²)/3 on [1, √2]; equal at the endpoints, maximal at
/// x = √1.5.
pub fn tetra_volume_profile(x: f64) -> Result<f64> {
    if !(1.0..=SQRT_2 + 1e-12).contains(&x) {
        return Err(GeomError::domain(format!(
            "profile parameter {x} outside [1, √2]"
        )));
    }
    Ok(2.0 * x * (3.0 - x * x).sqrt() / 3.0)
}

/// The six volume-minimizing blocks, two per combinatorial type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinimalBlockKind {
    TetraA,
    TetraB,
    PentaA,
    PentaB,
    HexaA,
    HexaB,
}

impl MinimalBlockKind {
    pub const ALL: [MinimalBlockKind; 6] = [
        MinimalBlockKind::TetraA,
        MinimalBlockKind::TetraB,
        MinimalBlockKind::PentaA,
        MinimalBlockKind::PentaB,
        MinimalBlockKind::HexaA,
        MinimalBlockKind::HexaB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MinimalBlockKind::TetraA => "tetra_A",
            MinimalBlockKind::TetraB => "tetra_B",
            MinimalBlockKind::PentaA => "penta_A",
            MinimalBlockKind::PentaB => "penta_B",
            MinimalBlockKind::HexaA => "hexa_A",
            MinimalBlockKind::HexaB => "hexa_B",
        }
    }
}

fn inv_sqrt3() -> f64 {
    1.0 / 3.0f64.sqrt()
}

/// Apex height of the regular distance-2 tetrahedron: √(8/3).
fn apex_height() -> f64 {
    (8.0f64 / 3.0).sqrt()
}

/// Builds one of the minimal blocks at unit sphere radius. The A variants
/// extend the regular (close-packing) tetrahedron; the B variants extend
/// the square-diagonal (half-octahedron) geometry. Both hexahedra have
/// volume exactly 4√2.
pub fn minimal_block(kind: MinimalBlockKind) -> Result<VertexSphereBlock> {
    let s = inv_sqrt3();
    let h = apex_height();
    let p = match kind {
        MinimalBlockKind::TetraA => Polyhedron {
            vertices: vec![
                Vec3::new(-1.0, 0.0, 0.0),
                Vec3::new(1.0, 0.0, 0.0),
                Vec3::new(0.0, 3.0f64.sqrt(), 0.0),
                Vec3::new(0.0, s, h),
            ],
            faces: vec![vec![0, 2, 1], vec![0, 1, 3], vec![1, 2, 3], vec![2, 0, 3]],
            tangent_points: None,
        },
        MinimalBlockKind::TetraB => Polyhedron {
            vertices: vec![
                Vec3::new(-SQRT_2, 0.0, 0.0),
                Vec3::new(SQRT_2, 0.0, 0.0),
                Vec3::new(0.0, SQRT_2, 0.0),
                Vec3::new(0.0, 0.0, SQRT_2),
            ],
            faces: vec![vec![0, 2, 1], vec![0, 1, 3], vec![1, 2, 3], vec![2, 0, 3]],
            tangent_points: None,
        },
        MinimalBlockKind::PentaA => quad_pyramid(
            [
                Vec3::new(-1.0, 0.0, 0.0),
                Vec3::new(1.0, 0.0, 0.0),
                Vec3::new(2.0, 3.0f64.sqrt(), 0.0),
                Vec3::new(0.0, 3.0f64.sqrt(), 0.0),
            ],
            Vec3::new(0.0, s, h),
        )?,
        MinimalBlockKind::PentaB => quad_pyramid(
            [
                Vec3::new(-SQRT_2, 0.0, 0.0),
                Vec3::new(0.0, -SQRT_2, 0.0),
                Vec3::new(SQRT_2, 0.0, 0.0),
                Vec3::new(0.0, SQRT_2, 0.0),
            ],
            Vec3::new(0.0, 0.0, SQRT_2),
        )?,
        MinimalBlockKind::HexaA => parallelepiped(
            Vec3::new(-1.0, 0.0, 0.0),
            Vec3::new(2.0, 0.0, 0.0),
            Vec3::new(1.0, 3.0f64.sqrt(), 0.0),
            Vec3::new(1.0, s, h),
        )?,
        MinimalBlockKind::HexaB => parallelepiped(
            Vec3::new(-SQRT_2, 0.0, 0.0),
            Vec3::new(SQRT_2, -SQRT_2, 0.0),
            Vec3::new(SQRT_2, SQRT_2, 0.0),
            Vec3::new(SQRT_2, 0.0, SQRT_2),
        )?,
    };
    VertexSphereBlock::new(p)
}

/// Per-pair classification of the sphere-separation constraints of a block.
#[derive(Debug, Clone)]
pub struct ConstraintActivity {
    /// Pairs at distance exactly 2 (within 1e−10).
    pub active: usize,
    /// Pairs strictly farther than 2.
    pub slack: usize,
    /// Pairs closer than 2 (overlapping spheres).
    pub violated: usize,
    pub min_distance: f64,
    /// Sorted distances of the slack pairs.
    pub slack_distances: Vec<f64>,
}

impl ConstraintActivity {
    pub fn ok(&self) -> bool {
        self.violated == 0
    }
}

/// Classifies every vertex pair of a polyhedron against the separation
/// constraint, at tolerance 1e−10.
pub fn constraint_activity(p: &Polyhedron) -> ConstraintActivity {
    const TOL: f64 = 1e-10;
    let v = &p.vertices;
    let mut active = 0;
    let mut slack = 0;
    let mut violated = 0;
    let mut min_distance = f64::INFINITY;
    let mut slack_distances = Vec::new();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            let d = v[i].distance(v[j]);
            min_distance = min_distance.min(d);
            if (d - MIN_SEPARATION).abs() <= TOL {
                active += 1;
            } else if d > MIN_SEPARATION {
                slack += 1;
                slack_distances.push(d);
            } else {
                violated += 1;
            }
        }
    }
    slack_distances.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ConstraintActivity {
        active,
        slack,
        violated,
        min_distance,
        slack_distances,
    }
}

/// Constraint classification for a named minimal block.
pub fn verify_constraint_activity(kind: MinimalBlockKind) -> Result<ConstraintActivity> {
    Ok(constraint_activity(minimal_block(kind)?.polyhedron()))
}

fn prism(base: [Vec3; 3], t: Vec3) -> Result<VertexSphereBlock> {
    let vertices = vec![
        base[0],
        base[1],
        base[2],
        base[0] + t,
        base[1] + t,
        base[2] + t,
    ];
    let faces = vec![
        vec![0, 2, 1],
        vec![3, 4, 5],
        vec![0, 1, 4, 3],
        vec![1, 2, 5, 4],
        vec![2, 0, 3, 5],
    ];
    VertexSphereBlock::new(Polyhedron {
        vertices,
        faces,
        tangent_points: None,
    })
}

/// Splits a minimal hexahedron along a base diagonal into two triangular
/// prisms. Each prism keeps half the volume (2√2), the full vertex-sphere
/// density π/√18, and a vertex solid-angle total of exactly 2π; their base
/// triangles are mirror-congruent.
pub fn split_prism(kind: MinimalBlockKind) -> Result<(VertexSphereBlock, VertexSphereBlock)> {
    let (v0, a, b, t) = match kind {
        MinimalBlockKind::HexaA => (
            Vec3::new(-1.0, 0.0, 0.0),
            Vec3::new(2.0, 0.0, 0.0),
            Vec3::new(1.0, 3.0f64.sqrt(), 0.0),
            Vec3::new(1.0, inv_sqrt3(), apex_height()),
        ),
        MinimalBlockKind::HexaB => (
            Vec3::new(-SQRT_2, 0.0, 0.0),
            Vec3::new(SQRT_2, -SQRT_2, 0.0),
            Vec3::new(SQRT_2, SQRT_2, 0.0),
            Vec3::new(SQRT_2, 0.0, SQRT_2),
        ),
        other => {
            return Err(GeomError::domain(format!(
                "prism split applies to the hexahedra, not {}",
                other.name()
            )))
        }
    };
    let p1 = prism([v0, v0 + a, v0 + a + b], t)?;
    let p2 = prism([v0, v0 + a + b, v0 + b], t)?;
    Ok((p1, p2))
}

/// Outcome of the random search for a sphere-separated hexahedron with less
/// volume than the minimal one.
#[derive(Debug, Clone)]
pub struct SpotCheckReport {
    pub trials: u32,
    /// Trials abandoned because the push-apart repair did not converge.
    pub repair_failures: u32,
    /// Repaired hexahedra with volume below 4√2 − 1e−9.
    pub violations: u32,
    pub min_volume: f64,
    pub ok: bool,
}

/// Perturbs the minimal hexahedron's eight vertices with Gaussian noise
/// (σ = 0.02), repairs any overlapping sphere pair by symmetrically pushing
/// the pair apart until all separations hold, and checks that the repaired
/// hexahedron (same face combinatorics, fan-triangulated volume) never
/// undercuts 4√2.
pub fn hexahedron_volume_spot_check(trials: u32, seed: u64) -> Result<SpotCheckReport> {
    if trials == 0 {
        return Err(GeomError::domain("need at least one trial"));
    }
    let base = minimal_block(MinimalBlockKind::HexaA)?;
    let base_vertices = base.polyhedron().vertices.clone();
    let faces = base.polyhedron().faces.clone();
    let target = 4.0 * SQRT_2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gauss = GaussianPairs::default();
    let mut repair_failures = 0;
    let mut violations = 0;
    let mut min_volume = f64::INFINITY;
    for _ in 0..trials {
        let mut vertices = base_vertices.clone();
        for v in &mut vertices {
            *v += Vec3::new(
                0.02 * gauss.next(&mut rng),
                0.02 * gauss.next(&mut rng),
                0.02 * gauss.next(&mut rng),
            );
        }
        if !repair_separations(&mut vertices) {
            repair_failures += 1;
            continue;
        }
        let volume = Polyhedron {
            vertices,
            faces: faces.clone(),
            tangent_points: None,
        }
        .volume();
        min_volume = min_volume.min(volume);
        if volume < target - 1e-9 {
            violations += 1;
        }
    }
    Ok(SpotCheckReport {
        trials,
        repair_failures,
        violations,
        min_volume,
        ok: repair_failures == 0 && violations == 0,
    })
}

/// Box–Muller standard normal draws, two per transform.
#[derive(Default)]
struct GaussianPairs {
    spare: Option<f64>,
}

impl GaussianPairs {
    fn next(&mut self, rng: &mut impl Rng) -> f64 {
        if let Some(v) = self.spare.take() {
            return v;
        }
        let u1: f64 = rng.random_range(f64::MIN_POSITIVE..1.0);
        let u2: f64 = rng.random_range(0.0..1.0);
        let r = (-2.0 * u1.ln()).sqrt();
        let (s, c) = (2.0 * PI * u2).sin_cos();
        self.spare = Some(r * s);
        r * c
    }
}

/// Moves every too-close vertex pair symmetrically apart along its chord
/// until all pairs are separated; returns false if 200 sweeps do not
/// converge.
fn repair_separations(vertices: &mut [Vec3]) -> bool {
    for _ in 0..200 {
        let mut any = false;
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                let d = vertices[i].distance(vertices[j]);
                if d >= MIN_SEPARATION {
                    continue;
                }
                any = true;
                let dir = (vertices[j] - vertices[i])
                    .normalized()
                    .unwrap_or(Vec3::new(1.0, 0.0, 0.0));
                let push = (MIN_SEPARATION - d) / 2.0 + 1e-12;
                vertices[i] -= dir * push;
                vertices[j] += dir * push;
            }
        }
        if !any {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    const DENSITY: f64 = 0.740_480_489_693_061_3; // π/√18

    #[test]
    fn profile_endpoints_agree_and_interior_is_larger() {
        let at_1 = tetra_volume_profile(1.0).unwrap();
        let at_sqrt2 = tetra_volume_profile(SQRT_2).unwrap();
        assert!((at_1 - at_sqrt2).abs() < 1e-12);
        assert!((at_1 - 2.0 * SQRT_2 / 3.0).abs() < 1e-12);
        let at_max = tetra_volume_profile(1.5f64.sqrt()).unwrap();
        assert!((at_max - 1.0).abs() < 1e-12);
        assert!(at_max > at_1);
        assert!(tetra_volume_profile(0.9).is_err());
        assert!(tetra_volume_profile(1.5).is_err());
    }

    #[test]
    fn tetra_volumes_sit_at_the_profile_endpoints() {
        let a = minimal_block(MinimalBlockKind::TetraA).unwrap();
        let b = minimal_block(MinimalBlockKind::TetraB).unwrap();
        assert!((a.volume() - 2.0 * SQRT_2 / 3.0).abs() < 1e-12);
        assert!((b.volume() - 2.0 * SQRT_2 / 3.0).abs() < 1e-12);
        // regular tetrahedron: all six edges at the contact distance
        for d in a.polyhedron().edge_lengths() {
            assert!((d - 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn constraint_activity_distinguishes_the_tetrahedra() {
        let a = verify_constraint_activity(MinimalBlockKind::TetraA).unwrap();
        assert_eq!((a.active, a.slack, a.violated), (6, 0, 0));

        let b = verify_constraint_activity(MinimalBlockKind::TetraB).unwrap();
        assert_eq!((b.active, b.slack, b.violated), (5, 1, 0));
        assert!((b.slack_distances[0] - 2.0 * SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn perturbed_block_shows_a_violation() {
        let mut p = minimal_block(MinimalBlockKind::TetraA).unwrap().polyhedron().clone();
        // in a regular tetrahedron every pair is active, so any motion of
        // one vertex overlaps it with at least one neighbor
        p.vertices[0].x += 0.01;
        let report = constraint_activity(&p);
        assert!(report.violated >= 1);
        assert!(!report.ok());
        assert!(VertexSphereBlock::new(p).is_err());
    }

    #[test]
    fn pyramids_halve_between_tetra_and_hexa() {
        let pa = minimal_block(MinimalBlockKind::PentaA).unwrap();
        let pb = minimal_block(MinimalBlockKind::PentaB).unwrap();
        assert!((pa.volume() - 4.0 * SQRT_2 / 3.0).abs() < 1e-12);
        assert!((pb.volume() - 4.0 * SQRT_2 / 3.0).abs() < 1e-12);
        // each pyramid is two minimal tetrahedra
        let tetra = minimal_block(MinimalBlockKind::TetraA).unwrap().volume();
        assert!((pa.volume() - 2.0 * tetra).abs() < 1e-12);
    }

    #[test]
    fn hexahedra_reach_volume_4_sqrt2_and_full_angle() {
        for kind in [MinimalBlockKind::HexaA, MinimalBlockKind::HexaB] {
            let block = minimal_block(kind).unwrap();
            assert!((block.volume() - 4.0 * SQRT_2).abs() < 1e-12);
            let (total, density) = block.vertex_sphere_density().unwrap();
            assert!((total - 4.0 * PI).abs() < 1e-9, "{kind:?}: {total}");
            assert!((density - DENSITY).abs() < 1e-10, "{kind:?}: {density}");
        }
    }

    #[test]
    fn tetra_b_angle_total_stays_below_full() {
        let block = minimal_block(MinimalBlockKind::TetraB).unwrap();
        let (total, _) = block.vertex_sphere_density().unwrap();
        assert!(total < 4.0 * PI - 1.0);
    }

    #[test]
    fn opposite_parallelepiped_corners_share_their_angle() {
        let block = minimal_block(MinimalBlockKind::HexaA).unwrap();
        let omegas = block.polyhedron().vertex_solid_angles().unwrap();
        // antipodal vertex pairs through the center, in the constructor's
        // vertex layout
        for (i, j) in [(0, 6), (1, 7), (2, 4), (3, 5)] {
            assert!((omegas[i] - omegas[j]).abs() < 1e-12, "{i} vs {j}");
        }
    }

    #[test]
    fn prisms_split_the_hexahedra_cleanly() {
        for kind in [MinimalBlockKind::HexaA, MinimalBlockKind::HexaB] {
            let hexa = minimal_block(kind).unwrap();
            let (p1, p2) = split_prism(kind).unwrap();
            assert!((p1.volume() + p2.volume() - hexa.volume()).abs() < 1e-12);
            assert!((p1.volume() - 2.0 * SQRT_2).abs() < 1e-12);
            for p in [&p1, &p2] {
                let (total, density) = p.vertex_sphere_density().unwrap();
                assert!((total - 2.0 * PI).abs() < 1e-9);
                assert!((density - DENSITY).abs() < 1e-10);
            }
            // congruent base triangles: identical sorted edge lengths
            let e1 = p1.polyhedron().edge_lengths();
            let e2 = p2.polyhedron().edge_lengths();
            assert_eq!(e1.len(), 9);
            for (a, b) in e1.iter().zip(&e2) {
                assert!((a - b).abs() < 1e-12);
            }
        }
        assert!(split_prism(MinimalBlockKind::TetraA).is_err());
    }

    #[test]
    fn random_hexahedra_never_undercut_the_minimum() {
        let report = hexahedron_volume_spot_check(2000, 5).unwrap();
        assert!(report.ok, "{report:?}");
        assert!(report.min_volume >= 4.0 * SQRT_2 - 1e-9);
    }

    #[test]
    fn all_blocks_build_and_validate() {
        for kind in MinimalBlockKind::ALL {
            let block = minimal_block(kind).unwrap();
            assert!(constraint_activity(block.polyhedron()).ok(), "{kind:?}");
            assert!(block.volume() > 0.0);
        }
    }
}
