//! Circumscribed dodecahedra of the unit sphere that tile space, the
//! one-parameter extremum solves for their quadrilateral face compositions,
//! the pentagonal-face closure scan, and space-filling verification for the
//! resulting cells.

use crate::barlow::{generate_packing, StackingSequence};
use crate::error::{GeomError, Result};
use crate::polyhedron::{polyhedron_from_tangent_planes, Polyhedron};
use crate::pyramid::{tight_pyramid_metrics, PyramidMetrics, TightPyramid};
use crate::sampling::halton3;
use crate::solid_angle::polygon_cone_solid_angle;
use crate::vec3::Vec3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{FRAC_1_SQRT_2, PI};

/// Solid angle each of twelve identical face pyramids must cut out to
/// exhaust the full sphere: 4π/12.
pub const FACE_TARGET: f64 = PI / 3.0;

/// A composition of four half-angles describing a quadrilateral face of a
/// circumscribed polyhedron: one half-angle per vertex, summing to π.
#[derive(Debug, Clone, Copy)]
pub struct QuadComposition {
    alphas: [f64; 4],
}

impl QuadComposition {
    pub fn new(alphas: [f64; 4]) -> Result<Self> {
        TightPyramid::new(alphas.to_vec())?;
        Ok(Self { alphas })
    }

    pub fn alphas(&self) -> [f64; 4] {
        self.alphas
    }

    /// Face area for apothem 1/√3.
    pub fn base_area(&self) -> f64 {
        self.alphas.iter().map(|a| a.tan()).sum::<f64>() / 3.0
    }

    pub fn metrics(&self) -> Result<PyramidMetrics> {
        tight_pyramid_metrics(&TightPyramid::new(self.alphas.to_vec())?)
    }
}

fn composition_omega(alphas: &[f64]) -> Result<f64> {
    Ok(tight_pyramid_metrics(&TightPyramid::new(alphas.to_vec())?)?
        .omega
        .steradians())
}

/// Bisection to |f(root) − target| ≤ 1e−12 on a sign-changing bracket.
fn bisect_for_target<F>(f: F, mut lo: f64, mut hi: f64, target: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let mut flo = f(lo)? - target;
    let fhi = f(hi)? - target;
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(GeomError::numeric(format!(
            "no sign change on bracket [{lo:.6}, {hi:.6}]: offsets {flo:.3e} and {fhi:.3e}"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let fm = f(mid)? - target;
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    let root = 0.5 * (lo + hi);
    let residual = (f(root)? - target).abs();
    if residual > 1e-12 {
        return Err(GeomError::numeric(format!(
            "bisection stalled: residual {residual:.3e} at {root}"
        )));
    }
    Ok(root)
}

/// Solution of the symmetric family (α, π/2−α, π/2−α, α).
#[derive(Debug, Clone)]
pub struct PairedComplementSolution {
    /// The root in (π/4, π/2); equals arctan√2.
    pub alpha: f64,
    /// The mirror root π/2 − α of the same family.
    pub mirror_alpha: f64,
    pub composition: QuadComposition,
    pub omega_residual: f64,
    pub base_area: f64,
}

/// Solves the face equation ω(α, π/2−α, π/2−α, α) = π/3. The root is
/// arctan√2, the half-angle composition of a rhombic face; its base area
/// is √2, so twelve such faces enclose volume 12·√2/3 = 4√2.
pub fn solve_paired_complement_family() -> Result<PairedComplementSolution> {
    let f = |a: f64| composition_omega(&[a, PI / 2.0 - a, PI / 2.0 - a, a]);
    let alpha = bisect_for_target(f, PI / 4.0 + 1e-9, PI / 2.0 - 1e-9, FACE_TARGET)?;
    let composition = QuadComposition::new([alpha, PI / 2.0 - alpha, PI / 2.0 - alpha, alpha])?;
    let omega_residual = (composition.metrics()?.omega.steradians() - FACE_TARGET).abs();
    Ok(PairedComplementSolution {
        alpha,
        mirror_alpha: PI / 2.0 - alpha,
        base_area: composition.base_area(),
        composition,
        omega_residual,
    })
}

/// Solution of the family (α, α, π−3α, α) with three equal half-angles.
#[derive(Debug, Clone)]
pub struct ThreeEqualSolution {
    pub alpha_deg: f64,
    /// The remaining half-angle π − 3α, in degrees.
    pub companion_deg: f64,
    /// Interior face angle at the companion vertex: 2·(90° − companion).
    pub vertex_angle_deg: f64,
    /// Three copies of that interior angle, the sum required when three
    /// such corners meet at one vertex.
    pub triple_vertex_sum_deg: f64,
    /// True when that sum exceeds 360°, so the corners cannot assemble.
    pub closure_fails: bool,
    pub omega_residual: f64,
}

/// Solves ω(α, α, π−3α, α) = π/3 on α ∈ (π/4, π/3). The root has a
/// companion half-angle so small that the face's obtuse corner cannot meet
/// two equal corners at a vertex, so no dodecahedron assembles from it.
pub fn solve_three_equal_family() -> Result<ThreeEqualSolution> {
    let f = |a: f64| composition_omega(&[a, a, PI - 3.0 * a, a]);
    let alpha = bisect_for_target(f, PI / 4.0, PI / 3.0 - 1e-9, FACE_TARGET)?;
    let companion = PI - 3.0 * alpha;
    let omega_residual = (f(alpha)? - FACE_TARGET).abs();
    let vertex_angle_deg = (PI - 2.0 * companion).to_degrees();
    let triple_vertex_sum_deg = 3.0 * vertex_angle_deg;
    Ok(ThreeEqualSolution {
        alpha_deg: alpha.to_degrees(),
        companion_deg: companion.to_degrees(),
        vertex_angle_deg,
        triple_vertex_sum_deg,
        closure_fails: triple_vertex_sum_deg > 360.0,
        omega_residual,
    })
}

/// Verifies that the paired-complement solution is a constrained
/// stationary point of the face area on the ω = π/3 surface: random
/// tangent perturbations of size δ, retracted back to the surface, change
/// the area only at second order in δ.
#[derive(Debug, Clone)]
pub struct StationarityReport {
    pub trials: u32,
    pub retraction_failures: u32,
    /// Worst |area − √2| at perturbation size 1e−2.
    pub max_shift_coarse: f64,
    /// Worst |area − √2| at perturbation size 1e−3.
    pub max_shift_fine: f64,
    pub ok: bool,
}

pub fn paired_complement_area_stationarity(trials: u32, seed: u64) -> Result<StationarityReport> {
    let sol = solve_paired_complement_family()?;
    let c0 = sol.composition.alphas();
    let reg = [PI / 4.0; 4];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0u32;
    let mut worst = [0.0f64; 2];
    for _ in 0..trials {
        // unit tangent of the Σα = π simplex
        let mut d = [0.0f64; 4];
        for v in &mut d {
            *v = rng.random_range(-1.0..1.0);
        }
        let mean = d.iter().sum::<f64>() / 4.0;
        let mut norm = 0.0;
        for v in &mut d {
            *v -= mean;
            norm += *v * *v;
        }
        let norm = norm.sqrt();
        if norm < 1e-9 {
            continue;
        }
        for (k, &delta) in [1e-2f64, 1e-3].iter().enumerate() {
            let mut cp = c0;
            for i in 0..4 {
                cp[i] += delta * d[i] / norm;
            }
            // retract to the constraint surface along the line toward the
            // regular composition (ω < π/3 there, > π/3 past cp)
            let g = |s: f64| {
                let mut comp = [0.0f64; 4];
                for i in 0..4 {
                    comp[i] = cp[i] + s * (reg[i] - cp[i]);
                }
                composition_omega(&comp)
            };
            match bisect_for_target(g, -0.3, 0.7, FACE_TARGET) {
                Ok(s) => {
                    let mut comp = [0.0f64; 4];
                    for i in 0..4 {
                        comp[i] = cp[i] + s * (reg[i] - cp[i]);
                    }
                    let shift = (QuadComposition::new(comp)?.base_area() - 2.0f64.sqrt()).abs();
                    worst[k] = worst[k].max(shift);
                }
                Err(_) => failures += 1,
            }
        }
    }
    // quadratic decay: shrinking δ tenfold must shrink the worst area
    // shift by far more than tenfold (≈ hundredfold for a true stationary
    // point); the absolute bound pins the second-order constant
    let ok = failures == 0
        && worst[0] <= 10.0 * 1e-4
        && worst[1] <= 10.0 * 1e-6
        && worst[1] <= 0.05 * worst[0];
    Ok(StationarityReport {
        trials,
        retraction_failures: failures,
        max_shift_coarse: worst[0],
        max_shift_fine: worst[1],
        ok,
    })
}

/// One root of a symmetric pentagon family on the ω = π/3 surface.
#[derive(Debug, Clone)]
pub struct PentagonFamilyRoot {
    /// The family: this many copies of `alpha`, the rest `beta`.
    pub copies_of_alpha: usize,
    pub alpha: f64,
    pub beta: f64,
    pub alphas: [f64; 5],
    pub omega_residual: f64,
    pub min_half_angle: f64,
    /// Largest interior face angle, π − 2·min half-angle, in degrees.
    pub max_interior_deg: f64,
    /// Angle sum when three such corners meet at a vertex.
    pub trivalent_corner_sum_deg: f64,
    pub closure_feasible: bool,
}

/// Result of scanning the symmetric pentagon families for compositions
/// that solve ω = π/3 and could close into a dodecahedron.
#[derive(Debug, Clone)]
pub struct PentagonScanReport {
    pub grid_resolution: usize,
    pub target: f64,
    /// Solid angle of the regular pentagonal composition (below target).
    pub regular_omega: f64,
    pub roots: Vec<PentagonFamilyRoot>,
    pub closure_feasible_count: usize,
    pub level_set_nonempty: bool,
}

impl PentagonScanReport {
    /// The scan succeeds when roots exist (the level set is non-empty)
    /// yet none of them admits closure.
    pub fn ok(&self) -> bool {
        self.level_set_nonempty && !self.roots.is_empty() && self.closure_feasible_count == 0
    }
}

/// Scans the two-value pentagon families (j copies of α, 5−j of β, with
/// jα + (5−j)β = π) for roots of ω = π/3, and tests each root for vertex
/// closure.
///
/// Closure criterion: every face of a circumscribed polyhedron touches the
/// inscribed sphere with the same in-face tangent radius 1/√3, and the two
/// tangent segments from any vertex within one face are equal, so walking
/// around a shared vertex makes all incident interior face angles equal.
/// Twelve pentagons force trivalent vertices (5·12/2 = 30 edges and Euler's
/// relation leave 20 vertices for 60 face corners), so three equal corners
/// meet everywhere, and a corner of interior angle π − 2α closes only if
/// 3(π − 2α) < 2π, i.e. α > π/6 — for every half-angle of the composition.
pub fn pentagon_closure_scan(grid_resolution: usize) -> Result<PentagonScanReport> {
    if grid_resolution < 10 {
        return Err(GeomError::domain(format!(
            "grid resolution must be at least 10, got {grid_resolution}"
        )));
    }
    let regular_omega = tight_pyramid_metrics(&TightPyramid::regular(5)?)?
        .omega
        .steradians();
    let mut roots = Vec::new();
    for j in 1..=4usize {
        let jf = j as f64;
        let rest = 5.0 - jf;
        // α range keeping both α and β = (π − jα)/(5−j) inside (0, π/2)
        let lo = ((jf - 3.0) * PI / (2.0 * jf)).max(0.0) + 1e-7;
        let hi = (PI / jf).min(PI / 2.0) - 1e-7;
        let family = |a: f64| -> Result<f64> {
            let b = (PI - jf * a) / rest;
            let mut alphas = [b; 5];
            for slot in alphas.iter_mut().take(j) {
                *slot = a;
            }
            composition_omega(&alphas)
        };
        let mut prev_a = lo;
        let mut prev_f = family(lo)? - FACE_TARGET;
        for k in 1..=grid_resolution {
            let a = lo + (hi - lo) * k as f64 / grid_resolution as f64;
            let fa = family(a)? - FACE_TARGET;
            if prev_f == 0.0 || prev_f.signum() != fa.signum() {
                let alpha = bisect_for_target(family, prev_a, a, FACE_TARGET)?;
                let beta = (PI - jf * alpha) / rest;
                let mut alphas = [beta; 5];
                for slot in alphas.iter_mut().take(j) {
                    *slot = alpha;
                }
                let min_half_angle = alpha.min(beta);
                let max_interior_deg = (PI - 2.0 * min_half_angle).to_degrees();
                roots.push(PentagonFamilyRoot {
                    copies_of_alpha: j,
                    alpha,
                    beta,
                    alphas,
                    omega_residual: (family(alpha)? - FACE_TARGET).abs(),
                    min_half_angle,
                    max_interior_deg,
                    trivalent_corner_sum_deg: 3.0 * max_interior_deg,
                    closure_feasible: min_half_angle > PI / 6.0,
                });
            }
            prev_a = a;
            prev_f = fa;
        }
    }
    let closure_feasible_count = roots.iter().filter(|r| r.closure_feasible).count();
    let level_set_nonempty = !roots.is_empty() && regular_omega < FACE_TARGET;
    Ok(PentagonScanReport {
        grid_resolution,
        target: FACE_TARGET,
        regular_omega,
        roots,
        closure_feasible_count,
        level_set_nonempty,
    })
}

/// The twelve contact directions of a sphere in the cubic close packing:
/// all axis-plane diagonals.
pub fn fcc_contact_directions() -> Vec<Vec3> {
    let s = FRAC_1_SQRT_2;
    let mut dirs = Vec::with_capacity(12);
    for &a in &[s, -s] {
        for &b in &[s, -s] {
            dirs.push(Vec3::new(a, b, 0.0));
            dirs.push(Vec3::new(a, 0.0, b));
            dirs.push(Vec3::new(0.0, a, b));
        }
    }
    dirs
}

/// The twelve contact directions of a sphere in the hexagonal close
/// packing whose two adjacent layers sit on the same in-plane coset: six
/// in-plane directions plus two vertically mirrored (eclipsed) triads.
pub fn hcp_contact_directions() -> Vec<Vec3> {
    let h = 3.0f64.sqrt() / 2.0;
    let c = crate::barlow::LAYER_SPACING / 2.0;
    let t = 1.0 / (2.0 * 3.0f64.sqrt());
    let mut dirs = vec![
        Vec3::new(1.0, 0.0, 0.0),
        Vec3::new(-1.0, 0.0, 0.0),
        Vec3::new(0.5, h, 0.0),
        Vec3::new(-0.5, -h, 0.0),
        Vec3::new(0.5, -h, 0.0),
        Vec3::new(-0.5, h, 0.0),
    ];
    for &z in &[c, -c] {
        dirs.push(Vec3::new(-0.5, -t, z));
        dirs.push(Vec3::new(0.5, -t, z));
        dirs.push(Vec3::new(0.0, 2.0 * t, z));
    }
    dirs
}

/// The twelve face directions of a regular dodecahedron (the vertex
/// directions of a regular icosahedron).
pub fn icosahedral_directions() -> Vec<Vec3> {
    let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
    let mut dirs = Vec::with_capacity(12);
    for &a in &[1.0, -1.0] {
        for &b in &[phi, -phi] {
            dirs.push(Vec3::new(0.0, a, b));
            dirs.push(Vec3::new(a, b, 0.0));
            dirs.push(Vec3::new(b, 0.0, a));
        }
    }
    dirs
}

/// The rhombic dodecahedron circumscribing the unit sphere: twelve
/// congruent rhombic faces, one per cubic-close-packing contact.
pub fn build_rhombic_dodecahedron() -> Result<Polyhedron> {
    polyhedron_from_tangent_planes(&fcc_contact_directions())
}

/// The cell of the hexagonal close packing circumscribing the unit
/// sphere: six rhombic and six isosceles-trapezoidal faces.
pub fn build_trapezo_rhombic_dodecahedron() -> Result<Polyhedron> {
    polyhedron_from_tangent_planes(&hcp_contact_directions())
}

/// The regular dodecahedron circumscribing the unit sphere. Denser than
/// the packing cells, but its copies cannot tile space.
pub fn build_regular_dodecahedron() -> Result<Polyhedron> {
    polyhedron_from_tangent_planes(&icosahedral_directions())
}

/// Solid angle the given face cuts out of a sphere centered at the origin.
pub fn face_pyramid_solid_angle(p: &Polyhedron, face: usize) -> Result<f64> {
    let pts: Vec<Vec3> = p.faces[face].iter().map(|&i| p.vertices[i]).collect();
    Ok(polygon_cone_solid_angle(Vec3::ZERO, &pts)?.steradians())
}

/// Per-vertex half-angles of a face: (π − interior angle)/2 around the loop.
pub fn face_half_angles(p: &Polyhedron, face: usize) -> Vec<f64> {
    let loop_ = &p.faces[face];
    let n = loop_.len();
    (0..n)
        .map(|k| {
            let prev = p.vertices[loop_[(k + n - 1) % n]];
            let v = p.vertices[loop_[k]];
            let next = p.vertices[loop_[(k + 1) % n]];
            (PI - (prev - v).angle_to(next - v)) / 2.0
        })
        .collect()
}

/// Per-vertex consistency report for a circumscribed polyhedron: each
/// vertex must lie on all its incident face planes, and the incident
/// interior face angles must all be equal.
#[derive(Debug, Clone)]
pub struct RingReport {
    pub ok: bool,
    pub vertex_count: usize,
    pub max_plane_residual: f64,
    pub max_angle_spread: f64,
    pub failures: Vec<String>,
}

pub fn verify_vertex_rings(p: &Polyhedron) -> Result<RingReport> {
    p.validate()?;
    const TOL: f64 = 1e-10;
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); p.vertices.len()];
    for (fi, face) in p.faces.iter().enumerate() {
        for &v in face {
            incident[v].push(fi);
        }
    }
    let mut max_plane_residual = 0.0f64;
    let mut max_angle_spread = 0.0f64;
    let mut failures = Vec::new();
    for (v, faces) in incident.iter().enumerate() {
        let pv = p.vertices[v];
        let mut angles: Vec<f64> = Vec::with_capacity(faces.len());
        for &fi in faces {
            let n = p.face_normal(fi)?;
            let c = p.face_centroid(fi);
            let residual = n.dot(pv - c).abs();
            max_plane_residual = max_plane_residual.max(residual);
            if residual > TOL {
                failures.push(format!(
                    "vertex {v}: face {fi} plane misses it by {residual:.3e}"
                ));
            }
            let loop_ = &p.faces[fi];
            let len = loop_.len();
            let k = loop_.iter().position(|&x| x == v).unwrap();
            let prev = p.vertices[loop_[(k + len - 1) % len]];
            let next = p.vertices[loop_[(k + 1) % len]];
            angles.push((prev - pv).angle_to(next - pv));
        }
        let hi = angles.iter().cloned().fold(f64::MIN, f64::max);
        let lo = angles.iter().cloned().fold(f64::MAX, f64::min);
        let spread = hi - lo;
        max_angle_spread = max_angle_spread.max(spread);
        if spread > TOL {
            failures.push(format!(
                "vertex {v}: incident face angles spread {spread:.3e}"
            ));
        }
    }
    Ok(RingReport {
        ok: failures.is_empty(),
        vertex_count: p.vertices.len(),
        max_plane_residual,
        max_angle_spread,
        failures,
    })
}

/// Which close-packing cell layout to verify as a space filling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FillKind {
    /// Cubic close packing; every cell a rhombic dodecahedron.
    Rhombic,
    /// Hexagonal close packing; every cell a trapezo-rhombic dodecahedron
    /// in alternating orientations.
    TrapezoRhombic,
    /// A four-layer stacking mixing both cell shapes.
    Mixed,
}

impl FillKind {
    pub fn sequence(self) -> &'static str {
        match self {
            FillKind::Rhombic => "ABC",
            FillKind::TrapezoRhombic => "AB",
            FillKind::Mixed => "ABAC",
        }
    }
}

/// Outcome of tiling a periodic region with the per-sphere cells of a
/// stacked packing and auditing coverage with a deterministic
/// low-discrepancy point set.
#[derive(Debug, Clone)]
pub struct SpaceFillReport {
    pub sequence: String,
    pub extent: u32,
    pub site_count: usize,
    pub region_volume: f64,
    pub cells_volume: f64,
    pub volume_residual: f64,
    pub sample_points: usize,
    /// Points covered by no cell (within tolerance).
    pub uncovered: usize,
    /// Points strictly interior to two or more cells.
    pub strictly_multicovered: usize,
    /// Sites whose contact count is not 12.
    pub contact_defects: usize,
    pub ok: bool,
}

/// Builds each sphere's cell from its actual contact directions, then
/// checks that the cells' volumes add up to the periodic region's volume
/// and that ≥ 10⁵ deterministic sample points each land in exactly one
/// cell. Points in the tolerance band of a shared boundary are assigned to
/// the lowest site index, so single coverage stays well-defined.
pub fn verify_space_filling(kind: FillKind, extent: u32) -> Result<SpaceFillReport> {
    if extent < 2 {
        return Err(GeomError::domain(format!(
            "extent must be at least 2, got {extent}"
        )));
    }
    const TOL: f64 = 1e-9;
    const SAMPLES: usize = 100_000;
    let seq = StackingSequence::parse(kind.sequence())?;
    let region = generate_packing(&seq, extent, extent)?;
    let site_count = region.centers.len();

    let mut contact_defects = 0usize;
    let mut cells_volume = 0.0f64;
    let mut site_normals: Vec<Vec<Vec3>> = Vec::with_capacity(site_count);
    for i in 0..site_count {
        let dirs = region.contact_directions(i);
        if dirs.len() != 12 {
            contact_defects += 1;
        }
        let cell = polyhedron_from_tangent_planes(&dirs)?;
        cells_volume += cell.volume();
        site_normals.push(
            dirs.iter()
                .map(|d| d.normalized().expect("contact direction is nonzero"))
                .collect(),
        );
    }
    let region_volume = region.cell_volume();
    let volume_residual = (cells_volume - region_volume).abs();

    // candidate cells: every site in the 27 neighboring period images
    let mut candidates: Vec<(usize, Vec3)> = Vec::with_capacity(27 * site_count);
    for sx in -1i32..=1 {
        for sy in -1i32..=1 {
            for sz in -1i32..=1 {
                let shift = region.period[0] * sx as f64
                    + region.period[1] * sy as f64
                    + region.period[2] * sz as f64;
                for (i, &c) in region.centers.iter().enumerate() {
                    candidates.push((i, c + shift));
                }
            }
        }
    }

    let mut uncovered = 0usize;
    let mut strictly_multicovered = 0usize;
    for s in 1..=SAMPLES {
        let h = halton3(s as u64);
        let p = region.period[0] * h[0] + region.period[1] * h[1] + region.period[2] * h[2];
        let mut loose = 0usize;
        let mut strict = 0usize;
        for &(site, c) in &candidates {
            let d = p - c;
            // cells fit in a ball of squared radius 2 around their site
            // (the four-valent vertices are the farthest, at distance √2)
            if d.norm_squared() > 2.02 {
                continue;
            }
            let mut all_loose = true;
            let mut all_strict = true;
            for n in &site_normals[site] {
                let t = d.dot(*n);
                if t > 1.0 + TOL {
                    all_loose = false;
                    all_strict = false;
                    break;
                }
                if t > 1.0 - TOL {
                    all_strict = false;
                }
            }
            if all_loose {
                loose += 1;
            }
            if all_strict {
                strict += 1;
            }
        }
        if loose == 0 {
            uncovered += 1;
        }
        if strict >= 2 {
            strictly_multicovered += 1;
        }
    }

    Ok(SpaceFillReport {
        sequence: seq.to_string_upper(),
        extent,
        site_count,
        region_volume,
        cells_volume,
        volume_residual,
        sample_points: SAMPLES,
        uncovered,
        strictly_multicovered,
        contact_defects,
        ok: contact_defects == 0
            && volume_residual <= TOL.max(1e-9)
            && uncovered == 0
            && strictly_multicovered == 0,
    })
}
