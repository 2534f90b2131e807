//! The verification suites: each builds a fixed-order list of check results
//! from the library's constructions against frozen reference values.

use crate::render::{sig12, CheckResult};
use closepack::barlow::{
    contact_graph, cyclic_sequences, generate_packing, packing_density, periphery_structure,
    StackingSequence, LAYER_SPACING,
};
use closepack::blocks::{
    build_regular_dodecahedron, build_rhombic_dodecahedron, build_trapezo_rhombic_dodecahedron,
    face_half_angles, face_pyramid_solid_angle, paired_complement_area_stationarity,
    pentagon_closure_scan, solve_paired_complement_family, solve_three_equal_family,
    verify_space_filling, verify_vertex_rings, FillKind,
};
use closepack::error::GeomError;
use closepack::minimal::{
    hexahedron_volume_spot_check, minimal_block, split_prism, tetra_volume_profile,
    verify_constraint_activity, MinimalBlockKind,
};
use closepack::planar::{
    circumscribed_area_perimeter, honeycomb_block, kepler2d_density, regular_polygon_extremes,
    tiling_solutions, verify_monotone_extremes, AngleComposition2D,
};
use closepack::polyhedron::circumscribed_density;
use closepack::pyramid::{max_tight_pyramids, regular_tight_pyramid, thirteen_spheres_budget};
use closepack::sampling::random_half_angle_composition;
use closepack::solid_angle::{
    monte_carlo_cone_solid_angle, polygon_cone_solid_angle, FOUR_PI,
};
use closepack::Vec3;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use std::time::Instant;

const SQRT_2: f64 = std::f64::consts::SQRT_2;
const CLOSE_DENSITY: f64 = 0.740_480_489_693_061_3; // π/√18

/// Flag values shared by every suite.
pub struct Ctx {
    /// Generic comparison tolerance (claim-pinned tolerances stay fixed).
    pub tol: f64,
    pub seed: u64,
    pub samples: u64,
}

/// How a numeric check picks its tolerance.
enum Tol {
    /// Uses the --tol flag (default 1e-8).
    Generic,
    /// Fixed by the claim being checked.
    Pinned(f64),
}

struct Suite<'a> {
    ctx: &'a Ctx,
    rows: Vec<CheckResult>,
    mark: Instant,
}

impl<'a> Suite<'a> {
    fn new(ctx: &'a Ctx) -> Self {
        Suite {
            ctx,
            rows: Vec::new(),
            mark: Instant::now(),
        }
    }

    fn lap(&mut self) -> u64 {
        let ms = self.mark.elapsed().as_millis() as u64;
        self.mark = Instant::now();
        ms
    }

    fn resolve(&self, tol: Tol) -> f64 {
        match tol {
            Tol::Generic => self.ctx.tol,
            Tol::Pinned(t) => t,
        }
    }

    /// Numeric check against a reference value rendered at 12 digits.
    fn num(&mut self, id: &str, claim: &str, computed: f64, expected: f64, tol: Tol) {
        let tolerance = self.resolve(tol);
        let ms = self.lap();
        self.rows.push(CheckResult {
            check_id: id.into(),
            claim: claim.into(),
            computed: sig12(computed),
            expected: sig12(expected),
            tolerance,
            pass: (computed - expected).abs() <= tolerance,
            runtime_ms: ms,
        });
    }

    /// Numeric check against a reference printed at its source precision.
    fn num_printed(&mut self, id: &str, claim: &str, computed: f64, printed: &str, tol: Tol) {
        let tolerance = self.resolve(tol);
        let expected: f64 = printed.parse().expect("printed reference parses");
        let ms = self.lap();
        self.rows.push(CheckResult {
            check_id: id.into(),
            claim: claim.into(),
            computed: sig12(computed),
            expected: printed.into(),
            tolerance,
            pass: (computed - expected).abs() <= tolerance,
            runtime_ms: ms,
        });
    }

    /// Exact (string/integer/set) check; tolerance reported as 0.
    fn exact(&mut self, id: &str, claim: &str, computed: String, expected: &str) {
        let ms = self.lap();
        self.rows.push(CheckResult {
            check_id: id.into(),
            claim: claim.into(),
            pass: computed == expected,
            computed,
            expected: expected.into(),
            tolerance: 0.0,
            runtime_ms: ms,
        });
    }
}

/// Five quantities of the three regular tight pyramids against their
/// reference table.
pub fn suite_table1(ctx: &Ctx) -> Result<Vec<CheckResult>, GeomError> {
    let mut s = Suite::new(ctx);
    let m3 = regular_tight_pyramid(3)?;
    let m4 = regular_tight_pyramid(4)?;
    let m5 = regular_tight_pyramid(5)?;
    let omegas = [m3.omega.steradians(), m4.omega.steradians(), m5.omega.steradians()];
    let omega_printed = ["1.194812833", "1.010721021", "0.9425295571"];
    let tau_printed = ["0.3982709444", "0.3369070068", "0.3141765190"];
    let eta_printed = ["0.6898255109", "0.7580407654", "0.7783683853"];
    let ratio_printed = ["10.51743860", "12.43307536", "13.33260110"];
    let volumes = [m3.volume, m4.volume, m5.volume];
    let volume_exact = [
        3.0f64.sqrt() / 3.0,
        4.0 / 9.0,
        5.0 * (PI / 5.0).tan() / 9.0,
    ];
    let taus = [m3.tau, m4.tau, m5.tau];
    let etas = [m3.eta, m4.eta, m5.eta];
    for (i, n) in [3, 4, 5].into_iter().enumerate() {
        s.num_printed(
            &format!("table1/omega/n{n}"),
            &format!("apex solid angle of the regular {n}-gonal tight pyramid"),
            omegas[i],
            omega_printed[i],
            Tol::Generic,
        );
    }
    for (i, n) in [3, 4, 5].into_iter().enumerate() {
        s.num_printed(
            &format!("table1/tau/n{n}"),
            &format!("sphere-sector volume inside the regular {n}-gonal tight pyramid"),
            taus[i],
            tau_printed[i],
            Tol::Generic,
        );
    }
    for (i, n) in [3, 4, 5].into_iter().enumerate() {
        s.num(
            &format!("table1/volume/n{n}"),
            &format!("volume of the regular {n}-gonal tight pyramid"),
            volumes[i],
            volume_exact[i],
            Tol::Pinned(1e-12),
        );
    }
    for (i, n) in [3, 4, 5].into_iter().enumerate() {
        s.num_printed(
            &format!("table1/eta/n{n}"),
            &format!("fill ratio of the regular {n}-gonal tight pyramid"),
            etas[i],
            eta_printed[i],
            Tol::Generic,
        );
    }
    for (i, n) in [3, 4, 5].into_iter().enumerate() {
        s.num_printed(
            &format!("table1/count/n{n}"),
            &format!("full-sphere budget 4π/ω for the regular {n}-gonal tight pyramid"),
            FOUR_PI / omegas[i],
            ratio_printed[i],
            Tol::Generic,
        );
    }
    Ok(s.rows)
}

/// Plane tilings, hexagon extremality, and the two-dimensional density.
pub fn suite_honeycomb(ctx: &Ctx) -> Result<Vec<CheckResult>, GeomError> {
    let mut s = Suite::new(ctx);
    let sols = tiling_solutions();
    let sol_str = sols
        .iter()
        .map(|t| format!("({},{})", t.n, t.k))
        .collect::<Vec<_>>()
        .join(",");
    s.exact(
        "honeycomb/tilings",
        "edge-to-edge tilings by congruent regular polygons",
        format!("{{{sol_str}}}"),
        "{(3,6),(4,4),(6,3)}",
    );
    let (s6, _) = regular_polygon_extremes(6, 1.0)?;
    s.num(
        "honeycomb/hexagon-area",
        "area of the regular hexagon circumscribing the unit circle",
        s6,
        12.0f64.sqrt(),
        Tol::Pinned(1e-12),
    );
    let monotone = verify_monotone_extremes(100)?;
    s.exact(
        "honeycomb/monotone",
        "regular-polygon area and perimeter decrease with the side count",
        if monotone.ok {
            "0 violations".into()
        } else {
            format!("violation at n={:?}", monotone.first_violation)
        },
        "0 violations",
    );
    let (s_big, _) = regular_polygon_extremes(1_000_000, 1.0)?;
    s.num(
        "honeycomb/limit",
        "circumscribing-polygon area approaches the circle area",
        s_big,
        PI,
        Tol::Pinned(1.1e-11),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut violations = 0u32;
    for _ in 0..10_000 {
        let alphas = random_half_angle_composition(6, &mut rng);
        let c = AngleComposition2D::new(alphas, 1.0)?;
        let (area, _) = circumscribed_area_perimeter(&c);
        if area < s6 - 1e-12 {
            violations += 1;
        }
    }
    s.exact(
        "honeycomb/hexagon-minimality",
        "no random circumscribing hexagon beats the regular one (10000 draws)",
        format!("{violations} violations"),
        "0 violations",
    );
    let (_, perimeter) = honeycomb_block();
    s.num_printed(
        "honeycomb/unit-perimeter",
        "perimeter of the unit-area regular hexagon",
        perimeter,
        "3.72241943",
        Tol::Generic,
    );
    let d2 = kepler2d_density();
    s.num(
        "kepler2d/density",
        "densest circle-packing fraction via the minimal triangular block",
        d2.density,
        PI / 12.0f64.sqrt(),
        Tol::Pinned(1e-14),
    );
    s.num(
        "kepler2d/hexagon-equivalence",
        "circle-packing density equals circle area over circumscribed hexagon area",
        d2.density - PI / s6,
        0.0,
        Tol::Pinned(1e-15),
    );
    Ok(s.rows)
}

/// Solid-angle budgets ruling out thirteen touching spheres.
pub fn suite_thirteen(ctx: &Ctx) -> Result<Vec<CheckResult>, GeomError> {
    let mut s = Suite::new(ctx);
    let quad13 = thirteen_spheres_budget(&[4; 13])?;
    s.num(
        "thirteen/excess-quad",
        "thirteen quadrilateral pyramids overfill the sphere (excess over 4π)",
        quad13.min_total_steradians - FOUR_PI,
        0.573002653022,
        Tol::Generic,
    );
    let tri13 = thirteen_spheres_budget(&[3; 13])?;
    s.num(
        "thirteen/excess-tri",
        "thirteen triangular pyramids overfill the sphere (excess over 4π)",
        tri13.min_total_steradians - FOUR_PI,
        2.966196218446,
        Tol::Generic,
    );
    let mut faces = vec![5u32; 11];
    faces.push(4);
    faces.push(3);
    let mixed = thirteen_spheres_budget(&faces)?;
    s.num(
        "thirteen/excess-mixed",
        "eleven pentagonal with one quadrilateral and one triangular pyramid overfill",
        mixed.min_total_steradians - FOUR_PI,
        0.006988367553,
        Tol::Pinned(1e-6),
    );
    let mut faces = vec![5u32; 10];
    faces.extend_from_slice(&[4, 4, 4]);
    let ten = thirteen_spheres_budget(&faces)?;
    s.num(
        "thirteen/deficit-ten-pent",
        "ten pentagonal with three quadrilateral pyramids stay under 4π (budget inconclusive)",
        FOUR_PI - ten.min_total_steradians,
        0.108911981696,
        Tol::Generic,
    );
    let parity = thirteen_spheres_budget(&[5; 13])?;
    s.exact(
        "thirteen/pentagon-parity",
        "thirteen pentagons give an odd edge-slot total, so no polyhedron exists",
        if parity.parity_ok {
            "even".into()
        } else {
            "65 odd".into()
        },
        "65 odd",
    );
    s.exact(
        "thirteen/max-quad",
        "at most this many tight quadrilateral pyramids fit by solid angle",
        max_tight_pyramids(4)?.to_string(),
        "12",
    );
    s.exact(
        "thirteen/max-tri",
        "at most this many tight triangular pyramids fit by solid angle",
        max_tight_pyramids(3)?.to_string(),
        "10",
    );
    s.exact(
        "thirteen/max-pent",
        "raw solid angle alone would admit this many pentagonal pyramids",
        max_tight_pyramids(5)?.to_string(),
        "13",
    );
    Ok(s.rows)
}

fn dodecahedron_rows(
    s: &mut Suite,
    tag: &str,
    label: &str,
    p: &closepack::polyhedron::Polyhedron,
    stats_expected: &str,
) -> Result<(), GeomError> {
    let stats = p.validate()?;
    s.exact(
        &format!("blocks/{tag}/stats"),
        &format!("vertex, edge and face counts of the {label}"),
        format!(
            "{}v {}e {}f",
            stats.vertex_count, stats.edge_count, stats.face_count
        ),
        stats_expected,
    );
    let mut min_dist = f64::INFINITY;
    for f in 0..p.faces.len() {
        min_dist = min_dist.min(p.face_plane_distance(f)?);
    }
    s.num(
        &format!("blocks/{tag}/inradius"),
        &format!("every face plane of the {label} is tangent to the unit sphere"),
        min_dist,
        1.0,
        Tol::Pinned(1e-12),
    );
    Ok(())
}

fn filler_cell_rows(
    s: &mut Suite,
    tag: &str,
    label: &str,
    p: &closepack::polyhedron::Polyhedron,
) -> Result<(), GeomError> {
    s.num(
        &format!("blocks/{tag}/volume"),
        &format!("volume of the {label}"),
        p.volume(),
        4.0 * SQRT_2,
        Tol::Pinned(1e-12),
    );
    s.num(
        &format!("blocks/{tag}/density"),
        &format!("circumscribed density of the {label}"),
        circumscribed_density(p)?,
        CLOSE_DENSITY,
        Tol::Pinned(1e-12),
    );
    let mut max_omega_dev = 0.0f64;
    let mut omega_sum = 0.0;
    for f in 0..p.faces.len() {
        let omega = face_pyramid_solid_angle(p, f)?;
        max_omega_dev = max_omega_dev.max((omega - PI / 3.0).abs());
        omega_sum += omega;
    }
    s.num(
        &format!("blocks/{tag}/face-angles"),
        &format!("largest deviation of a face solid angle from π/3 in the {label}"),
        max_omega_dev,
        0.0,
        Tol::Pinned(1e-11),
    );
    s.num(
        &format!("blocks/{tag}/angle-sum"),
        &format!("face solid angles of the {label} exhaust the full sphere"),
        omega_sum,
        FOUR_PI,
        Tol::Pinned(1e-9),
    );
    let root = 2.0f64.sqrt().atan();
    let expected_halves = [PI / 2.0 - root, PI / 2.0 - root, root, root];
    let mut max_half_dev = 0.0f64;
    for f in 0..p.faces.len() {
        let mut halves = face_half_angles(p, f);
        halves.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (h, e) in halves.iter().zip(expected_halves.iter()) {
            max_half_dev = max_half_dev.max((h - e).abs());
        }
    }
    s.num(
        &format!("blocks/{tag}/compositions"),
        &format!("every face of the {label} carries the solved half-angle composition"),
        max_half_dev,
        0.0,
        Tol::Pinned(1e-10),
    );
    let rings = verify_vertex_rings(p)?;
    s.exact(
        &format!("blocks/{tag}/rings"),
        &format!("each vertex of the {label} lies on its face planes with equal angles"),
        if rings.ok {
            "consistent".into()
        } else {
            format!("{} failures", rings.failures.len())
        },
        "consistent",
    );
    Ok(())
}

/// Quadrilateral face solves, the pentagon closure scan, the three
/// circumscribed dodecahedra, and the space-filling audits.
pub fn suite_blocks(ctx: &Ctx) -> Result<Vec<CheckResult>, GeomError> {
    let mut s = Suite::new(ctx);
    let quad = solve_paired_complement_family()?;
    s.num(
        "blocks/quad-root-tan",
        "tangent of the solved symmetric-family half-angle",
        quad.alpha.tan(),
        SQRT_2,
        Tol::Pinned(1e-10),
    );
    s.num(
        "blocks/quad-root-omega",
        "solid angle of the solved quadrilateral composition",
        PI / 3.0 + quad.omega_residual,
        PI / 3.0,
        Tol::Pinned(1e-10),
    );
    s.num(
        "blocks/quad-root-area",
        "face area of the solved quadrilateral composition",
        quad.base_area,
        SQRT_2,
        Tol::Pinned(1e-12),
    );
    let stationary = paired_complement_area_stationarity(2_000, ctx.seed)?;
    s.exact(
        "blocks/quad-root-stationary",
        "solved composition is a stationary point of face area on the ω=π/3 surface",
        if stationary.ok {
            "stationary".into()
        } else {
            format!(
                "first-order drift: {:.3e}/{:.3e}",
                stationary.max_shift_coarse, stationary.max_shift_fine
            )
        },
        "stationary",
    );
    let three = solve_three_equal_family()?;
    s.num_printed(
        "blocks/three-equal-alpha",
        "repeated half-angle of the three-equal family root (degrees)",
        three.alpha_deg,
        "51.178151",
        Tol::Pinned(1e-4),
    );
    s.num_printed(
        "blocks/three-equal-companion",
        "companion half-angle of the three-equal family root (degrees)",
        three.companion_deg,
        "26.465547",
        Tol::Pinned(1e-4),
    );
    s.num_printed(
        "blocks/three-equal-vertex",
        "interior face angle at the companion vertex (degrees)",
        three.vertex_angle_deg,
        "127.06891",
        Tol::Pinned(1e-4),
    );
    s.num_printed(
        "blocks/three-equal-triple",
        "three such corners at one vertex exceed a full turn (degrees)",
        three.triple_vertex_sum_deg,
        "381.20672",
        Tol::Pinned(1e-4),
    );
    let scan = pentagon_closure_scan(100)?;
    s.exact(
        "blocks/pentagon-roots",
        "pentagonal compositions solving ω=π/3 across the symmetric families",
        scan.roots.len().to_string(),
        "6",
    );
    s.exact(
        "blocks/pentagon-feasible",
        "pentagonal roots whose corners could close into a dodecahedron",
        scan.closure_feasible_count.to_string(),
        "0",
    );
    s.num(
        "blocks/pentagon-regular-gap",
        "regular pentagonal composition falls short of the ω=π/3 target",
        PI / 3.0 - scan.regular_omega,
        0.104667994100,
        Tol::Pinned(1e-9),
    );

    let rhombic = build_rhombic_dodecahedron()?;
    dodecahedron_rows(&mut s, "rhombic", "rhombic dodecahedron", &rhombic, "14v 24e 12f")?;
    filler_cell_rows(&mut s, "rhombic", "rhombic dodecahedron", &rhombic)?;

    let trapezo = build_trapezo_rhombic_dodecahedron()?;
    dodecahedron_rows(
        &mut s,
        "trapezo",
        "trapezo-rhombic dodecahedron",
        &trapezo,
        "14v 24e 12f",
    )?;
    filler_cell_rows(&mut s, "trapezo", "trapezo-rhombic dodecahedron", &trapezo)?;
    let mut rhombi = 0;
    let mut trapezoids = 0;
    for f in 0..trapezo.faces.len() {
        let loop_ = &trapezo.faces[f];
        let mut sides: Vec<f64> = (0..4)
            .map(|k| trapezo.vertices[loop_[k]].distance(trapezo.vertices[loop_[(k + 1) % 4]]))
            .collect();
        sides.sort_by(|a, b| a.partial_cmp(b).unwrap());
        if sides[3] - sides[0] < 1e-9 {
            rhombi += 1;
        } else {
            trapezoids += 1;
        }
    }
    s.exact(
        "blocks/trapezo/face-mix",
        "face shapes of the trapezo-rhombic dodecahedron",
        format!("{rhombi} rhombi + {trapezoids} trapezoids"),
        "6 rhombi + 6 trapezoids",
    );

    let regular = build_regular_dodecahedron()?;
    dodecahedron_rows(
        &mut s,
        "regular-dodec",
        "regular dodecahedron",
        &regular,
        "20v 30e 12f",
    )?;
    let reg_density = circumscribed_density(&regular)?;
    s.num(
        "blocks/regular-dodec/density",
        "circumscribed density of the regular dodecahedron",
        reg_density,
        0.754697399337,
        Tol::Pinned(1e-9),
    );
    s.num(
        "blocks/regular-dodec/excess",
        "regular dodecahedron beats the close-packing density but cannot tile",
        reg_density - CLOSE_DENSITY,
        0.014216909644,
        Tol::Pinned(1e-9),
    );

    // seeded Monte Carlo cross-check of one face cone, split into two
    // triangle fans
    let face = &rhombic.faces[0];
    let v: Vec<Vec3> = face.iter().map(|&i| rhombic.vertices[i]).collect();
    let kernel = polygon_cone_solid_angle(Vec3::ZERO, &v)?.steradians();
    let per_triangle = (ctx.samples / 2).max(1);
    let mc1 = monte_carlo_cone_solid_angle(v[0], v[1], v[2], per_triangle, ctx.seed)?;
    let mc2 = monte_carlo_cone_solid_angle(v[0], v[2], v[3], per_triangle, ctx.seed + 1)?;
    let se = (mc1.standard_error.powi(2) + mc2.standard_error.powi(2)).sqrt();
    let z = (kernel - mc1.estimate - mc2.estimate).abs() / se;
    s.num(
        "blocks/mc-cross-check",
        "face-cone solid angle agrees with the seeded Monte Carlo estimate (z-score)",
        z,
        0.0,
        Tol::Pinned(3.0),
    );

    for (kind, tag) in [
        (FillKind::Rhombic, "abc"),
        (FillKind::TrapezoRhombic, "ab"),
        (FillKind::Mixed, "abac"),
    ] {
        let report = verify_space_filling(kind, 3)?;
        s.num(
            &format!("blocks/fill/{tag}/volume"),
            &format!(
                "per-sphere cells of the {} stacking add up to the region volume",
                report.sequence
            ),
            report.volume_residual,
            0.0,
            Tol::Pinned(1e-9),
        );
        s.exact(
            &format!("blocks/fill/{tag}/coverage"),
            &format!(
                "every sample point lies in exactly one cell of the {} stacking",
                report.sequence
            ),
            format!(
                "uncovered={} multicovered={} defects={}",
                report.uncovered, report.strictly_multicovered, report.contact_defects
            ),
            "uncovered=0 multicovered=0 defects=0",
        );
    }
    Ok(s.rows)
}

/// The six volume-minimizing vertex-sphere blocks and their prism split.
pub fn suite_minblocks(ctx: &Ctx) -> Result<Vec<CheckResult>, GeomError> {
    let mut s = Suite::new(ctx);
    s.num(
        "minblocks/profile-left",
        "tetrahedron-family volume at the regular endpoint",
        tetra_volume_profile(1.0)?,
        2.0 * SQRT_2 / 3.0,
        Tol::Pinned(1e-12),
    );
    s.num(
        "minblocks/profile-right",
        "tetrahedron-family volume at the stretched endpoint",
        tetra_volume_profile(SQRT_2)?,
        2.0 * SQRT_2 / 3.0,
        Tol::Pinned(1e-12),
    );
    s.num(
        "minblocks/profile-peak",
        "tetrahedron-family volume at its interior maximum",
        tetra_volume_profile(1.5f64.sqrt())?,
        1.0,
        Tol::Pinned(1e-12),
    );
    let a = verify_constraint_activity(MinimalBlockKind::TetraA)?;
    s.exact(
        "minblocks/tetra-A-activity",
        "separation constraints of the regular minimal tetrahedron",
        format!("{} active, {} slack, {} violated", a.active, a.slack, a.violated),
        "6 active, 0 slack, 0 violated",
    );
    let b = verify_constraint_activity(MinimalBlockKind::TetraB)?;
    s.exact(
        "minblocks/tetra-B-activity",
        "separation constraints of the stretched minimal tetrahedron",
        format!("{} active, {} slack, {} violated", b.active, b.slack, b.violated),
        "5 active, 1 slack, 0 violated",
    );
    s.num(
        "minblocks/tetra-B-slack",
        "the one slack pair of the stretched tetrahedron sits at the square diagonal",
        b.slack_distances.first().copied().unwrap_or(f64::NAN),
        2.0 * SQRT_2,
        Tol::Pinned(1e-12),
    );
    let mut tetra_dev = 0.0f64;
    for kind in [MinimalBlockKind::TetraA, MinimalBlockKind::TetraB] {
        tetra_dev = tetra_dev.max((minimal_block(kind)?.volume() - 2.0 * SQRT_2 / 3.0).abs());
    }
    s.num(
        "minblocks/tetra-volumes",
        "both minimal tetrahedra have volume 2√2/3",
        tetra_dev,
        0.0,
        Tol::Pinned(1e-12),
    );
    let mut penta_dev = 0.0f64;
    for kind in [MinimalBlockKind::PentaA, MinimalBlockKind::PentaB] {
        penta_dev = penta_dev.max((minimal_block(kind)?.volume() - 4.0 * SQRT_2 / 3.0).abs());
    }
    s.num(
        "minblocks/penta-volumes",
        "both minimal quadrilateral pyramids have volume 4√2/3",
        penta_dev,
        0.0,
        Tol::Pinned(1e-12),
    );
    for (kind, tag) in [(MinimalBlockKind::HexaA, "hexa-A"), (MinimalBlockKind::HexaB, "hexa-B")] {
        let block = minimal_block(kind)?;
        s.num(
            &format!("minblocks/{tag}/volume"),
            &format!("volume of the minimal hexahedron {tag}"),
            block.volume(),
            4.0 * SQRT_2,
            Tol::Pinned(1e-12),
        );
        let mut edge_dev = 0.0f64;
        for d in block.polyhedron().edge_lengths() {
            edge_dev = edge_dev.max((d - 2.0).abs());
        }
        s.num(
            &format!("minblocks/{tag}/edges"),
            &format!("all twelve edges of {tag} sit at the contact distance"),
            edge_dev,
            0.0,
            Tol::Pinned(1e-12),
        );
        let (total, density) = block.vertex_sphere_density()?;
        s.num(
            &format!("minblocks/{tag}/angle-sum"),
            &format!("vertex solid angles of {tag} assemble one full sphere"),
            total,
            FOUR_PI,
            Tol::Pinned(1e-9),
        );
        s.num(
            &format!("minblocks/{tag}/density"),
            &format!("vertex-sphere density of {tag}"),
            density,
            CLOSE_DENSITY,
            Tol::Pinned(1e-9),
        );
    }
    for (kind, tag) in [(MinimalBlockKind::HexaA, "hexa-A"), (MinimalBlockKind::HexaB, "hexa-B")] {
        let hexa = minimal_block(kind)?;
        let (p1, p2) = split_prism(kind)?;
        s.num(
            &format!("minblocks/{tag}/prism-volumes"),
            &format!("the diagonal split of {tag} halves its volume exactly"),
            (p1.volume() + p2.volume() - hexa.volume()).abs()
                + (p1.volume() - 2.0 * SQRT_2).abs(),
            0.0,
            Tol::Pinned(1e-12),
        );
        let mut angle_dev = 0.0f64;
        let mut density_dev = 0.0f64;
        for p in [&p1, &p2] {
            let (total, density) = p.vertex_sphere_density()?;
            angle_dev = angle_dev.max((total - 2.0 * PI).abs());
            density_dev = density_dev.max((density - CLOSE_DENSITY).abs());
        }
        s.num(
            &format!("minblocks/{tag}/prism-angles"),
            &format!("each prism of {tag} carries a half-sphere of vertex angle"),
            angle_dev,
            0.0,
            Tol::Pinned(1e-9),
        );
        s.num(
            &format!("minblocks/{tag}/prism-density"),
            &format!("each prism of {tag} keeps the close-packing density"),
            density_dev,
            0.0,
            Tol::Pinned(1e-9),
        );
    }
    let spot = hexahedron_volume_spot_check(10_000, ctx.seed)?;
    s.exact(
        "minblocks/spot-check",
        "random separated hexahedra never undercut the minimal volume (10000 trials)",
        format!(
            "{} violations, {} repair failures",
            spot.violations, spot.repair_failures
        ),
        "0 violations, 0 repair failures",
    );
    Ok(s.rows)
}

/// Stacked close packings for every short cyclic sequence.
pub fn suite_barlow(ctx: &Ctx) -> Result<Vec<CheckResult>, GeomError> {
    let mut s = Suite::new(ctx);
    let mut sequences = Vec::new();
    for len in 1..=8 {
        sequences.extend(cyclic_sequences(len));
    }
    s.exact(
        "barlow/sequences",
        "distinct cyclic stacking sequences of length at most 8 (up to rotation)",
        sequences.len().to_string(),
        "85",
    );
    let mut density_dev = 0.0f64;
    let mut distance_dev = 0.0f64;
    let mut contact_defects = 0usize;
    let mut periphery_ok = 0usize;
    for seq in &sequences {
        let region = generate_packing(seq, 1, 1)?;
        density_dev = density_dev.max((packing_density(&region)? - CLOSE_DENSITY).abs());
        distance_dev = distance_dev.max((region.min_distance() - 2.0).abs());
        contact_defects += contact_graph(&region)
            .into_iter()
            .filter(|&c| c != 12)
            .count();
        if periphery_structure(&region, 0, 1)? == (4, 7) {
            periphery_ok += 1;
        }
    }
    s.num(
        "barlow/density",
        "largest deviation from the close-packing density across all sequences",
        density_dev,
        0.0,
        Tol::Pinned(1e-12),
    );
    s.num(
        "barlow/min-distance",
        "largest deviation of the closest center distance from the contact distance",
        distance_dev,
        0.0,
        Tol::Pinned(1e-12),
    );
    s.exact(
        "barlow/contacts",
        "spheres whose contact count differs from twelve, across all sequences",
        contact_defects.to_string(),
        "0",
    );
    s.exact(
        "barlow/periphery",
        "contact sets of a touching pair decompose as 1 center + 4 shared + 7 outer",
        format!("{periphery_ok} of {} sequences", sequences.len()),
        "85 of 85 sequences",
    );
    let fcc = generate_packing(&StackingSequence::parse("ABC")?, 2, 2)?;
    let hcp = generate_packing(&StackingSequence::parse("AB")?, 2, 2)?;
    s.exact(
        "barlow/periphery-fcc",
        "periphery decomposition in the three-layer-period packing",
        format!("{:?}", periphery_structure(&fcc, 0, 1)?),
        "(4, 7)",
    );
    s.exact(
        "barlow/periphery-hcp",
        "periphery decomposition in the two-layer-period packing, in-layer and cross-layer",
        format!(
            "{:?} {:?}",
            periphery_structure(&hcp, 0, 1)?,
            periphery_structure(&hcp, 0, 4)?
        ),
        "(4, 7) (4, 7)",
    );
    s.num(
        "barlow/layer-spacing",
        "vertical spacing between adjacent layers",
        LAYER_SPACING,
        (8.0f64 / 3.0).sqrt(),
        Tol::Pinned(1e-12),
    );
    Ok(s.rows)
}

/// Checks one user-chosen stacking sequence at the given periodic extent.
pub fn barlow_report(
    sequence_text: &str,
    nx: u32,
    ny: u32,
    ctx: &Ctx,
) -> Result<Vec<CheckResult>, GeomError> {
    let seq = StackingSequence::parse(sequence_text)?;
    let region = generate_packing(&seq, nx, ny)?;
    let upper = seq.to_string_upper();
    let mut s = Suite::new(ctx);
    s.exact(
        &format!("barlow/{upper}/sites"),
        "sphere centers in the periodic region",
        region.centers.len().to_string(),
        &(seq.len() as u32 * nx * ny).to_string(),
    );
    s.num(
        &format!("barlow/{upper}/density"),
        "packing density of the stacking",
        packing_density(&region)?,
        CLOSE_DENSITY,
        Tol::Pinned(1e-12),
    );
    s.num(
        &format!("barlow/{upper}/min-distance"),
        "closest center distance",
        region.min_distance(),
        2.0,
        Tol::Pinned(1e-12),
    );
    let defects = contact_graph(&region)
        .into_iter()
        .filter(|&c| c != 12)
        .count();
    s.exact(
        &format!("barlow/{upper}/contacts"),
        "spheres whose contact count differs from twelve",
        defects.to_string(),
        "0",
    );
    Ok(s.rows)
}

/// Runs one named suite.
pub fn run_suite(name: &str, ctx: &Ctx) -> Result<Vec<CheckResult>, GeomError> {
    match name {
        "table1" => suite_table1(ctx),
        "honeycomb" => suite_honeycomb(ctx),
        "thirteen" => suite_thirteen(ctx),
        "blocks" => suite_blocks(ctx),
        "minblocks" => suite_minblocks(ctx),
        "barlow" => suite_barlow(ctx),
        "all" => {
            let mut rows = Vec::new();
            for suite in ["table1", "honeycomb", "thirteen", "blocks", "minblocks", "barlow"] {
                rows.extend(run_suite(suite, ctx)?);
            }
            Ok(rows)
        }
        other => Err(GeomError::domain(format!("unknown suite '{other}'"))),
    }
}
