//! Plane geometry: polygons circumscribing a circle, the edge-to-edge tiling
//! equation, the unit-area hexagon, and the two-dimensional packing density
//! attained by the minimal triangular block of three mutually tangent circles.

use crate::error::{GeomError, Result};
use std::f64::consts::{FRAC_PI_2, PI};

/// Half-angles subtended at the incircle center by each polygon vertex,
/// together with the incircle radius. A convex polygon circumscribing the
/// circle of radius `r` is determined by such a composition.
#[derive(Debug, Clone)]
pub struct AngleComposition2D {
    alphas: Vec<f64>,
    radius: f64,
}

impl AngleComposition2D {
    pub fn new(alphas: Vec<f64>, radius: f64) -> Result<Self> {
        if alphas.len() < 3 {
            return Err(GeomError::domain(format!(
                "a polygon needs at least 3 vertices, got {}",
                alphas.len()
            )));
        }
        if radius <= 0.0 || !radius.is_finite() {
            return Err(GeomError::domain(format!("radius {radius} must be positive")));
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
        Ok(AngleComposition2D { alphas, radius })
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }
}

/// Area and perimeter of the circumscribing polygon: S = r²·Σ tan αᵢ and
/// L = 2S/r.
pub fn circumscribed_area_perimeter(c: &AngleComposition2D) -> (f64, f64) {
    let tan_sum: f64 = c.alphas().iter().map(|a| a.tan()).sum();
    let area = c.radius() * c.radius() * tan_sum;
    (area, 2.0 * area / c.radius())
}

/// Area and perimeter of the regular n-gon circumscribing a circle of radius
/// r: S⁰ = n·r²·tan(π/n), L⁰ = 2S⁰/r. This is the minimum over all
/// circumscribing n-gons.
pub fn regular_polygon_extremes(n: u32, r: f64) -> Result<(f64, f64)> {
    if n < 3 {
        return Err(GeomError::domain(format!("need n ≥ 3 sides, got {n}")));
    }
    if r <= 0.0 || !r.is_finite() {
        return Err(GeomError::domain(format!("radius {r} must be positive")));
    }
    let s0 = n as f64 * r * r * (PI / n as f64).tan();
    Ok((s0, 2.0 * s0 / r))
}

/// Outcome of checking that regular-polygon area and perimeter strictly
/// decrease with the number of sides.
#[derive(Debug, Clone, Copy)]
pub struct MonotoneExtremesReport {
    pub ok: bool,
    /// First n where S⁰(n+1) < S⁰(n) or L⁰(n+1) < L⁰(n) fails, if any.
    pub first_violation: Option<u32>,
    pub checked_up_to: u32,
}

/// Confirms S⁰(n+1) < S⁰(n) and L⁰(n+1) < L⁰(n) for all 3 ≤ n < n_max.
pub fn verify_monotone_extremes(n_max: u32) -> Result<MonotoneExtremesReport> {
    if n_max < 4 {
        return Err(GeomError::domain(format!("need n_max ≥ 4, got {n_max}")));
    }
    let (mut prev_s, mut prev_l) = regular_polygon_extremes(3, 1.0)?;
    for n in 4..=n_max {
        let (s, l) = regular_polygon_extremes(n, 1.0)?;
        if !(s < prev_s && l < prev_l) {
            return Ok(MonotoneExtremesReport {
                ok: false,
                first_violation: Some(n - 1),
                checked_up_to: n_max,
            });
        }
        prev_s = s;
        prev_l = l;
    }
    Ok(MonotoneExtremesReport {
        ok: true,
        first_violation: None,
        checked_up_to: n_max,
    })
}

/// An edge-to-edge tiling of the plane by congruent regular n-gons meeting k
/// around every vertex: k·(n−2)·180 = 360·n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TilingSolution {
    pub n: u32,
    pub k: u32,
}

/// All integer solutions of the vertex equation with n, k ≥ 3. The search
/// range [3, 360] is exhaustive: k = 2n/(n−2) decreases in n and drops below
/// 3 long before the upper end.
pub fn tiling_solutions() -> Vec<TilingSolution> {
    let mut out = Vec::new();
    for n in 3u32..=360 {
        let numer = 360 * n;
        let denom = 180 * (n - 2);
        if numer % denom == 0 {
            let k = numer / denom;
            if k >= 3 {
                out.push(TilingSolution { n, k });
            }
        }
    }
    out
}

/// The regular hexagon of unit area: side s with (3√3/2)·s² = 1, and its
/// perimeter 6s — the shortest boundary of any unit-area plane tile.
pub fn honeycomb_block() -> (f64, f64) {
    let side = (2.0 / (3.0 * 3.0_f64.sqrt())).sqrt();
    (side, 6.0 * side)
}

/// Density accounting for the minimal two-dimensional block: the equilateral
/// triangle of side 2 spanned by the centers of three mutually tangent unit
/// circles.
#[derive(Debug, Clone, Copy)]
pub struct PlanarKeplerDensity {
    /// Fraction of the block covered by the circles: π/√12.
    pub density: f64,
    /// Area of the triangle: √3.
    pub min_block_area: f64,
    /// Circle area inside the triangle: three 60° unit sectors, π/2.
    pub cut_area: f64,
}

/// Packing density of the closest circle packing, via its minimal block.
pub fn kepler2d_density() -> PlanarKeplerDensity {
    let min_block_area = 3.0_f64.sqrt();
    let cut_area = PI / 2.0;
    PlanarKeplerDensity {
        density: cut_area / min_block_area,
        min_block_area,
        cut_area,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::random_half_angle_composition;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::FRAC_PI_3;

    #[test]
    fn equilateral_triangle_area_and_perimeter() {
        let c = AngleComposition2D::new(vec![FRAC_PI_3; 3], 1.0).unwrap();
        let (s, l) = circumscribed_area_perimeter(&c);
        assert!((s - 3.0 * 3.0_f64.sqrt()).abs() < 1e-12);
        assert!((l - 6.0 * 3.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn square_area_and_perimeter() {
        let c = AngleComposition2D::new(vec![PI / 4.0; 4], 1.0).unwrap();
        let (s, l) = circumscribed_area_perimeter(&c);
        assert!((s - 4.0).abs() < 1e-12);
        assert!((l - 8.0).abs() < 1e-12);
    }

    #[test]
    fn irregular_quadrilateral_beats_no_square() {
        let a = PI / 6.0;
        let b = FRAC_PI_3;
        let c = FRAC_PI_2 - 0.2;
        let d = PI - a - b - c;
        let comp = AngleComposition2D::new(vec![a, b, c, d], 1.0).unwrap();
        let (s, _) = circumscribed_area_perimeter(&comp);
        assert!(s > 4.0);
    }

    #[test]
    fn regular_hexagon_is_sqrt_twelve() {
        let (s0, _) = regular_polygon_extremes(6, 1.0).unwrap();
        assert!((s0 - 12.0_f64.sqrt()).abs() < 1e-12);
        let (s4, _) = regular_polygon_extremes(4, 1.0).unwrap();
        assert!((s4 - 4.0).abs() < 1e-12);
        let (s3, _) = regular_polygon_extremes(3, 2.0).unwrap();
        assert!((s3 - 12.0 * 3.0_f64.sqrt()).abs() < 1e-11);
    }

    #[test]
    fn extremes_decrease_and_approach_the_circle() {
        let report = verify_monotone_extremes(100).unwrap();
        assert!(report.ok, "violation at n = {:?}", report.first_violation);
        // the leading correction at n = 10⁶ is π³/(3n²) ≈ 1.034e-11
        let (s, l) = regular_polygon_extremes(1_000_000, 1.0).unwrap();
        assert!((s - PI).abs() < 1.1e-11);
        assert!((l - 2.0 * PI).abs() < 1e-10);
    }

    #[test]
    fn only_three_regular_tilings_exist() {
        let sols = tiling_solutions();
        assert_eq!(
            sols,
            vec![
                TilingSolution { n: 3, k: 6 },
                TilingSolution { n: 4, k: 4 },
                TilingSolution { n: 6, k: 3 },
            ]
        );
        assert_eq!(sols.iter().map(|s| s.n).max(), Some(6));
        // n = 5 leaves k = 10/3, not an integer
        assert_ne!((360 * 5) % (180 * 3), 0);
    }

    #[test]
    fn tiling_solutions_satisfy_the_equation_exactly() {
        for s in tiling_solutions() {
            assert_eq!(s.k * (s.n - 2) * 180, 360 * s.n);
        }
    }

    #[test]
    fn unit_area_hexagon_checks_out() {
        let (side, perimeter) = honeycomb_block();
        let area = 1.5 * 3.0_f64.sqrt() * side * side;
        assert!((area - 1.0).abs() < 1e-14);
        assert!((perimeter - 3.72241943).abs() < 1e-8);
        // unit-area square and equilateral triangle have longer boundaries
        let triangle_perimeter = 3.0 * (4.0 / 3.0_f64.sqrt()).sqrt();
        assert!(perimeter < 4.0 && perimeter < triangle_perimeter);
    }

    #[test]
    fn planar_density_is_pi_over_sqrt_twelve() {
        let d = kepler2d_density();
        assert!((d.density - PI / 12.0_f64.sqrt()).abs() < 1e-15);
        assert!((d.min_block_area - 3.0_f64.sqrt()).abs() < 1e-15);
        // two blocks' circle parts assemble into one full disc
        assert!((2.0 * d.cut_area - PI).abs() < 1e-15);
        // and the density equals the circle-to-hexagon ratio
        let (s6, _) = regular_polygon_extremes(6, 1.0).unwrap();
        assert!((d.density - PI / s6).abs() < 1e-15);
        assert!((d.density - d.cut_area / d.min_block_area).abs() < 1e-16);
    }

    #[test]
    fn regular_composition_minimizes_area() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for n in 3..=8 {
            let (regular, _) = regular_polygon_extremes(n as u32, 1.0).unwrap();
            for _ in 0..500 {
                let alphas = random_half_angle_composition(n, &mut rng);
                let c = AngleComposition2D::new(alphas, 1.0).unwrap();
                let (s, l) = circumscribed_area_perimeter(&c);
                assert!(s >= regular - 1e-12);
                assert!((l - 2.0 * s).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn bad_compositions_are_rejected() {
        assert!(AngleComposition2D::new(vec![FRAC_PI_3; 2], 1.0).is_err());
        assert!(AngleComposition2D::new(vec![PI / 4.0; 3], 1.0).is_err());
        assert!(AngleComposition2D::new(vec![FRAC_PI_2, FRAC_PI_3, PI - FRAC_PI_2 - FRAC_PI_3], 1.0).is_err());
        assert!(regular_polygon_extremes(2, 1.0).is_err());
    }
}
