//! Volume-ratio profiles of a right-triangle wedge cone over a unit sphere.
//!
//! Both profiles describe a tetrahedron `O-ABH` whose apex `O` sits at the
//! sphere center, with `H` the foot of the unit perpendicular from `O` onto
//! the base plane. They track how much of the tetrahedron's volume the
//! spherical sector through its cone occupies:
//!
//! * [`wedge_fill_profile`] grows the wedge outward (leg length `x`, opening
//!   `theta` at `H`); the fill ratio falls monotonically from 1 toward 0.
//! * [`edge_split_profile`] keeps the far edge at fixed distance `h` from `H`
//!   and slides the split point (angle `x` of the total opening `theta`); all
//!   outputs are symmetric about `x = theta/2`, where the fill ratio peaks.

use crate::error::{GeomError, Result};
use crate::solid_angle::{triangle_solid_angle, SolidAngle, SphericalTriangleAngles};

/// Outputs of [`wedge_fill_profile`].
#[derive(Debug, Clone, Copy)]
pub struct WedgeFill {
    /// Volume of the unit-sphere sector inside the wedge cone (ω/3).
    pub sector_volume: f64,
    /// Volume of the wedge tetrahedron `O-ABH` = x²·tanθ/6.
    pub tetra_volume: f64,
    /// `sector_volume / tetra_volume`.
    pub ratio: f64,
}

/// Wedge with legs `|HA| = x`, opening angle `theta` at `H`, and a right angle
/// at `A`; the apex `O` sits a unit length above `H`.
pub fn wedge_fill_profile(theta: f64, x: f64) -> Result<WedgeFill> {
    if !(theta > 0.0 && theta < std::f64::consts::FRAC_PI_2) {
        return Err(GeomError::domain(format!(
            "opening angle theta = {theta} must lie in (0, π/2)"
        )));
    }
    if x <= 0.0 || !x.is_finite() {
        return Err(GeomError::domain(format!("leg length x = {x} must be positive")));
    }
    let alpha = x.atan();
    let beta = (x / theta.cos()).atan();
    let phi = (x * theta.tan() / x.mul_add(x, 1.0).sqrt()).atan();
    let omega = triangle_solid_angle(&SphericalTriangleAngles::new(alpha, beta, phi)?)?;
    let sector_volume = omega.sector_volume();
    let tetra_volume = x * x * theta.tan() / 6.0;
    Ok(WedgeFill {
        sector_volume,
        tetra_volume,
        ratio: sector_volume / tetra_volume,
    })
}

/// Outputs of [`edge_split_profile`].
#[derive(Debug, Clone, Copy)]
pub struct EdgeSplit {
    /// Solid angle of the wedge cone at the apex.
    pub solid_angle: SolidAngle,
    /// Volume of the unit-sphere sector inside the cone (ω/3).
    pub sector_volume: f64,
    /// Volume of the wedge tetrahedron `O-ABH` = h²·(tan x + tan(θ−x))/6.
    pub tetra_volume: f64,
    /// `sector_volume / tetra_volume`.
    pub ratio: f64,
}

/// Wedge over a base triangle `ABH` whose side `AB` lies on a line at distance
/// `h` from `H`, with the opening `theta` at `H` split as `x` + `(theta − x)`
/// by the perpendicular onto that line; apex `O` a unit length above `H`.
pub fn edge_split_profile(theta: f64, h: f64, x: f64) -> Result<EdgeSplit> {
    if !(theta > 0.0 && theta < std::f64::consts::PI) {
        return Err(GeomError::domain(format!(
            "opening angle theta = {theta} must lie in (0, π)"
        )));
    }
    if h <= 0.0 || !h.is_finite() {
        return Err(GeomError::domain(format!("edge distance h = {h} must be positive")));
    }
    if !(x > 0.0 && x < theta) {
        return Err(GeomError::domain(format!(
            "split angle x = {x} must lie strictly inside (0, {theta})"
        )));
    }
    let other = theta - x;
    if x >= std::f64::consts::FRAC_PI_2 || other >= std::f64::consts::FRAC_PI_2 {
        return Err(GeomError::domain(
            "both split half-angles must stay below π/2 for the base to close",
        ));
    }
    let alpha = (h / x.cos()).atan();
    let beta = (h / other.cos()).atan();
    // Two-argument form keeps φ correct when the opening is obtuse.
    let phi = (h * h.mul_add(h, 1.0).sqrt() * theta.sin())
        .atan2((h * h).mul_add(theta.cos(), x.cos() * other.cos()));
    let omega = triangle_solid_angle(&SphericalTriangleAngles::new(alpha, beta, phi)?)?;
    let sector_volume = omega.sector_volume();
    let tetra_volume = h * h * (x.tan() + other.tan()) / 6.0;
    Ok(EdgeSplit {
        solid_angle: omega,
        sector_volume,
        tetra_volume,
        ratio: sector_volume / tetra_volume,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_3, PI};

    #[test]
    fn fill_ratio_tends_to_one_as_the_wedge_shrinks() {
        let p = wedge_fill_profile(FRAC_PI_3, 1e-6).unwrap();
        assert!((p.ratio - 1.0).abs() < 1e-4);
    }

    #[test]
    fn fill_ratio_collapses_for_huge_wedges() {
        let p = wedge_fill_profile(FRAC_PI_3, 1e3).unwrap();
        assert!(p.ratio < 0.01);
    }

    #[test]
    fn fill_ratio_strictly_decreases_on_a_grid() {
        for theta in [PI / 6.0, PI / 4.0, FRAC_PI_3, 0.4 * PI] {
            let mut prev = f64::INFINITY;
            for k in 1..=50 {
                let x = 0.1 * k as f64;
                let r = wedge_fill_profile(theta, x).unwrap().ratio;
                assert!(r < prev, "ratio rose at theta={theta}, x={x}");
                prev = r;
            }
        }
    }

    #[test]
    fn split_profile_is_symmetric_about_the_midpoint() {
        let h = 1.0 / 3.0_f64.sqrt();
        let a = edge_split_profile(1.0, h, 0.3).unwrap();
        let b = edge_split_profile(1.0, h, 0.7).unwrap();
        assert!((a.solid_angle.steradians() - b.solid_angle.steradians()).abs() < 1e-13);
        assert!((a.sector_volume - b.sector_volume).abs() < 1e-13);
        assert!((a.tetra_volume - b.tetra_volume).abs() < 1e-13);
        assert!((a.ratio - b.ratio).abs() < 1e-13);
    }

    #[test]
    fn split_ratio_peaks_at_the_midpoint() {
        let h = 1.0 / 3.0_f64.sqrt();
        let theta = 1.2;
        let mid = edge_split_profile(theta, h, theta / 2.0).unwrap().ratio;
        let lo = edge_split_profile(theta, h, theta / 2.0 - 0.2).unwrap().ratio;
        let hi = edge_split_profile(theta, h, theta / 2.0 + 0.2).unwrap().ratio;
        assert!(mid > lo && mid > hi);
        // centered finite difference at the midpoint
        let d = 1e-5;
        let f1 = edge_split_profile(theta, h, theta / 2.0 - d).unwrap().ratio;
        let f2 = edge_split_profile(theta, h, theta / 2.0 + d).unwrap().ratio;
        assert!(((f2 - f1) / (2.0 * d)).abs() < 1e-6);
    }

    #[test]
    fn obtuse_openings_are_handled() {
        let h = 0.6;
        let theta = 2.0;
        let p = edge_split_profile(theta, h, 0.8).unwrap();
        assert!(p.solid_angle.steradians() > 0.0);
        let q = edge_split_profile(theta, h, theta - 0.8).unwrap();
        assert!((p.ratio - q.ratio).abs() < 1e-13);
    }

    #[test]
    fn out_of_domain_split_is_rejected() {
        assert!(edge_split_profile(1.0, 0.5, 1.5).is_err());
        assert!(edge_split_profile(1.0, 0.5, 0.0).is_err());
        assert!(wedge_fill_profile(2.0, 1.0).is_err());
    }
}
