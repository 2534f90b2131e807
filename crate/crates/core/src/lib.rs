//! Geometry kernels and verification primitives for circumscribed-polygon
//! and close-packing computations.
//!
//! The crate is organized bottom-up:
//!
//! - [`vec3`], [`error`]: vector arithmetic and the shared error type.
//! - [`solid_angle`]: solid angles of spherical triangles and polygonal
//!   cones, by two independent closed-form kernels plus a seeded Monte
//!   Carlo estimator for cross-checks.
//! - [`profiles`]: the two one-parameter fill-ratio profiles (sector volume
//!   against tetrahedron volume) used by the extremal arguments.
//! - [`planar`]: circumscribed polygons in the plane, the regular-polygon
//!   extremes, edge-to-edge tiling solutions, and the hexagonal unit-area
//!   block.
//! - [`pyramid`]: tight polygonal pyramids over a unit sphere, their solid
//!   angles, volumes and densities, and the solid-angle budget that bounds
//!   how many unit spheres can touch a central one.
//! - [`polyhedron`]: convex polyhedra, construction from tangent planes of
//!   the unit sphere, volumes, vertex figures, and mesh export.
//! - [`blocks`]: the circumscribed dodecahedra that tile space, the
//!   quadrilateral-face extremum solves, the pentagonal-face closure scan,
//!   and lattice space-filling verification.
//! - [`minimal`]: the minimum-volume blocks with unit spheres at their
//!   vertices, their densities, and the prism split.
//! - [`barlow`]: stacked close packings for arbitrary layer sequences,
//!   densities, contact graphs, and neighborhood structure.
//! - [`sampling`]: deterministic low-discrepancy points and random angle
//!   compositions for property checks.

pub mod barlow;
pub mod blocks;
pub mod error;
pub mod minimal;
pub mod planar;
pub mod polyhedron;
pub mod profiles;
pub mod pyramid;
pub mod sampling;
pub mod solid_angle;
pub mod vec3;

pub use error::{GeomError, Result};
pub use vec3::Vec3;
