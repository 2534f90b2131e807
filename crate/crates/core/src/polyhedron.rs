//! Convex polyhedra as vertex lists plus oriented face loops, with the
//! constructions this library needs: intersection of tangent planes of the
//! unit sphere, parallelepipeds, and pyramids over a quadrilateral base.

use crate::error::{GeomError, Result};
use crate::vec3::Vec3;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt::Write as _;

/// Tolerance for point-on-plane and half-space membership tests during
/// construction from tangent planes.
const PLANE_EPS: f64 = 1e-9;
/// Two candidate vertices closer than this are merged.
const MERGE_EPS: f64 = 1e-8;

/// A convex polyhedron. Face loops list vertex indices counterclockwise as
/// seen from outside. `tangent_points` records, per face, the point where the
/// face plane touches the unit sphere, when the polyhedron was built that way.
#[derive(Debug, Clone)]
pub struct Polyhedron {
    pub vertices: Vec<Vec3>,
    pub faces: Vec<Vec<usize>>,
    pub tangent_points: Option<Vec<Vec3>>,
}

/// Counts confirmed by [`Polyhedron::validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyhedronStats {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub face_count: usize,
}

impl Polyhedron {
    /// Checks closedness: every directed edge appears exactly once, its
    /// reverse appears in another face, and V − E + F = 2.
    pub fn validate(&self) -> Result<PolyhedronStats> {
        if self.faces.len() < 4 {
            return Err(GeomError::domain(format!(
                "a closed polyhedron needs at least 4 faces, got {}",
                self.faces.len()
            )));
        }
        if let Some(tp) = &self.tangent_points {
            if tp.len() != self.faces.len() {
                return Err(GeomError::domain(
                    "tangent point list length differs from face count",
                ));
            }
        }
        let mut directed: HashMap<(usize, usize), usize> = HashMap::new();
        for (fi, face) in self.faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(GeomError::domain(format!(
                    "face {fi} has fewer than 3 vertices"
                )));
            }
            for (k, &a) in face.iter().enumerate() {
                let b = face[(k + 1) % face.len()];
                if a >= self.vertices.len() || b >= self.vertices.len() {
                    return Err(GeomError::domain(format!(
                        "face {fi} references vertex {} out of range",
                        a.max(b)
                    )));
                }
                if a == b {
                    return Err(GeomError::domain(format!("face {fi} repeats vertex {a}")));
                }
                if directed.insert((a, b), fi).is_some() {
                    return Err(GeomError::domain(format!(
                        "directed edge ({a}, {b}) appears in two faces"
                    )));
                }
            }
        }
        for (&(a, b), &fi) in &directed {
            match directed.get(&(b, a)) {
                None => {
                    return Err(GeomError::domain(format!(
                        "edge ({a}, {b}) of face {fi} has no opposite traversal"
                    )))
                }
                Some(&fj) if fj == fi => {
                    return Err(GeomError::domain(format!(
                        "edge ({a}, {b}) is traversed twice by face {fi}"
                    )))
                }
                _ => {}
            }
        }
        let edge_count = directed.len() / 2;
        let euler = self.vertices.len() as i64 - edge_count as i64 + self.faces.len() as i64;
        if euler != 2 {
            return Err(GeomError::domain(format!(
                "Euler characteristic is {euler}, expected 2"
            )));
        }
        Ok(PolyhedronStats {
            vertex_count: self.vertices.len(),
            edge_count,
            face_count: self.faces.len(),
        })
    }

    /// Unit outward normal of a face (Newell's method over the loop).
    pub fn face_normal(&self, face: usize) -> Result<Vec3> {
        let loop_ = &self.faces[face];
        let mut n = Vec3::ZERO;
        for k in 0..loop_.len() {
            let a = self.vertices[loop_[k]];
            let b = self.vertices[loop_[(k + 1) % loop_.len()]];
            n += a.cross(b);
        }
        n.normalized()
            .ok_or_else(|| GeomError::domain(format!("face {face} has a degenerate normal")))
    }

    pub fn face_centroid(&self, face: usize) -> Vec3 {
        let loop_ = &self.faces[face];
        let mut c = Vec3::ZERO;
        for &i in loop_ {
            c += self.vertices[i];
        }
        c / loop_.len() as f64
    }

    /// Signed distance from the origin to a face plane along the outward
    /// normal (positive when the origin is on the inside).
    pub fn face_plane_distance(&self, face: usize) -> Result<f64> {
        Ok(self.face_normal(face)?.dot(self.face_centroid(face)))
    }

    /// Area of a face (norm of the half-sum of cross products over the loop;
    /// exact for planar loops).
    pub fn face_area(&self, face: usize) -> Result<f64> {
        let loop_ = &self.faces[face];
        if loop_.len() < 3 {
            return Err(GeomError::domain(format!("face {face} has fewer than 3 vertices")));
        }
        let mut n = Vec3::ZERO;
        for k in 0..loop_.len() {
            let a = self.vertices[loop_[k]];
            let b = self.vertices[loop_[(k + 1) % loop_.len()]];
            n += a.cross(b);
        }
        Ok(n.norm() / 2.0)
    }

    /// Largest out-of-plane deviation over all faces.
    pub fn max_face_planarity_error(&self) -> Result<f64> {
        let mut worst: f64 = 0.0;
        for f in 0..self.faces.len() {
            let n = self.face_normal(f)?;
            let c = self.face_centroid(f);
            for &i in &self.faces[f] {
                worst = worst.max(n.dot(self.vertices[i] - c).abs());
            }
        }
        Ok(worst)
    }

    /// Volume enclosed by the oriented surface (sum of signed tetrahedra).
    pub fn volume(&self) -> f64 {
        let mut six_v = 0.0;
        for face in &self.faces {
            let p0 = self.vertices[face[0]];
            for k in 1..face.len() - 1 {
                six_v += p0.triple(self.vertices[face[k]], self.vertices[face[k + 1]]);
            }
        }
        six_v / 6.0
    }

    /// Unique undirected edges.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for face in &self.faces {
            for (k, &a) in face.iter().enumerate() {
                let b = face[(k + 1) % face.len()];
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Lengths of the unique edges, sorted ascending.
    pub fn edge_lengths(&self) -> Vec<f64> {
        let mut lengths: Vec<f64> = self
            .edges()
            .iter()
            .map(|&(a, b)| self.vertices[a].distance(self.vertices[b]))
            .collect();
        lengths.sort_by(|x, y| x.partial_cmp(y).unwrap());
        lengths
    }

    /// For each vertex, its neighbors ordered by walking the incident faces
    /// around the vertex, one step per shared edge.
    pub fn vertex_figures(&self) -> Result<Vec<Vec<usize>>> {
        // directed edge (a, b) -> the vertex after b in the face traversing it
        let mut next_in_face: HashMap<(usize, usize), usize> = HashMap::new();
        for face in &self.faces {
            let len = face.len();
            for k in 0..len {
                let a = face[k];
                let b = face[(k + 1) % len];
                next_in_face.insert((a, b), face[(k + 2) % len]);
            }
        }
        let mut degree = vec![0usize; self.vertices.len()];
        for &(a, _) in next_in_face.keys() {
            degree[a] += 1;
        }
        let mut figures = Vec::with_capacity(self.vertices.len());
        for (v, &spokes) in degree.iter().enumerate() {
            let &(_, first) = next_in_face
                .keys()
                .find(|&&(a, _)| a == v)
                .ok_or_else(|| GeomError::domain(format!("vertex {v} belongs to no face")))?;
            let mut ring = vec![first];
            let mut current = first;
            loop {
                // the face traversing (current -> v) continues past v to the
                // next spoke around v
                let &nxt = next_in_face.get(&(current, v)).ok_or_else(|| {
                    GeomError::domain(format!("open fan at vertex {v}"))
                })?;
                if nxt == first && ring.len() > 1 {
                    break;
                }
                ring.push(nxt);
                current = nxt;
                if ring.len() > spokes {
                    return Err(GeomError::domain(format!(
                        "vertex {v} fan does not close"
                    )));
                }
            }
            if ring.len() != spokes {
                return Err(GeomError::domain(format!(
                    "vertex {v} fan closed early ({} of {} spokes)",
                    ring.len(),
                    spokes
                )));
            }
            // canonical rotation: the walk may start at any spoke (map
            // iteration order), which must not leak into downstream sums
            let first_pos = ring
                .iter()
                .enumerate()
                .min_by_key(|&(_, &spoke)| spoke)
                .map(|(k, _)| k)
                .unwrap_or(0);
            ring.rotate_left(first_pos);
            figures.push(ring);
        }
        Ok(figures)
    }

    /// Interior solid angle at every vertex, via the cone over its ordered
    /// vertex figure.
    pub fn vertex_solid_angles(&self) -> Result<Vec<f64>> {
        let figures = self.vertex_figures()?;
        let mut out = Vec::with_capacity(figures.len());
        for (v, ring) in figures.iter().enumerate() {
            let base: Vec<Vec3> = ring.iter().map(|&i| self.vertices[i]).collect();
            let omega = crate::solid_angle::polygon_cone_solid_angle(self.vertices[v], &base)?;
            out.push(omega.steradians());
        }
        Ok(out)
    }

    /// Plain-text mesh export: a header line with counts, one line of three
    /// coordinates per vertex, and one line per face listing its vertex count
    /// followed by the loop indices.
    pub fn to_off_string(&self) -> String {
        let edge_count = self.faces.iter().map(|f| f.len()).sum::<usize>() / 2;
        let mut s = String::new();
        let _ = writeln!(s, "OFF");
        let _ = writeln!(s, "{} {} {}", self.vertices.len(), self.faces.len(), edge_count);
        for v in &self.vertices {
            let _ = writeln!(s, "{} {} {}", v.x, v.y, v.z);
        }
        for face in &self.faces {
            let _ = write!(s, "{}", face.len());
            for &i in face {
                let _ = write!(s, " {i}");
            }
            let _ = writeln!(s);
        }
        s
    }
}

/// Ratio of the unit ball's volume to the polyhedron's, for a polyhedron
/// whose faces all stay at distance ≥ 1 from the center so the ball fits
/// inside.
pub fn circumscribed_density(p: &Polyhedron) -> Result<f64> {
    p.validate()?;
    for f in 0..p.faces.len() {
        let d = p.face_plane_distance(f)?;
        if d < 1.0 - PLANE_EPS {
            return Err(GeomError::domain(format!(
                "face {f} plane at distance {d} < 1 cuts into the unit sphere"
            )));
        }
    }
    let v = p.volume();
    if v <= 0.0 {
        return Err(GeomError::domain("polyhedron volume is not positive"));
    }
    Ok((4.0 * PI / 3.0) / v)
}

/// Builds the convex polyhedron bounded by the tangent planes of the unit
/// sphere at the given touch directions: each direction d contributes the
/// plane x·d̂ = 1. Vertices come from plane triples kept inside every
/// half-space; faces collect and cyclically order the vertices on each plane.
pub fn polyhedron_from_tangent_planes(directions: &[Vec3]) -> Result<Polyhedron> {
    if directions.len() < 4 {
        return Err(GeomError::domain(format!(
            "need at least 4 tangent planes, got {}",
            directions.len()
        )));
    }
    let mut normals = Vec::with_capacity(directions.len());
    for d in directions {
        normals.push(
            d.normalized()
                .ok_or_else(|| GeomError::domain("zero tangent direction"))?,
        );
    }

    let mut vertices: Vec<Vec3> = Vec::new();
    let k = normals.len();
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                let (a, b, c) = (normals[i], normals[j], normals[l]);
                let det = a.triple(b, c);
                if det.abs() < 1e-9 {
                    continue;
                }
                // Cramer's rule for a·x = b·x = c·x = 1
                let p = (b.cross(c) + c.cross(a) + a.cross(b)) / det;
                if normals.iter().all(|n| n.dot(p) <= 1.0 + PLANE_EPS)
                    && !vertices.iter().any(|q| q.distance(p) < MERGE_EPS)
                {
                    vertices.push(p);
                }
            }
        }
    }
    if vertices.len() < 4 {
        return Err(GeomError::domain(
            "tangent planes do not bound a solid (fewer than 4 vertices)",
        ));
    }

    let mut faces = Vec::new();
    let mut tangent_points = Vec::new();
    for (fi, &n) in normals.iter().enumerate() {
        let mut on_plane: Vec<usize> = (0..vertices.len())
            .filter(|&vi| (n.dot(vertices[vi]) - 1.0).abs() <= PLANE_EPS)
            .collect();
        if on_plane.len() < 3 {
            return Err(GeomError::domain(format!(
                "tangent plane {fi} carries only {} vertices",
                on_plane.len()
            )));
        }
        // order counterclockwise about the outward normal
        let e1 = pick_perpendicular(n);
        let e2 = n.cross(e1);
        let mut centroid = Vec3::ZERO;
        for &vi in &on_plane {
            centroid += vertices[vi];
        }
        centroid = centroid / on_plane.len() as f64;
        on_plane.sort_by(|&p, &q| {
            let ap = angle_about(vertices[p] - centroid, e1, e2);
            let aq = angle_about(vertices[q] - centroid, e1, e2);
            ap.partial_cmp(&aq).unwrap()
        });
        faces.push(on_plane);
        tangent_points.push(n);
    }

    let p = Polyhedron {
        vertices,
        faces,
        tangent_points: Some(tangent_points),
    };
    p.validate()?;
    Ok(p)
}

fn pick_perpendicular(n: Vec3) -> Vec3 {
    let trial = if n.x.abs() < 0.9 {
        Vec3::new(1.0, 0.0, 0.0)
    } else {
        Vec3::new(0.0, 1.0, 0.0)
    };
    (trial - n * trial.dot(n)).normalized().expect("unit normal has a perpendicular")
}

fn angle_about(v: Vec3, e1: Vec3, e2: Vec3) -> f64 {
    v.dot(e2).atan2(v.dot(e1))
}

/// Parallelepiped spanned by edge vectors (a, b, t) from the corner v0; the
/// triple must be right-handed.
pub fn parallelepiped(v0: Vec3, a: Vec3, b: Vec3, t: Vec3) -> Result<Polyhedron> {
    if a.triple(b, t) <= 0.0 {
        return Err(GeomError::domain(
            "edge vectors must form a right-handed triple",
        ));
    }
    let vertices = vec![
        v0,
        v0 + a,
        v0 + a + b,
        v0 + b,
        v0 + t,
        v0 + a + t,
        v0 + a + b + t,
        v0 + b + t,
    ];
    let faces = vec![
        vec![0, 3, 2, 1], // bottom
        vec![4, 5, 6, 7], // top
        vec![0, 1, 5, 4],
        vec![1, 2, 6, 5],
        vec![2, 3, 7, 6],
        vec![3, 0, 4, 7],
    ];
    let p = Polyhedron { vertices, faces, tangent_points: None };
    p.validate()?;
    Ok(p)
}

/// Pyramid over a quadrilateral base; the base loop must wind
/// counterclockwise as seen from the apex side.
pub fn quad_pyramid(base: [Vec3; 4], apex: Vec3) -> Result<Polyhedron> {
    let vertices = vec![base[0], base[1], base[2], base[3], apex];
    let faces = vec![
        vec![0, 3, 2, 1],
        vec![0, 1, 4],
        vec![1, 2, 4],
        vec![2, 3, 4],
        vec![3, 0, 4],
    ];
    let p = Polyhedron { vertices, faces, tangent_points: None };
    p.validate()?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_cube() -> Polyhedron {
        parallelepiped(
            Vec3::new(-1.0, -1.0, -1.0),
            Vec3::new(2.0, 0.0, 0.0),
            Vec3::new(0.0, 2.0, 0.0),
            Vec3::new(0.0, 0.0, 2.0),
        )
        .unwrap()
    }

    #[test]
    fn cube_from_tangent_planes() {
        let dirs = [
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(-1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
            Vec3::new(0.0, -1.0, 0.0),
            Vec3::new(0.0, 0.0, 1.0),
            Vec3::new(0.0, 0.0, -1.0),
        ];
        let cube = polyhedron_from_tangent_planes(&dirs).unwrap();
        let stats = cube.validate().unwrap();
        assert_eq!(stats, PolyhedronStats { vertex_count: 8, edge_count: 12, face_count: 6 });
        assert!((cube.volume() - 8.0).abs() < 1e-12);
        for f in 0..6 {
            assert!((cube.face_plane_distance(f).unwrap() - 1.0).abs() < 1e-12);
        }
        assert!((circumscribed_density(&cube).unwrap() - PI / 6.0).abs() < 1e-13);
    }

    #[test]
    fn parallelepiped_volume_and_orientation() {
        let cube = unit_cube();
        assert!((cube.volume() - 8.0).abs() < 1e-12);
        assert!(cube.max_face_planarity_error().unwrap() < 1e-15);
        // outward normals: centroid-to-face distance positive
        for f in 0..6 {
            assert!(cube.face_plane_distance(f).unwrap() > 0.0);
        }
        assert!(parallelepiped(
            Vec3::ZERO,
            Vec3::new(0.0, 2.0, 0.0),
            Vec3::new(2.0, 0.0, 0.0),
            Vec3::new(0.0, 0.0, 2.0),
        )
        .is_err());
    }

    #[test]
    fn cube_vertex_solid_angles_are_octants() {
        let cube = unit_cube();
        let angles = cube.vertex_solid_angles().unwrap();
        assert_eq!(angles.len(), 8);
        for a in &angles {
            assert!((a - PI / 2.0).abs() < 1e-12);
        }
        let total: f64 = angles.iter().sum();
        assert!((total - 4.0 * PI).abs() < 1e-11);
    }

    #[test]
    fn vertex_figures_close_with_correct_degree() {
        let cube = unit_cube();
        for ring in cube.vertex_figures().unwrap() {
            assert_eq!(ring.len(), 3);
        }
    }

    #[test]
    fn quad_pyramid_closes_and_measures() {
        let base = [
            Vec3::new(-1.0, -1.0, 0.0),
            Vec3::new(1.0, -1.0, 0.0),
            Vec3::new(1.0, 1.0, 0.0),
            Vec3::new(-1.0, 1.0, 0.0),
        ];
        let p = quad_pyramid(base, Vec3::new(0.0, 0.0, 3.0)).unwrap();
        assert!((p.volume() - 4.0).abs() < 1e-12);
        let stats = p.validate().unwrap();
        assert_eq!(stats.face_count, 5);
        assert_eq!(stats.edge_count, 8);
    }

    #[test]
    fn off_export_layout() {
        let cube = unit_cube();
        let off = cube.to_off_string();
        let mut lines = off.lines();
        assert_eq!(lines.next(), Some("OFF"));
        assert_eq!(lines.next(), Some("8 6 12"));
        assert_eq!(off.lines().count(), 2 + 8 + 6);
    }

    #[test]
    fn open_surface_is_rejected() {
        let mut cube = unit_cube();
        cube.faces.pop();
        assert!(cube.validate().is_err());
    }

    #[test]
    fn sphere_poking_through_a_face_is_rejected() {
        let mut slab = unit_cube();
        // shrink along z so the top and bottom planes cut into the sphere
        for v in &mut slab.vertices {
            v.z *= 0.5;
        }
        assert!(matches!(circumscribed_density(&slab), Err(GeomError::Domain(_))));
    }
}
