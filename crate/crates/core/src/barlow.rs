//! Close packings built by stacking triangular layers: any cyclic letter
//! sequence over {A, B, C} with no adjacent repeats yields a packing of
//! unit spheres in which every sphere touches twelve others and the density
//! is π/√18, whichever sequence is chosen.

use crate::error::{GeomError, Result};
use crate::vec3::Vec3;
use std::f64::consts::PI;

/// In-plane lattice step along x (sphere diameter).
const STEP_X: Vec3 = Vec3 { x: 2.0, y: 0.0, z: 0.0 };
/// Second in-plane lattice step (60° from the first).
const STEP_Y: Vec3 = Vec3 { x: 1.0, y: 1.732_050_807_568_877_2, z: 0.0 };
/// Vertical spacing between adjacent layers: 2·√(2/3).
pub const LAYER_SPACING: f64 = 1.632_993_161_855_452_3;
/// Tolerance on contact distances (centers exactly 2 apart).
pub const CONTACT_EPS: f64 = 1e-9;

/// A cyclic stacking sequence over the three layer positions A, B, C.
/// Adjacent letters must differ, including the wrap from last to first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StackingSequence {
    letters: Vec<u8>, // 0 = A, 1 = B, 2 = C
}

impl StackingSequence {
    pub fn parse(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(GeomError::domain("stacking sequence is empty"));
        }
        let mut letters = Vec::with_capacity(s.len());
        for ch in s.chars() {
            letters.push(match ch {
                'A' | 'a' => 0,
                'B' | 'b' => 1,
                'C' | 'c' => 2,
                other => {
                    return Err(GeomError::domain(format!(
                        "invalid layer letter '{other}' (expected A, B, or C)"
                    )))
                }
            });
        }
        for i in 0..letters.len() {
            let j = (i + 1) % letters.len();
            if letters[i] == letters[j] {
                let ch = b"ABC"[letters[i] as usize] as char;
                return Err(GeomError::domain(format!(
                    "adjacent layers {i} and {j} repeat '{ch}' (cyclically)"
                )));
            }
        }
        Ok(Self { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// In-plane offset of a layer's lattice, by its letter.
    fn offset(letter: u8) -> Vec3 {
        let k = letter as f64;
        Vec3::new(k, k / 3.0_f64.sqrt(), 0.0)
    }

    pub fn to_string_upper(&self) -> String {
        self.letters.iter().map(|&l| (b'A' + l) as char).collect()
    }
}

/// A periodic region of a stacked packing: sphere centers in one period
/// cell plus the three period vectors that tile space with it.
#[derive(Debug, Clone)]
pub struct PackingRegion {
    pub centers: Vec<Vec3>,
    pub period: [Vec3; 3],
    pub sequence: StackingSequence,
}

/// Lays out `nx × ny` in-plane repeats of each layer for one full vertical
/// period of the sequence. Sphere radius is 1 throughout: in-layer neighbor
/// spacing 2, layer spacing 2·√(2/3).
pub fn generate_packing(seq: &StackingSequence, nx: u32, ny: u32) -> Result<PackingRegion> {
    if nx < 1 || ny < 1 {
        return Err(GeomError::domain("nx and ny must be at least 1"));
    }
    let mut centers = Vec::with_capacity(seq.len() * (nx * ny) as usize);
    for (layer, &letter) in seq.letters.iter().enumerate() {
        let base = StackingSequence::offset(letter) + Vec3::new(0.0, 0.0, layer as f64 * LAYER_SPACING);
        for i in 0..nx {
            for j in 0..ny {
                centers.push(base + STEP_X * i as f64 + STEP_Y * j as f64);
            }
        }
    }
    let period = [
        STEP_X * nx as f64,
        STEP_Y * ny as f64,
        Vec3::new(0.0, 0.0, seq.len() as f64 * LAYER_SPACING),
    ];
    Ok(PackingRegion {
        centers,
        period,
        sequence: seq.clone(),
    })
}

impl PackingRegion {
    pub fn cell_volume(&self) -> f64 {
        self.period[0].triple(self.period[1], self.period[2]).abs()
    }

    /// Positions of all centers shifted by period multiples in
    /// {−range,…,range}³, paired with their source index.
    fn shifted_centers(&self, range: i32) -> Vec<(usize, Vec3)> {
        let mut out = Vec::new();
        for sx in -range..=range {
            for sy in -range..=range {
                for sz in -range..=range {
                    let shift = self.period[0] * sx as f64
                        + self.period[1] * sy as f64
                        + self.period[2] * sz as f64;
                    for (i, &c) in self.centers.iter().enumerate() {
                        out.push((i, c + shift));
                    }
                }
            }
        }
        out
    }

    /// Smallest center-to-center distance, periodic images included.
    pub fn min_distance(&self) -> f64 {
        let images = self.shifted_centers(1);
        let mut best = f64::INFINITY;
        for &c in &self.centers {
            for &(_, q) in &images {
                let d = c.distance(q);
                // d = 0 is the center's own zero-shift image
                if d > 1e-9 {
                    best = best.min(d);
                }
            }
        }
        best
    }

    /// All contact positions (distance 2) around center `i`, as absolute
    /// points in space.
    pub fn contact_positions(&self, i: usize) -> Vec<Vec3> {
        let c = self.centers[i];
        let mut out = Vec::new();
        for &(_, q) in &self.shifted_centers(1) {
            if (c.distance(q) - 2.0).abs() <= CONTACT_EPS {
                out.push(q);
            }
        }
        out
    }

    /// Unit directions from center `i` toward each sphere it touches.
    pub fn contact_directions(&self, i: usize) -> Vec<Vec3> {
        let c = self.centers[i];
        self.contact_positions(i)
            .iter()
            .map(|&q| (q - c) / 2.0)
            .collect()
    }

    /// Center list as plain text: one sphere per line, three decimal
    /// coordinates separated by spaces.
    pub fn centers_text(&self) -> String {
        let mut s = String::new();
        for c in &self.centers {
            s.push_str(&format!("{} {} {}\n", c.x, c.y, c.z));
        }
        s
    }
}

/// Fraction of space filled: one unit ball per center over the period
/// cell's volume.
pub fn packing_density(region: &PackingRegion) -> Result<f64> {
    let vol = region.cell_volume();
    if vol <= 0.0 || !vol.is_finite() {
        return Err(GeomError::domain("degenerate period vectors"));
    }
    Ok(region.centers.len() as f64 * (4.0 * PI / 3.0) / vol)
}

/// Number of touching neighbors of every sphere (periodic images count).
pub fn contact_graph(region: &PackingRegion) -> Vec<usize> {
    (0..region.centers.len())
        .map(|i| region.contact_positions(i).len())
        .collect()
}

/// Splits the contact set of a touching neighbor of sphere `center` into:
/// the center itself, neighbors it shares with the center, and the rest.
/// Returned as (shared_with_center, outer).
pub fn periphery_structure(
    region: &PackingRegion,
    center: usize,
    neighbor: usize,
) -> Result<(usize, usize)> {
    let n = region.centers.len();
    if center >= n || neighbor >= n {
        return Err(GeomError::domain("sphere index out of range"));
    }
    let c_pos = region.centers[center];
    // pick the neighbor image actually in contact with the center
    let images = region.shifted_centers(1);
    let n_pos = images
        .iter()
        .filter(|&&(idx, _)| idx == neighbor)
        .map(|&(_, q)| q)
        .find(|&q| (c_pos.distance(q) - 2.0).abs() <= CONTACT_EPS)
        .ok_or_else(|| {
            GeomError::domain(format!(
                "spheres {center} and {neighbor} are not in contact"
            ))
        })?;
    // the neighbor image may sit outside the base cell, so scan a wider
    // shift range for its own contacts
    let wide = region.shifted_centers(2);
    let mut is_center = 0usize;
    let mut shared = 0usize;
    let mut outer = 0usize;
    for &(_, q) in &wide {
        let d = n_pos.distance(q);
        if (d - 2.0).abs() > CONTACT_EPS {
            continue;
        }
        if q.distance(c_pos) <= CONTACT_EPS {
            is_center += 1;
        } else if (q.distance(c_pos) - 2.0).abs() <= CONTACT_EPS {
            shared += 1;
        } else {
            outer += 1;
        }
    }
    if is_center != 1 {
        return Err(GeomError::numeric(format!(
            "expected the center once among the neighbor's contacts, found {is_center}"
        )));
    }
    Ok((shared, outer))
}

/// All valid cyclic sequences of the given length, deduplicated by cyclic
/// rotation (smallest rotation kept).
pub fn cyclic_sequences(len: usize) -> Vec<StackingSequence> {
    let mut found: Vec<Vec<u8>> = Vec::new();
    let mut current = vec![0u8; len];
    fn rec(pos: usize, len: usize, current: &mut Vec<u8>, found: &mut Vec<Vec<u8>>) {
        if pos == len {
            if current[len - 1] != current[0] {
                // smallest rotation as canonical form
                let canon = (0..len)
                    .map(|r| {
                        let mut rot = current[r..].to_vec();
                        rot.extend_from_slice(&current[..r]);
                        rot
                    })
                    .min()
                    .unwrap();
                if canon == *current {
                    found.push(current.clone());
                }
            }
            return;
        }
        for letter in 0..3u8 {
            if pos > 0 && current[pos - 1] == letter {
                continue;
            }
            current[pos] = letter;
            rec(pos + 1, len, current, found);
        }
    }
    rec(0, len, &mut current, &mut found);
    found
        .into_iter()
        .map(|letters| StackingSequence { letters })
        .collect()
}
