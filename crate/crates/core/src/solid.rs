//! Solid spheres covered by concentric complete spheres.
//!
//! Every plane `y = j` of the solid of radius `r` is a digital disc `D(b_j)`,
//! where `b_j` is the largest abscissa of the generatrix of `C(r)` at height
//! `|j|`. The complete spheres of radius `0..=r` cover that disc with some of
//! the rings `C(s)` and some of the gap rings between `C(s-1)` and `C(s)`.
//! What they leave uncovered splits into two species:
//!
//! - whole rings `C(s)` that no sphere places in the plane (absentee circles);
//! - gap rings that no sphere fills in the plane, which stack into vertical
//!   columns over each disc absentee (absentee lines).
//!
//! [`SolidLayers`] records, per plane, which rings and gaps are covered, and
//! everything else in this module is read off it.

use rayon::prelude::*;

use crate::circle::{self, circle_radius_of, disc_absentee_witness, is_disc_absentee};
use crate::error::{Error, Result};
use crate::lattice::{for_each_symmetric, isqrt, symmetric_multiplicity, Pixel, Voxel};
use crate::oracle;
use crate::set::{PixelSet, VoxelSet};
use crate::sphere::{self, generatrix};

/// A vertical stack of octet columns over the disc absentee `(i, k)`,
/// occupying planes `-top..=top`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbsenteeLine {
    pub i: i64,
    pub k: i64,
    pub top: i64,
}

impl AbsenteeLine {
    pub fn voxels(&self) -> impl Iterator<Item = Voxel> + '_ {
        let mut cols = Vec::with_capacity(8);
        for_each_symmetric(self.i.abs(), self.k.abs(), |x, z| cols.push((x, z)));
        (-self.top..=self.top).flat_map(move |j| cols.clone().into_iter().map(move |(x, z)| Voxel::new(x, j, z)))
    }

    pub fn voxel_count(&self) -> u64 {
        symmetric_multiplicity(self.i.abs(), self.k.abs()) * (2 * self.top + 1) as u64
    }
}

/// The ring `C(radius)` in plane `y = plane`, always paired with its mirror in `y = -plane`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbsenteeCircle {
    pub radius: i64,
    pub plane: i64,
}

impl AbsenteeCircle {
    pub fn voxels(&self) -> Vec<Voxel> {
        let ring = circle::circle_pixels(self.radius as u32);
        let mut out = Vec::with_capacity(2 * ring.len());
        for j in planes(self.plane) {
            out.extend(ring.iter().map(|p| Voxel::new(p.a, j, p.b)));
        }
        out
    }

    pub fn voxel_count(&self) -> u64 {
        planes(self.plane).count() as u64 * circle::circle_size(self.radius as u32)
    }
}

fn in_plane(ring: &PixelSet, j: i64) -> impl Iterator<Item = Voxel> + '_ {
    ring.iter().map(move |p| Voxel::new(p.a, j, p.b))
}

fn planes(j: i64) -> impl Iterator<Item = i64> {
    let j = j.abs();
    std::iter::once(j).chain((j != 0).then_some(-j))
}

/// Per-plane coverage of the solid of radius `r` by the complete spheres of
/// radius `0..=r`. Planes are indexed by `|j|`.
#[derive(Debug, Clone)]
pub struct SolidLayers {
    radius: u32,
    outer: Vec<i64>,
    present: Vec<Vec<bool>>,
    filled: Vec<Vec<bool>>,
}

impl SolidLayers {
    pub fn new(r: u32) -> Self {
        let n = r as usize + 1;
        let mut outer = vec![-1i64; n];
        let mut present = vec![vec![false; n]; n];
        let mut filled = vec![vec![false; n]; n];
        for t in 0..=r {
            let g = generatrix(t);
            let pts = g.points();
            for (idx, p) in pts.iter().enumerate() {
                let (s, j) = (p.i as usize, p.j as usize);
                present[j][s] = true;
                if idx > 0 && pts[idx - 1].i + 1 == p.i {
                    filled[j][s] = true;
                }
                if t == r {
                    outer[j] = outer[j].max(p.i);
                }
            }
        }
        SolidLayers { radius: r, outer, present, filled }
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    /// Radius of the disc filling plane `y = j`.
    pub fn outer_radius(&self, j: i64) -> i64 {
        self.outer[j.unsigned_abs() as usize]
    }

    /// Whether some complete sphere places `C(s)` in plane `y = j`.
    pub fn has_ring(&self, s: i64, j: i64) -> bool {
        self.present[j.unsigned_abs() as usize].get(s as usize).copied().unwrap_or(false)
    }

    /// Whether some complete sphere fills the gap between `C(s-1)` and `C(s)` in plane `y = j`.
    pub fn has_gap_filled(&self, s: i64, j: i64) -> bool {
        self.filled[j.unsigned_abs() as usize].get(s as usize).copied().unwrap_or(false)
    }

    fn heights(&self) -> impl Iterator<Item = i64> + '_ {
        let r = i64::from(self.radius);
        -r..=r
    }

    /// Absentee circles with `plane >= 0`.
    pub fn absentee_circles(&self) -> Vec<AbsenteeCircle> {
        let mut out = Vec::new();
        for j in 0..=i64::from(self.radius) {
            for s in 0..=self.outer_radius(j) {
                if !self.has_ring(s, j) {
                    out.push(AbsenteeCircle { radius: s, plane: j });
                }
            }
        }
        out
    }

    /// Uncovered gap rings `(s, j)` with `j >= 0`.
    pub fn open_gaps(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for j in 0..=i64::from(self.radius) {
            for s in 2..=self.outer_radius(j) {
                if !self.has_gap_filled(s, j) {
                    out.push((s, j));
                }
            }
        }
        out
    }

    /// Voxels of the solid: the disc `D(b_j)` in every plane.
    pub fn solid(&self) -> VoxelSet {
        let mut discs = std::collections::HashMap::new();
        let mut out = Vec::new();
        for j in self.heights() {
            let b = self.outer_radius(j);
            let d = discs.entry(b).or_insert_with(|| circle::disc_pixels(b as u32));
            out.extend(d.iter().map(|p| Voxel::new(p.a, j, p.b)));
        }
        VoxelSet::from_unsorted(out)
    }

    /// Union of the complete spheres, read off the per-plane coverage.
    pub fn union(&self) -> VoxelSet {
        let rings: Vec<PixelSet> = (0..=self.radius).map(circle::circle_pixels).collect();
        let gaps: Vec<PixelSet> = (0..=self.radius).map(circle::ring_absentees).collect();
        let mut out = Vec::new();
        for j in self.heights() {
            let row = j.unsigned_abs() as usize;
            for s in 0..=self.radius as usize {
                if self.present[row][s] {
                    out.extend(in_plane(&rings[s], j));
                }
                if self.filled[row][s] {
                    out.extend(in_plane(&gaps[s], j));
                }
            }
        }
        VoxelSet::from_unsorted(out)
    }

    /// Solid absentees, tagged by species.
    pub fn absentees(&self) -> SolidAbsentees {
        let mut circles = Vec::new();
        for c in self.absentee_circles() {
            circles.extend(c.voxels());
        }
        let mut lines = Vec::new();
        for (s, j) in self.open_gaps() {
            let ring = circle::ring_absentees(s as u32);
            for jj in planes(j) {
                lines.extend(ring.iter().map(|p| Voxel::new(p.a, jj, p.b)));
            }
        }
        SolidAbsentees {
            circles: VoxelSet::from_unsorted(circles),
            lines: VoxelSet::from_unsorted(lines),
        }
    }

    /// Streaming counts for this solid.
    pub fn counts(&self) -> SolidCounts {
        let n = self.radius as usize + 1;
        let ring: Vec<u64> = (0..n as u32).map(circle::circle_size).collect();
        let gap: Vec<u64> = (0..n as u32).map(circle::ring_absentee_count).collect();
        let mut c = SolidCounts::default();
        for j in self.heights() {
            let row = j.unsigned_abs() as usize;
            let b = self.outer[row] as usize;
            for s in 0..n {
                let inside = s <= b;
                if self.present[row][s] {
                    c.primitive += ring[s];
                } else if inside {
                    c.circle_voxels += ring[s];
                }
                if self.filled[row][s] {
                    c.primitive += gap[s];
                } else if inside {
                    c.line_voxels += gap[s];
                }
                if inside {
                    c.total += ring[s] + gap[s];
                }
            }
        }
        c
    }
}

/// Exact solid absentees split into the two species. The species are disjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolidAbsentees {
    pub circles: VoxelSet,
    pub lines: VoxelSet,
}

impl SolidAbsentees {
    pub fn all(&self) -> VoxelSet {
        self.circles.union(&self.lines)
    }
}

/// Counts for a solid of one radius; `total` is the completed solid, and
/// `primitive + line_voxels + circle_voxels == total` for a consistent cover.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolidCounts {
    pub primitive: u64,
    pub line_voxels: u64,
    pub circle_voxels: u64,
    pub total: u64,
}

impl SolidCounts {
    pub fn absentee(&self) -> u64 {
        self.line_voxels + self.circle_voxels
    }
}

/// `S_A(r)`: union of the complete spheres of radius `0..=r`.
pub fn union_complete_spheres(r: u32) -> VoxelSet {
    let parts: Vec<VoxelSet> = (0..=r).into_par_iter().map(sphere::complete_sphere).collect();
    VoxelSet::from_unsorted(parts.into_iter().flat_map(VoxelSet::into_vec).collect())
}

/// `SS(r)`: the complete sphere of radius `r` and everything it encloses, by
/// 6-connected flood fill from outside `[-r-1, r+1]^3`.
pub fn complete_solid(r: u32) -> VoxelSet {
    oracle::fill_enclosed(&sphere::complete_sphere(r), i64::from(r) + 1)
}

/// `SS(r)` assembled plane by plane as discs; equal to [`complete_solid`] and
/// usable at radii where a flood fill over the bounding box is too large.
pub fn complete_solid_by_planes(r: u32) -> VoxelSet {
    SolidLayers::new(r).solid()
}

/// All solid absentees: the voxels of the completed solid covered by no
/// complete sphere of radius `0..=r`.
pub fn avs(r: u32) -> VoxelSet {
    SolidLayers::new(r).absentees().all()
}

fn check_absentee(i: i64, k: i64) -> Result<i64> {
    disc_absentee_witness(i, k).ok_or(Error::NotDiscAbsentee { i, k })
}

/// Octet columns over the disc absentee `(i_a, k_a)` for `|j| <= isqrt(r_w) + 1`.
pub fn ab_line(i_a: i64, k_a: i64, r_w: i64) -> Result<VoxelSet> {
    let actual = check_absentee(i_a, k_a)?;
    if actual != r_w {
        return Err(Error::WrongWitness { i: i_a, k: k_a, given: r_w, actual });
    }
    let line = AbsenteeLine { i: i_a, k: k_a, top: isqrt(r_w as u64) as i64 + 1 };
    Ok(line.voxels().collect())
}

/// The ring of radius `radius_c` in planes `y = plane_j` and `y = -plane_j`,
/// where `(radius_c, plane_j)` is a disc absentee of the `xy` plane.
pub fn ab_circle(radius_c: i64, plane_j: i64) -> Result<VoxelSet> {
    check_absentee(radius_c, plane_j)?;
    Ok(VoxelSet::from_unsorted(AbsenteeCircle { radius: radius_c, plane: plane_j }.voxels()))
}

/// Whether the `zx` projection of `v` is a disc absentee with witness `r'` and `|j| <= isqrt(r') + 1`.
pub fn is_absentee_line_voxel(v: Voxel) -> bool {
    match disc_absentee_witness(v.i, v.k) {
        Some(w) => v.j.abs() <= isqrt(w as u64) as i64 + 1,
        None => false,
    }
}

/// Whether `v` lies on a ring `C(r')` of its plane with `(r', |j|)` a disc absentee.
pub fn is_absentee_circle_voxel(v: Voxel) -> bool {
    match circle_radius_of(v.i, v.k) {
        Some(s) => is_disc_absentee(s, v.j),
        None => false,
    }
}

/// Absentee lines and circles generated from the octant-1 disc absentees of the
/// `xy` plane with witness `r' < r`. Each line spans `|j| <= isqrt(r')`.
///
/// This column height reproduces the reference solid absentee counts. It is
/// not the exact absentee set: see [`avs`] for that.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineCircleCover {
    pub lines: Vec<AbsenteeLine>,
    pub circles: Vec<AbsenteeCircle>,
}

impl LineCircleCover {
    pub fn new(r: u32) -> Self {
        let mut lines = Vec::new();
        let mut circles = Vec::new();
        for s in 2..=r {
            let w = i64::from(s) - 1;
            for p in circle::ring_absentees_octant_one(s) {
                lines.push(AbsenteeLine { i: p.a, k: p.b, top: isqrt(w as u64) as i64 });
                circles.push(AbsenteeCircle { radius: p.a, plane: p.b });
                if p.a != p.b {
                    circles.push(AbsenteeCircle { radius: p.b, plane: p.a });
                }
            }
        }
        LineCircleCover { lines, circles }
    }

    pub fn voxels(&self) -> VoxelSet {
        let mut out: Vec<Voxel> = self.lines.iter().flat_map(|l| l.voxels().collect::<Vec<_>>()).collect();
        for c in &self.circles {
            out.extend(c.voxels());
        }
        VoxelSet::from_unsorted(out)
    }

    /// Voxel count without materializing; lines and circles never overlap.
    pub fn voxel_count(&self) -> u64 {
        self.lines.iter().map(AbsenteeLine::voxel_count).sum::<u64>()
            + self.circles.iter().map(AbsenteeCircle::voxel_count).sum::<u64>()
    }

    pub fn line_voxel_count(&self) -> u64 {
        self.lines.iter().map(AbsenteeLine::voxel_count).sum()
    }
}

/// Band test `(2h+1)y + h^2 <= q < (2h+1)y + (h+1)^2` for some `h >= 0` with `y + h >= 1`.
fn in_paraboloid_shell(q: i64, y: i64) -> bool {
    circle::band_of(q, y).is_some()
}

/// Membership in the paraboloidal shells `(2h+1)y + h^2 <= x^2 + z^2 < (2h+1)y + (h+1)^2`
/// holding the absentee circles sourced from octant 1.
pub fn family_f1_contains(v: Voxel) -> Result<bool> {
    if v.j < 0 {
        return Err(Error::Negative(v.j));
    }
    Ok(in_paraboloid_shell(v.i * v.i + v.k * v.k, v.j))
}

/// Membership in the shells `(2h+1)rho + h^2 <= y^2 < (2h+1)rho + (h+1)^2`,
/// `rho = sqrt(x^2 + z^2)`, holding the absentee circles sourced from octant 2.
/// Evaluated on squares; the origin is excluded.
pub fn family_f2_contains(v: Voxel) -> Result<bool> {
    if v.j < 0 {
        return Err(Error::Negative(v.j));
    }
    let rho2 = i128::from(v.i * v.i + v.k * v.k);
    let y2 = i128::from(v.j * v.j);
    if rho2 == 0 && y2 == 0 {
        return Ok(false);
    }
    // (2h+1) rho + c <= y2, exact
    let at_least = |h: i128, c: i128| {
        let d = y2 - c;
        d >= 0 && (2 * h + 1) * (2 * h + 1) * rho2 <= d * d
    };
    if !at_least(0, 0) {
        return Ok(false);
    }
    // largest h with (2h+1) rho + h^2 <= y2; the left side grows with h
    let (mut lo, mut hi) = (0i128, i128::from(v.j.abs()) + 1);
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if at_least(mid, mid * mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let h = lo;
    Ok(!at_least(h, (h + 1) * (h + 1)))
}

/// F1 evaluated at the nominal radius of an absentee circle rather than at its voxels.
pub fn family_f1_contains_circle(c: AbsenteeCircle) -> bool {
    in_paraboloid_shell(c.radius * c.radius, c.plane.abs())
}

/// F2 evaluated at the nominal radius of an absentee circle.
pub fn family_f2_contains_circle(c: AbsenteeCircle) -> bool {
    let y = c.plane.abs();
    y <= c.radius && circle::parabolic_band_index(y, c.radius).is_ok_and(|b| b.is_some())
}

/// Voxels inside `surface` that are not on it, by flood fill over `[-r-1, r+1]^3`.
pub fn holes(surface: &VoxelSet, r: u32) -> VoxelSet {
    oracle::holes(surface, i64::from(r) + 1)
}

/// Octant (1 or 2) of the `xy`-plane disc absentee `(radius, plane)` that an
/// absentee circle sits over, or `None` if that pixel is not a disc absentee.
pub fn circle_source_octant(c: AbsenteeCircle) -> Option<u8> {
    let (x, y) = (c.radius.abs(), c.plane.abs());
    if !is_disc_absentee(x, y) {
        return None;
    }
    Some(if x <= y { 1 } else { 2 })
}

/// The disc absentees of the `zx` plane that carry at least one line voxel.
pub fn line_columns(a: &SolidAbsentees) -> PixelSet {
    a.lines.iter().filter(|v| v.j >= 0).map(|v| Pixel::new(v.i, v.k)).collect()
}
