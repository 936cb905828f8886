//! Spheres of revolution swept from the first-quadrant arc of a digital circle,
//! their absentees, and the completed (hole-free) sphere.
//!
//! The swept circle radius changes by at most one between consecutive generatrix
//! points. Whenever it grows from `i` to `i + 1`, the pixels strictly between
//! `C(i)` and `C(i+1)` are missed; they are placed in the plane of the larger
//! circle, which is the plane `y = j` of the generatrix point with abscissa `i + 1`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::circle::{self, disc_absentee_witness};
use crate::error::{Error, Result};
use crate::lattice::{on_digital_circle, Pixel, Voxel};
use crate::set::{PixelSet, VoxelSet};

/// First-quadrant arc of `C(r)` in the `xy` plane, stored as voxels `(i, j, 0)`
/// from `(0, r, 0)` to `(r, 0, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generatrix {
    radius: u32,
    points: Vec<Voxel>,
}

impl Generatrix {
    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn points(&self) -> &[Voxel] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Indices `t` whose step to `t + 1` grows the swept radius by one.
    pub fn radius_steps(&self) -> impl Iterator<Item = usize> + '_ {
        self.points
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[1].i == w[0].i + 1)
            .map(|(t, _)| t)
    }
}

/// The generatrix of radius `r`.
pub fn generatrix(r: u32) -> Generatrix {
    let oct = circle::octant_one(r);
    let mut points: Vec<Voxel> = oct.iter().map(|p| Voxel::new(p.a, p.b, 0)).collect();
    // Octant 2 is the swap of octant 1, walked backwards; the diagonal is shared.
    points.extend(oct.iter().rev().filter(|p| p.a != p.b).map(|p| Voxel::new(p.b, p.a, 0)));
    Generatrix { radius: r, points }
}

fn in_plane(ring: &PixelSet, j: i64) -> impl Iterator<Item = Voxel> + '_ {
    ring.iter().map(move |p| Voxel::new(p.a, j, p.b))
}

/// `H(r)`: one circle of radius `i` in plane `y = j` per generatrix point `(i, j)`.
pub fn sweep_hemisphere(r: u32) -> VoxelSet {
    let g = generatrix(r);
    let mut rings: HashMap<i64, PixelSet> = HashMap::new();
    let mut out = Vec::new();
    for p in g.points() {
        let ring = rings.entry(p.i).or_insert_with(|| circle::circle_pixels(p.i as u32));
        out.extend(in_plane(ring, p.j));
    }
    VoxelSet::from_unsorted(out)
}

/// `S_r(r)`: the hemisphere and its reflection through the `zx` plane.
pub fn sphere(r: u32) -> VoxelSet {
    let h = sweep_hemisphere(r);
    h.union(&h.mirrored())
}

/// Absentee voxels filled at generatrix step `t -> t + 1` (0-based), which must
/// grow the swept radius by one. The voxels are the disc absentees between the
/// two circles, placed in the plane of the larger one.
pub fn acc(g: &Generatrix, t: usize) -> Result<VoxelSet> {
    let pts = g.points();
    if t + 1 >= pts.len() {
        return Err(Error::StepOutOfRange { t, len: pts.len() });
    }
    let (p, q) = (pts[t], pts[t + 1]);
    if q.i != p.i + 1 {
        return Err(Error::NotRadiusStep { t });
    }
    let ring = circle::ring_absentees(q.i as u32);
    Ok(in_plane(&ring, q.j).collect())
}

/// Absentees of the upper hemisphere, one [`acc`] call per radius step.
pub fn avh(r: u32) -> VoxelSet {
    let g = generatrix(r);
    let steps: Vec<usize> = g.radius_steps().collect();
    let parts: Vec<VoxelSet> = steps
        .par_iter()
        .map(|&t| acc(&g, t).expect("radius step"))
        .collect();
    VoxelSet::from_unsorted(parts.into_iter().flat_map(VoxelSet::into_vec).collect())
}

/// `A_S(r)`: absentees of both hemispheres.
pub fn sphere_absentees(r: u32) -> VoxelSet {
    let a = avh(r);
    a.union(&a.mirrored())
}

/// `Sp(r)`: the sphere together with all of its absentees.
pub fn complete_sphere(r: u32) -> VoxelSet {
    sphere(r).union(&sphere_absentees(r))
}

/// Whether `v` is an absentee of the sphere of radius `r`. Both hemispheres are
/// handled through `|j|`.
///
/// The zx projection must be a disc absentee between `C(r')` and `C(r'+1)`, and
/// the generatrix must step from abscissa `r'` onto `(r'+1, |j|)`. The second
/// condition says `(r'+1, |j|)` is on the arc and is the lowest arc point with
/// that abscissa.
pub fn is_sphere_absentee(v: Voxel, r: u32) -> bool {
    let j = v.j.abs();
    if j > i64::from(r) {
        return false;
    }
    match disc_absentee_witness(v.i, v.k) {
        Some(w) => on_digital_circle(r, w + 1, j) && !on_digital_circle(r, w + 1, j + 1),
        None => false,
    }
}

/// The interval form of the absentee test: the projection is a disc absentee
/// with witness `r'` and `r'^2` lies in the run interval of `C(r)` at ordinate `|j|`.
///
/// This places the absentee in the plane of the smaller circle. The two forms
/// agree whenever the arc point `(r', |j|)` is immediately followed by
/// `(r'+1, |j|)`, i.e. on horizontal steps; on diagonal steps they differ by one plane.
pub fn interval_form_absentee(v: Voxel, r: u32) -> bool {
    let j = v.j.abs();
    if j > i64::from(r) {
        return false;
    }
    match disc_absentee_witness(v.i, v.k) {
        Some(w) => circle::run_interval_unchecked(i64::from(r), j).contains(w * w),
        None => false,
    }
}

/// Membership in the family of translated parabolic bands, for an octant-1
/// voxel `0 <= i <= k`. The bands do not depend on `j`.
pub fn family_f_contains(v: Voxel) -> Result<bool> {
    circle::parabolic_band_index(v.i, v.k).map(|b| b.is_some())
}

/// Count of `|S_r(r)|` without materializing the sphere.
pub fn sphere_size(r: u32) -> u64 {
    let g = generatrix(r);
    let mut sizes: HashMap<i64, u64> = HashMap::new();
    let hemi: u64 = g
        .points()
        .iter()
        .map(|p| *sizes.entry(p.i).or_insert_with(|| circle::circle_size(p.i as u32)))
        .sum();
    2 * hemi - circle::circle_size(r)
}

/// Count of `|A_S(r)|`; no absentee lies on the equator, so this is twice the hemisphere count.
pub fn sphere_absentee_count(r: u32) -> u64 {
    let g = generatrix(r);
    let pts = g.points();
    g.radius_steps()
        .map(|t| {
            let q = pts[t + 1];
            let n = circle::ring_absentee_count(q.i as u32);
            if q.j == 0 {
                n
            } else {
                2 * n
            }
        })
        .sum()
}

/// Projection of a set of voxels onto the pixels `(i, k)` with the plane index dropped.
pub fn zx_projection(voxels: &VoxelSet) -> PixelSet {
    voxels.project_zx()
}

/// Whether a pixel set equals its own 8-fold symmetric closure.
pub fn is_octet_closed(set: &PixelSet) -> bool {
    set.iter().all(|p| {
        [(p.b, p.a), (-p.a, p.b), (p.a, -p.b)]
            .into_iter()
            .all(|(a, b)| set.contains(&Pixel::new(a, b)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(g: &Generatrix) -> Vec<(i64, i64)> {
        g.points().iter().map(|v| (v.i, v.j)).collect()
    }

    #[test]
    fn generatrix_examples() {
        assert_eq!(pts(&generatrix(0)), vec![(0, 0)]);
        assert_eq!(pts(&generatrix(1)), vec![(0, 1), (1, 0)]);
        let g = generatrix(10);
        assert_eq!(&pts(&g)[..5], &[(0, 10), (1, 10), (2, 10), (3, 10), (4, 9)]);
        assert_eq!(g.points().last(), Some(&Voxel::new(10, 0, 0)));
        for w in g.points().windows(2) {
            let (di, dj) = (w[1].i - w[0].i, w[1].j - w[0].j);
            assert!(matches!((di, dj), (1, 0) | (1, -1) | (0, -1)), "{w:?}");
        }
    }

    #[test]
    fn sweep_examples() {
        assert_eq!(sweep_hemisphere(0).len(), 1);
        assert_eq!(sweep_hemisphere(1).len(), 5);
        assert_eq!(sweep_hemisphere(10).len(), 529);
        assert_eq!(2 * 529 - circle::circle_size(10), 1002);
        assert_eq!(sphere(1).len(), 6);
        assert_eq!(sphere(10).len(), 1002);
    }

    #[test]
    fn acc_worked_example() {
        let g = generatrix(10);
        let t = g.radius_steps().find(|&t| g.points()[t].i == 4).unwrap();
        let a = acc(&g, t).unwrap();
        assert_eq!(g.points()[t + 1], Voxel::new(5, 9, 0));
        assert!(a.contains(&Voxel::new(2, 9, 4)));
        assert!(!a.contains(&Voxel::new(3, 9, 4)));
        assert_eq!(a.len(), 8);
        let t0 = g.radius_steps().next().unwrap();
        assert!(acc(&g, t0).unwrap().is_empty());
    }

    #[test]
    fn acc_rejects_bad_steps() {
        let g = generatrix(10);
        let vertical = (0..g.len() - 1).find(|&t| g.points()[t + 1].i == g.points()[t].i).unwrap();
        assert_eq!(acc(&g, vertical), Err(Error::NotRadiusStep { t: vertical }));
        assert!(matches!(acc(&g, g.len() - 1), Err(Error::StepOutOfRange { .. })));
    }

    #[test]
    fn avh_counts() {
        assert!(avh(1).is_empty());
        assert_eq!(avh(2).len(), 4);
        assert_eq!(avh(10).len(), 40);
    }

    #[test]
    fn complete_sphere_examples() {
        assert_eq!(complete_sphere(0).len(), 1);
        assert_eq!(complete_sphere(2).len(), 54);
        assert_eq!(complete_sphere(10).len(), 1082);
    }

    #[test]
    fn sphere_absentee_examples() {
        assert!(is_sphere_absentee(Voxel::new(2, 9, 4), 10));
        assert!(!is_sphere_absentee(Voxel::new(3, 9, 4), 10));
        assert!(is_sphere_absentee(Voxel::new(2, -9, 4), 10));
        for r in 0..12 {
            assert!(!is_sphere_absentee(Voxel::new(0, i64::from(r), 0), r));
        }
        assert!(interval_form_absentee(Voxel::new(2, 9, 4), 10));
        assert!(!interval_form_absentee(Voxel::new(3, 9, 4), 10));
    }

    #[test]
    fn family_examples() {
        assert!(family_f_contains(Voxel::new(1, 7, 1)).unwrap());
        assert!(family_f_contains(Voxel::new(2, 9, 4)).unwrap());
        assert!(!family_f_contains(Voxel::new(0, 3, 5)).unwrap());
        assert!(family_f_contains(Voxel::new(4, 0, 2)).is_err());
    }

    #[test]
    fn streaming_counts() {
        for r in 0..60 {
            assert_eq!(sphere_size(r), sphere(r).len() as u64, "r={r}");
            assert_eq!(sphere_absentee_count(r), sphere_absentees(r).len() as u64, "r={r}");
        }
    }
}
