//! Reference constructions that follow the definitions literally: scan a
//! bounding box with the circle predicate, build discs row by row, and find
//! interior voxels by flood fill. They share nothing with the interval-based
//! constructions except [`on_digital_circle`].

use std::collections::VecDeque;

use crate::lattice::{on_digital_circle, Pixel, Voxel};
use crate::set::{PixelSet, VoxelSet};

/// `C(r)` by scanning `[-r-1, r+1]^2` with the predicate.
pub fn circle(r: u32) -> PixelSet {
    let b = i64::from(r) + 1;
    let mut out = Vec::new();
    for a in -b..=b {
        for c in -b..=b {
            if on_digital_circle(r, a, c) {
                out.push(Pixel::new(a, c));
            }
        }
    }
    PixelSet::from_unsorted(out)
}

/// `D(r)`: every pixel `(i, j_c)` with `i` between `0` and `i_c` inclusive for
/// some circle pixel `(i_c, j_c)`.
pub fn disc(r: u32) -> PixelSet {
    let c = circle(r);
    let b = i64::from(r) + 1;
    let mut out = Vec::new();
    for p in c.iter() {
        for i in -b..=b {
            if p.a.min(0) <= i && i <= p.a.max(0) {
                out.push(Pixel::new(i, p.b));
            }
        }
    }
    PixelSet::from_unsorted(out)
}

/// `D(r)` minus every circle of radius `0..=r`.
pub fn disc_absentees(r: u32) -> PixelSet {
    let mut covered = PixelSet::new();
    for s in 0..=r {
        covered = covered.union(&circle(s));
    }
    disc(r).difference(&covered)
}

/// First-quadrant pixels of `C(r)` sorted by abscissa ascending, ordinate descending.
pub fn generatrix(r: u32) -> Vec<Pixel> {
    let mut pts: Vec<Pixel> = circle(r).iter().copied().filter(|p| p.a >= 0 && p.b >= 0).collect();
    pts.sort_by_key(|p| (p.a, -p.b));
    pts
}

/// Upper-hemisphere absentees straight from the definition: for consecutive
/// generatrix points `(i-1, j')` and `(i, j)`, the voxels of plane `y = j` that
/// are inside `C(i)` (in the disc, off the circle) and outside `D(i-1)`.
pub fn hemisphere_absentees(r: u32) -> VoxelSet {
    let g = generatrix(r);
    let mut out = Vec::new();
    for w in g.windows(2) {
        let (p, q) = (w[0], w[1]);
        if q.a != p.a + 1 {
            continue;
        }
        let inner = disc(p.a as u32);
        let outer_ring = circle(q.a as u32);
        for px in disc(q.a as u32).iter() {
            if !outer_ring.contains(px) && !inner.contains(px) {
                out.push(Voxel::new(px.a, q.b, px.b));
            }
        }
    }
    VoxelSet::from_unsorted(out)
}

/// Voxels of the box `[-bound, bound]^3` not reachable from the box boundary
/// through 6-connected steps that avoid `surface`, together with `surface`
/// itself. `surface` must lie strictly inside the box.
pub fn fill_enclosed(surface: &VoxelSet, bound: i64) -> VoxelSet {
    let n = (2 * bound + 1) as usize;
    let idx = |i: i64, j: i64, k: i64| -> usize {
        (((i + bound) as usize * n) + (j + bound) as usize) * n + (k + bound) as usize
    };
    // 0 unknown, 1 wall, 2 outside
    let mut state = vec![0u8; n * n * n];
    for v in surface.iter() {
        debug_assert!(v.i.abs() < bound && v.j.abs() < bound && v.k.abs() < bound);
        state[idx(v.i, v.j, v.k)] = 1;
    }
    let mut queue = VecDeque::new();
    let start = (-bound, -bound, -bound);
    state[idx(start.0, start.1, start.2)] = 2;
    queue.push_back(start);
    const STEPS: [(i64, i64, i64); 6] = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)];
    while let Some((i, j, k)) = queue.pop_front() {
        for (di, dj, dk) in STEPS {
            let (a, b, c) = (i + di, j + dj, k + dk);
            if a.abs() > bound || b.abs() > bound || c.abs() > bound {
                continue;
            }
            let s = &mut state[idx(a, b, c)];
            if *s == 0 {
                *s = 2;
                queue.push_back((a, b, c));
            }
        }
    }
    let mut out = Vec::new();
    for i in -bound..=bound {
        for j in -bound..=bound {
            for k in -bound..=bound {
                if state[idx(i, j, k)] != 2 {
                    out.push(Voxel::new(i, j, k));
                }
            }
        }
    }
    VoxelSet::from_unsorted(out)
}

/// Interior voxels of `surface` that are not on it.
pub fn holes(surface: &VoxelSet, bound: i64) -> VoxelSet {
    fill_enclosed(surface, bound).difference(surface)
}
