//! Digital circles and discs, disc absentees, and the interval characterizations that the
//! 3D constructions reduce to.
//!
//! For an octant-1 pixel `(i, k)` (`0 <= i <= k`) of the circle of radius `r'`,
//! `i^2` lies in the run interval `[r'^2 - k^2 - k, r'^2 - k^2 + k)`. The gap
//! interval `[r'^2 - k^2 + k, (r'+1)^2 - k^2 - k)` between one circle's run and
//! the next circle's run holds exactly the disc absentees of that row. Writing
//! `r' = k + h`, the gap bounds become the parabolas `(2h+1)k + h^2` and
//! `(2h+1)k + (h+1)^2`.

use crate::error::{Error, Result};
use crate::lattice::{ceil_sqrt, for_each_symmetric, isqrt, on_digital_circle, symmetric_multiplicity};
use crate::lattice::{IntegerInterval, Pixel};
use crate::set::PixelSet;

/// Run index `h` of an octant-1 row at ordinate `k`; the row belongs to radius `k + h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RunIndex {
    pub h: i64,
    pub k: i64,
}

impl RunIndex {
    /// The radius `r' = k + h` whose gap holds the pixel.
    pub fn witness_radius(&self) -> i64 {
        self.k + self.h
    }
}

fn check_ordinate(r_prime: i64, k: i64) -> Result<()> {
    if r_prime < 0 {
        return Err(Error::Negative(r_prime));
    }
    if !(0..=r_prime).contains(&k) {
        return Err(Error::OrdinateOutOfRange { radius: r_prime, k });
    }
    Ok(())
}

pub(crate) fn run_interval_unchecked(r_prime: i64, k: i64) -> IntegerInterval {
    let base = r_prime * r_prime - k * k;
    IntegerInterval::new(base - k, base + k)
}

pub(crate) fn absentee_interval_unchecked(r_prime: i64, k: i64) -> IntegerInterval {
    IntegerInterval::new(
        r_prime * r_prime - k * k + k,
        (r_prime + 1) * (r_prime + 1) - k * k - k,
    )
}

/// Interval of squared abscissae of the octant-1 pixels of `C(r')` at ordinate `k`.
///
/// Bounds are returned as computed; the lower bound may be negative.
pub fn run_interval(r_prime: i64, k: i64) -> Result<IntegerInterval> {
    check_ordinate(r_prime, k)?;
    Ok(run_interval_unchecked(r_prime, k))
}

/// Interval of squared abscissae lying strictly between `C(r')` and `C(r'+1)` at ordinate `k`.
pub fn absentee_interval(r_prime: i64, k: i64) -> Result<IntegerInterval> {
    check_ordinate(r_prime, k)?;
    Ok(absentee_interval_unchecked(r_prime, k))
}

/// Octant-1 pixels `(i, k)`, `0 <= i <= k`, of the digital circle of radius `r`,
/// ordered by `k` descending and then `i` ascending (the generatrix order).
pub fn octant_one(r: u32) -> Vec<Pixel> {
    let r = i64::from(r);
    if r == 0 {
        return vec![Pixel::new(0, 0)];
    }
    let mut out = Vec::new();
    for k in (0..=r).rev() {
        let run = run_interval_unchecked(r, k);
        let first = ceil_sqrt(run.lo.max(0) as u64) as i64;
        if first > k {
            break;
        }
        if let Some((first, last)) = run.square_roots(k) {
            out.extend((first..=last).map(|i| Pixel::new(i, k)));
        }
    }
    out
}

/// The digital circle `C(r)`.
pub fn circle_pixels(r: u32) -> PixelSet {
    let mut out = Vec::new();
    for p in octant_one(r) {
        for_each_symmetric(p.a, p.b, |x, y| out.push(Pixel::new(x, y)));
    }
    PixelSet::from_unsorted(out)
}

/// `|C(r)|` without materializing the circle.
pub fn circle_size(r: u32) -> u64 {
    octant_one(r).iter().map(|p| symmetric_multiplicity(p.a, p.b)).sum()
}

/// Largest `|a|` over the pixels of `C(r)` in each row `b = 0..=r`.
fn row_extents(r: u32) -> Vec<i64> {
    let r = r as usize;
    let mut ext = vec![-1i64; r + 1];
    for p in octant_one(r as u32) {
        // (i, k) contributes extent i to row k and extent k to row i.
        let (i, k) = (p.a, p.b);
        ext[k as usize] = ext[k as usize].max(i);
        ext[i as usize] = ext[i as usize].max(k);
    }
    ext
}

/// The digital disc `D(r)`: the circle together with the pixels between each
/// circle pixel and the `b` axis of its row.
pub fn disc_pixels(r: u32) -> PixelSet {
    let ext = row_extents(r);
    let mut out = Vec::new();
    for (row, &m) in ext.iter().enumerate() {
        let b = row as i64;
        for a in -m..=m {
            out.push(Pixel::new(a, b));
            if b != 0 {
                out.push(Pixel::new(a, -b));
            }
        }
    }
    PixelSet::from_unsorted(out)
}

/// `|D(r)|` without materializing the disc.
pub fn disc_size(r: u32) -> u64 {
    row_extents(r)
        .iter()
        .enumerate()
        .map(|(row, &m)| (2 * m + 1) as u64 * if row == 0 { 1 } else { 2 })
        .sum()
}

/// `U(r)`: the union of the circles of radius `0..=r`.
pub fn union_circles(r: u32) -> PixelSet {
    let mut out = Vec::new();
    for s in 0..=r {
        out.extend(circle_pixels(s).into_vec());
    }
    PixelSet::from_unsorted(out)
}

/// Octant-1 disc absentees lying between `C(s-1)` and `C(s)`, found by walking
/// the rows of `C(s-1)` and testing the first pixel past each run against the
/// gap interval. Each row holds at most one such pixel.
pub fn ring_absentees_octant_one(s: u32) -> Vec<Pixel> {
    if s < 2 {
        return Vec::new();
    }
    let w = i64::from(s) - 1;
    let mut out = Vec::new();
    for k in (0..=w).rev() {
        let gap = absentee_interval_unchecked(w, k);
        let i = ceil_sqrt(gap.lo as u64) as i64;
        if i > k {
            break;
        }
        if gap.contains(i * i) {
            out.push(Pixel::new(i, k));
        }
    }
    out
}

/// All disc absentees between `C(s-1)` and `C(s)`.
pub fn ring_absentees(s: u32) -> PixelSet {
    let mut out = Vec::new();
    for p in ring_absentees_octant_one(s) {
        for_each_symmetric(p.a, p.b, |x, y| out.push(Pixel::new(x, y)));
    }
    PixelSet::from_unsorted(out)
}

pub fn ring_absentee_count(s: u32) -> u64 {
    ring_absentees_octant_one(s)
        .iter()
        .map(|p| symmetric_multiplicity(p.a, p.b))
        .sum()
}

/// `A_D(r) = D(r) \ U(r)`, assembled ring by ring from the gap intervals.
pub fn disc_absentees(r: u32) -> PixelSet {
    let mut out = Vec::new();
    for s in 2..=r {
        out.extend(ring_absentees(s).into_vec());
    }
    PixelSet::from_unsorted(out)
}

/// `|A_D(r)|`.
pub fn disc_absentee_count(r: u32) -> u64 {
    (2..=r).map(ring_absentee_count).sum()
}

fn octant_one_representative(i: i64, k: i64) -> (i64, i64) {
    let (a, b) = (i.abs(), k.abs());
    (a.min(b), a.max(b))
}

/// Radius `r' >= 1` such that `(i, k)` lies strictly between `C(r')` and
/// `C(r'+1)`, if the pixel is a disc absentee at all.
///
/// Gap intervals for distinct `r'` at a fixed row are disjoint and ordered, and
/// any hit satisfies `r'^2 <= i^2 + k^2 < (r'+1)^2 + ...`, so only the radii
/// adjacent to `isqrt(i^2 + k^2)` need checking.
pub fn disc_absentee_witness(i: i64, k: i64) -> Option<i64> {
    let (a, b) = octant_one_representative(i, k);
    let s = isqrt((a * a + b * b) as u64) as i64;
    ((s - 1).max(1)..=s + 1)
        .filter(|&w| w >= b)
        .find(|&w| absentee_interval_unchecked(w, b).contains(a * a))
}

/// Whether `(i, k)` is a disc absentee, i.e. lies between two consecutive circles
/// without belonging to either.
pub fn is_disc_absentee(i: i64, k: i64) -> bool {
    disc_absentee_witness(i, k).is_some()
}

/// Radius of the digital circle through `(a, b)`, if any. Circles of distinct
/// radii are disjoint, so the answer is unique.
pub fn circle_radius_of(a: i64, b: i64) -> Option<i64> {
    let q = isqrt((a * a + b * b) as u64) as i64;
    ((q - 1).max(0)..=q + 1).find(|&s| on_digital_circle(s as u32, a, b))
}

/// The parabolic band `h` holding the octant-1 pixel `(i, k)`:
/// `(2h+1)k + h^2 <= i^2 < (2h+1)k + (h+1)^2`, with `k + h >= 1`.
pub fn parabolic_band_index(i: i64, k: i64) -> Result<Option<RunIndex>> {
    if !(0 <= i && i <= k) {
        return Err(Error::NotOctantOne { i, k });
    }
    Ok(band_of(i * i, k))
}

/// Band search on a squared abscissa `q` at ordinate `k`.
pub(crate) fn band_of(q: i64, k: i64) -> Option<RunIndex> {
    if q < k {
        return None;
    }
    let h = isqrt((q + k * k - k) as u64) as i64 - k;
    let upper = (2 * h + 1) * k + (h + 1) * (h + 1);
    (q < upper && k + h >= 1).then_some(RunIndex { h, k })
}
