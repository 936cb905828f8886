use std::fmt;

use crate::lattice::{Pixel, Voxel};

/// A deduplicated set of lattice points kept in ascending lexicographic order.
///
/// Every set-returning operation in the crate hands back this canonical form,
/// so two sets are equal exactly when their member slices are equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PointSet<T> {
    members: Vec<T>,
}

pub type PixelSet = PointSet<Pixel>;
pub type VoxelSet = PointSet<Voxel>;

impl<T: Ord> PointSet<T> {
    pub fn new() -> Self {
        PointSet { members: Vec::new() }
    }

    /// Sorts and deduplicates `points`.
    pub fn from_unsorted(mut points: Vec<T>) -> Self {
        points.sort_unstable();
        points.dedup();
        PointSet { members: points }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &T) -> bool {
        self.members.binary_search(p).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.members.iter()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.members
    }

    pub fn into_vec(self) -> Vec<T> {
        self.members
    }

    pub fn union(&self, other: &Self) -> Self
    where
        T: Clone,
    {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.members.iter().peekable(), other.members.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => match x.cmp(y) {
                    std::cmp::Ordering::Less => out.push(a.next().unwrap().clone()),
                    std::cmp::Ordering::Greater => out.push(b.next().unwrap().clone()),
                    std::cmp::Ordering::Equal => {
                        out.push(a.next().unwrap().clone());
                        b.next();
                    }
                },
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap().clone()),
                (None, None) => break,
            }
        }
        PointSet { members: out }
    }

    pub fn difference(&self, other: &Self) -> Self
    where
        T: Clone,
    {
        PointSet {
            members: self.members.iter().filter(|p| !other.contains(p)).cloned().collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self
    where
        T: Clone,
    {
        PointSet {
            members: self.members.iter().filter(|p| other.contains(p)).cloned().collect(),
        }
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        small.iter().all(|p| !large.contains(p))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.iter().all(|p| other.contains(p))
    }
}

impl<T: Ord> FromIterator<T> for PointSet<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        PointSet::from_unsorted(iter.into_iter().collect())
    }
}

impl<'a, T> IntoIterator for &'a PointSet<T> {
    type Item = &'a T;
    type IntoIter = std::slice::Iter<'a, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl<T: fmt::Debug> fmt::Debug for PointSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.iter()).finish()
    }
}

impl VoxelSet {
    /// Reflection `j -> -j` through the `zx` plane.
    pub fn mirrored(&self) -> VoxelSet {
        self.iter().map(|v| Voxel::new(v.i, -v.j, v.k)).collect()
    }

    /// Projection onto the `zx` plane as pixels `(i, k)`.
    pub fn project_zx(&self) -> PixelSet {
        self.iter().map(|v| Pixel::new(v.i, v.k)).collect()
    }
}
