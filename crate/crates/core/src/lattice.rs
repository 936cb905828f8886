//! Exact integer primitives shared by every construction.
//!
//! All geometric predicates are evaluated on squared, integer-only forms. The
//! half-unit circle test `|m - sqrt(r^2 - n^2)| < 1/2` becomes
//! `(2m - 1)^2 < 4(r^2 - n^2) < (2m + 1)^2`, which never touches floating point.

use crate::error::{Error, Result};
use crate::set::PixelSet;

/// A lattice point of the plane. Axis roles are assigned by the caller:
/// `(i, k)` on the `zx` plane, `(i, j)` on the `xy` plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pixel {
    pub a: i64,
    pub b: i64,
}

impl Pixel {
    pub const fn new(a: i64, b: i64) -> Self {
        Pixel { a, b }
    }
}

/// A lattice point of space; `y` (the `j` coordinate) is the axis of revolution.
///
/// Ordering is lexicographic on `(i, j, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Voxel {
    pub i: i64,
    pub j: i64,
    pub k: i64,
}

impl Voxel {
    pub const fn new(i: i64, j: i64, k: i64) -> Self {
        Voxel { i, j, k }
    }
}

/// Half-open integer interval `[lo, hi)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntegerInterval {
    pub lo: i64,
    pub hi: i64,
}

impl IntegerInterval {
    /// `hi` is clamped up to `lo`, so an inverted pair yields the empty interval.
    pub fn new(lo: i64, hi: i64) -> Self {
        IntegerInterval { lo, hi: hi.max(lo) }
    }

    pub fn contains(&self, n: i64) -> bool {
        self.lo <= n && n < self.hi
    }

    pub fn is_empty(&self) -> bool {
        self.lo == self.hi
    }

    pub fn len(&self) -> i64 {
        self.hi - self.lo
    }

    /// Number of perfect squares `i^2` in the interval with `0 <= i <= cap`.
    pub fn count_squares_up_to(&self, cap: i64) -> i64 {
        match self.square_roots(cap) {
            Some((first, last)) => last - first + 1,
            None => 0,
        }
    }

    /// Smallest and largest `i` in `[0, cap]` with `i^2` in the interval.
    pub fn square_roots(&self, cap: i64) -> Option<(i64, i64)> {
        if self.hi <= 0 || cap < 0 {
            return None;
        }
        let first = ceil_sqrt(self.lo.max(0) as u64) as i64;
        let last = (ceil_sqrt(self.hi as u64) as i64 - 1).min(cap);
        (first <= last).then_some((first, last))
    }
}

/// `floor(sqrt(n))`.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    // Float guess, then fix up; the guess is off by at most a few units for n < 2^64.
    let mut s = (n as f64).sqrt() as u64;
    while s.checked_mul(s).is_none_or(|sq| sq > n) {
        s -= 1;
    }
    while (s + 1).checked_mul(s + 1).is_some_and(|sq| sq <= n) {
        s += 1;
    }
    s
}

/// Smallest `s` with `s^2 >= n`.
pub fn ceil_sqrt(n: u64) -> u64 {
    let s = isqrt(n);
    if s * s == n {
        s
    } else {
        s + 1
    }
}

/// Signed entry point for [`isqrt`]; negative input is rejected.
pub fn isqrt_i64(n: i64) -> Result<i64> {
    if n < 0 {
        return Err(Error::Negative(n));
    }
    Ok(isqrt(n as u64) as i64)
}

/// Signed entry point for [`ceil_sqrt`]; negative input is rejected.
pub fn ceil_sqrt_i64(n: i64) -> Result<i64> {
    if n < 0 {
        return Err(Error::Negative(n));
    }
    Ok(ceil_sqrt(n as u64) as i64)
}

/// Whether `(a, b)` belongs to the digital circle of radius `r` centered at the origin.
pub fn on_digital_circle(r: u32, a: i64, b: i64) -> bool {
    let r = i64::from(r);
    let (a, b) = (a.abs(), b.abs());
    let (m, n) = (a.max(b), a.min(b));
    if n > r {
        return false;
    }
    let d = 4 * (r * r - n * n);
    if m == 0 {
        return d < 1;
    }
    (2 * m - 1) * (2 * m - 1) < d && d < (2 * m + 1) * (2 * m + 1)
}

/// All pixels `(a', b')` with `{|a'|} ∪ {|b'|} = {a, b}`, deduplicated.
pub fn symmetric_octet(a: i64, b: i64) -> Result<PixelSet> {
    if a < 0 {
        return Err(Error::Negative(a));
    }
    if b < 0 {
        return Err(Error::Negative(b));
    }
    let mut out = Vec::with_capacity(8);
    for_each_symmetric(a, b, |x, y| out.push(Pixel::new(x, y)));
    Ok(PixelSet::from_unsorted(out))
}

/// Calls `f` once for each distinct member of the symmetric octet of `(a, b)`,
/// with `a, b >= 0`.
pub(crate) fn for_each_symmetric(a: i64, b: i64, mut f: impl FnMut(i64, i64)) {
    debug_assert!(a >= 0 && b >= 0);
    let mut emit_signs = |x: i64, y: i64| match (x, y) {
        (0, 0) => f(0, 0),
        (0, _) => {
            f(0, y);
            f(0, -y);
        }
        (_, 0) => {
            f(x, 0);
            f(-x, 0);
        }
        _ => {
            f(x, y);
            f(x, -y);
            f(-x, y);
            f(-x, -y);
        }
    };
    emit_signs(a, b);
    if a != b {
        emit_signs(b, a);
    }
}

/// Size of the symmetric octet of `(a, b)`, `a, b >= 0`.
pub(crate) fn symmetric_multiplicity(a: i64, b: i64) -> u64 {
    match (a == 0, b == 0, a == b) {
        (true, true, _) => 1,
        (_, _, true) => 4,
        (true, false, _) | (false, true, _) => 4,
        _ => 8,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(0), 0);
        assert_eq!(isqrt(16), 4);
        assert_eq!(isqrt(44), 6);
        assert_eq!(isqrt(u64::MAX), u32::MAX as u64);
    }

    #[test]
    fn ceil_sqrt_examples() {
        assert_eq!(ceil_sqrt(0), 0);
        assert_eq!(ceil_sqrt(10), 4);
        assert_eq!(ceil_sqrt(25), 5);
    }

    #[test]
    fn negative_inputs_rejected() {
        assert_eq!(isqrt_i64(-1), Err(Error::Negative(-1)));
        assert_eq!(ceil_sqrt_i64(-7), Err(Error::Negative(-7)));
        assert!(symmetric_octet(-1, 2).is_err());
        assert!(symmetric_octet(1, -2).is_err());
    }

    #[test]
    fn isqrt_near_squares() {
        for s in (0u64..2_000).chain(999_000..1_001_000) {
            let n = s * s;
            assert_eq!(isqrt(n), s);
            if s > 0 {
                assert_eq!(isqrt(n - 1), s - 1);
            }
            if s > 1 {
                assert_eq!(ceil_sqrt(n - 1), s);
            }
            assert_eq!(ceil_sqrt(n + 1), s + 1);
        }
    }

    #[test]
    fn circle_predicate_examples() {
        assert!(on_digital_circle(0, 0, 0));
        assert!(on_digital_circle(2, 2, 1));
        assert!(!on_digital_circle(1, 1, 1));
        assert!(on_digital_circle(10, 4, 9));
        assert!(!on_digital_circle(10, 2, 4));
    }

    #[test]
    fn octet_examples() {
        let s = symmetric_octet(1, 2).unwrap();
        assert_eq!(s.len(), 8);
        for p in [(1, 2), (-1, 2), (1, -2), (-1, -2), (2, 1), (-2, 1), (2, -1), (-2, -1)] {
            assert!(s.contains(&Pixel::new(p.0, p.1)));
        }
        assert_eq!(
            symmetric_octet(1, 1).unwrap().into_vec(),
            vec![Pixel::new(-1, -1), Pixel::new(-1, 1), Pixel::new(1, -1), Pixel::new(1, 1)]
        );
        assert_eq!(symmetric_octet(0, 0).unwrap().into_vec(), vec![Pixel::new(0, 0)]);
        assert_eq!(symmetric_octet(0, 3).unwrap().len(), 4);
    }

    #[test]
    fn interval_square_roots() {
        let iv = IntegerInterval::new(10, 28);
        assert_eq!(iv.square_roots(100), Some((4, 5)));
        assert_eq!(iv.square_roots(4), Some((4, 4)));
        assert_eq!(IntegerInterval::new(-4, 4).square_roots(10), Some((0, 1)));
        assert_eq!(IntegerInterval::new(5, 9).square_roots(10), None);
        assert!(IntegerInterval::new(3, 1).is_empty());
    }
}
