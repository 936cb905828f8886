//! Count rows, absentee ratios, the closed-form disc absentee count and
//! log-log growth fits.

use std::fmt;

use rayon::prelude::*;

use crate::circle;
use crate::error::{Error, Result};
use crate::lattice::ceil_sqrt;
use crate::solid::{LineCircleCover, SolidLayers};
use crate::sphere;

/// Counts for one radius. `total == primitive + absentee`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CountRow {
    pub r: u32,
    pub primitive: u64,
    pub absentee: u64,
    pub total: u64,
}

impl CountRow {
    pub fn new(r: u32, primitive: u64, absentee: u64) -> Self {
        CountRow { r, primitive, absentee, total: primitive + absentee }
    }

    pub fn alpha(&self, places: u32) -> Result<FixedDecimal> {
        FixedDecimal::ratio(self.absentee, self.total, places)
    }
}

/// A non-negative decimal with a fixed number of fractional digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FixedDecimal {
    units: u128,
    places: u32,
}

impl FixedDecimal {
    /// `num / den` rounded half-to-even to `places` digits.
    pub fn ratio(num: u64, den: u64, places: u32) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroTotal);
        }
        let scaled = u128::from(num) * 10u128.pow(places);
        let den = u128::from(den);
        let (mut q, rem) = (scaled / den, scaled % den);
        match (2 * rem).cmp(&den) {
            std::cmp::Ordering::Greater => q += 1,
            std::cmp::Ordering::Equal if q % 2 == 1 => q += 1,
            _ => {}
        }
        Ok(FixedDecimal { units: q, places })
    }

    pub fn to_f64(self) -> f64 {
        self.units as f64 / 10f64.powi(self.places as i32)
    }
}

impl fmt::Display for FixedDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let scale = 10u128.pow(self.places);
        if self.places == 0 {
            return write!(f, "{}", self.units);
        }
        write!(f, "{}.{:0width$}", self.units / scale, self.units % scale, width = self.places as usize)
    }
}

/// `(r, alpha)` with alpha rendered to a fixed number of places.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RatioRow {
    pub r: u32,
    pub alpha: FixedDecimal,
}

impl RatioRow {
    pub fn from_counts(row: &CountRow, places: u32) -> Result<Self> {
        Ok(RatioRow { r: row.r, alpha: row.alpha(places)? })
    }
}

/// Hollow sphere row: swept voxels, absentees of both hemispheres, completed sphere.
pub fn sphere_count_row(r: u32) -> CountRow {
    CountRow::new(r, sphere::sphere_size(r), sphere::sphere_absentee_count(r))
}

/// Solid row: union of complete spheres, exact solid absentees, completed solid.
pub fn solid_count_row(r: u32) -> CountRow {
    let c = SolidLayers::new(r).counts();
    let row = CountRow::new(r, c.primitive, c.absentee());
    debug_assert_eq!(row.total, c.total);
    row
}

/// Solid row with the absentees counted as the line and circle cover of
/// [`LineCircleCover`] and the primitive count taken as the remainder of the
/// completed solid.
pub fn cover_solid_row(r: u32) -> CountRow {
    let total = SolidLayers::new(r).counts().total;
    let absentee = LineCircleCover::new(r).voxel_count();
    CountRow { r, primitive: total - absentee, absentee, total }
}

/// Rows for several radii, computed in parallel and returned in input order.
pub fn count_rows(radii: &[u32], row: impl Fn(u32) -> CountRow + Sync) -> Vec<CountRow> {
    radii.par_iter().map(|&r| row(r)).collect()
}

/// One summand of the closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedFormTerm {
    pub k: i64,
    pub value: i64,
}

/// The closed-form disc absentee count and its terms, evaluated as written
/// (terms may be negative and are not clamped).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormParams {
    pub r: u32,
    pub m_r: i64,
    pub terms: Vec<ClosedFormTerm>,
    pub total: i64,
}

/// Smallest `q` with `2q^2 >= r^2`, i.e. `ceil(r / sqrt 2)`.
fn ceil_div_sqrt2(r: i64) -> i64 {
    let mut q = ceil_sqrt(((r * r + 1) / 2) as u64) as i64;
    while q > 0 && 2 * (q - 1) * (q - 1) >= r * r {
        q -= 1;
    }
    while 2 * q * q < r * r {
        q += 1;
    }
    q
}

/// `8 * sum_{k < m_r} (ceil(sqrt((2k+1)r - k(k+1))) - ceil(2k + 1 + sqrt(8k^2 + 4k + 1) / 2))`
/// with `m_r = r - ceil(r / sqrt 2) + 1`.
pub fn closed_form_disc_count(r: u32) -> ClosedFormParams {
    let ri = i64::from(r);
    let m_r = ri - ceil_div_sqrt2(ri) + 1;
    let terms: Vec<ClosedFormTerm> = (0..m_r)
        .map(|k| {
            let first = ceil_sqrt(((2 * k + 1) * ri - k * (k + 1)).max(0) as u64) as i64;
            // ceil(a + sqrt(n)/2) = a + ceil(ceil_sqrt(n) / 2)
            let half = (ceil_sqrt((8 * k * k + 4 * k + 1) as u64) as i64 + 1) / 2;
            ClosedFormTerm { k, value: first - (2 * k + 1 + half) }
        })
        .collect();
    let total = 8 * terms.iter().map(|t| t.value).sum::<i64>();
    ClosedFormParams { r, m_r, terms, total }
}

/// Closed form against enumeration for one radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormComparison {
    pub r: u32,
    pub closed_form: i64,
    pub enumerated: u64,
}

impl ClosedFormComparison {
    pub fn agrees(&self) -> bool {
        self.closed_form == self.enumerated as i64
    }
}

pub fn closed_form_report(max_r: u32) -> Vec<ClosedFormComparison> {
    (1..=max_r)
        .map(|r| ClosedFormComparison {
            r,
            closed_form: closed_form_disc_count(r).total,
            enumerated: circle::disc_absentee_count(r),
        })
        .collect()
}

/// Least-squares slope of `ln(count)` against `ln(r)`.
pub fn loglog_slope(series: &[(f64, f64)]) -> Result<f64> {
    if series.len() < 3 {
        return Err(Error::TooFewPoints(series.len()));
    }
    if let Some(index) = series.iter().position(|&(r, c)| !(r > 0.0 && c > 0.0)) {
        return Err(Error::NonPositiveSample { index });
    }
    let n = series.len() as f64;
    let xs: Vec<f64> = series.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = series.iter().map(|p| p.1.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    Ok(sxy / sxx)
}
