use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a non-negative value, got {0}")]
    Negative(i64),

    #[error("ordinate {k} is outside [0, {radius}]")]
    OrdinateOutOfRange { radius: i64, k: i64 },

    #[error("({i}, {k}) is not an octant-1 point (0 <= i <= k)")]
    NotOctantOne { i: i64, k: i64 },

    #[error("({i}, {k}) is not a disc absentee")]
    NotDiscAbsentee { i: i64, k: i64 },

    #[error("({i}, {k}) is a disc absentee with witness radius {actual}, not {given}")]
    WrongWitness { i: i64, k: i64, given: i64, actual: i64 },

    #[error("generatrix step {t} does not grow the swept radius by one")]
    NotRadiusStep { t: usize },

    #[error("generatrix index {t} is out of range for {len} points")]
    StepOutOfRange { t: usize, len: usize },

    #[error("ratio is undefined for a zero total")]
    ZeroTotal,

    #[error("slope fit needs at least 3 points, got {0}")]
    TooFewPoints(usize),

    #[error("slope fit needs positive radii and counts; sample {index} is not")]
    NonPositiveSample { index: usize },
}
