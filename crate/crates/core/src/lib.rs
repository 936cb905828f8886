//! Digital circles, discs, spheres of revolution and solid spheres in the
//! integer lattice.
//!
//! A sphere swept from a digital semicircle about the `y` axis is not a closed
//! surface: voxels between consecutive swept circles of radii `i - 1` and `i`
//! are missed. The same happens, in much larger numbers, when a solid sphere is
//! covered by concentric complete spheres. This crate builds those objects with
//! exact integer arithmetic, characterizes the missing (absentee) voxels, and
//! fills them.
//!
//! Module map:
//!
//! - [`lattice`]: integer square roots, the half-unit circle predicate, octant symmetry.
//! - [`circle`]: digital circles and discs, disc absentees, the run and gap intervals.
//! - [`sphere`]: generatrix, hemisphere sweep, hollow-sphere absentees.
//! - [`solid`]: union of complete spheres, flood-fill solid, solid absentees.
//! - [`analysis`]: count rows, ratios, slope fits, the reference tables.
//! - [`oracle`]: brute-force reference constructions used for verification.
//! - [`verify`]: invariant suites that compare the constructions against the oracles.

pub mod analysis;
pub mod circle;
mod error;
pub mod lattice;
pub mod oracle;
mod set;
pub mod solid;
pub mod sphere;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{IntegerInterval, Pixel, Voxel};
pub use set::{PixelSet, PointSet, VoxelSet};
