//! Command implementations behind the `voxsphere` binary.

pub mod export;
pub mod radii;

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;
use rayon::prelude::*;
use voxsphere::analysis::{self, CountRow};
use voxsphere::solid::SolidLayers;
use voxsphere::verify::{self, Suite};
use voxsphere::{circle, sphere, PixelSet, VoxelSet};

use crate::export::ExportFormat;

/// Largest solid radius materialized by default.
pub const SOLID_CAP: u32 = 1500;
/// Largest sphere radius counted without `--long`.
pub const SPHERE_DEFAULT_LIMIT: u32 = 2600;
/// Largest solid radius counted without `--long`.
pub const SOLID_DEFAULT_LIMIT: u32 = 300;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("radius {r} exceeds the materialization cap of {cap} for solid shapes")]
    CapExceeded { r: u32, cap: u32 },
    #[error("radius {r} is beyond the default {kind} range (up to {limit}); pass --long to allow it")]
    NeedsLong { kind: &'static str, r: u32, limit: u32 },
    #[error("verification failed")]
    VerificationFailed,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::CapExceeded { .. } => 3,
            CliError::NeedsLong { .. } => 2,
            CliError::VerificationFailed => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Shape {
    Circle,
    Disc,
    DiscAbsentees,
    Sphere,
    SphereAbsentees,
    SphereComplete,
    /// Union of the complete spheres of radius 0..=r.
    Solid,
    SolidAbsentees,
    SolidComplete,
}

impl Shape {
    pub fn is_solid(self) -> bool {
        matches!(self, Shape::Solid | Shape::SolidAbsentees | Shape::SolidComplete)
    }
}

pub enum Points {
    Plane(PixelSet),
    Space(VoxelSet),
}

impl Points {
    pub fn len(&self) -> usize {
        match self {
            Points::Plane(p) => p.len(),
            Points::Space(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn write<W: Write + ?Sized>(&self, out: &mut W, format: ExportFormat) -> io::Result<()> {
        match self {
            Points::Plane(p) => export::write_pixels(out, p, format),
            Points::Space(v) => export::write_voxels(out, v, format),
        }
    }
}

pub fn generate(shape: Shape, r: u32, cap: u32) -> Result<Points, CliError> {
    if shape.is_solid() && r > cap {
        return Err(CliError::CapExceeded { r, cap });
    }
    Ok(match shape {
        Shape::Circle => Points::Plane(circle::circle_pixels(r)),
        Shape::Disc => Points::Plane(circle::disc_pixels(r)),
        Shape::DiscAbsentees => Points::Plane(circle::disc_absentees(r)),
        Shape::Sphere => Points::Space(sphere::sphere(r)),
        Shape::SphereAbsentees => Points::Space(sphere::sphere_absentees(r)),
        Shape::SphereComplete => Points::Space(sphere::complete_sphere(r)),
        Shape::Solid => Points::Space(SolidLayers::new(r).union()),
        Shape::SolidAbsentees => Points::Space(SolidLayers::new(r).absentees().all()),
        Shape::SolidComplete => Points::Space(SolidLayers::new(r).solid()),
    })
}

/// Writes through `body` to `path`, or to standard output when `path` is `None`.
/// File output goes to a temporary file in the same directory and is renamed
/// into place only after `body` succeeds.
pub fn write_output<F>(path: Option<&Path>, body: F) -> anyhow::Result<()>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    match path {
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            body(&mut w)?;
            w.flush()?;
        }
        Some(path) => {
            let dir = match path.parent() {
                Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
                _ => std::env::current_dir()?,
            };
            fs::create_dir_all(&dir)?;
            let tmp = tempfile::NamedTempFile::new_in(&dir)?;
            {
                let mut w = BufWriter::new(tmp.as_file());
                body(&mut w)?;
                w.flush()?;
            }
            tmp.as_file().sync_all()?;
            tmp.persist(path)?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountKind {
    Sphere,
    Solid,
}

/// How solid absentees are counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AbsenteeModel {
    /// Voxels of the completed solid covered by no complete sphere.
    Exact,
    /// Absentee lines of height `isqrt(r')` plus absentee circles; the primitive
    /// column is the rest of the completed solid.
    LineCircle,
}

pub fn check_limits(kind: CountKind, radii: &[u32], long: bool) -> Result<(), CliError> {
    if long {
        return Ok(());
    }
    let (name, limit) = match kind {
        CountKind::Sphere => ("sphere", SPHERE_DEFAULT_LIMIT),
        CountKind::Solid => ("solid", SOLID_DEFAULT_LIMIT),
    };
    match radii.iter().find(|&&r| r > limit) {
        Some(&r) => Err(CliError::NeedsLong { kind: name, r, limit }),
        None => Ok(()),
    }
}

pub fn count_rows(kind: CountKind, model: AbsenteeModel, radii: &[u32]) -> Vec<CountRow> {
    radii
        .par_iter()
        .map(|&r| match (kind, model) {
            (CountKind::Sphere, _) => analysis::sphere_count_row(r),
            (CountKind::Solid, AbsenteeModel::Exact) => analysis::solid_count_row(r),
            (CountKind::Solid, AbsenteeModel::LineCircle) => analysis::cover_solid_row(r),
        })
        .collect()
}

pub fn write_counts_csv<W: Write + ?Sized>(out: &mut W, rows: &[CountRow]) -> io::Result<()> {
    writeln!(out, "r,primitive,absentee,total,alpha")?;
    for row in rows {
        let alpha = row.alpha(6).map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
        writeln!(out, "{},{},{},{},{}", row.r, row.primitive, row.absentee, row.total, alpha)?;
    }
    Ok(())
}

/// Runs the suites and prints one line per check. Returns whether every gating check passed.
pub fn run_verify<W: Write + ?Sized>(out: &mut W, suites: &[Suite], max_r: u32) -> io::Result<bool> {
    let mut ok = true;
    for &suite in suites {
        let report = verify::run(suite, max_r);
        for check in &report.checks {
            writeln!(out, "{}: {check}", suite.name())?;
        }
        writeln!(out, "{}: {}", suite.name(), if report.passed() { "passed" } else { "FAILED" })?;
        ok &= report.passed();
        if suite == Suite::Disc {
            writeln!(out, "closed-form report (r, closed form, enumerated, agrees):")?;
            for c in analysis::closed_form_report(max_r) {
                writeln!(out, "  {} {} {} {}", c.r, c.closed_form, c.enumerated, c.agrees())?;
            }
        }
    }
    Ok(ok)
}
