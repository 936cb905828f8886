//! Point-cloud writers and readers.
//!
//! All writers emit points in ascending lexicographic order with LF line endings.

use std::io::{self, BufRead, Write};

use clap::ValueEnum;
use voxsphere::{PixelSet, Voxel, VoxelSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    /// One point per line, coordinates separated by single spaces.
    Text,
    /// Header row then comma-separated coordinates.
    Csv,
    /// ASCII PLY point cloud with integer vertex properties.
    Ply,
}

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn write_rows<W: Write + ?Sized, const N: usize>(
    out: &mut W,
    format: ExportFormat,
    axes: [&str; N],
    rows: impl ExactSizeIterator<Item = [i64; N]>,
) -> io::Result<()> {
    match format {
        ExportFormat::Text => {}
        ExportFormat::Csv => writeln!(out, "{}", axes.join(","))?,
        ExportFormat::Ply => {
            writeln!(out, "ply")?;
            writeln!(out, "format ascii 1.0")?;
            writeln!(out, "element vertex {}", rows.len())?;
            for axis in ["x", "y", "z"].iter().take(N) {
                writeln!(out, "property int {axis}")?;
            }
            writeln!(out, "end_header")?;
        }
    }
    let sep = if format == ExportFormat::Csv { "," } else { " " };
    for row in rows {
        let mut first = true;
        for c in row {
            if !first {
                out.write_all(sep.as_bytes())?;
            }
            write!(out, "{c}")?;
            first = false;
        }
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn write_voxels<W: Write + ?Sized>(out: &mut W, set: &VoxelSet, format: ExportFormat) -> io::Result<()> {
    write_rows(out, format, ["i", "j", "k"], set.iter().map(|v| [v.i, v.j, v.k]))
}

/// Plane sets are written as two columns `i j`.
pub fn write_pixels<W: Write + ?Sized>(out: &mut W, set: &PixelSet, format: ExportFormat) -> io::Result<()> {
    write_rows(out, format, ["i", "j"], set.iter().map(|p| [p.a, p.b]))
}

/// Reads voxels back from any of the three formats.
pub fn read_voxels<R: BufRead>(input: R, format: ExportFormat) -> Result<VoxelSet, ParseError> {
    let mut lines = input.lines().enumerate();
    let mut expected = None;
    match format {
        ExportFormat::Text => {}
        ExportFormat::Csv => {
            let (n, header) = lines.next().ok_or(ParseError::Malformed { line: 1, message: "empty input".into() })?;
            if header? != "i,j,k" {
                return Err(ParseError::Malformed { line: n + 1, message: "expected header i,j,k".into() });
            }
        }
        ExportFormat::Ply => {
            for (n, line) in lines.by_ref() {
                let line = line?;
                if let Some(count) = line.strip_prefix("element vertex ") {
                    expected = Some(count.trim().parse::<usize>().map_err(|e| ParseError::Malformed {
                        line: n + 1,
                        message: e.to_string(),
                    })?);
                }
                if line == "end_header" {
                    break;
                }
            }
        }
    }
    let sep = if format == ExportFormat::Csv { ',' } else { ' ' };
    let mut out = Vec::new();
    for (n, line) in lines {
        let line = line?;
        let fields: Vec<&str> = line.split(sep).collect();
        let coords: Result<Vec<i64>, _> = fields.iter().map(|f| f.parse::<i64>()).collect();
        match coords {
            Ok(c) if c.len() == 3 => out.push(Voxel::new(c[0], c[1], c[2])),
            _ => {
                return Err(ParseError::Malformed { line: n + 1, message: format!("bad voxel {line:?}") });
            }
        }
    }
    if let Some(count) = expected {
        if count != out.len() {
            return Err(ParseError::Malformed {
                line: 0,
                message: format!("header declares {count} vertices, found {}", out.len()),
            });
        }
    }
    Ok(VoxelSet::from_unsorted(out))
}
