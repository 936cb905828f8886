//! Acceptance criteria, one line each. Exits non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use rayon::prelude::*;
use voxsphere::analysis::{self, CountRow};
use voxsphere::circle;
use voxsphere::oracle;
use voxsphere::solid::{self, LineCircleCover, SolidLayers};
use voxsphere::sphere;
use voxsphere::tables;
use voxsphere::verify;
use voxsphere::Voxel;

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Outcome { passed, detail: detail.into() }
    }
}

fn sphere_radii() -> Vec<u32> {
    (0..=10).chain((20..=100).step_by(10)).chain((200..=1000).step_by(100)).collect()
}

fn solid_radii() -> Vec<u32> {
    (0..=10).chain((20..=100).step_by(10)).chain([150, 200, 300]).collect()
}

fn row_mismatches(rows: &[CountRow], reference: impl Fn(u32) -> Option<(u64, u64, u64)>) -> Vec<String> {
    rows.iter()
        .filter_map(|row| {
            let got = (row.primitive, row.absentee, row.total);
            match reference(row.r) {
                Some(want) if want == got => None,
                Some(want) => Some(format!("r={} got {got:?} want {want:?}", row.r)),
                None => Some(format!("r={} has no reference row", row.r)),
            }
        })
        .collect()
}

fn summarize(misses: &[String]) -> String {
    match misses.first() {
        None => String::new(),
        Some(first) => format!("; {} mismatches, first {first}", misses.len()),
    }
}

fn sphere_reference(r: u32) -> Option<(u64, u64, u64)> {
    tables::sphere_row(r).map(|p| (p.primitive, p.absentee, p.total))
}

fn solid_reference(r: u32) -> Option<(u64, u64, u64)> {
    tables::solid_row(r).map(|p| (p.primitive, p.absentee, p.total))
}

fn reference_ratio(table: &[(u32, &'static str)], r: u32) -> &'static str {
    table.iter().find(|(x, _)| *x == r).map(|(_, s)| *s).expect("reference ratio")
}

fn table_counts() -> Outcome {
    let radii = sphere_radii();
    let rows = analysis::count_rows(&radii, analysis::sphere_count_row);
    let misses = row_mismatches(&rows, sphere_reference);
    let r10 = rows.iter().find(|x| x.r == 10).expect("r=10");
    let r100 = rows.iter().find(|x| x.r == 100).expect("r=100");
    let examples = (r10.primitive, r10.absentee, r10.total) == (1002, 80, 1082)
        && (r100.primitive, r100.absentee, r100.total) == (100622, 6248, 106870);
    Outcome::new(
        misses.is_empty() && examples,
        format!("hollow counts for {} radii up to 1000{}", radii.len(), summarize(&misses)),
    )
}

fn table_ratios() -> Outcome {
    let mut misses = Vec::new();
    for (r, want) in [(10, "0.073937"), (100, "0.058464"), (1000, "0.058401")] {
        let got = analysis::sphere_count_row(r).alpha(6).expect("nonzero").to_string();
        if got != want || reference_ratio(tables::SPHERE_RATIOS, r) != want {
            misses.push(format!("r={r} got {got} want {want}"));
        }
    }
    let large: Vec<u32> = sphere_radii().into_iter().filter(|&r| r >= 300).collect();
    let mut worst = 0f64;
    for row in analysis::count_rows(&large, analysis::sphere_count_row) {
        let a = row.absentee as f64 / row.total as f64;
        worst = worst.max((a - 0.0584).abs());
        if (a - 0.0584).abs() >= 0.001 {
            misses.push(format!("r={} alpha {a:.6}", row.r));
        }
    }
    Outcome::new(misses.is_empty(), format!("max |alpha - 0.0584| over r >= 300 is {worst:.6}{}", summarize(&misses)))
}

fn solid_counts() -> Outcome {
    let radii = solid_radii();
    let rows = analysis::count_rows(&radii, analysis::solid_count_row);
    let misses = row_mismatches(&rows, solid_reference);
    let cover = analysis::count_rows(&radii, analysis::cover_solid_row);
    let cover_misses = row_mismatches(&cover, solid_reference);
    Outcome::new(
        misses.is_empty(),
        format!(
            "exact solid counts for {} radii{}; line-circle cover rows: {} of {} match",
            radii.len(),
            summarize(&misses),
            radii.len() - cover_misses.len(),
            radii.len()
        ),
    )
}

fn solid_ratios() -> Outcome {
    let mut misses = Vec::new();
    let mut cover_ok = true;
    for (r, want) in [(10, "0.15432"), (100, "0.10667"), (300, "0.10295")] {
        let got = analysis::solid_count_row(r).alpha(5).expect("nonzero").to_string();
        if got != want || reference_ratio(tables::SOLID_RATIOS, r) != want {
            misses.push(format!("r={r} got {got} want {want}"));
        }
        cover_ok &= analysis::cover_solid_row(r).alpha(5).expect("nonzero").to_string() == want;
    }
    Outcome::new(
        misses.is_empty(),
        format!("exact solid ratios{}; line-circle cover ratios match: {cover_ok}", summarize(&misses)),
    )
}

fn hollow_oracle() -> Outcome {
    let bad: Vec<String> = (0..=64u32)
        .into_par_iter()
        .filter_map(|r| {
            let a = sphere::avh(r);
            if a != oracle::hemisphere_absentees(r) {
                return Some(format!("r={r}: absentees differ from the oracle"));
            }
            let p = a.project_zx();
            (p != circle::disc_absentees(r) || p.len() != a.len()).then(|| format!("r={r}: projection"))
        })
        .collect();
    let equator: Vec<u32> =
        (0..=128u32).into_par_iter().filter(|&r| sphere::sphere_absentees(r).iter().any(|v| v.j == 0)).collect();
    let mut misses = bad;
    misses.extend(equator.iter().map(|r| format!("r={r}: absentee on the equator")));
    Outcome::new(
        misses.is_empty(),
        format!("r <= 64 set-equal with bijective projection, no equator absentees for r <= 128{}", summarize(&misses)),
    )
}

fn solid_oracle() -> Outcome {
    let misses: Vec<String> = (0..=32u32)
        .into_par_iter()
        .filter_map(|r| {
            let filled = solid::complete_solid(r);
            let union = solid::union_complete_spheres(r);
            let avs = solid::avs(r);
            if avs != filled.difference(&union) {
                return Some(format!("r={r}: absentees differ from flood fill"));
            }
            let h = solid::holes(&union.union(&avs), r);
            (!h.is_empty()).then(|| format!("r={r}: {} holes", h.len()))
        })
        .collect();
    Outcome::new(misses.is_empty(), format!("r <= 32 flood-fill equality and zero holes{}", summarize(&misses)))
}

/// Line disagreements, circle disagreements, first disagreeing voxel.
type SpeciesTally = (usize, usize, Option<Voxel>);

/// Species predicate disagreements with the enumerated species, over the voxels
/// of the completed solid inside the bounding box.
fn species_disagreements(r: u32) -> SpeciesTally {
    let layers = SolidLayers::new(r);
    let abs = layers.absentees();
    let filled = layers.solid();
    let (mut line_bad, mut circle_bad, mut first) = (0, 0, None);
    for &v in filled.iter() {
        let l = solid::is_absentee_line_voxel(v) != abs.lines.contains(&v);
        let c = solid::is_absentee_circle_voxel(v) != abs.circles.contains(&v);
        line_bad += usize::from(l);
        circle_bad += usize::from(c);
        if (l || c) && first.is_none() {
            first = Some(v);
        }
    }
    (line_bad, circle_bad, first)
}

fn predicates() -> Outcome {
    let sphere_bad: Vec<String> = (0..=32u32)
        .into_par_iter()
        .filter_map(|r| verify::sphere_predicate_mismatch(r).map(|v| format!("r={r} at {v:?}")))
        .collect();
    let examples = sphere::is_sphere_absentee(Voxel::new(2, 9, 4), 10)
        && !sphere::is_sphere_absentee(Voxel::new(3, 9, 4), 10);
    let species: Vec<(u32, SpeciesTally)> =
        (0..=32u32).into_par_iter().map(|r| (r, species_disagreements(r))).collect();
    let line_bad: usize = species.iter().map(|(_, s)| s.0).sum();
    let circle_bad: usize = species.iter().map(|(_, s)| s.1).sum();
    let first = species.iter().find_map(|(r, s)| s.2.map(|v| format!("r={r} at {v:?}")));
    let passed = sphere_bad.is_empty() && examples && line_bad == 0 && circle_bad == 0;
    Outcome::new(
        passed,
        format!(
            "sphere predicate mismatches {}, worked examples hold: {examples}, line predicate disagreements {line_bad}, \
             circle predicate disagreements {circle_bad}{}",
            sphere_bad.len(),
            first.map(|f| format!(", first {f}")).unwrap_or_default()
        ),
    )
}

fn octant_rep(i: i64, k: i64) -> (i64, i64) {
    let (a, b) = (i.abs(), k.abs());
    (a.min(b), a.max(b))
}

fn families() -> Outcome {
    let band_misses: usize = (0..=32u32)
        .into_par_iter()
        .map(|r| {
            sphere::avh(r)
                .iter()
                .filter(|v| {
                    let (a, b) = octant_rep(v.i, v.k);
                    !sphere::family_f_contains(Voxel::new(a, v.j, b)).expect("octant 1")
                })
                .count()
        })
        .sum();
    let cov: Vec<verify::FamilyCoverage> = (0..=32u32).into_par_iter().map(verify::family_coverage).collect();
    let sum = |f: fn(&verify::FamilyCoverage) -> usize| cov.iter().map(f).sum::<usize>();
    let (f1, f1m, f2, f2m) = (sum(|c| c.f1_voxels), sum(|c| c.f1_missed), sum(|c| c.f2_voxels), sum(|c| c.f2_missed));
    let circle_misses = sum(|c| c.f1_circles_missed + c.f2_circles_missed);
    Outcome::new(
        band_misses == 0 && f1m == 0 && f2m == 0,
        format!(
            "parabolic bands miss {band_misses} hollow absentees; F1 misses {f1m}/{f1} circle voxels, \
             F2 misses {f2m}/{f2}; nominal circle radii missed {circle_misses}"
        ),
    )
}

fn lines_and_circles() -> Outcome {
    let misses: Vec<String> = (0..=64u32)
        .into_par_iter()
        .filter_map(|r| {
            let n = circle::disc_absentee_count(r) as usize;
            if !n.is_multiple_of(4) {
                return Some(format!("r={r}: {n} disc absentees not divisible by 4"));
            }
            let (lines, circles) = verify::line_and_circle_counts(r);
            (lines != n || circles != n / 4).then(|| format!("r={r}: {lines} lines, {circles} circles, {n} disc absentees"))
        })
        .collect();
    Outcome::new(misses.is_empty(), format!("r <= 64 per hemisphere{}", summarize(&misses)))
}

fn slope(points: Vec<(u32, u64)>) -> f64 {
    let series: Vec<(f64, f64)> = points.into_iter().map(|(r, c)| (f64::from(r), c as f64)).collect();
    analysis::loglog_slope(&series).expect("positive samples")
}

fn asymptotics() -> Outcome {
    let hollow = slope([64u32, 128, 256, 512, 1024].map(|r| (r, sphere::sphere_absentee_count(r))).to_vec());
    let radii = [64u32, 128, 256, 512];
    let lines = slope(radii.map(|r| (r, LineCircleCover::new(r).line_voxel_count())).to_vec());
    let counts = radii.map(|r| (r, SolidLayers::new(r).counts()));
    let total = slope(counts.iter().map(|(r, c)| (*r, c.total)).collect());
    let exact_lines = slope(counts.iter().map(|(r, c)| (*r, c.line_voxels)).collect());
    let passed = (hollow - 2.0).abs() <= 0.1 && (lines - 2.5).abs() <= 0.2 && (total - 3.0).abs() <= 0.15;
    Outcome::new(
        passed,
        format!(
            "hollow absentees {hollow:.4}, line species {lines:.4}, solid total {total:.4} \
             (exact line set {exact_lines:.4}, informational)"
        ),
    )
}

fn closed_form() -> Outcome {
    let report = analysis::closed_form_report(128);
    let off = report.iter().filter(|c| !c.agrees()).count();
    let r10 = report.iter().find(|c| c.r == 10).expect("r=10 in report");
    Outcome::new(
        report.len() == 128 && !r10.agrees(),
        format!(
            "report covers r = 1..=128, {off} radii disagree; r=10 closed form {} vs enumerated {} (non-gating)",
            r10.closed_form, r10.enumerated
        ),
    )
}

fn run_binary(threads: &str, args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_voxsphere"))
        .args(args)
        .env("RAYON_NUM_THREADS", threads)
        .output()
        .expect("run voxsphere");
    assert!(out.status.success(), "voxsphere {args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

fn determinism() -> Outcome {
    let jobs: [&[&str]; 5] = [
        &["generate", "sphere-complete", "-r", "40", "-f", "ply"],
        &["generate", "solid-absentees", "-r", "24", "-f", "csv"],
        &["generate", "disc-absentees", "-r", "50"],
        &["counts", "-k", "sphere", "--radii", "0..2000:97"],
        &["counts", "-k", "solid", "--radii", "0..300:25", "--model", "line-circle"],
    ];
    let mut differing = Vec::new();
    for args in jobs {
        let base = run_binary("1", args);
        let again = run_binary("1", args);
        let wide = run_binary("4", args);
        if base.is_empty() || base != again || base != wide {
            differing.push(args.join(" "));
        }
    }
    Outcome::new(
        differing.is_empty(),
        format!("{} exports compared across repeats and 1 vs 4 threads{}", jobs.len(), summarize(&differing)),
    )
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 12] = [
        (1, table_counts),
        (2, table_ratios),
        (3, solid_counts),
        (4, solid_ratios),
        (5, hollow_oracle),
        (6, solid_oracle),
        (7, predicates),
        (8, families),
        (9, lines_and_circles),
        (10, asymptotics),
        (11, closed_form),
        (12, determinism),
    ];
    let mut failed = Vec::new();
    for (n, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!("criterion {n}: {status} ({:.1}s) {}", start.elapsed().as_secs_f64(), outcome.detail);
        if !outcome.passed {
            failed.push(n);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 12 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: criteria {failed:?} fail");
        ExitCode::FAILURE
    }
}
