use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use voxsphere::verify::Suite;
use voxsphere_cli::export::ExportFormat;
use voxsphere_cli::radii::RadiusList;
use voxsphere_cli::{self as cli, AbsenteeModel, CliError, CountKind, Shape};

#[derive(Parser)]
#[command(name = "voxsphere", version, about = "Digital circles, spheres of revolution and their absentee voxels")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Disc,
    Sphere,
    Solid,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Write the points of one shape.
    Generate {
        #[arg(value_enum)]
        shape: Shape,
        #[arg(short, long)]
        radius: u32,
        #[arg(short, long, value_enum, default_value = "text")]
        format: ExportFormat,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Largest radius materialized for solid shapes.
        #[arg(long, default_value_t = cli::SOLID_CAP)]
        cap: u32,
    },
    /// Write a CSV of voxel counts per radius.
    Counts {
        #[arg(short, long, value_enum)]
        kind: CountKind,
        /// Radii as `a,b,c`, `a..b` or `a..b:step`.
        #[arg(long)]
        radii: RadiusList,
        #[arg(long, value_enum, default_value = "exact")]
        model: AbsenteeModel,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Allow radii beyond the default ranges.
        #[arg(long)]
        long: bool,
    },
    /// Compare constructions with brute-force references.
    Verify {
        #[arg(short, long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 32)]
        max_r: u32,
    },
}

fn run(args: Args) -> anyhow::Result<()> {
    match args.command {
        Command::Generate { shape, radius, format, out, cap } => {
            let points = cli::generate(shape, radius, cap)?;
            cli::write_output(out.as_deref(), |w| points.write(w, format))
        }
        Command::Counts { kind, radii, model, out, long } => {
            cli::check_limits(kind, &radii.0, long)?;
            let rows = cli::count_rows(kind, model, &radii.0);
            cli::write_output(out.as_deref(), |w| cli::write_counts_csv(w, &rows))
        }
        Command::Verify { suite, max_r } => {
            let suites: &[Suite] = match suite {
                SuiteArg::Disc => &[Suite::Disc],
                SuiteArg::Sphere => &[Suite::Sphere],
                SuiteArg::Solid => &[Suite::Solid],
                SuiteArg::All => &Suite::ALL,
            };
            let mut stdout = std::io::stdout().lock();
            if cli::run_verify(&mut stdout, suites, max_r)? {
                Ok(())
            } else {
                Err(CliError::VerificationFailed.into())
            }
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            let code = err.downcast_ref::<CliError>().map_or(1, CliError::exit_code);
            ExitCode::from(code as u8)
        }
    }
}
