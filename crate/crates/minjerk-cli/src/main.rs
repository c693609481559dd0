//! Command-line front end for minimum-jerk trajectory planning.
//!
//! Subcommands: `straight`, `curved`, `solve-tau1`, `verify`. Sample data
//! goes to standard output (or `--out PATH`) as CSV or JSON; diagnostics go
//! to standard error. Exit codes: 0 success, 1 validation error, 2 solver
//! error, 3 I/O error.

mod export;
mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minjerk::{
    sample_curved, sample_straight, solve_via, validate_motion_spec, validate_via_spec, MotionSpec,
    Point2, SolveError, TrajectorySample, ValidationError, ViaMotionSpec,
};

use export::ExportDocument;

#[derive(Parser)]
#[command(
    name = "minjerk",
    version,
    about = "Minimum-jerk trajectory planner for straight and via-point movements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Plan a straight movement and export its samples.
    Straight(StraightArgs),
    /// Plan a movement through a via point and export its samples.
    Curved(CurvedArgs),
    /// Solve the via-passage time and print it with the constants.
    #[command(name = "solve-tau1")]
    SolveTau1(ViaArgs),
    /// Run the numerical verification suite on the reference movements.
    Verify,
}

#[derive(Args)]
struct SegmentArgs {
    /// Start x coordinate, meters.
    #[arg(long, default_value_t = 0.0)]
    x0: f64,
    /// Start y coordinate, meters.
    #[arg(long, default_value_t = 0.0)]
    y0: f64,
    /// End x coordinate, meters.
    #[arg(long)]
    xf: f64,
    /// End y coordinate, meters.
    #[arg(long)]
    yf: f64,
    /// Duration of motion, seconds.
    #[arg(long)]
    tf: f64,
}

impl SegmentArgs {
    fn motion_spec(&self) -> MotionSpec {
        MotionSpec::new(
            Point2::new(self.x0, self.y0),
            Point2::new(self.xf, self.yf),
            self.tf,
        )
    }
}

#[derive(Args)]
struct ViaArgs {
    #[command(flatten)]
    segment: SegmentArgs,
    /// Via point x coordinate, meters.
    #[arg(long)]
    x1: f64,
    /// Via point y coordinate, meters.
    #[arg(long)]
    y1: f64,
}

impl ViaArgs {
    fn via_spec(&self) -> ViaMotionSpec {
        ViaMotionSpec::new(self.segment.motion_spec(), Point2::new(self.x1, self.y1))
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Number of uniform samples over the movement.
    #[arg(long, default_value_t = 101)]
    samples: usize,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct StraightArgs {
    #[command(flatten)]
    segment: SegmentArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CurvedArgs {
    #[command(flatten)]
    via: ViaArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

enum CliError {
    Validation(ValidationError),
    Solve(SolveError),
    Io(io::Error),
    VerifyFailed,
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) | CliError::VerifyFailed => 1,
            CliError::Solve(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    fn report(&self) {
        match self {
            CliError::Validation(e) => eprintln!("error: {e}"),
            CliError::Solve(e) => eprintln!("error: {e}"),
            CliError::Io(e) => eprintln!("error: {e}"),
            CliError::VerifyFailed => eprintln!("error: verification checks failed"),
        }
    }
}

impl From<ValidationError> for CliError {
    fn from(e: ValidationError) -> Self {
        CliError::Validation(e)
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        CliError::Solve(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn main() {
    std::process::exit(run(std::env::args_os()));
}

fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version print to stdout and succeed; anything
            // else is a usage error.
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(err) => {
            err.report();
            err.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Straight(args) => {
            let spec = validate_motion_spec(args.segment.motion_spec())?;
            let samples = sample_straight(&spec, args.output.samples)?;
            let doc = ExportDocument::straight(&spec, &samples);
            write_output(&args.output, &samples, &doc)
        }
        Command::Curved(args) => {
            let spec = validate_via_spec(args.via.via_spec())?;
            let solution = solve_via(&spec)?;
            if solution.candidates.len() > 1 {
                eprintln!(
                    "note: {} acceptable passage times found; picked the jerk-cost minimizer",
                    solution.candidates.len()
                );
            }
            let samples = sample_curved(&solution, args.output.samples)?;
            let doc = ExportDocument::curved(&solution, &samples);
            write_output(&args.output, &samples, &doc)
        }
        Command::SolveTau1(args) => {
            let spec = validate_via_spec(args.via_spec())?;
            let solution = solve_via(&spec)?;
            let mut stdout = io::stdout().lock();
            writeln!(stdout, "tau1 = {}", solution.tau1)?;
            writeln!(stdout, "c1 = {}", solution.c1)?;
            writeln!(stdout, "c2 = {}", solution.c2)?;
            writeln!(stdout, "pi1 = {}", solution.pi1)?;
            writeln!(stdout, "pi2 = {}", solution.pi2)?;
            if solution.candidates.len() > 1 {
                eprintln!(
                    "note: {} acceptable passage times found; picked the jerk-cost minimizer",
                    solution.candidates.len()
                );
            }
            Ok(())
        }
        Command::Verify => {
            let mut stdout = io::stdout().lock();
            if verify::run(&mut stdout)? {
                Ok(())
            } else {
                Err(CliError::VerifyFailed)
            }
        }
    }
}

fn write_output(
    output: &OutputArgs,
    samples: &[TrajectorySample],
    doc: &ExportDocument,
) -> Result<(), CliError> {
    let mut sink: Box<dyn Write> = match &output.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match output.format {
        Format::Csv => export::export_csv(samples, &mut sink)?,
        Format::Json => export::export_json(doc, &mut sink)?,
    }
    sink.flush()?;
    Ok(())
}
