//! `sangaku`: build, verify, sweep and draw the two-circle figure from the command line.
//!
//! JSON reports go to standard output, diagnostics to standard error. Exit status is 0 on
//! success, 1 when a report fails (a false claim, an inconsistent converse report or a
//! failing sweep sample) and 2 on any error, which prints one line `error[CODE]: message`.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sangaku::exactnum::{ExactError, Rational};
use sangaku::hirotaka::report::Report;
use sangaku::hirotaka::{
    construct_forward, equivalence_check, make_pair, make_pair_squared, sweep, verify_forward, CirclePair,
    HirotakaError, SweepMode,
};
use sangaku::render::{render_forward, render_pair, RenderError, RenderOptions};

#[derive(Parser, Debug)]
#[command(name = "sangaku", version, about = "Exact checks of the perpendicular-tangents sangaku")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the figure for radii r, r' and print every point and line.
    Construct {
        #[command(flatten)]
        radii: Radii,
        /// Write the JSON here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the ten claims of the figure; exit 1 if any is false.
    Verify {
        #[command(flatten)]
        radii: Radii,
    },
    /// Check the converse on a separate pair; exit 1 only if the report is inconsistent.
    Reverse {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Run a seeded sweep; exit 1 if any sample fails.
    Sweep {
        #[arg(long)]
        mode: SweepMode,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Draw the figure (with --r/--r-prime) or a circle pair (with --r1/--r2/--d) as SVG.
    Render {
        #[arg(long, allow_hyphen_values = true)]
        r: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        r_prime: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        r1: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        r2: Option<String>,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "d_squared")]
        d: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        d_squared: Option<String>,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        style: Style,
    },
}

#[derive(Args, Debug)]
struct Radii {
    #[arg(long, allow_hyphen_values = true)]
    r: String,
    #[arg(long, allow_hyphen_values = true)]
    r_prime: String,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long, allow_hyphen_values = true)]
    r1: String,
    #[arg(long, allow_hyphen_values = true)]
    r2: String,
    /// Center distance.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "d_squared", conflicts_with = "d_squared")]
    d: Option<String>,
    /// Squared center distance, for irrational distances.
    #[arg(long, allow_hyphen_values = true)]
    d_squared: Option<String>,
}

#[derive(Args, Debug)]
struct Style {
    /// Canvas size in pixels.
    #[arg(long, default_value_t = 800)]
    canvas: u32,
    /// Margin as a fraction of the canvas.
    #[arg(long, default_value = "1/10", allow_hyphen_values = true)]
    margin: String,
    /// Significant digits of every coordinate.
    #[arg(long, default_value_t = 6)]
    digits: usize,
    /// Stroke width in pixels.
    #[arg(long, default_value = "2", allow_hyphen_values = true)]
    stroke: String,
    #[arg(long)]
    no_labels: bool,
}

/// A fatal error: its code and a one-line message.
struct Failure {
    code: &'static str,
    message: String,
}

impl Failure {
    fn new(code: &'static str, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

macro_rules! coded {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::new(e.code(), e.to_string())
            }
        }
    )*};
}
coded!(ExactError, HirotakaError, RenderError);

enum Outcome {
    Pass,
    Fail,
}

fn rational(name: &str, text: &str) -> Result<Rational, Failure> {
    text.parse().map_err(|e: ExactError| Failure::new(e.code(), format!("--{name}: {e}")))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::new("IO_ERROR", format!("{}: {e}", path.display())))
}

fn build_pair(r1: &str, r2: &str, d: Option<&str>, d_squared: Option<&str>) -> Result<(Report, CirclePair), Failure> {
    let (r1, r2) = (rational("r1", r1)?, rational("r2", r2)?);
    let report = Report::new("").input("r1", &r1).input("r2", &r2);
    match (d, d_squared) {
        (Some(d), None) => {
            let d = rational("d", d)?;
            Ok((report.input("d", &d), make_pair(&r1, &r2, &d)?))
        }
        (None, Some(d2)) => {
            let d2 = rational("d-squared", d2)?;
            Ok((report.input("d_squared", &d2), make_pair_squared(&r1, &r2, &d2)?))
        }
        _ => Err(Failure::new("INVALID_ARGUMENT", "give exactly one of --d and --d-squared")),
    }
}

/// Prints to standard output. A closed pipe is not an error: the reader stopped listening.
fn print_report(report: &Report) -> Result<(), Failure> {
    let mut stdout = io::stdout().lock();
    match writeln!(stdout, "{}", report.to_json_string()).and_then(|()| stdout.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(Failure::new("IO_ERROR", format!("stdout: {e}"))),
        _ => Ok(()),
    }
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Construct { radii, out } => {
            let (r, rp) = (rational("r", &radii.r)?, rational("r-prime", &radii.r_prime)?);
            let cfg = construct_forward(&r, &rp)?;
            let report = Report::new("construct").input("r", &r).input("r_prime", &rp).with_config(&cfg);
            match out {
                Some(path) => write_file(&path, &(report.to_json_string() + "\n"))?,
                None => print_report(&report)?,
            }
            Ok(Outcome::Pass)
        }
        Command::Verify { radii } => {
            let (r, rp) = (rational("r", &radii.r)?, rational("r-prime", &radii.r_prime)?);
            let cfg = construct_forward(&r, &rp)?;
            let claims = verify_forward(&cfg);
            let report = Report::new("verify")
                .input("r", &r)
                .input("r_prime", &rp)
                .with_config(&cfg)
                .with_claims(&claims);
            print_report(&report)?;
            Ok(if claims.all_true() { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Reverse { pair } => {
            let (mut report, built) = build_pair(&pair.r1, &pair.r2, pair.d.as_deref(), pair.d_squared.as_deref())?;
            report.command = "reverse".to_string();
            let eq = equivalence_check(&built);
            print_report(&report.with_equivalence(&built, &eq))?;
            Ok(if eq.consistent { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Sweep { mode, count, seed } => {
            let summary = sweep(mode, seed, count);
            let report = Report::new("sweep")
                .input("mode", mode)
                .input("count", count)
                .input("seed", seed)
                .with_sweep(&summary);
            print_report(&report)?;
            Ok(if summary.failed == 0 { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Render { r, r_prime, r1, r2, d, d_squared, out, style } => {
            let opts = RenderOptions::new(
                style.canvas,
                rational("margin", &style.margin)?,
                style.digits,
                !style.no_labels,
                rational("stroke", &style.stroke)?,
            )?;
            let forward = r.is_some() || r_prime.is_some();
            let pairwise = r1.is_some() || r2.is_some() || d.is_some() || d_squared.is_some();
            let (report, svg) = match (forward, pairwise, r, r_prime, r1, r2) {
                (true, false, Some(r), Some(rp), None, None) => {
                    let (r, rp) = (rational("r", &r)?, rational("r-prime", &rp)?);
                    let cfg = construct_forward(&r, &rp)?;
                    (Report::new("render").input("r", &r).input("r_prime", &rp), render_forward(&cfg, &opts))
                }
                (false, true, None, None, Some(r1), Some(r2)) => {
                    let (report, pair) = build_pair(&r1, &r2, d.as_deref(), d_squared.as_deref())?;
                    (Report { command: "render".to_string(), ..report }, render_pair(&pair, &opts))
                }
                _ => {
                    return Err(Failure::new(
                        "INVALID_ARGUMENT",
                        "render needs either --r and --r-prime, or --r1, --r2 and --d (or --d-squared)",
                    ))
                }
            };
            write_file(&out, &svg)?;
            print_report(&report.input("out", out.display()))?;
            Ok(Outcome::Pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            eprintln!("error[INVALID_ARGUMENT]: {}", first.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error[{}]: {}", f.code, f.message.replace('\n', " "));
            ExitCode::from(2)
        }
    }
}
