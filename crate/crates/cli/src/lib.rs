//! `minfrac` command-line front end.
//!
//! ```text
//! minfrac solve <low> <high> [--algorithm paper|stern-brocot|oracle] [--trace] [--json]
//! minfrac verify --max-den <N> [--json]
//! ```

mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use minfrac::reference::{differential_check, oracle_min_denominator, stern_brocot_simplest};
use minfrac::{solve_general, Error, OpenInterval, Rational};

pub use render::{render_report, render_solve, Answer};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INTERVAL: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    #[default]
    Paper,
    SternBrocot,
    Oracle,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Paper => "paper",
            Algorithm::SternBrocot => "stern-brocot",
            Algorithm::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Text,
    Structured,
}

/// A parsed `solve` invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliRequest {
    pub low_text: String,
    pub high_text: String,
    pub algorithm: Algorithm,
    pub trace: bool,
    pub output: OutputFormat,
}

#[derive(Debug, Parser)]
#[command(
    name = "minfrac",
    version,
    about = "Smallest-denominator fraction inside an open interval"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Find the fraction with the smallest denominator strictly between LOW and HIGH.
    Solve {
        /// Left endpoint: p/q, a decimal, or an integer.
        #[arg(allow_hyphen_values = true)]
        low: String,
        /// Right endpoint.
        #[arg(allow_hyphen_values = true)]
        high: String,
        #[arg(long, value_enum, default_value_t = Algorithm::Paper)]
        algorithm: Algorithm,
        /// Print every reduction step.
        #[arg(long)]
        trace: bool,
        /// Emit one JSON document.
        #[arg(long)]
        json: bool,
    },
    /// Compare all solvers on every pair of Farey fractions up to a denominator.
    Verify {
        #[arg(long = "max-den")]
        max_den: u64,
        #[arg(long)]
        json: bool,
    },
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };

    let result = match cli.command {
        Command::Solve {
            low,
            high,
            algorithm,
            trace,
            json,
        } => {
            let request = CliRequest {
                low_text: low,
                high_text: high,
                algorithm,
                trace,
                output: if json {
                    OutputFormat::Structured
                } else {
                    OutputFormat::Text
                },
            };
            solve(&request, out)
        }
        Command::Verify { max_den, json } => verify(max_den, json, out),
    };

    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "minfrac: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ZeroDenominator | Error::Malformed(_) | Error::MaxDenominator(_) => EXIT_PARSE,
        Error::EmptyInterval { .. } | Error::Negative(_) | Error::Precondition { .. } => {
            EXIT_INTERVAL
        }
        Error::ZeroReciprocal
        | Error::IterationCap { .. }
        | Error::Internal(_)
        | Error::SearchCap { .. } => EXIT_INTERNAL,
    }
}

/// Executes a `solve` request and writes the result.
pub fn solve(request: &CliRequest, out: &mut dyn Write) -> Result<i32, Error> {
    let low: Rational = request.low_text.parse()?;
    let high: Rational = request.high_text.parse()?;
    let interval = OpenInterval::new(low, high)?;

    let answer = match request.algorithm {
        Algorithm::Paper => Answer::Traced(Box::new(solve_general(&interval)?)),
        Algorithm::SternBrocot => Answer::Plain(stern_brocot_simplest(&interval)),
        Algorithm::Oracle => {
            // The mediant of the endpoints is always inside.
            let cap = interval.low().denom() + interval.high().denom();
            let cap = u64::try_from(cap).map_err(|_| Error::SearchCap { cap: u64::MAX })?;
            Answer::Plain(oracle_min_denominator(&interval, cap)?)
        }
    };

    let text = render_solve(
        &interval,
        request.algorithm,
        &answer,
        request.trace,
        request.output,
    );
    write_out(out, &text)?;
    Ok(EXIT_OK)
}

fn verify(max_den: u64, json: bool, out: &mut dyn Write) -> Result<i32, Error> {
    let report = differential_check(max_den)?;
    let format = if json {
        OutputFormat::Structured
    } else {
        OutputFormat::Text
    };
    write_out(out, &render_report(&report, format))?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Error> {
    out.write_all(text.as_bytes())
        .map_err(|_| Error::Internal("failed to write output"))
}
