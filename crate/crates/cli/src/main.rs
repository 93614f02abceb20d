//! `riordan`: Riordan arrays of polynomials, their column partial sums and
//! the periodicity verdicts, from the command line.
//!
//! Exit status: 0 on success, 1 when the answer is a legitimate negative
//! verdict (not periodic, an identity fails), 2 on usage or input errors.

mod cmd;
mod doc;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "riordan", version, about = "Riordan arrays of polynomials and their column partial sums")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the leading rows of the Riordan array of p.
    Show {
        #[command(flatten)]
        poly: PolyArgs,
        /// Number of rows.
        #[arg(long, default_value_t = 7)]
        rows: usize,
    },
    /// Column partial sums S_[1..count] and their eventual period.
    Psums {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, default_value_t = 60)]
        count: usize,
    },
    /// Eventual period of the powers of the circulant matrix of p.
    Period {
        #[command(flatten)]
        poly: PolyArgs,
        /// Step budget; defaults to a bound derived from the degree.
        #[arg(long)]
        count: Option<usize>,
    },
    /// Decide whether the partial sums of p are eventually periodic.
    Classify {
        #[command(flatten)]
        poly: PolyArgs,
        /// Largest matrix period searched for.
        #[arg(long, default_value_t = 64)]
        count: usize,
    },
    /// The polynomial f_mu, its integer row and real roots.
    Fmu {
        mu: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Run an identity suite against series extraction.
    Verify {
        suite: Suite,
        /// Largest index checked.
        #[arg(long, default_value_t = 30)]
        kmax: usize,
        /// Trials for the randomized round-trip suite.
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = cmd::DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Write SVG graphs of partial sums: a figure family, or one polynomial.
    Plot {
        /// Figure family fig1 … fig6; omit to plot --coeffs.
        family: Option<String>,
        #[command(flatten)]
        poly: OptPolyArgs,
        /// Output directory for a family, output file for a polynomial.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Lemma6,
    Lemma7,
    Lemma7b,
    Prop9,
    Corollary,
    Gf,
    Roundtrip,
    All,
}

#[derive(Args, Debug, Clone)]
pub struct OutArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct PolyArgs {
    /// Order N of z = exp(2πi/N) in coefficient literals.
    #[arg(long, default_value_t = 1)]
    pub root_order: usize,
    /// Coefficients a_0, …, a_d, comma separated, e.g. "1/2, -1/2*z".
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: String,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    /// Comparison tolerance in float mode.
    #[arg(long, default_value_t = riordan_core::exactnum::DEFAULT_TOL)]
    pub tol: f64,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args, Debug, Clone)]
pub struct OptPolyArgs {
    #[arg(long, default_value_t = 1)]
    pub root_order: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: Option<String>,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    #[arg(long, default_value_t = riordan_core::exactnum::DEFAULT_TOL)]
    pub tol: f64,
    #[command(flatten)]
    pub out: OutArgs,
}

/// How a command ended, before it becomes an exit status.
pub enum Outcome {
    Done,
    Negative,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Show { poly, rows } => cmd::show(&poly, rows),
        Command::Psums { poly, count } => cmd::psums(&poly, count),
        Command::Period { poly, count } => cmd::period(&poly, count),
        Command::Classify { poly, count } => cmd::classify(&poly, count),
        Command::Fmu { mu, out } => cmd::fmu(mu, out.format),
        Command::Verify { suite, kmax, count, seed, out } => cmd::verify(suite, kmax, count, seed, out.format),
        Command::Plot { family, poly, out } => cmd::plot(family.as_deref(), &poly, out),
    };
    match result {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
