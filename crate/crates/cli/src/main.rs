//! `logtan`: exact and numeric evaluation of `∫₀^{π/2} f(x) log(tan x) dx`.

mod commands;
mod report;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use logtan::quadrature::{Integrator, MIN_TOL};

use commands::{ConstantCmd, UsageError, Var};
use report::{Format, Report};
use verify::Suite;

#[derive(Debug, Parser)]
#[command(name = "logtan", version, about = "Log-tangent integrals over [0, pi/2]")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Quadrature tolerance for oracle values.
    #[arg(long, default_value_t = 1e-10, global = true)]
    tol: f64,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact L(P) for a polynomial given as comma-separated rational
    /// coefficients, lowest degree first (e.g. "0,1" or "1/2,-3,0,2/7").
    Exact {
        #[arg(allow_hyphen_values = true)]
        spec: String,
        #[arg(long, value_enum, default_value_t = Var::Plain)]
        var: Var,
    },
    /// Shifted-Legendre projection of a catalog function.
    Project {
        function: String,
        /// Degree of the truncated expansion.
        #[arg(long, default_value_t = 5)]
        terms: usize,
    },
    /// Quadrature of f·log tan (or plain f) over [from, to].
    Quad {
        function: String,
        #[arg(long, default_value_t = 0.0)]
        from: f64,
        #[arg(long, default_value_t = std::f64::consts::FRAC_PI_2)]
        to: f64,
        /// Integrate f itself, without the log tan weight.
        #[arg(long)]
        plain: bool,
    },
    /// Constants: zeta(s), Catalan's G, digamma(x).
    Constants {
        #[command(subcommand)]
        which: ConstantCmd,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

fn dispatch(cli: &Cli) -> Result<Report, UsageError> {
    if !(cli.tol >= MIN_TOL) {
        return Err(UsageError(format!("--tol must be at least {MIN_TOL:e}")));
    }
    let q = Integrator::from_env();
    match &cli.command {
        Command::Exact { spec, var } => commands::cmd_exact(&q, spec, *var, cli.tol),
        Command::Project { function, terms } => commands::cmd_project(&q, function, *terms, cli.tol),
        Command::Quad {
            function,
            from,
            to,
            plain,
        } => commands::cmd_quad(&q, function, *from, *to, *plain, cli.tol),
        Command::Constants { which } => commands::cmd_constants(&q, *which, cli.tol),
        Command::Verify { suite } => {
            let mut report = Report::new("verify").input("suite", format!("{suite:?}").to_lowercase());
            report.checks = verify::run(&q, *suite);
            Ok(report)
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match dispatch(&cli) {
        Ok(r) => r,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&report.render(cli.format), cli.out.as_ref()) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
