mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use report::{Report, Timing};

#[derive(Parser)]
#[command(
    name = "qz",
    version,
    about = "Exact checks for quantum matrices, q-zonal vectors and Macdonald polynomials"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Omit timing so that output is byte-for-byte reproducible.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Suite {
    Relations,
    Invariance,
    Dimensions,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Subcommand)]
enum Verb {
    /// Print the quantum determinant.
    Detq {
        #[arg(long = "N")]
        n: usize,
    },
    /// Print the quantum Pfaffian, optionally checking it against det_q.
    Pfaffian {
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long = "N")]
        n: usize,
        /// Degree cap for invariance and dimension checks.
        #[arg(long, default_value_t = 4)]
        deg: usize,
    },
    /// Extract the q-zonal vector of a partition.
    Zonal {
        #[arg(long)]
        mu: String,
        #[arg(long = "N")]
        n: usize,
        /// Compare against Macdonald polynomials under each parameter convention.
        #[arg(long)]
        compare: bool,
    },
    /// Compute P_λ(x; q, t) in the monomial symmetric basis.
    Macdonald {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
        /// Value substituted for q, as a rational function of q and t.
        #[arg(long)]
        q: Option<String>,
        /// Value substituted for t, as a rational function of q and t.
        #[arg(long)]
        t: Option<String>,
    },
    /// Apply a U_q expression to a polynomial read from a JSON file ("-" for stdin).
    Act {
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long)]
        expr: String,
        #[arg(long)]
        input: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let start = Instant::now();
    let outcome: Result<Report, String> = match cli.verb {
        Verb::Detq { n } => commands::detq(n),
        Verb::Pfaffian { n, verify } => commands::pfaffian(n, verify),
        Verb::Verify { suite, n, deg } => commands::verify(suite, n, deg),
        Verb::Zonal { mu, n, compare } => commands::zonal(&mu, n, compare),
        Verb::Macdonald { lambda, n, q, t } => commands::macdonald(&lambda, n, q.as_deref(), t.as_deref()),
        Verb::Act { side, expr, input } => commands::act(side, &expr, &input),
    };
    let mut report = match outcome {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    if !cli.no_timing {
        report.timing = Some(Timing {
            seconds: start.elapsed().as_secs_f64(),
        });
    }
    let out = match cli.format {
        Format::Text => report.render_text(),
        Format::Json => report.render_json(),
    };
    print!("{out}");
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}
