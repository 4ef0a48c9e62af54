//! Command-line front end for `triad-core`.

pub mod commands;
pub mod document;
pub mod error;
pub mod params;

use clap::{Parser, Subcommand, ValueEnum};
use triad_core::{Family, FamilyKind};

use crate::commands::{Context, Output};
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// Exact Pascal-like triangles, duality triads and banded-recurrence fits.
#[derive(Debug, Parser)]
#[command(name = "triad", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,

    /// pascal, q-gaussian, catalan-shifted, catalan-triad, fibonomial,
    /// stirling1, eulerian or lah
    #[arg(long, global = true)]
    pub family: Option<String>,

    /// Parameter of the q-gaussian family, e.g. 2, -1/3 or 0.5
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub q: Option<String>,

    /// Roots for lah (or a replacement dual basis for verify/dual): a comma
    /// list, a list ending in "…", or constant:c, geometric:q,
    /// arithmetic[:first[:step]]
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub roots: Option<String>,

    /// Largest row index N; rows 0..=N are produced
    #[arg(long, global = true)]
    pub rows: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Print the table of known misprints (to stderr when a subcommand runs)
    #[arg(long, global = true)]
    pub ledger: bool,

    #[arg(long, global = true, default_value_t = 512)]
    pub max_rows: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit rows 0..=N of the triangle
    Generate,
    /// Emit the dual polynomials Φ_0..=Φ_N (ascending coefficients)
    Dual,
    /// Check x^n = Σ_k c(n,k) Φ_k(x) for n = 0..=N
    Verify,
    /// Look for a time-independent banded recurrence
    Fit,
    /// Emit rows 0..=N of the step matrix F with C·F = E·C
    SolveF,
    /// Emit Φ_0..=Φ_N solving x·Φ = F·Φ
    Phi,
    /// Triangle convolution of two sequences
    Convolve {
        /// ones, delta:k, or a comma list
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
}

fn context(cli: &Cli) -> Result<Context, CliError> {
    let name = cli
        .family
        .as_deref()
        .ok_or_else(|| CliError::Usage("--family is required".into()))?;
    let kind: FamilyKind = name.parse()?;
    let rows = cli
        .rows
        .ok_or_else(|| CliError::Usage("--rows is required".into()))?;
    if rows > cli.max_rows {
        return Err(CliError::Usage(format!(
            "--rows {rows} exceeds the cap of {}; raise it with --max-rows",
            cli.max_rows
        )));
    }
    let q = cli.q.as_deref().map(params::parse_rational).transpose()?;
    if q.is_some() && kind != FamilyKind::QGaussian {
        return Err(CliError::Usage(format!("--q does not apply to {kind}")));
    }
    let roots = cli.roots.as_deref().map(params::parse_roots).transpose()?;
    let mut roots_override = None;
    if kind != FamilyKind::Lah {
        if let Some(r) = roots.clone() {
            match cli.command {
                Some(Command::Verify) | Some(Command::Dual) => roots_override = Some(r),
                _ => return Err(CliError::Usage(format!("--roots does not apply to {kind} here"))),
            }
        }
    }
    Ok(Context {
        family: Family::from_parts(kind, q, roots)?,
        rows,
        format: cli.format,
        roots_override,
    })
}

/// Run a parsed command line.
pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let Some(command) = &cli.command else {
        if cli.ledger {
            return Ok(Output { stdout: commands::ledger(cli.format)?, code: 0 });
        }
        return Err(CliError::Usage("a subcommand or --ledger is required".into()));
    };
    let cx = context(cli)?;
    match command {
        Command::Generate => commands::generate(&cx),
        Command::Dual => commands::dual(&cx),
        Command::Verify => commands::verify(&cx),
        Command::Fit => commands::fit(&cx),
        Command::SolveF => commands::solve_f(&cx),
        Command::Phi => commands::phi(&cx),
        Command::Convolve { a, b } => {
            let a = params::parse_sequence(a, cx.rows + 1)?;
            let b = params::parse_sequence(b, cx.rows + 1)?;
            commands::convolve(&cx, &a, &b)
        }
    }
}
