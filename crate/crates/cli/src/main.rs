//! `gausscheck`: exact Gauss sums, Fourier coefficients, character
//! classification and exhaustive verification from the command line.
//!
//! Exit status: 0 on success, 1 when a verification finds a mismatch (or the
//! two classification routes disagree), 2 on usage or hypothesis errors.

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gausscheck::modp::{EnumerationBudget, PrimeModulus, UnitFunction};
use gausscheck::verify::{default_grid, search_p_divides_n, verify_grid, GridCell, Statement};
use gausscheck::{classify, Error, UnityOrder};

use crate::render::Renderer;

/// Environment variable overriding the default enumeration budget.
pub const BUDGET_ENV: &str = "GAUSSCHECK_BUDGET";

#[derive(Parser)]
#[command(name = "gausscheck", version, about = "Exact Gauss sums and character tests over F_p")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Output::Table)]
    output: Output,

    /// Maximum number of functions a verification may enumerate
    #[arg(long, global = true, env = BUDGET_ENV, default_value_t = EnumerationBudget::DEFAULT.0)]
    budget: u64,

    /// List witnesses in table output
    #[arg(long, global = true)]
    witnesses: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustively verify a statement on one (p, n) cell, or the default grid with `--statement all`
    Verify {
        /// Statement id (prop_1_1, thm_1_2, cor_1_3, lemma_2_1, prop_2_2, cor_2_3, thm_1_7,
        /// remark_p_divides_n, search_p_divides_n) or `all`
        #[arg(long)]
        statement: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
    },
    /// Decide whether a function is a character by the spectral test and the oracle
    Classify(FnArg),
    /// Exact Gauss sum τ(f)
    GaussSum(FnArg),
    /// Unnormalized Fourier coefficient S_ξ = √p·f̂(ξ)
    Fourier {
        #[command(flatten)]
        function: FnArg,
        #[arg(long, allow_negative_numbers = true)]
        xi: i64,
    },
    /// Autocorrelation Σ_x f(x)·conj(f(x+h))
    Autocorr {
        #[command(flatten)]
        function: FnArg,
        #[arg(long, allow_negative_numbers = true)]
        h: i64,
    },
    /// List non-characters with |τ(f)|² = p when p divides n
    Search {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
    },
}

#[derive(Args)]
struct FnArg {
    /// Function as `p=<p> n=<n> exps=<k_1>,...,<k_{p-1}>`, meaning f(x) = e(k_x/n)
    #[arg(long = "fn")]
    function: String,
}

impl FnArg {
    fn parse(&self) -> Result<UnitFunction, Error> {
        self.function.parse()
    }
}

enum Failure {
    Usage(Error),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Usage(err)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let budget = EnumerationBudget(cli.budget);
    let out = Renderer { output: cli.output, witnesses: cli.witnesses };
    match cli.command {
        Command::Verify { statement, p, n } => {
            let reports = if statement == "all" {
                verify_grid(&default_grid(), budget)
            } else {
                let statement: Statement = statement.parse()?;
                let (p, n) = match statement {
                    Statement::RemarkCounterexample => (p.unwrap_or(3), n.unwrap_or(6)),
                    _ => (
                        p.ok_or_else(|| Error::Parse("--p is required".into()))?,
                        n.unwrap_or(2),
                    ),
                };
                vec![GridCell::new(statement, p, n).run(budget)?]
            };
            out.reports(&reports);
            if reports.iter().all(|r| r.success) {
                Ok(())
            } else if reports.iter().any(|r| r.error.is_some()) {
                Err(Failure::Usage(Error::Hypothesis("one or more cells could not run".into())))
            } else {
                Err(Failure::Mismatch)
            }
        }
        Command::Classify(arg) => {
            let c = classify(&arg.parse()?)?;
            out.classification(&c);
            if c.agreement {
                Ok(())
            } else {
                eprintln!("internal error: spectral and oracle verdicts disagree for {}", c.function);
                Err(Failure::Mismatch)
            }
        }
        Command::GaussSum(arg) => {
            let f = arg.parse()?;
            out.spectral_value("gauss-sum", &f, None, &gausscheck::gauss_sum(&f)?);
            Ok(())
        }
        Command::Fourier { function, xi } => {
            let f = function.parse()?;
            out.spectral_value("fourier", &f, Some(("xi", xi)), &gausscheck::fourier_sum(&f, xi)?);
            Ok(())
        }
        Command::Autocorr { function, h } => {
            let f = function.parse()?;
            out.autocorrelation(&f, h, &gausscheck::autocorrelation(&f, h));
            Ok(())
        }
        Command::Search { p, n } => {
            let report = search_p_divides_n(PrimeModulus::new(p)?, UnityOrder::new(n)?, budget)?;
            out.reports(std::slice::from_ref(&report));
            if report.success {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
