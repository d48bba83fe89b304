mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use asm3_core::oracle::DP_MAX_ORDER;
use asm3_core::verify::{self, Bounds, Suite};
use asm3_core::{
    a3_total, enumerate, f_closed, f_solve_linear, normalized, row, Error, OracleMode,
};

use output::{
    poly_records, render, row_records, trig_records, CheckRecord, CountRecord, Format, Record,
    TotalRecord,
};

#[derive(Parser)]
#[command(
    name = "asm3",
    version,
    about = "Exact refined 3-enumeration of alternating sign matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// A(n,r;x) for every n <= n-max; x = 3 uses the formulas, other weights the DP oracle
    Table {
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        x: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Coefficients of G_n(t), or of G_n(t)/A(n;3) with --normalized
    Genfun {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        normalized: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Sine coefficients of f_n(u), keyed by frequency
    FPoly {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// A(n;3) for n = 1..n-max
    Totals {
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Refined counts by enumerating the matrices themselves
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        x: u64,
        #[arg(long, value_enum, default_value_t = Mode::Dp)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Runs an invariant suite: all, oracle, recurrence, genfun, kernel,
    /// special-points or ratio-identity
    Verify {
        #[arg(default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = Bounds::default().nu_max)]
        nu_max: usize,
        /// Largest order enumerated by the oracle suite
        #[arg(long, default_value_t = Bounds::default().oracle_n_max)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Linear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Bruteforce,
    Dp,
}

impl From<Mode> for OracleMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Bruteforce => OracleMode::BruteForce,
            Mode::Dp => OracleMode::Dp,
        }
    }
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::OrderTooLarge { .. } | Error::OutOfRange { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Check(e.to_string()),
        }
    }
}

fn positive(name: &str, v: usize) -> Result<(), Failure> {
    if v == 0 {
        return Err(Failure::Usage(format!("--{name} must be at least 1")));
    }
    Ok(())
}

fn emit<T: Record>(records: &[T], format: Format) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    out.write_all(render(records, format).as_bytes())
        .and_then(|()| out.flush())
        .map_err(|e| Failure::Check(format!("writing output: {e}")))
}

fn table(n_max: usize, x: u64, format: Format) -> Result<(), Failure> {
    positive("n-max", n_max)?;
    if x == 0 {
        return Err(Failure::Usage("--x must be at least 1".into()));
    }
    if x != 3 && n_max > DP_MAX_ORDER {
        return Err(Failure::Usage(format!(
            "x = {x} needs the enumeration oracle, which stops at n = {DP_MAX_ORDER}"
        )));
    }
    let mut records: Vec<CountRecord> = Vec::new();
    for n in 1..=n_max {
        let r = if x == 3 {
            row(n)?
        } else {
            enumerate(n, x, OracleMode::Dp)?
        };
        records.extend(row_records(&r));
    }
    emit(&records, format)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Table { n_max, x, format } => table(n_max, x, format),
        Command::Genfun {
            n,
            normalized: norm,
            format,
        } => {
            positive("n", n)?;
            let poly = if norm {
                normalized(n)?
            } else {
                row(n)?.to_poly()
            };
            emit(&poly_records(&poly), format)
        }
        Command::FPoly { n, method, format } => {
            positive("n", n)?;
            let f = match method {
                Method::Closed => f_closed(n),
                Method::Linear => f_solve_linear(n)?,
            };
            emit(&trig_records(&f), format)
        }
        Command::Totals { n_max, format } => {
            positive("n-max", n_max)?;
            let records = (1..=n_max)
                .map(|n| {
                    Ok(TotalRecord {
                        n,
                        total: a3_total(n)?.to_string(),
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            emit(&records, format)
        }
        Command::Oracle { n, x, mode, format } => {
            positive("n", n)?;
            let r = enumerate(n, x, mode.into())?;
            emit(&row_records(&r).collect::<Vec<_>>(), format)
        }
        Command::Verify {
            suite,
            nu_max,
            n_max,
            format,
        } => {
            positive("nu-max", nu_max)?;
            positive("n-max", n_max)?;
            let checks = verify::run(
                suite,
                Bounds {
                    nu_max,
                    oracle_n_max: n_max,
                },
            );
            let records: Vec<CheckRecord> = checks.iter().map(CheckRecord::from).collect();
            emit(&records, format)?;
            match checks.iter().find(|c| !c.passed) {
                Some(c) => Err(Failure::Check(format!(
                    "{} of {} checks failed; first counterexample: {} {}: {}",
                    checks.iter().filter(|c| !c.passed).count(),
                    checks.len(),
                    c.suite,
                    c.case,
                    c.detail
                ))),
                None => {
                    eprintln!("{} checks passed", checks.len());
                    Ok(())
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
