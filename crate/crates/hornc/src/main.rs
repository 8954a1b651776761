//! Command-line interface.
//!
//! Exit codes: 0 on completion (whatever the verdict), 1 on usage errors,
//! 2 on input errors (unreadable or unsupported files, bad config), 3 on
//! internal errors. Verdicts are printed alone on stdout; diagnostics go to
//! stderr.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use hornc::bench;
use hornc::chc::{classify_linearity, parse_chc, Linearity};
use hornc::codegen::{transform_backward, transform_forward, EmitOptions, ErrorStyle};
use hornc::error::PortfolioError;
use hornc::oracle::{
    dump_derivation, saturate, DomainSpec, IncompleteReason, Limits, OracleVerdict,
};
use hornc::portfolio::{default_config, load_config, run_portfolio, PortfolioConfig, RunOptions};

#[derive(Parser)]
#[command(
    name = "hornc",
    version,
    about = "Solve constrained Horn clauses via C verifier portfolios"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve a HORN problem with the verifier portfolio.
    Solve {
        /// SMT-LIBv2 file in the HORN fragment.
        file: PathBuf,
        /// Portfolio configuration (TOML); defaults to the built-in one.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Total time budget in seconds.
        #[arg(long, default_value_t = 60)]
        timeout: u64,
        /// Working directory for generated C, logs, and witnesses.
        /// Defaults to $HORNC_SCRATCH, else a temporary directory.
        #[arg(long)]
        scratch: Option<PathBuf>,
    },
    /// Translate a HORN problem to a C program on stdout.
    EmitC {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = EncodingArg::Forward)]
        encoding: EncodingArg,
        /// How the error location is expressed.
        #[arg(long, value_enum, default_value_t = ErrorStyleArg::ReachError)]
        error_style: ErrorStyleArg,
        /// Write to this file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the theory class, linearity, and size of a HORN problem.
    Classify { file: PathBuf },
    /// Run only the built-in bounded saturation oracle.
    Oracle {
        file: PathBuf,
        /// Lower bound of the Int enumeration range.
        #[arg(long, default_value_t = -64)]
        int_lo: i64,
        /// Upper bound of the Int enumeration range.
        #[arg(long, default_value_t = 64)]
        int_hi: i64,
        /// Bitvector widths above this are truncated during enumeration.
        #[arg(long, default_value_t = 8)]
        bv_cap: u32,
        #[arg(long, default_value_t = 1_000_000)]
        max_facts: usize,
        #[arg(long, default_value_t = 10_000_000)]
        max_steps: u64,
        /// On unsat, write the refutation here.
        #[arg(long)]
        dump_derivation: Option<PathBuf>,
    },
    /// Solve every .smt2 file in a directory and score the verdicts.
    Bench {
        dir: PathBuf,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Per-task time budget in seconds.
        #[arg(long, default_value_t = 10)]
        timeout: u64,
        #[arg(long)]
        config: Option<PathBuf>,
        /// Write the CSV here; the summary then goes to stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EncodingArg {
    Forward,
    Backward,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ErrorStyleArg {
    /// Call an external reach_error() (SV-COMP convention).
    ReachError,
    /// Mark the error location with `return -1`.
    ReturnMinusOne,
}

enum AppError {
    /// Problems with the user's files or arguments.
    Input(String),
    /// Bugs and environmental failures.
    Internal(String),
}

impl AppError {
    fn code(&self) -> u8 {
        match self {
            AppError::Input(_) => 2,
            AppError::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            AppError::Input(m) | AppError::Internal(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hornc: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), AppError> {
    match cli.command {
        Cmd::Solve {
            file,
            config,
            timeout,
            scratch,
        } => {
            let system = load_system(&file)?;
            let config = load_portfolio(config.as_deref())?;
            let scratch = scratch.or_else(|| std::env::var_os("HORNC_SCRATCH").map(PathBuf::from));
            let opts = RunOptions {
                total_budget: Duration::from_secs(timeout),
                scratch,
            };
            let outcome = run_portfolio(&system, &config, &opts).map_err(portfolio_error)?;
            for line in &outcome.provenance {
                eprintln!("{line}");
            }
            if let hornc::Verdict::Unknown(reasons) = &outcome.verdict {
                for r in reasons {
                    eprintln!("unknown: {r}");
                }
            }
            println!("{}", outcome.verdict.as_str());
            Ok(())
        }
        Cmd::EmitC {
            file,
            encoding,
            error_style,
            output,
        } => {
            let text = read_file(&file)?;
            let system = parse_system(&file, &text)?;
            let opts = EmitOptions {
                error_style: match error_style {
                    ErrorStyleArg::ReachError => ErrorStyle::ReachError,
                    ErrorStyleArg::ReturnMinusOne => ErrorStyle::ReturnMinusOne,
                },
                source_hash: Some(format!("{:x}", Sha256::digest(text.as_bytes()))),
                ..EmitOptions::default()
            };
            let program = match encoding {
                EncodingArg::Forward => transform_forward(&system, &opts),
                EncodingArg::Backward => transform_backward(&system, &opts),
            }
            .map_err(|e| AppError::Input(e.to_string()))?;
            match output {
                Some(path) => std::fs::write(&path, &program.source)
                    .map_err(|e| AppError::Input(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{}", program.source),
            }
            Ok(())
        }
        Cmd::Classify { file } => {
            let system = load_system(&file)?;
            println!("theory: {}", system.theory);
            println!(
                "linearity: {}",
                match classify_linearity(&system) {
                    Linearity::Linear => "linear",
                    Linearity::NonLinear => "nonlinear",
                }
            );
            println!("predicates: {}", system.decls.len());
            println!("rules: {}", system.rules.len());
            println!("queries: {}", system.query_count());
            Ok(())
        }
        Cmd::Oracle {
            file,
            int_lo,
            int_hi,
            bv_cap,
            max_facts,
            max_steps,
            dump_derivation: dump_path,
        } => {
            if int_lo > int_hi {
                return Err(AppError::Input("--int-lo must not exceed --int-hi".into()));
            }
            let system = load_system(&file)?;
            let dom = DomainSpec {
                int_lo,
                int_hi,
                bv_cap,
            };
            let limits = Limits {
                max_facts,
                max_steps,
            };
            match saturate(&system, &dom, &limits) {
                OracleVerdict::Sat(model) => {
                    eprintln!("fixpoint model with {} facts", model.len());
                    println!("sat");
                }
                OracleVerdict::Unsat(derivation) => {
                    eprintln!("refutation in {} steps", derivation.steps.len());
                    if let Some(path) = dump_path {
                        std::fs::write(&path, dump_derivation(&system, &derivation)).map_err(
                            |e| AppError::Input(format!("cannot write {}: {e}", path.display())),
                        )?;
                    }
                    println!("unsat");
                }
                OracleVerdict::Unknown(reason) => {
                    eprintln!(
                        "unknown: {}",
                        match reason {
                            IncompleteReason::BoundExhausted => "saturation bound exhausted",
                            IncompleteReason::IntDomainIncomplete =>
                                "fixpoint over an incomplete domain",
                        }
                    );
                    println!("unknown");
                }
            }
            Ok(())
        }
        Cmd::Bench {
            dir,
            jobs,
            timeout,
            config,
            csv,
        } => {
            let config = load_portfolio(config.as_deref())?;
            let report = bench::run_suite(&dir, &config, jobs, Duration::from_secs(timeout))
                .map_err(portfolio_error)?;
            match csv {
                Some(path) => {
                    std::fs::write(&path, report.csv()).map_err(|e| {
                        AppError::Input(format!("cannot write {}: {e}", path.display()))
                    })?;
                    print!("{}", report.summary());
                }
                None => {
                    print!("{}", report.csv());
                    eprint!("{}", report.summary());
                }
            }
            Ok(())
        }
    }
}

fn read_file(path: &std::path::Path) -> Result<String, AppError> {
    std::fs::read_to_string(path)
        .map_err(|e| AppError::Input(format!("cannot read {}: {e}", path.display())))
}

fn parse_system(path: &std::path::Path, text: &str) -> Result<hornc::ChcSystem, AppError> {
    parse_chc(text).map_err(|e| AppError::Input(format!("{}: {e}", path.display())))
}

fn load_system(path: &std::path::Path) -> Result<hornc::ChcSystem, AppError> {
    let text = read_file(path)?;
    parse_system(path, &text)
}

fn load_portfolio(path: Option<&std::path::Path>) -> Result<PortfolioConfig, AppError> {
    match path {
        None => Ok(default_config()),
        Some(p) => {
            let text = read_file(p)?;
            load_config(&text).map_err(|e| AppError::Input(format!("{}: {e}", p.display())))
        }
    }
}

fn portfolio_error(e: PortfolioError) -> AppError {
    match e {
        PortfolioError::PlanTheoryMismatch(_)
        | PortfolioError::UnknownActor(_)
        | PortfolioError::Config(_)
        | PortfolioError::Codegen(_) => AppError::Input(e.to_string()),
        PortfolioError::Io(_) => AppError::Internal(e.to_string()),
    }
}
