use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use uinorm_core::ballgeo::SearchBudget;
use uinorm_core::io::{parse_norm, parse_operator, Exponent, NormSpec};
use uinorm_core::reproduce::reproduce_examples;
use uinorm_core::suites::{run_suite, RunConfig, Suite};
use uinorm_core::uinorm::norm_f;
use uinorm_core::{Execution, SymmetricNorm, TailOperator};

#[derive(Parser)]
#[command(
    name = "uinorm",
    version,
    about = "Unitarily invariant norms on F ⊕ τI operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the n largest singular values of an operator as a JSON array
    Sv {
        operator: PathBuf,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Evaluate a norm file on an operator file
    Norm { operator: PathBuf, norm: PathBuf },
    /// Print the numerical radius of an operator
    Radius { operator: PathBuf },
    /// Run a certification suite and emit its report
    Verify(VerifyArgs),
    /// Recompute the worked examples and tabulate them
    Examples(ExamplesArgs),
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Restarts for the extreme-point dichotomy probe
    #[arg(long, default_value_t = SearchBudget::default().restarts)]
    restarts: usize,
    /// Run sweeps on one thread
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: radius-sandwich, uniform, submult, triple, product-equality,
    /// cnorm-corollary, trace-psd, flat-decomposition, isometry
    suite: String,
    #[command(flatten)]
    run: RunArgs,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    samples: Option<usize>,
    /// Also check the two worked flat-decomposition examples
    #[arg(long)]
    paper_examples: bool,
    /// Family name (lp, kyfan, cnorm, cpnorm, scaled_linf) or a norm JSON file
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    k: Option<usize>,
    /// Comma-separated weights
    #[arg(long, value_delimiter = ',')]
    c: Option<Vec<f64>>,
    /// Exponent; accepts `inf`
    #[arg(long)]
    p: Option<f64>,
    /// Arity of the family; defaults to the length of --c, else 3
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct ExamplesArgs {
    #[command(flatten)]
    run: RunArgs,
    /// Emit JSON instead of a table
    #[arg(long)]
    json: bool,
}

/// Failure before any certificate could be produced.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load_operator(path: &Path) -> Result<TailOperator, InputError> {
    parse_operator(&read(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load_norm(path: &Path) -> Result<SymmetricNorm, InputError> {
    parse_norm(&read(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn emit(text: String, out: Option<&Path>) -> Result<(), InputError> {
    match out {
        Some(path) => {
            fs::write(path, text + "\n").map_err(|e| InputError(format!("{}: {e}", path.display())))
        }
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

fn budget(restarts: usize) -> SearchBudget {
    SearchBudget {
        restarts,
        ..SearchBudget::default()
    }
}

fn family_from_args(args: &VerifyArgs) -> Result<Option<SymmetricNorm>, InputError> {
    let Some(name) = &args.family else {
        return Ok(None);
    };
    let path = Path::new(name);
    if path.extension().is_some_and(|e| e == "json") || path.is_file() {
        return load_norm(path).map(Some);
    }
    let n = args
        .n
        .or_else(|| args.c.as_ref().map(Vec::len))
        .unwrap_or(3);
    let spec = NormSpec {
        n,
        family: name.clone(),
        p: args.p.map(Exponent::Finite),
        k: args.k,
        c: args.c.clone(),
        gamma: args.gamma,
        ..NormSpec::default()
    };
    Ok(Some(SymmetricNorm::try_from(spec)?))
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool, InputError> {
    let suite: Suite = args.suite.parse()?;
    let family = family_from_args(args)?;
    let cfg = RunConfig {
        seed: args.run.seed,
        tol: args.tol,
        samples: args.samples,
        execution: execution(args.run.sequential),
        paper_examples: args.paper_examples,
        // --c names the weight vector of the corollary suite; elsewhere it
        // only parameterises --family.
        c: if suite == Suite::CnormCorollary {
            args.c.clone()
        } else {
            None
        },
        family: if suite == Suite::CnormCorollary {
            None
        } else {
            family
        },
        budget: budget(args.run.restarts),
    };
    let report = run_suite(suite, &cfg)?;
    for cert in &report.certificates {
        let family = cert
            .inputs
            .get("family")
            .map(|f| format!(" {f}"))
            .unwrap_or_default();
        eprintln!(
            "{:<9} {}{} lhs={:.6e} rhs={:.6e}",
            format!("{:?}", cert.verdict).to_lowercase(),
            cert.statement,
            family,
            cert.lhs,
            cert.rhs,
        );
    }
    emit(
        serde_json::to_string_pretty(&report)?,
        args.run.out.as_deref(),
    )?;
    let failed = report.certificates.iter().filter(|c| !c.passed()).count();
    eprintln!(
        "{}: {} certificates, {} failed",
        report.suite,
        report.certificates.len(),
        failed
    );
    Ok(report.passed)
}

fn cmd_examples(args: &ExamplesArgs) -> Result<bool, InputError> {
    let report = reproduce_examples(
        budget(args.run.restarts),
        args.run.seed,
        execution(args.run.sequential),
    )?;
    if args.json || args.run.out.is_some() {
        emit(
            serde_json::to_string_pretty(&report)?,
            args.run.out.as_deref(),
        )?;
    } else {
        print!("{}", report.table());
        println!(
            "max |Δ| = {:.3e} ({})",
            report.max_delta,
            if report.passed { "ok" } else { "FAILED" }
        );
    }
    Ok(report.passed)
}

fn run(cli: Cli) -> Result<bool, InputError> {
    match cli.command {
        Command::Sv { operator, n } => {
            if n == 0 {
                return Err(InputError("--n must be positive".into()));
            }
            let a = load_operator(&operator)?;
            println!("{}", serde_json::to_string(&a.singular_values(n).values)?);
            Ok(true)
        }
        Command::Norm { operator, norm } => {
            let a = load_operator(&operator)?;
            let f = load_norm(&norm)?;
            println!("{}", serde_json::to_string(&norm_f(&a, &f))?);
            Ok(true)
        }
        Command::Radius { operator } => {
            let a = load_operator(&operator)?;
            println!("{}", serde_json::to_string(&a.numerical_radius())?);
            Ok(true)
        }
        Command::Verify(args) => cmd_verify(&args),
        Command::Examples(args) => cmd_examples(&args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
