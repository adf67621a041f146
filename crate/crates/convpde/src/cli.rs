//! Command-line surface.
//!
//! Exit codes: 0 success, 1 input or parse error, 2 degenerate equation
//! (all convolved principal coefficients zero), 3 internal error. The
//! `repro` command exits 1 when any check fails; `fuzz` always exits 0 (it
//! reports, it does not judge).

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use convpde_core::{
    classify_equation, convolve, parse_pde_file, parse_poly, Axis, BiPoly, KernelChain, VarNames,
};

use crate::oracle::{run_invariance_experiment, ExperimentConfig, Family};
use crate::report;
use crate::repro::{run_repro, ExpectedValues};

#[derive(Parser, Debug)]
#[command(
    name = "convpde",
    version,
    about = "Exact convolution products of bivariate polynomial PDE coefficients, \
discriminants, and hyperbolic/elliptic/parabolic classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convolve two or more polynomial expressions, folding left to right
    Convolve(ConvolveArgs),
    /// Classify an equation file, optionally under a kernel chain
    Classify(ClassifyArgs),
    /// Recompute the built-in reference results and verify them exactly
    Repro(ReproArgs),
    /// Randomized experiment: does classification survive convolution?
    Fuzz(FuzzArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum AxisArg {
    X,
    Y,
    Xy,
}

impl From<AxisArg> for Axis {
    fn from(a: AxisArg) -> Axis {
        match a {
            AxisArg::X => Axis::X,
            AxisArg::Y => Axis::Y,
            AxisArg::Xy => Axis::Xy,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FormatArg {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FamilyArg {
    Wave,
    General,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Wave => Family::Wave,
            FamilyArg::General => Family::General,
        }
    }
}

#[derive(Args, Debug)]
struct ConvolveArgs {
    /// Polynomial expressions, e.g. "x^3" "x^2*y^3"
    #[arg(required = true, num_args = 2..)]
    exprs: Vec<String>,
    /// Convolution axis
    #[arg(long, value_enum)]
    axis: AxisArg,
    /// The two variable names, e.g. "x y" or "x t"
    #[arg(long, default_value = "x y")]
    vars: String,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    /// Path to the equation file (see the .pde format in the README)
    #[arg(long)]
    pde: PathBuf,
    /// Kernel polynomial; repeat to build a chain, applied left to right
    #[arg(long = "kernel", value_name = "EXPR")]
    kernels: Vec<String>,
    /// Convolution axis for the kernel chain
    #[arg(long, value_enum, default_value_t = AxisArg::Xy)]
    axis: AxisArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Args, Debug)]
struct ReproArgs {
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Args, Debug)]
struct FuzzArgs {
    /// Number of trials
    #[arg(long, default_value_t = 500)]
    trials: usize,
    /// Base seed; trial k draws from stream k of this seed
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Maximum exponent per variable in generated polynomials (1..=12)
    #[arg(long, default_value_t = 6)]
    max_degree: u32,
    /// Maximum kernel chain length
    #[arg(long = "chain-len", default_value_t = 3)]
    chain_len: usize,
    /// Equation population to draw from
    #[arg(long, value_enum, default_value_t = FamilyArg::Wave)]
    family: FamilyArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

/// Output plus process exit code.
struct Outcome {
    stdout: String,
    code: i32,
}

enum CliError {
    /// Bad input: exit 1.
    Input(String),
    /// Should not happen: exit 3.
    Internal(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Internal(m) => m,
        }
    }
}

fn json_or(text: String, doc: &impl serde::Serialize, format: FormatArg) -> Result<String, CliError> {
    match format {
        FormatArg::Text => Ok(text),
        FormatArg::Json => {
            report::to_json(doc).map_err(|e| CliError::Internal(format!("json encoding: {}", e)))
        }
    }
}

fn parse_vars_flag(flag: &str) -> Result<VarNames, CliError> {
    let names: Vec<&str> = flag.split_whitespace().collect();
    let [first, second] = names[..] else {
        return Err(CliError::Input(format!(
            "--vars expects two names separated by whitespace, got `{}`",
            flag
        )));
    };
    VarNames::new(first, second).map_err(|e| CliError::Input(format!("--vars: {}", e)))
}

fn parse_expr_arg(text: &str, vars: &VarNames, what: &str) -> Result<BiPoly, CliError> {
    parse_poly(text, vars).map_err(|e| CliError::Input(format!("{} `{}`: {}", what, text, e)))
}

fn cmd_convolve(args: &ConvolveArgs) -> Result<Outcome, CliError> {
    let vars = parse_vars_flag(&args.vars)?;
    let axis = Axis::from(args.axis);
    let mut polys = Vec::with_capacity(args.exprs.len());
    for (i, text) in args.exprs.iter().enumerate() {
        polys.push(parse_expr_arg(text, &vars, &format!("argument {}", i + 1))?);
    }
    let mut acc = polys[0].clone();
    for p in &polys[1..] {
        acc = convolve(&acc, p, axis);
    }
    let doc = report::ConvolveDoc {
        command: "convolve",
        axis: axis.to_string(),
        vars: [vars.first().to_string(), vars.second().to_string()],
        inputs: args.exprs.clone(),
        result: convpde_core::pretty_print(&acc, &vars),
    };
    Ok(Outcome {
        stdout: json_or(doc.to_text(), &doc, args.format)?,
        code: 0,
    })
}

fn cmd_classify(args: &ClassifyArgs) -> Result<Outcome, CliError> {
    let text = std::fs::read_to_string(&args.pde)
        .map_err(|e| CliError::Input(format!("cannot read {}: {}", args.pde.display(), e)))?;
    let (pde, vars) = parse_pde_file(&text)
        .map_err(|e| CliError::Input(format!("{}: {}", args.pde.display(), e)))?;
    let axis = Axis::from(args.axis);
    let mut kernels = Vec::with_capacity(args.kernels.len());
    for (i, text) in args.kernels.iter().enumerate() {
        kernels.push(parse_expr_arg(text, &vars, &format!("kernel {}", i + 1))?);
    }
    let chain = KernelChain::new(kernels, axis)
        .map_err(|e| CliError::Input(format!("kernel chain: {}", e)))?;
    let result = classify_equation(&pde, &chain);
    let doc = report::classify_doc(&result, &pde, &chain, &vars);
    let code = if doc.degenerate { 2 } else { 0 };
    Ok(Outcome {
        stdout: json_or(doc.to_text(), &doc, args.format)?,
        code,
    })
}

fn cmd_repro(args: &ReproArgs) -> Result<Outcome, CliError> {
    let result = run_repro(&ExpectedValues::default());
    let doc = report::repro_doc(&result);
    Ok(Outcome {
        stdout: json_or(doc.to_text(), &doc, args.format)?,
        code: if result.all_pass { 0 } else { 1 },
    })
}

fn cmd_fuzz(args: &FuzzArgs) -> Result<Outcome, CliError> {
    let config = ExperimentConfig {
        trials: args.trials,
        max_degree: args.max_degree,
        max_chain_len: args.chain_len,
        seed: args.seed,
        axis: Axis::Xy,
        family: Family::from(args.family),
    };
    config
        .validate()
        .map_err(|e| CliError::Input(e.to_string()))?;
    let result = run_invariance_experiment(&config);
    let doc = report::fuzz_doc(&config, &result);
    Ok(Outcome {
        stdout: json_or(doc.to_text(), &doc, args.format)?,
        code: 0,
    })
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Convolve(args) => cmd_convolve(args),
        Command::Classify(args) => cmd_classify(args),
        Command::Repro(args) => cmd_repro(args),
        Command::Fuzz(args) => cmd_fuzz(args),
    }
}

/// Parses `std::env::args`, runs the command, prints, and returns the exit
/// code for `main` to pass to the OS.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            outcome.code
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}
