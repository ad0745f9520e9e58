use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rbshuffle::scalar::parse_rational;
use rbshuffle::{omega_decompose, primitives_at_bound, DeltaCase, Mode};
use rbshuffle_cli::config::{parse_gens, OutputFormat, ProductTag, SessionConfig};
use rbshuffle_cli::dsl::parse_expr;
use rbshuffle_cli::eval::{render_value, EvalError, Evaluator, Value};
use rbshuffle_cli::suites::{render_report_text, run_suite};

/// Exact calculator and identity checker for generalized shuffle products
/// on tensor words: evaluate expressions, run operator and coalgebra
/// suites, expand Spitzer coefficients, compute primitive bases, and factor
/// words into tridendriform operations.
#[derive(Parser)]
#[command(name = "rbshuffle", version)]
struct Cli {
    #[command(flatten)]
    opts: CommonOpts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct CommonOpts {
    /// Base algebra mode: comm or noncomm
    #[arg(long, global = true, default_value = "comm")]
    base: String,
    /// Generators: comma-separated NAME[~PARTNER][:prim|:grp]
    #[arg(long, global = true, default_value = "a,b")]
    gens: String,
    /// Ambient product: sh, qsh, rsh or lsh (suites pick canonical products
    /// when omitted)
    #[arg(long, global = true)]
    product: Option<String>,
    /// Quasi-shuffle weight, an exact rational like 2 or -1/3
    #[arg(long, global = true, default_value = "1", allow_hyphen_values = true)]
    theta: String,
    /// Coproduct flavor: 1 (rule-carrying base) or 2 (plain base)
    #[arg(long, global = true, default_value_t = 2)]
    case: u8,
    /// Word-length bound for sampling and the primitives search
    #[arg(long = "max-len", global = true, default_value_t = 3)]
    max_len: usize,
    /// Truncation order of the Spitzer expansion
    #[arg(long, global = true, default_value_t = 4)]
    order: usize,
    /// Seed for randomized sampling
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Output format: text or json
    #[arg(long, global = true, default_value = "text")]
    format: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate an expression and print its canonical form
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Run an identity suite and report pass/fail per check
    Check {
        /// rb, nijenhuis, td, average, tridend, omega, spitzer, bialg1,
        /// bialg2, differential, or all
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Check the Spitzer identity at the configured weight and order
    Spitzer,
    /// Print a basis of primitive elements at the configured bound
    Primitives,
    /// Factor a basis word into prec/dot applications
    Decompose {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

fn build_config(opts: &CommonOpts) -> Result<SessionConfig, String> {
    let mode = match opts.base.as_str() {
        "comm" => Mode::Commutative,
        "noncomm" => Mode::Noncommutative,
        other => return Err(format!("unknown base mode `{other}` (use comm or noncomm)")),
    };
    let gens = parse_gens(&opts.gens)?;
    let product = match &opts.product {
        None => None,
        Some(p) => Some(
            ProductTag::parse(p)
                .ok_or_else(|| format!("unknown product `{p}` (use sh, qsh, rsh or lsh)"))?,
        ),
    };
    let theta = parse_rational(&opts.theta).map_err(|e| e.to_string())?;
    let case = match opts.case {
        1 => DeltaCase::One,
        2 => DeltaCase::Two,
        other => return Err(format!("unknown case `{other}` (use 1 or 2)")),
    };
    if opts.max_len == 0 {
        return Err("--max-len must be positive".to_string());
    }
    if opts.order == 0 {
        return Err("--order must be positive".to_string());
    }
    let format = match opts.format.as_str() {
        "text" => OutputFormat::Text,
        "json" => OutputFormat::Json,
        other => return Err(format!("unknown format `{other}` (use text or json)")),
    };
    Ok(SessionConfig {
        mode,
        gens,
        product,
        theta,
        case,
        max_len: opts.max_len,
        order: opts.order,
        seed: opts.seed,
        format,
    })
}

fn run(cli: &Cli) -> Result<u8, String> {
    let cfg = build_config(&cli.opts)?;
    match &cli.cmd {
        Cmd::Eval { expr } => {
            let ast = parse_expr(expr).map_err(|d| d.to_string())?;
            let ctx = cfg.context().map_err(|e| EvalError::from(e).to_string())?;
            let value = Evaluator::new(&ctx, &cfg).eval(&ast).map_err(|e| e.to_string())?;
            println!("{}", render_value(&ctx, &value, cfg.format));
            Ok(0)
        }
        Cmd::Check { suite } => run_checks(suite, &cfg),
        Cmd::Spitzer => run_checks("spitzer", &cfg),
        Cmd::Primitives => {
            let ctx = cfg.context().map_err(|e| EvalError::from(e).to_string())?;
            let basis = primitives_at_bound(&ctx, cfg.case, cfg.max_len)
                .map_err(|e| EvalError::from(e).to_string())?;
            for p in &basis {
                println!("{}", render_value(&ctx, &Value::Tensor(p.clone()), cfg.format));
            }
            Ok(0)
        }
        Cmd::Decompose { expr } => {
            let ast = parse_expr(expr).map_err(|d| d.to_string())?;
            let ctx = cfg.context().map_err(|e| EvalError::from(e).to_string())?;
            let value = Evaluator::new(&ctx, &cfg).eval(&ast).map_err(|e| e.to_string())?;
            let word = match &value {
                Value::Tensor(t) => t.as_basis_word(),
                _ => None,
            }
            .ok_or("decompose expects a single basis word with coefficient 1")?;
            let decomp = omega_decompose(ctx.mode(), word)
                .map_err(|e| EvalError::from(e).to_string())?;
            println!("{}", decomp.render(&ctx));
            Ok(0)
        }
    }
}

fn run_checks(suite: &str, cfg: &SessionConfig) -> Result<u8, String> {
    let reports = run_suite(suite, cfg).map_err(|e| e.to_string())?;
    let mut all_pass = true;
    for r in &reports {
        all_pass &= r.pass;
        match cfg.format {
            OutputFormat::Text => println!("{}", render_report_text(r)),
            OutputFormat::Json => println!("{}", r.to_json()),
        }
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("{message}");
            ExitCode::from(2)
        }
    }
}
