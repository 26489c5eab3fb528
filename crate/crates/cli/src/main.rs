//! `eulersum` command-line tool: single-point checks, batch suites, the
//! identity listing, residue ledgers and kernel expansion tables.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use eulersum::euler_sums::{find, parse_rational, verify_identity, ParamPoint};
use eulersum::residues::{
    even_weight_ledger, expand_kernel, loglog_slope, odd_weight_ledger, residue_sum_check, truncation_errors,
    KernelKind, LedgerVariant, DEFAULT_RADII,
};
use eulersum::suite::{list_identities, run_suite, ReportFormat, SuiteConfig};
use eulersum::{Error, Mp, PrecisionContext, Real, ResidueLedgerMp};

#[derive(Parser, Debug)]
#[command(name = "eulersum", version, about = "Verify parametric Euler-sum identities to high precision")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check one identity at one parameter point.
    Verify {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 40)]
        digits: u32,
        /// Parameters as `k=v[,k=v...]`, e.g. `a=1/2,m=1`.
        #[arg(long, default_value = "")]
        param: String,
    },
    /// Run a batch described by a JSON config file.
    Suite {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        format: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print every registered identity.
    List,
    /// Residue ledger for the even-weight kernel, or the odd-weight one when `--s` is given.
    Residues {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long = "N")]
        n: usize,
        #[arg(long, default_value_t = 30)]
        digits: u32,
        /// Use the amended double zeta binomial in the odd-weight ledger.
        #[arg(long)]
        corrected: bool,
        #[arg(long)]
        json: bool,
    },
    /// Local expansion of one kernel with its truncation errors.
    Table1 {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: i64,
        #[arg(long = "K", default_value_t = 6)]
        k: u32,
        /// Polygamma order for the polygamma rows.
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, default_value_t = 40)]
        digits: u32,
    },
}

/// Verification ran and something failed.
#[derive(Debug)]
struct Failed;

impl std::fmt::Display for Failed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("verification failed")
    }
}

impl std::error::Error for Failed {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<Failed>() => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            let config = matches!(
                e.downcast_ref::<Error>(),
                Some(Error::Config(_) | Error::Domain { .. } | Error::Precision(_) | Error::Io(_))
            );
            ExitCode::from(if config { 2 } else { 1 })
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Verify { id, digits, param } => verify(&id, digits, &param),
        Command::Suite {
            config,
            workers,
            format,
            out,
        } => suite(config, workers, format, out),
        Command::List => {
            print!("{}", list_identities());
            Ok(())
        }
        Command::Residues {
            a,
            m,
            s,
            n,
            digits,
            corrected,
            json,
        } => residues(&a, m, s, n, digits, corrected, json),
        Command::Table1 { kind, n, k, p, digits } => table1(&kind, n, k, p, digits),
    }
}

fn verify(id: &str, digits: u32, param: &str) -> Result<()> {
    let ctx = PrecisionContext::new(digits)?;
    let entry = find::<Mp>(id)?;
    let pt: ParamPoint = param.parse()?;
    entry.validate(&pt, &ctx)?;
    let r = verify_identity(&entry, &pt, &ctx)?;
    let show = |v: &Mp| v.to_sci_string(digits as usize);
    println!("{} {} at {}", entry.id, entry.equation, pt);
    println!("lhs      {}", show(&r.lhs.value));
    println!("rhs      {}", show(&r.rhs.value));
    println!("residual {}", r.residual.to_sci_string(6));
    println!("budget   {}", r.budget.to_sci_string(6));
    println!("{}", if r.pass { "PASS" } else { "FAIL" });
    if let Some(c) = &r.corrected {
        let verdict = if c.pass { "passes" } else { "fails" };
        println!("amended form ({}) {verdict}, residual {}", c.note, c.residual.to_sci_string(6));
    }
    if r.pass {
        Ok(())
    } else {
        Err(Failed.into())
    }
}

fn suite(path: PathBuf, workers: Option<usize>, format: Option<String>, out: Option<PathBuf>) -> Result<()> {
    let text = std::fs::read_to_string(&path)
        .map_err(|e| Error::Config(format!("cannot read `{}`: {e}", path.display())))?;
    let mut config = SuiteConfig::from_json(&text)?;
    if let Some(w) = workers {
        config.workers = w;
    }
    if let Some(f) = format {
        config.format = f.parse::<ReportFormat>()?;
    }
    if out.is_some() {
        config.output_path = out;
    }
    let report = run_suite(&config)?;
    match &config.output_path {
        Some(p) => {
            let s = &report.summary;
            println!(
                "{} of {} passed, {} failed; report written to {}",
                s.passed,
                s.total,
                s.failed,
                p.display()
            );
            for line in &s.suspected_typos {
                println!("suspected typo: {line}");
            }
        }
        None => print!("{}", report.render(config.format)?),
    }
    if report.all_pass() {
        Ok(())
    } else {
        Err(Failed.into())
    }
}

/// `10², 10³, …` below `n_max`, then `n_max` itself.
fn ladder(n_max: usize) -> Vec<usize> {
    let mut rungs: Vec<usize> = std::iter::successors(Some(100usize), |r| r.checked_mul(10))
        .take_while(|&r| r < n_max)
        .collect();
    rungs.push(n_max);
    rungs
}

fn residues(a: &str, m: u32, s: Option<u32>, n_max: usize, digits: u32, corrected: bool, as_json: bool) -> Result<()> {
    let ctx = PrecisionContext::new(digits)?;
    let q = parse_rational(a)?;
    let av: Mp = ctx.ratio(*q.numer(), *q.denom());
    let ledger: ResidueLedgerMp = match s {
        None => even_weight_ledger(&av, m, n_max, &ctx)?,
        Some(s) => {
            let variant = if corrected {
                LedgerVariant::Corrected
            } else {
                LedgerVariant::Printed
            };
            odd_weight_ledger(&av, m, s, variant, n_max, &ctx)?
        }
    };
    let show = |v: &Mp| v.to_sci_string(12);
    let rungs: Vec<(usize, Mp)> = ladder(n_max)
        .into_iter()
        .map(|n| (n, ledger.truncated_total(n).abs()))
        .collect();
    let final_sum = residue_sum_check(&ledger);
    if as_json {
        let doc = json!({
            "a": q.to_string(),
            "m": m,
            "s": s,
            "pole_at_a": show(&ledger.pole_at_a),
            "pole_at_zero": show(&ledger.pole_at_zero),
            "first_residues": ledger.positive_residues.iter().zip(&ledger.negative_residues).take(5)
                .map(|(p, n)| json!([show(p), show(n)])).collect::<Vec<_>>(),
            "ladder": rungs.iter().map(|(n, v)| json!({"N": n, "magnitude": show(v)})).collect::<Vec<_>>(),
            "magnitude": show(&final_sum),
        });
        println!("{}", serde_json::to_string_pretty(&doc)?);
        return Ok(());
    }
    println!("pole at ±a  {}", show(&ledger.pole_at_a));
    println!("pole at 0   {}", show(&ledger.pole_at_zero));
    for (i, (p, n)) in ledger.positive_residues.iter().zip(&ledger.negative_residues).take(5).enumerate() {
        println!("n = {:<3} +n {}  -n {}", i + 1, show(p), show(n));
    }
    for (n, v) in &rungs {
        println!("N = {n:<8} |sum| = {}", v.to_sci_string(6));
    }
    Ok(())
}

fn table1(kind: &str, n: i64, order: u32, p: u32, digits: u32) -> Result<()> {
    let ctx = PrecisionContext::new(digits)?;
    let kind: KernelKind = kind.parse()?;
    let exp = expand_kernel::<Mp>(kind, n, p, order, &ctx)?;
    let center = if exp.center < 0 {
        format!("(s + {})", -exp.center)
    } else {
        format!("(s - {})", exp.center)
    };
    println!("{kind} about s = {}, K = {order}", exp.center);
    for (power, c) in exp.terms() {
        if !c.is_zero() {
            println!("  {center}^{power:<3} {}", c.to_sci_string(20));
        }
    }
    let errs = truncation_errors(&exp, &DEFAULT_RADII, &ctx).context("sampling the kernel")?;
    let errs: Vec<f64> = errs.iter().map(|e| e.to_f64()).collect();
    for (r, e) in DEFAULT_RADII.iter().zip(&errs) {
        println!("r = {r:<5} error {e:.3e}");
    }
    println!("log-log slope {:.3} (K+1 = {})", loglog_slope(&DEFAULT_RADII, &errs), order + 1);
    Ok(())
}
