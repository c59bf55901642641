use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gogmagog::algebra::{parse_rational_function, Factored};
use gogmagog::checks::{registry_ids, run_all, run_check, CheckParams, CheckResult};
use gogmagog::comb::{b_brute, enumerate_asm, enumerate_gog, enumerate_magog, m_brute, tilde_m};
use gogmagog::engine::{ct_fast, ct_iterated, res_iterated};
use gogmagog::kernels::{gog_total, magog_total};
use gogmagog::recur::tabulate_x;
use gogmagog::Error;

/// Exact enumeration and verification of the Gog/Magog counting
/// identities: enumerate objects, count them by independent methods,
/// evaluate constant-term and residue expressions, and run the named
/// checks.
#[derive(Parser)]
#[command(name = "gogmagog", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all objects of a family, or just how many there are.
    Enumerate(EnumerateArgs),
    /// Count a family by brute force, constant term, or recurrence.
    Count(CountArgs),
    /// Run one named check, or the whole default grid.
    Check(CheckArgs),
    /// Evaluate the iterated constant term or residue of an expression.
    Eval(EvalArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Asm,
    Gog,
    Magog,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Lines,
    Count,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Which family of objects.
    #[arg(value_enum)]
    family: Family,
    /// Number of rows of the triangle (order of the matrix for asm).
    #[arg(long)]
    n: usize,
    /// Trapezoid width; defaults to n. Not accepted for asm.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "lines")]
    format: OutputFormat,
    /// Write to a file instead of stdout.
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Brute,
    Ct,
    Recurrence,
}

#[derive(Args)]
struct CountArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "brute")]
    method: CountMethod,
}

#[derive(Args)]
struct CheckArgs {
    /// Check id (e.g. S111), a prefix filter like S15*, or "all".
    id: String,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<i64>,
    /// Border vector, comma-separated.
    #[arg(long, value_delimiter = ',')]
    a: Option<Vec<i64>>,
    /// Distinguished variable index (1-based) for the partial-fraction checks.
    #[arg(long)]
    r: Option<usize>,
    /// Secondary index (1-based) for the specialization checks.
    #[arg(long)]
    i: Option<usize>,
    /// Bounds for grid runs.
    #[arg(long, default_value_t = 2)]
    max_k: usize,
    #[arg(long, default_value_t = 3)]
    max_n: i64,
    /// Include the k = 3 symbolic residue grid.
    #[arg(long)]
    heavy: bool,
    #[arg(long, value_enum, default_value = "table")]
    format: ReportFormat,
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Table,
    Records,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EvalMode {
    Ct,
    Res,
}

#[derive(Args)]
struct EvalArgs {
    /// The expression, in the x1, x2, … grammar.
    expression: Option<String>,
    /// Read the expression from a file instead.
    #[arg(long, conflicts_with = "expression")]
    file: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value = "ct")]
    mode: EvalMode,
    /// Outermost-to-innermost variable order, e.g. x1,x2; the last listed
    /// variable is evaluated first. Defaults to x1..xk.
    #[arg(long, value_delimiter = ',')]
    order: Option<Vec<String>>,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Enumerate(args) => enumerate(args),
        Command::Count(args) => count(args),
        Command::Check(args) => check(args),
        Command::Eval(args) => eval(args),
    }
}

fn open_sink(path: &Option<std::path::PathBuf>) -> Result<Box<dyn Write>, ExitCode> {
    match path {
        None => Ok(Box::new(std::io::stdout().lock())),
        Some(p) => match std::fs::File::create(p) {
            Ok(f) => Ok(Box::new(std::io::BufWriter::new(f))),
            Err(e) => Err(usage_error(&format!("cannot open {}: {e}", p.display()))),
        },
    }
}

fn shape(family: Family, n: usize, k: Option<usize>) -> Result<usize, ExitCode> {
    if family == Family::Asm {
        if k.is_some() {
            return Err(usage_error("asm does not take --k"));
        }
        if n < 1 {
            return Err(usage_error("need n >= 1"));
        }
        return Ok(n);
    }
    let k = k.unwrap_or(n);
    if k < 1 || k > n {
        return Err(usage_error(&format!("need n >= k >= 1, got k={k} n={n}")));
    }
    Ok(k)
}

fn enumerate(args: EnumerateArgs) -> ExitCode {
    let k = match shape(args.family, args.n, args.k) {
        Ok(k) => k,
        Err(c) => return c,
    };
    let mut sink = match open_sink(&args.output) {
        Ok(s) => s,
        Err(c) => return c,
    };
    let lines: Vec<String> = match args.family {
        Family::Asm => enumerate_asm(args.n).iter().map(|a| a.to_string()).collect(),
        Family::Gog => enumerate_gog(k, args.n).iter().map(|g| g.to_string()).collect(),
        Family::Magog => enumerate_magog(k, args.n).iter().map(|m| m.to_string()).collect(),
    };
    let r = match args.format {
        OutputFormat::Count => writeln!(sink, "{}", lines.len()),
        OutputFormat::Lines => lines.iter().try_for_each(|l| writeln!(sink, "{l}")),
    };
    if let Err(e) = r.and_then(|_| sink.flush()) {
        eprintln!("error: {e}");
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}

fn count(args: CountArgs) -> ExitCode {
    let k = match shape(args.family, args.n, args.k) {
        Ok(k) => k,
        Err(c) => return c,
    };
    let n = args.n;
    let value: Result<i64, Error> = match (args.family, args.method) {
        (Family::Asm, CountMethod::Brute) => Ok(enumerate_asm(n).len() as i64),
        (Family::Asm, _) => {
            return usage_error("asm only supports --method brute");
        }
        (Family::Gog, CountMethod::Brute) => Ok(m_brute(k, n)),
        (Family::Magog, CountMethod::Brute) => Ok(b_brute(k, n)),
        (Family::Gog, CountMethod::Ct) => scalar(gog_total(k, n as i64)),
        (Family::Magog, CountMethod::Ct) => scalar(magog_total(k, n as i64)),
        (Family::Gog, CountMethod::Recurrence) => {
            // the summed border count at the top corner one level up
            Ok(tilde_m(k, n as i64 + 1, &vec![n as i64 + 1; k]))
        }
        (Family::Magog, CountMethod::Recurrence) => (|| {
            let tables = tabulate_x(k, n as i64)?;
            let t = tables.last().unwrap();
            let mut total = 0i64;
            for ((m, a), v) in t.iter() {
                if *m == n as i64 && gogmagog::comb::in_land_of_magog(k, n as i64, a) {
                    total += v;
                }
            }
            Ok(total)
        })(),
    };
    match value {
        Ok(v) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(&e.to_string()),
    }
}

fn scalar(f: gogmagog::Result<Factored>) -> Result<i64, Error> {
    let ct = ct_fast(&f?.to_ratfun())?;
    if !ct.is_integer() {
        return Err(Error::Internal(format!("non-integer count {ct}")));
    }
    i64::try_from(ct.to_integer()).map_err(|_| Error::Internal("count overflow".into()))
}

fn report(results: &[CheckResult], format: ReportFormat, sink: &mut dyn Write) -> std::io::Result<()> {
    match format {
        ReportFormat::Records => {
            for r in results {
                writeln!(sink, "{}", r.record())?;
            }
        }
        ReportFormat::Table => {
            writeln!(sink, "{:<12} {:<24} {:<8} {:>9}  witness", "id", "params", "status", "ms")?;
            for r in results {
                writeln!(
                    sink,
                    "{:<12} {:<24} {:<8} {:>9}  {}",
                    r.id,
                    r.params,
                    r.status.to_string(),
                    r.elapsed.as_millis(),
                    r.witness
                )?;
            }
            let passed = results.iter().filter(|r| r.passed()).count();
            writeln!(sink, "{passed}/{} checks passed", results.len())?;
        }
    }
    Ok(())
}

fn check(args: CheckArgs) -> ExitCode {
    let results = if args.id == "all" || args.id.ends_with('*') {
        let filter = if args.id == "all" { None } else { Some(args.id.as_str()) };
        match run_all(args.max_k, args.max_n, filter, args.heavy) {
            Ok(r) => r,
            Err(e) => return usage_error(&e.to_string()),
        }
    } else {
        if !registry_ids().contains(&args.id.as_str()) {
            return usage_error(&format!("unknown check id: {}", args.id));
        }
        let params = CheckParams { k: args.k, n: args.n, a: args.a.clone(), r: args.r, i: args.i };
        match run_check(&args.id, &params) {
            Ok(r) => vec![r],
            Err(e) => return usage_error(&e.to_string()),
        }
    };
    let mut sink = match open_sink(&args.output) {
        Ok(s) => s,
        Err(c) => return c,
    };
    if let Err(e) = report(&results, args.format, &mut sink).and_then(|_| sink.flush()) {
        eprintln!("error: {e}");
        return ExitCode::FAILURE;
    }
    if results.iter().all(|r| r.passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn eval(args: EvalArgs) -> ExitCode {
    let text = match (&args.expression, &args.file) {
        (Some(t), None) => t.clone(),
        (None, Some(p)) => match std::fs::read_to_string(p) {
            Ok(t) => t,
            Err(e) => return usage_error(&format!("cannot read {}: {e}", p.display())),
        },
        _ => return usage_error("provide an expression or --file"),
    };
    let f = match parse_rational_function(text.trim()) {
        Ok(f) => f,
        Err(e) => return usage_error(&e.to_string()),
    };
    let nvars = f.nvars();
    let order: Vec<usize> = match &args.order {
        None => (0..nvars).collect(),
        Some(names) => {
            let mut order = Vec::new();
            for name in names {
                let Some(idx) = name
                    .trim()
                    .strip_prefix('x')
                    .and_then(|s| s.parse::<usize>().ok())
                    .filter(|&i| i >= 1)
                else {
                    return usage_error(&format!("bad variable name: {name}"));
                };
                order.push(idx - 1);
            }
            order
        }
    };
    let value = match args.mode {
        EvalMode::Ct => match ct_fast(&f) {
            Ok(v) => Ok(v),
            // no multivariate expansion: fall back to the recursive engine
            Err(Error::NotAdmissible(_)) => ct_iterated(&f, &order),
            Err(e) => Err(e),
        },
        EvalMode::Res => res_iterated(&f, &order),
    };
    match value {
        Ok(v) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Err(e @ (Error::Usage(_) | Error::Parse { .. })) => usage_error(&e.to_string()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
