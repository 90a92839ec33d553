//! `geomharm` — sequence tables, identity verification, exact series
//! evaluation and closed-form vs. naive benchmarking on the command line.
//!
//! Exit codes: 0 on success, 1 when any verified identity fails (or a
//! benchmark value mismatch), 2 on usage or domain errors.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use geomharm_core::rational::{in_unit_disk, rat_int};
use geomharm_core::report::IdentityReport;
use geomharm_core::verify::{self, Suite};
use geomharm_core::{numbers, parse_rational, series_eval, Rational};

#[derive(Parser)]
#[command(
    name = "geomharm",
    version,
    about = "Exact geometric and harmonic geometric polynomial toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a named sequence table
    Table(TableArgs),
    /// Verify identity suites over all parameter tuples up to a bound
    Verify(VerifyArgs),
    /// Evaluate a power-sum series exactly
    Eval(EvalArgs),
    /// Time closed-form evaluation against naive exact summation
    Bench(BenchArgs),
    /// Tabulate open-problem integrals (no closed form asserted)
    Explore(ExploreArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Copy, Clone, ValueEnum)]
enum SequenceName {
    Stirling2,
    Stirling1,
    Harmonic,
    Bernoulli,
    Genocchi,
    #[value(name = "ordered_bell")]
    OrderedBell,
    #[value(name = "gp_coeffs")]
    GpCoeffs,
    #[value(name = "hgp_coeffs")]
    HgpCoeffs,
    #[value(name = "poly_bernoulli")]
    PolyBernoulli,
}

#[derive(Args)]
struct TableArgs {
    /// Which sequence to emit
    seq: SequenceName,
    /// Largest index (inclusive)
    #[arg(long = "n")]
    n_max: u32,
    /// Order parameter for poly_bernoulli
    #[arg(long, default_value_t = 2)]
    q: i32,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Copy, Clone, ValueEnum)]
enum SuiteName {
    All,
    Polynomial,
    Integral,
    Number,
    Series,
}

impl From<SuiteName> for Suite {
    fn from(s: SuiteName) -> Suite {
        match s {
            SuiteName::All => Suite::All,
            SuiteName::Polynomial => Suite::Polynomial,
            SuiteName::Integral => Suite::Integral,
            SuiteName::Number => Suite::Number,
            SuiteName::Series => Suite::Series,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteName::All)]
    suite: SuiteName,
    /// Largest index per identity (must be >= 2)
    #[arg(long = "max-n")]
    max_n: u32,
    /// Worker threads (0 = all cores)
    #[arg(long, env = "GEOMHARM_JOBS", default_value_t = 0)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Copy, Clone, ValueEnum)]
enum SeriesKind {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "hA", alias = "ha")]
    Ha,
}

#[derive(Args)]
struct EvalArgs {
    /// A = sum n^m x^n, hA = sum H_n n^m x^n
    series: SeriesKind,
    #[arg(long)]
    m: u32,
    /// Evaluation point as p/q with |x| < 1 (nonzero for hA)
    #[arg(long)]
    x: String,
    /// Truncation: evaluate the partial sum up to n = p
    #[arg(long)]
    p: Option<u32>,
    /// Additionally print a float rendering
    #[arg(long)]
    numeric: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Largest power m (benches every m = 0..=m_max)
    #[arg(long = "m")]
    m_max: u32,
    /// Comma-separated truncation points
    #[arg(long = "p", value_delimiter = ',', required = true)]
    p_list: Vec<u32>,
    #[arg(long)]
    x: String,
    /// Repetitions per timing cell (must be >= 1)
    #[arg(long, default_value_t = 3)]
    reps: u32,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Copy, Clone, ValueEnum)]
enum ExploreFamily {
    /// Odd-parity product integrals, beyond the proven even case
    #[value(name = "eq13_odd")]
    ProductIntegralOdd,
    /// Weighted products of two harmonic geometric polynomials
    #[value(name = "hgp_semiorth")]
    HgpSemiOrth,
}

#[derive(Args)]
struct ExploreArgs {
    family: ExploreFamily,
    #[arg(long = "max-n")]
    max_n: u32,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Eval(args) => cmd_eval(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Explore(args) => cmd_explore(args),
    }
}

/// Table rows are either one value per index or a triangle row per index.
enum TableRow {
    Scalar(String),
    Triangle(Vec<String>),
}

fn cmd_table(args: TableArgs) -> ExitCode {
    let n_max = args.n_max;
    let (name, offset): (&str, u32) = match args.seq {
        SequenceName::Genocchi => ("genocchi", 1),
        SequenceName::Stirling2 => ("stirling2", 0),
        SequenceName::Stirling1 => ("stirling1", 0),
        SequenceName::Harmonic => ("harmonic", 0),
        SequenceName::Bernoulli => ("bernoulli", 0),
        SequenceName::OrderedBell => ("ordered_bell", 0),
        SequenceName::GpCoeffs => ("gp_coeffs", 0),
        SequenceName::HgpCoeffs => ("hgp_coeffs", 0),
        SequenceName::PolyBernoulli => ("poly_bernoulli", 0),
    };
    if n_max < offset {
        return usage_error(&format!("{name} starts at index {offset}"));
    }
    let rows: Vec<TableRow> = (offset..=n_max)
        .map(|n| match args.seq {
            SequenceName::Stirling2 => TableRow::Triangle(
                (0..=n).map(|k| numbers::stirling2(n, k).to_string()).collect(),
            ),
            SequenceName::Stirling1 => TableRow::Triangle(
                (0..=n)
                    .map(|k| numbers::stirling1_unsigned(n, k).to_string())
                    .collect(),
            ),
            SequenceName::Harmonic => TableRow::Scalar(numbers::harmonic(n).to_string()),
            SequenceName::Bernoulli => TableRow::Scalar(numbers::bernoulli(n).to_string()),
            SequenceName::Genocchi => {
                TableRow::Scalar(numbers::genocchi(n).expect("n >= 1").to_string())
            }
            SequenceName::OrderedBell => TableRow::Scalar(numbers::ordered_bell(n).to_string()),
            SequenceName::GpCoeffs => {
                TableRow::Scalar(geomharm_core::geometric::geometric(n).to_string())
            }
            SequenceName::HgpCoeffs => {
                TableRow::Scalar(geomharm_core::harmonic_geometric::hgp(n).to_string())
            }
            SequenceName::PolyBernoulli => {
                TableRow::Scalar(numbers::poly_bernoulli(n, args.q).to_string())
            }
        })
        .collect();

    match args.format {
        Format::Plain => {
            for row in &rows {
                match row {
                    TableRow::Scalar(v) => println!("{v}"),
                    TableRow::Triangle(vs) => println!("{}", vs.join(" ")),
                }
            }
        }
        Format::Json => {
            let values: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| match row {
                    TableRow::Scalar(v) => serde_json::Value::String(v.clone()),
                    TableRow::Triangle(vs) => serde_json::Value::Array(
                        vs.iter().cloned().map(serde_json::Value::String).collect(),
                    ),
                })
                .collect();
            let table = serde_json::json!({
                "name": name,
                "offset": offset,
                "values": values,
            });
            println!("{table}");
        }
        Format::Csv => {
            for (i, row) in rows.iter().enumerate() {
                let n = offset as usize + i;
                match row {
                    TableRow::Scalar(v) => println!("{n},{v}"),
                    TableRow::Triangle(vs) => {
                        for (k, v) in vs.iter().enumerate() {
                            println!("{n},{k},{v}");
                        }
                    }
                }
            }
        }
    }
    ExitCode::SUCCESS
}

fn apply_fault_injection() {
    // Hidden hook used by the verification self-test: corrupt one
    // memoized Stirling entry before running anything.
    if let Ok(spec) = std::env::var("GEOMHARM_CORRUPT_STIRLING2") {
        let parts: Vec<_> = spec.split(',').collect();
        if let [n, k] = parts[..] {
            if let (Ok(n), Ok(k)) = (n.trim().parse(), k.trim().parse()) {
                numbers::corrupt_stirling2_entry(n, k);
                eprintln!("warning: stirling2({n},{k}) corrupted via GEOMHARM_CORRUPT_STIRLING2");
            }
        }
    }
}

fn print_report_plain(report: &IdentityReport) {
    println!(
        "{:<7} {:<32} {:<24} lhs={} rhs={} ({} ns)",
        report.status.to_string(),
        report.identity_id,
        report.params_string(),
        report.lhs,
        report.rhs,
        report.elapsed_ns
    );
}

fn report_csv_line(report: &IdentityReport) -> String {
    let quote = |s: &str| format!("\"{}\"", s.replace('"', "\"\""));
    format!(
        "{},{},{},{},{},{}",
        report.identity_id,
        quote(&report.params_string()),
        report.status,
        quote(&report.lhs),
        quote(&report.rhs),
        report.elapsed_ns
    )
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    if args.max_n < 2 {
        return usage_error("--max-n must be at least 2");
    }
    apply_fault_injection();
    let reports = verify::verify_suite(args.suite.into(), args.max_n, args.jobs);
    match args.format {
        Format::Plain => reports.iter().for_each(print_report_plain),
        Format::Json => {
            for report in &reports {
                println!("{}", serde_json::to_string(report).expect("serializable"));
            }
        }
        Format::Csv => {
            println!("identity_id,params,status,lhs,rhs,elapsed_ns");
            for report in &reports {
                println!("{}", report_csv_line(report));
            }
        }
    }
    let failed = reports.iter().filter(|r| r.status.is_fail()).count();
    let passed = reports.iter().filter(|r| r.status.is_pass()).count();
    eprintln!(
        "{} checks: {} passed, {} failed, {} skipped",
        reports.len(),
        passed,
        failed,
        reports.len() - passed - failed
    );
    if failed > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_eval(args: EvalArgs) -> ExitCode {
    let x = match parse_rational(&args.x) {
        Ok(x) => x,
        Err(e) => return usage_error(&e.to_string()),
    };
    if !in_unit_disk(&x) {
        return usage_error("|x| must be < 1");
    }
    match (args.series, args.p) {
        (SeriesKind::A, Some(p)) => {
            let v = series_eval::power_sum_partial(args.m, p, &x).expect("domain checked");
            println!("{v}");
            if args.numeric {
                println!("numeric: {}", geomharm_core::rational::rat_to_f64(&v));
            }
        }
        (SeriesKind::A, None) => {
            let v = series_eval::power_sum(args.m, &x).expect("domain checked");
            println!("{v}");
            if args.numeric {
                println!("numeric: {}", geomharm_core::rational::rat_to_f64(&v));
            }
        }
        (SeriesKind::Ha, p) => {
            let result = match p {
                Some(p) if p >= 1 => {
                    series_eval::harmonic_power_sum_partial(args.m, p, &x).map(|v| {
                        let float = geomharm_core::rational::rat_to_f64(&v);
                        (v.to_string(), float)
                    })
                }
                Some(_) => Ok(("0".to_string(), 0.0)), // empty harmonic sum at p = 0
                None => series_eval::harmonic_power_sum(args.m, &x)
                    .map(|v| (v.to_string(), v.to_f64())),
            };
            match result {
                Ok((text, float)) => {
                    println!("{text}");
                    if args.numeric {
                        println!("numeric: {float}");
                    }
                }
                Err(e) => return usage_error(&e.to_string()),
            }
        }
    }
    ExitCode::SUCCESS
}

struct BenchRow {
    series: &'static str,
    m: u32,
    p: u32,
    closed_ns: u128,
    naive_ns: u128,
    equal: bool,
}

fn cmd_bench(args: BenchArgs) -> ExitCode {
    if args.reps == 0 {
        return usage_error("--reps must be at least 1");
    }
    let x = match parse_rational(&args.x) {
        Ok(x) => x,
        Err(e) => return usage_error(&e.to_string()),
    };
    if !in_unit_disk(&x) || x == rat_int(0) {
        return usage_error("x must satisfy 0 < |x| < 1");
    }

    let mut rows = Vec::new();
    for m in 0..=args.m_max {
        for &p in &args.p_list {
            // plain power sum
            let closed = series_eval::power_sum_partial(m, p, &x).expect("domain checked");
            let naive = series_eval::direct_sum(m, p, &x, false);
            let equal = closed == naive;
            let closed_ns = time_reps(args.reps, || {
                series_eval::power_sum_partial(m, p, &x).unwrap();
            });
            let naive_ns = time_reps(args.reps, || {
                series_eval::direct_sum(m, p, &x, false);
            });
            rows.push(BenchRow {
                series: "A",
                m,
                p,
                closed_ns,
                naive_ns,
                equal,
            });

            // harmonic power sum
            if p >= 1 {
                let closed =
                    series_eval::harmonic_power_sum_partial(m, p, &x).expect("domain checked");
                let naive = series_eval::direct_sum(m, p, &x, true);
                let equal = closed == naive;
                let closed_ns = time_reps(args.reps, || {
                    series_eval::harmonic_power_sum_partial(m, p, &x).unwrap();
                });
                let naive_ns = time_reps(args.reps, || {
                    series_eval::direct_sum(m, p, &x, true);
                });
                rows.push(BenchRow {
                    series: "hA",
                    m,
                    p,
                    closed_ns,
                    naive_ns,
                    equal,
                });
            }
        }
    }

    let mismatch = rows.iter().any(|r| !r.equal);
    match args.format {
        Format::Plain => {
            println!(
                "{:<6} {:>3} {:>8} {:>14} {:>14} {:>9} equal",
                "series", "m", "p", "closed_ns", "naive_ns", "speedup"
            );
            for r in &rows {
                println!(
                    "{:<6} {:>3} {:>8} {:>14} {:>14} {:>9.2} {}",
                    r.series,
                    r.m,
                    r.p,
                    r.closed_ns,
                    r.naive_ns,
                    r.naive_ns as f64 / r.closed_ns.max(1) as f64,
                    r.equal
                );
            }
        }
        Format::Csv => {
            println!("series,m,p,closed_ns,naive_ns,equal");
            for r in &rows {
                println!(
                    "{},{},{},{},{},{}",
                    r.series, r.m, r.p, r.closed_ns, r.naive_ns, r.equal
                );
            }
        }
        Format::Json => {
            for r in &rows {
                println!(
                    "{}",
                    serde_json::json!({
                        "series": r.series,
                        "m": r.m,
                        "p": r.p,
                        "closed_ns": r.closed_ns as u64,
                        "naive_ns": r.naive_ns as u64,
                        "equal": r.equal,
                    })
                );
            }
        }
    }
    if mismatch {
        eprintln!("error: closed form disagreed with naive summation");
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn time_reps(reps: u32, mut body: impl FnMut()) -> u128 {
    let start = Instant::now();
    for _ in 0..reps {
        body();
    }
    start.elapsed().as_nanos() / reps as u128
}

fn cmd_explore(args: ExploreArgs) -> ExitCode {
    const LABEL: &str = "open problem - no asserted closed form";
    let mut rows: Vec<(u32, u32, Rational)> = Vec::new();
    match args.family {
        ExploreFamily::ProductIntegralOdd => {
            for n in 0..=args.max_n {
                for m in 1..=args.max_n {
                    if (n + m) % 2 == 1 {
                        let v = geomharm_core::integrals::hgp_gp_product_integral_exact(n, m)
                            .expect("integrand vanishes at 0");
                        rows.push((n, m, v));
                    }
                }
            }
        }
        ExploreFamily::HgpSemiOrth => {
            for n in 1..=args.max_n {
                for m in 1..=args.max_n {
                    let v = geomharm_core::integrals::hgp_semiorthogonality_exact(n, m)
                        .expect("integrand vanishes at 0");
                    rows.push((n, m, v));
                }
            }
        }
    }
    match args.format {
        Format::Plain => {
            println!("# {LABEL}");
            for (n, m, v) in &rows {
                println!("n={n} m={m} value={v}");
            }
        }
        Format::Csv => {
            println!("n,m,value,note");
            for (n, m, v) in &rows {
                println!("{n},{m},{v},{LABEL}");
            }
        }
        Format::Json => {
            for (n, m, v) in &rows {
                println!(
                    "{}",
                    serde_json::json!({
                        "n": n,
                        "m": m,
                        "value": v.to_string(),
                        "note": LABEL,
                    })
                );
            }
        }
    }
    ExitCode::SUCCESS
}
